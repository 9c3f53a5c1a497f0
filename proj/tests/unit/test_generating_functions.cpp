#include "pathclass/canonical.hpp"
#include "pathclass/generating_functions.hpp"
#include "pathclass/harness.hpp"
#include "pathclass/partition.hpp"
#include "test_support.hpp"

namespace pathclass {
namespace {

constexpr std::size_t N = 32;

PowerSeries P(std::initializer_list<long> c) { return PowerSeries::polynomial(c, N); }
PowerSeries one() { return PowerSeries::constant(1, N); }
PowerSeries x() { return PowerSeries::monomial(1, 1, N); }

TEST(GfBallot, SpotValues) {
  const auto uu = gf_ballot(TauKind::UU, 12);
  EXPECT_EQ(uu[6], 14);
  EXPECT_EQ(uu[12], 393);
  EXPECT_EQ(gf_ballot(TauKind::DD, 12)[12], 81);
  const auto udd = gf_ballot(TauKind::UDD, 12);
  EXPECT_EQ(udd[7], 5);
  EXPECT_EQ(udd[12], 35);
  EXPECT_EQ(gf_ballot(TauKind::DU, 12)[12], 144);
  EXPECT_EQ(gf_ballot(TauKind::UD, 12)[12], 233);
}

TEST(GfDyck, SpotValues) {
  const auto uuu = gf_dyck(TauKind::UUU, 12);
  EXPECT_EQ(uuu[6], 17);
  EXPECT_EQ(uuu[12], 2090);
  EXPECT_EQ(gf_dyck(TauKind::UUD, 12)[12], 3248);
  const auto udu = gf_dyck(TauKind::UDU, 12);
  EXPECT_EQ(udu[5], 22);
  EXPECT_EQ(udu[12], 13761);
  EXPECT_PATHCLASS_ERROR(gf_dyck(TauKind::UD, 12), UnsupportedTau);
  EXPECT_PATHCLASS_ERROR(gf_dyck(TauKind::DD, 12), UnsupportedTau);
}

TEST(GfBallot, MatchesBruteForceBeyondTheTable) {
  for (TauKind t : kAllTauKinds) {
    const auto gf = gf_ballot(t, 16);
    ASSERT_TRUE(gf.is_integral());
    for (std::size_t n = 0; n <= 16; ++n) {
      PartitionOptions opt;
      opt.keep_classes = false;
      EXPECT_EQ(gf[n], mpq_class(partition_classes(n, pattern_of(t), PathMode::Ballot, opt).class_count))
          << name(t) << " n=" << n;
    }
  }
}

TEST(GfDyck, MatchesBruteForce) {
  for (TauKind t : {TauKind::UUU, TauKind::UUD, TauKind::DUU, TauKind::UDU, TauKind::DDD, TauKind::UDD,
                    TauKind::DDU, TauKind::DUD}) {
    const auto gf = gf_dyck(t, 9);
    for (std::size_t n = 0; n <= 9; ++n) {
      PartitionOptions opt;
      opt.keep_classes = false;
      EXPECT_EQ(gf[n], mpq_class(partition_classes(n, pattern_of(t), PathMode::Dyck, opt).class_count))
          << name(t) << " n=" << n;
    }
  }
}

TEST(GfDyck, MirrorStringsHaveEqualBruteCounts) {
  for (TauKind t : kAllTauKinds) {
    for (std::size_t n = 0; n <= 8; ++n) {
      PartitionOptions opt;
      opt.keep_classes = false;
      EXPECT_EQ(partition_classes(n, pattern_of(t), PathMode::Dyck, opt).class_count,
                partition_classes(n, pattern_of(mirror(t)), PathMode::Dyck, opt).class_count)
          << name(t) << " n=" << n;
    }
  }
}

TEST(Residuals, AllExactlyZeroAtOrder32) {
  const auto eqs = defining_equations(N);
  EXPECT_EQ(eqs.size(), 7u);
  for (const auto& e : eqs) {
    EXPECT_TRUE(e.residual().is_zero()) << e.name;
    EXPECT_TRUE(e.solution.is_integral()) << e.name;
  }
}

TEST(Residuals, EveryCountingSeriesIsNonnegativeIntegral) {
  for (TauKind t : kAllTauKinds) {
    for (const auto& c : gf_ballot(t, N).integer_coefficients()) EXPECT_GE(c, 0) << name(t);
  }
  for (TauKind t : {TauKind::UUU, TauKind::UUD, TauKind::DUU, TauKind::UDU}) {
    for (const auto& c : gf_dyck(t, N).integer_coefficients()) EXPECT_GE(c, 0) << name(t);
  }
}

TEST(Auxiliary, TableRowsFromNewton) {
  const std::vector<long> ddd = {1, 1, 1, 1, 1, 2, 3, 5, 7, 10, 13, 20};
  const std::vector<long> dud = {1, 1, 1, 2, 3, 5, 7, 11, 16, 26, 39, 63};
  const auto a = aux::ddd_ballot(12);
  const auto b = aux::dud_ballot(12);
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(a[n], ddd[n - 1]) << n;
    EXPECT_EQ(b[n], dud[n - 1]) << n;
  }
}

// The dud series also comes out of the cubic for the paths ending at height 0.
TEST(Auxiliary, DudFromTheGroundedCubic) {
  const auto abar = solve_algebraic(aux::dud_ballot_bar_equation(N), 1, N);
  EXPECT_EQ(abar / (one() - x() * abar), aux::dud_ballot(N));
}

// Chain of series identities that assembles the uu ballot series.
TEST(Relations, UuBallotChain) {
  const auto gbar = one() + motzkin_series(N).compose_power(2).shift(2);
  const auto bbar = (one() - gbar.shift(2)).inverse();
  const auto abar = (P({1, 0, 0, 0, -1}) - (P({1, 0, -1}) * bbar).shift(2)).inverse();
  const auto g = P({1, 0, 0, 1}) + (gbar - one() + x()) / (one() - x() * gbar);
  const auto a = x() / P({1, 0, -1}) +
                 abar * (one() + x() * (bbar - one()) + P({0, 0, 1}) + (bbar * (g - P({1, 0, 0, 1}))).shift(2));
  EXPECT_EQ(a, gf_ballot(TauKind::UU, N));
  EXPECT_TRUE((abar - one() - x() * x() * abar * (bbar - x() * x() * (bbar - one()))).is_zero());
  EXPECT_TRUE((bbar - one() - x() * x() * bbar * gbar).is_zero());
}

TEST(Relations, UuuDyck) {
  const auto g = aux::uuu_dyck_g(N);
  const auto g_uu = (g - one()) * (g - one()) / g;
  const auto b_uu = (g - one()) * (g - one());
  const auto b = b_uu + g;
  EXPECT_TRUE((g_uu - x() * (g - one()) - x() * g_uu * g_uu).is_zero());
  EXPECT_TRUE((g - one() - x() * g - x() * (g - one()) * g_uu).is_zero());
  EXPECT_TRUE((b_uu - x() * (g - one()) - x() * b_uu * (one() + g_uu)).is_zero());
  EXPECT_TRUE((b - one() - x() * g - x() * (b - one()) * (one() + g_uu)).is_zero());
  const auto f = one() + x() * b / (one() - x() * b_uu);
  EXPECT_EQ(f, gf_dyck(TauKind::UUU, N));
}

TEST(Relations, UduDyckAssembly) {
  const auto g = aux::udu_dyck_g(N);
  const auto t = aux::udu_dyck_t(N);
  const auto h = (P({1, -1}) + x() * P({1, -2}) * g) / (P({1, -2, 1}) + (P({-2, 1}) * g).shift(2));
  const auto k = (P({-1}) + P({1, -1}) * h) / P({1, -1, 1});
  const auto b = g / (one() - x() * (one() + x() * g));

  EXPECT_TRUE((h - one() - x() * h - x() * (one() + x() * (h - one())) * b).is_zero());
  EXPECT_TRUE((k - (h - one() - k) * b).is_zero());
  EXPECT_TRUE((b - g - x() * b * (one() + x() * g)).is_zero());

  const auto x2 = x() * x();
  const auto x3 = x2 * x();
  const auto g1 = solve_fixed_point(
      [&](const PowerSeries& s) {
        const auto u = one() + x() * s;
        return x3 / P({1, -2, 1}) * u * u * (one() + x3 / P({1, -1}) * u);
      },
      0, N);
  EXPECT_EQ(t, x2 / P({1, -1}) * (one() + x() * g1));
  const auto b1 = g1 + t;
  const auto h1 = solve_fixed_point(
      [&](const PowerSeries& s) { return x2 * (one() + x() * b1 + x2 * s * (one() + g1)) / P({1, -2, 1}); }, 0, N);
  EXPECT_EQ(h1, P({1, -1, 0, 1}) * t / (P({1, -1}) * (P({1, -1, 0, 1}) - x() * t)));

  const auto f = h + x2 / P({1, -1}) * (k - h1) * x2 * g * (one() + x() * g);
  EXPECT_EQ(f, gf_dyck(TauKind::UDU, N));
  EXPECT_EQ(f - one(), aux::udu_dyck_displayed(N));
}

}  // namespace
}  // namespace pathclass
