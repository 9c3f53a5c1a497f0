#include <vector>

#include "pathclass/series.hpp"
#include "test_support.hpp"

namespace pathclass {
namespace {

std::vector<mpz_class> Z(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<mpz_class> head(const PowerSeries& s, std::size_t n) {
  auto c = s.integer_coefficients();
  c.resize(n);
  return c;
}

TEST(PowerSeries, Arithmetic) {
  const auto a = PowerSeries::polynomial({1, 1}, 4);
  const auto b = PowerSeries::polynomial({1, -1}, 4);
  EXPECT_EQ(a * b, PowerSeries::polynomial({1, 0, -1}, 4));
  EXPECT_TRUE((a + (-a)).is_zero());
  EXPECT_EQ(a - b, PowerSeries::polynomial({0, 2}, 4));
  EXPECT_EQ(mpq_class(3) * a, PowerSeries::polynomial({3, 3}, 4));
  EXPECT_EQ(PowerSeries::polynomial({1, 1, 2}, 2).shift(1), PowerSeries::polynomial({0, 1, 1}, 2));
  EXPECT_EQ(a.pow(3), PowerSeries::polynomial({1, 3, 3, 1}, 4));
  EXPECT_EQ(a.pow(0), PowerSeries::constant(1, 4));
  EXPECT_EQ(PowerSeries::monomial(2, mpq_class(1, 2), 3).str(), "[0, 0, 1/2, 0]");
}

TEST(PowerSeries, Truncation) {
  const auto s = PowerSeries::polynomial({1, 2, 3, 4, 5}, 2);
  EXPECT_EQ(s.order(), 2u);
  EXPECT_EQ(s.integer_coefficients(), Z({1, 2, 3}));
  EXPECT_TRUE(PowerSeries::monomial(5, 1, 3).is_zero());
  EXPECT_TRUE(PowerSeries::polynomial({1, 1}, 3).pow(8).is_integral());
  EXPECT_FALSE(PowerSeries::monomial(0, mpq_class(1, 3), 1).is_integral());
  EXPECT_PATHCLASS_ERROR(PowerSeries::monomial(0, mpq_class(1, 3), 1).integer_coefficients(), InvalidArgument);
}

TEST(PowerSeries, OrderMismatch) {
  EXPECT_PATHCLASS_ERROR(PowerSeries(3) + PowerSeries(4), OrderMismatch);
  EXPECT_PATHCLASS_ERROR(PowerSeries(3) * PowerSeries(4), OrderMismatch);
}

TEST(PowerSeries, Inverse) {
  const std::size_t N = 12;
  const auto geo = PowerSeries::polynomial({1, -1}, N).inverse();
  for (std::size_t i = 0; i <= N; ++i) EXPECT_EQ(geo[i], 1);
  const auto fib_den = PowerSeries::polynomial({1, -1, -1}, N);
  const auto fib = fib_den.inverse();
  EXPECT_EQ(fib * fib_den, PowerSeries::constant(1, N));
  for (long i = 0; i <= static_cast<long>(N); ++i) EXPECT_EQ(fib[i], fibonacci(i + 1));
  EXPECT_EQ(PowerSeries::constant(1, N).inverse(), PowerSeries::constant(1, N));
  EXPECT_EQ(PowerSeries::constant(2, N).inverse()[0], mpq_class(1, 2));
  EXPECT_PATHCLASS_ERROR(PowerSeries::polynomial({0, 1}, N).inverse(), ZeroConstantTerm);
  EXPECT_EQ(PowerSeries::polynomial({1, 1}, N) / PowerSeries::polynomial({1, 1}, N), PowerSeries::constant(1, N));
}

TEST(PowerSeries, ComposePower) {
  const std::size_t N = 12;
  EXPECT_EQ(head(catalan_series(N).compose_power(4), 9), Z({1, 0, 0, 0, 1, 0, 0, 0, 2}));
  EXPECT_EQ(head(motzkin_series(N).compose_power(2), 9), Z({1, 0, 1, 0, 2, 0, 4, 0, 9}));
  EXPECT_EQ(motzkin_series(N).compose_power(1), motzkin_series(N));
  EXPECT_PATHCLASS_ERROR(motzkin_series(N).compose_power(0), InvalidArgument);
}

TEST(KnownSeries, CatalanAndMotzkin) {
  const std::size_t N = 32;
  const auto c = catalan_series(N);
  const auto m = motzkin_series(N);
  EXPECT_EQ(head(c, 6), Z({1, 1, 2, 5, 14, 42}));
  EXPECT_EQ(head(m, 6), Z({1, 1, 2, 4, 9, 21}));
  const auto x = PowerSeries::monomial(1, 1, N);
  EXPECT_TRUE((c - PowerSeries::constant(1, N) - x * c * c).is_zero());
  EXPECT_TRUE((m - PowerSeries::constant(1, N) - x * m - x * x * m * m).is_zero());
  for (long n = 0; n <= 32; ++n) EXPECT_EQ(c[n], catalan_power_coeff(n, 1));
  EXPECT_EQ(c[32], mpz_class("55534064877048198"));
}

// Motzkin numbers as walks over {U, H, D} kept weakly above zero and ending at zero.
TEST(KnownSeries, MotzkinMatchesWalkCount) {
  const auto m = motzkin_series(8);
  for (std::size_t n = 0; n <= 8; ++n) {
    std::uint64_t count = 0;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t w = 0; w < total; ++w) {
      long h = 0;
      bool ok = true;
      for (std::size_t i = 0, v = w; i < n && ok; ++i, v /= 3) {
        h += static_cast<long>(v % 3) - 1;
        ok = h >= 0;
      }
      if (ok && h == 0) ++count;
    }
    EXPECT_EQ(m[n], mpq_class(count)) << n;
  }
}

TEST(Numbers, CatalanPowers) {
  EXPECT_EQ(catalan_power_coeff(3, 1), 5);
  EXPECT_EQ(catalan_power_coeff(0, 7), 1);
  const auto c3 = catalan_series(6).pow(3);
  EXPECT_EQ(catalan_power_coeff(2, 3), 9);
  for (long n = 0; n <= 6; ++n) EXPECT_EQ(c3[n], catalan_power_coeff(n, 3));
  EXPECT_PATHCLASS_ERROR(catalan_power_coeff(2, 0), InvalidArgument);
  EXPECT_PATHCLASS_ERROR(catalan_power_coeff(-1, 1), InvalidArgument);
}

TEST(Numbers, Binomial) {
  EXPECT_EQ(binomial(12, 6), 924);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
}

TEST(Numbers, Fibonacci) {
  EXPECT_EQ(fibonacci(1), 1);
  EXPECT_EQ(fibonacci(2), 1);
  EXPECT_EQ(fibonacci(12), 144);
  EXPECT_EQ(fibonacci(13), 233);
  EXPECT_PATHCLASS_ERROR(fibonacci(0), InvalidArgument);
}

TEST(Numbers, A000930) {
  const std::vector<long> expected = {1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60};
  for (long n = 1; n <= 12; ++n) EXPECT_EQ(recurrence_a000930(n), expected[n - 1]) << n;
  EXPECT_PATHCLASS_ERROR(recurrence_a000930(0), InvalidArgument);
}

TEST(Numbers, ClosedForms) {
  EXPECT_EQ(closed_form_udd(0), 1);
  EXPECT_EQ(closed_form_udd(7), 5);
  EXPECT_EQ(closed_form_udd(12), 35);
  EXPECT_EQ(closed_form_uud_dyck(1), 1);
  EXPECT_EQ(closed_form_uud_dyck(3), 4);
  EXPECT_EQ(closed_form_uud_dyck(12), 3248);

  const std::size_t N = 32;
  const auto one = PowerSeries::constant(1, N);
  const auto c4 = catalan_series(N).compose_power(4);
  const auto udd = c4 / (one - c4.shift(1));
  const auto uud = (one - PowerSeries::polynomial({0, 1, 1}, N) * catalan_series(N).compose_power(2)).inverse();
  for (long n = 0; n <= 32; ++n) EXPECT_EQ(udd[n], closed_form_udd(n)) << n;
  for (long n = 1; n <= 32; ++n) EXPECT_EQ(uud[n], closed_form_uud_dyck(n)) << n;
}

TEST(Newton, CatalanFromItsEquation) {
  const std::size_t N = 32;
  const AlgebraicEquation eq{{PowerSeries::constant(1, N), PowerSeries::constant(-1, N), PowerSeries::monomial(1, 1, N)}};
  EXPECT_EQ(solve_algebraic(eq, 1, N), catalan_series(N));
  EXPECT_TRUE(eq.evaluate(catalan_series(N)).is_zero());
  EXPECT_EQ(eq.evaluate_derivative(PowerSeries::constant(1, N))[0], -1);
}

TEST(Newton, Preconditions) {
  const std::size_t N = 8;
  const AlgebraicEquation catalan{{PowerSeries::constant(1, N), PowerSeries::constant(-1, N), PowerSeries::monomial(1, 1, N)}};
  EXPECT_PATHCLASS_ERROR(solve_algebraic(catalan, 2, N), NoRationalSeed);
  // (A - 1)^2 = x has a double root at x = 0
  const AlgebraicEquation double_root{{PowerSeries::polynomial({1, -1}, N), PowerSeries::constant(-2, N),
                                       PowerSeries::constant(1, N)}};
  EXPECT_PATHCLASS_ERROR(solve_algebraic(double_root, 1, N), NotASimpleRoot);
}

TEST(FixedPoint, Motzkin) {
  const std::size_t N = 20;
  const auto x = PowerSeries::monomial(1, 1, N);
  const auto m = solve_fixed_point(
      [&](const PowerSeries& a) { return PowerSeries::constant(1, N) + x * a + x * x * a * a; }, 1, N);
  EXPECT_EQ(m, motzkin_series(N));
}

TEST(Methods, Names) {
  for (CountMethod m : kAllCountMethods) EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_EQ(to_string(CountMethod::GeneratingFunction), "gf");
  EXPECT_PATHCLASS_ERROR(parse_method("magic"), ParseError);
}

}  // namespace
}  // namespace pathclass
