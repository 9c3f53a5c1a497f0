#include "pathclass/generating_functions.hpp"

#include <string>

#include "pathclass/error.hpp"

namespace pathclass {

namespace {

PowerSeries poly(std::initializer_list<long> c, std::size_t order) { return PowerSeries::polynomial(c, order); }
PowerSeries one(std::size_t order) { return PowerSeries::constant(1, order); }
PowerSeries x_times(const PowerSeries& s) { return s.shift(1); }

}  // namespace

namespace aux {

AlgebraicEquation ddd_ballot_equation(std::size_t N) {
  return {{poly({-1}, N), poly({1, -3, 1}, N), poly({0, 2, -4, 2}, N), poly({0, 0, 1, -2, 1, 0, -1}, N)}};
}

AlgebraicEquation dud_ballot_equation(std::size_t N) {
  return {{poly({-1, 0, 1, 0, -1}, N), poly({1, -3, -1, 3, 1, -3}, N), poly({0, 2, -3, -2, 2, 2, -2}, N),
           poly({0, 0, 1, -1, -1}, N)}};
}

AlgebraicEquation dud_ballot_bar_equation(std::size_t N) {
  return {{poly({1, 0, -1, 0, 1}, N), poly({-1, 0, 1, 0, -1}, N), poly({0, 0, 0, 0, 1, 0, -1}, N),
           poly({0, 0, 0, 0, 0, 0, 1}, N)}};
}

AlgebraicEquation uuu_dyck_g_equation(std::size_t N) {
  return {{poly({0, -1}, N), poly({1, 3}, N), poly({-1, -2}, N), poly({0, 1}, N)}};
}

AlgebraicEquation udu_dyck_g_equation(std::size_t N) {
  // expanded: x + (x - 1 + x^2 + x^3)G + (x^3 + 2x^4)G^2 + x^5 G^3 = 0
  return {{poly({0, 1}, N), poly({-1, 1, 1, 1}, N), poly({0, 0, 0, 1, 2}, N), poly({0, 0, 0, 0, 0, 1}, N)}};
}

AlgebraicEquation udu_dyck_t_equation(std::size_t N) {
  return {{poly({0, 0, 1}, N), poly({-1, 1}, N), poly({0, 0, 1}, N), poly({0, 0, 0, 1}, N)}};
}

PowerSeries ddd_ballot(std::size_t N) { return solve_algebraic(ddd_ballot_equation(N), 1, N); }
PowerSeries dud_ballot(std::size_t N) { return solve_algebraic(dud_ballot_equation(N), 1, N); }
PowerSeries uuu_dyck_g(std::size_t N) { return solve_algebraic(uuu_dyck_g_equation(N), 1, N); }
PowerSeries udu_dyck_g(std::size_t N) { return solve_algebraic(udu_dyck_g_equation(N), 0, N); }
PowerSeries udu_dyck_t(std::size_t N) { return solve_algebraic(udu_dyck_t_equation(N), 0, N); }

PowerSeries udu_dyck_displayed(std::size_t N) {
  const PowerSeries G = udu_dyck_g(N);
  const PowerSeries T = udu_dyck_t(N);
  const PowerSeries x = poly({0, 1}, N);
  const PowerSeries one_minus_x = poly({1, -1}, N);
  const PowerSeries one_xg = one(N) + x * G;

  const PowerSeries first_num = x * one_minus_x.pow(2) * (one(N) + G + x * G) + poly({0, 0, 0, 0, 0, 1}, N) * one_xg * G * G;
  const PowerSeries first_den = one_minus_x * (one_minus_x.pow(2) + poly({0, 0, -2, 1}, N) * G);
  const PowerSeries second_num = poly({0, 0, 0, 0, 1, -1, 0, 1}, N) * one_xg * G * T;
  const PowerSeries second_den = one_minus_x.pow(2) * (poly({1, -1, 0, 1}, N) - x * T);
  return first_num / first_den - second_num / second_den;
}

}  // namespace aux

PowerSeries gf_ballot(TauKind tau, std::size_t N) {
  const PowerSeries fib_den = poly({1, -1, -1}, N);
  const PowerSeries a930_den = poly({1, -1, 0, -1}, N);
  switch (tau) {
    case TauKind::UD:
      return fib_den.inverse();
    case TauKind::DU:
    case TauKind::UUU:
    case TauKind::UDU:
      return one(N) + x_times(fib_den.inverse());
    case TauKind::UU:
      return poly({1, -1, 0, 0, -1}, N) / poly({1, -2, 0, 1, -1, 1}, N);
    case TauKind::DD: {
      const PowerSeries m2 = motzkin_series(N).compose_power(2);
      return (one(N) + m2.shift(2)) / (poly({1, -1, 1}, N) - m2.shift(3));
    }
    case TauKind::DDD:
      return aux::ddd_ballot(N);
    case TauKind::UUD:
      return a930_den.inverse();
    case TauKind::DUU:
      return one(N) + x_times(a930_den.inverse());
    case TauKind::UDD:
    case TauKind::DDU: {
      const PowerSeries c4 = catalan_series(N).compose_power(4);
      const PowerSeries udd = c4 / (one(N) - x_times(c4));
      return tau == TauKind::UDD ? udd : one(N) + x_times(udd);
    }
    case TauKind::DUD:
      return aux::dud_ballot(N);
  }
  throw Error(ErrorCode::UnsupportedTau, "no ballot series for " + std::string(name(tau)));
}

PowerSeries gf_dyck(TauKind tau, std::size_t N) {
  switch (tau) {
    case TauKind::UUU:
    case TauKind::DDD: {
      const PowerSeries G = aux::uuu_dyck_g(N);
      const PowerSeries g1 = G - one(N);
      return (one(N) + x_times(G)) / (one(N) - x_times(g1 * g1));
    }
    case TauKind::UUD:
    case TauKind::UDD:
    case TauKind::DUU:
    case TauKind::DDU: {
      const PowerSeries c2 = catalan_series(N).compose_power(2);
      const PowerSeries uud = (one(N) - poly({0, 1, 1}, N) * c2).inverse();
      return (tau == TauKind::UUD || tau == TauKind::UDD) ? uud : one(N) + x_times(uud);
    }
    case TauKind::UDU:
    case TauKind::DUD:
      return one(N) + aux::udu_dyck_displayed(N);
    default:
      break;
  }
  throw Error(ErrorCode::UnsupportedTau,
              "no Dyck series for the length-2 string " + std::string(name(tau)) + "; use brute force");
}

std::vector<DefiningEquation> defining_equations(std::size_t N) {
  const PowerSeries x = poly({0, 1}, N);
  return {
      {"catalan", {{poly({1}, N), poly({-1}, N), x}}, catalan_series(N)},
      {"motzkin", {{poly({1}, N), poly({-1, 1}, N), poly({0, 0, 1}, N)}}, motzkin_series(N)},
      {"ddd-ballot", aux::ddd_ballot_equation(N), aux::ddd_ballot(N)},
      {"dud-ballot", aux::dud_ballot_equation(N), aux::dud_ballot(N)},
      {"uuu-dyck-G", aux::uuu_dyck_g_equation(N), aux::uuu_dyck_g(N)},
      {"udu-dyck-G", aux::udu_dyck_g_equation(N), aux::udu_dyck_g(N)},
      {"udu-dyck-T", aux::udu_dyck_t_equation(N), aux::udu_dyck_t(N)},
  };
}

}  // namespace pathclass
