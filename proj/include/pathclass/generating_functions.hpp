#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pathclass/canonical.hpp"
#include "pathclass/series.hpp"

namespace pathclass {

/// Coefficient n is the number of tau-classes of ballot paths of length n.
PowerSeries gf_ballot(TauKind tau, std::size_t order);

/// Coefficient n is the number of tau-classes of Dyck paths of semilength n.
/// Length-3 strings only; throws UnsupportedTau for ud, du, uu, dd.
PowerSeries gf_dyck(TauKind tau, std::size_t order);

/// Auxiliary series, solved from their defining equations.
namespace aux {

/// x^2(1-2x+x^2-x^4)A^3 + 2x(1-x)^2 A^2 + (1-3x+x^2)A - 1 = 0
AlgebraicEquation ddd_ballot_equation(std::size_t order);
/// Denominators cleared from the displayed dud cubic.
AlgebraicEquation dud_ballot_equation(std::size_t order);
/// x^6 B^3 + x^4(1-x^2)B^2 - (1-x^2+x^4)B + 1 - x^2 + x^4 = 0, with the dud
/// ballot series A = B / (1 - xB).
AlgebraicEquation dud_ballot_bar_equation(std::size_t order);
/// xG^3 - (1+2x)G^2 + (1+3x)G - x = 0, G(0) = 1
AlgebraicEquation uuu_dyck_g_equation(std::size_t order);
/// G = x(1+G) + x^2(1+xG)(1+x(1+xG))G, G(0) = 0
AlgebraicEquation udu_dyck_g_equation(std::size_t order);
/// x^3T^3 + x^2T^2 + (x-1)T + x^2 = 0, T(0) = 0
AlgebraicEquation udu_dyck_t_equation(std::size_t order);

PowerSeries ddd_ballot(std::size_t order);
PowerSeries dud_ballot(std::size_t order);
PowerSeries uuu_dyck_g(std::size_t order);
PowerSeries udu_dyck_g(std::size_t order);
PowerSeries udu_dyck_t(std::size_t order);

/// The udu Dyck series exactly as displayed in closed form (two terms in G
/// and T). It lacks the constant term of gf_dyck(UDU).
PowerSeries udu_dyck_displayed(std::size_t order);

}  // namespace aux

/// A series together with the polynomial equation it is meant to satisfy.
struct DefiningEquation {
  std::string name;
  AlgebraicEquation equation;
  PowerSeries solution;

  PowerSeries residual() const { return equation.evaluate(solution); }
};

/// Every series obtained by fixed-point or Newton iteration: C, M, the ddd
/// and dud ballot cubics, the uuu Dyck G, and the udu Dyck G and T.
std::vector<DefiningEquation> defining_equations(std::size_t order);

}  // namespace pathclass
