#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace pathclass {

/// Truncated formal power series sum_{i<=N} c_i x^i with exact rational
/// coefficients. Every operation keeps the truncation order N; mixing orders
/// throws OrderMismatch.
class PowerSeries {
 public:
  PowerSeries() : PowerSeries(0) {}
  explicit PowerSeries(std::size_t order);
  /// Coefficients past `order` are dropped, missing ones are zero.
  PowerSeries(std::vector<mpq_class> coeffs, std::size_t order);

  static PowerSeries constant(const mpq_class& c, std::size_t order);
  /// c x^k
  static PowerSeries monomial(std::size_t k, const mpq_class& c, std::size_t order);
  /// Polynomial with integer coefficients c_0, c_1, ...
  static PowerSeries polynomial(std::initializer_list<long> coeffs, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const mpq_class& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_integral() const;
  /// Throws InvalidArgument if some coefficient is not an integer.
  std::vector<mpz_class> integer_coefficients() const;

  PowerSeries operator+(const PowerSeries& rhs) const;
  PowerSeries operator-(const PowerSeries& rhs) const;
  PowerSeries operator-() const;
  PowerSeries operator*(const PowerSeries& rhs) const;
  PowerSeries operator*(const mpq_class& c) const;
  friend PowerSeries operator*(const mpq_class& c, const PowerSeries& s) { return s * c; }
  PowerSeries& operator+=(const PowerSeries& rhs) { return *this = *this + rhs; }
  PowerSeries& operator*=(const PowerSeries& rhs) { return *this = *this * rhs; }

  PowerSeries pow(std::size_t e) const;
  /// Multiply by x^s.
  PowerSeries shift(std::size_t s) const;
  /// Multiplicative inverse. Throws ZeroConstantTerm.
  PowerSeries inverse() const;
  /// Substitute x -> x^k (k >= 1).
  PowerSeries compose_power(std::size_t k) const;

  std::string str() const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<mpq_class> coeffs_;
};

PowerSeries operator/(const PowerSeries& num, const PowerSeries& den);

/// P(A) = sum_j coeffs[j] A^j with power-series coefficients.
struct AlgebraicEquation {
  std::vector<PowerSeries> coeffs;

  PowerSeries evaluate(const PowerSeries& a) const;
  PowerSeries evaluate_derivative(const PowerSeries& a) const;
};

/// The series with constant term a0 solving P(A) = O(x^{N+1}), by Newton
/// iteration. Throws NoRationalSeed if P(a0) != 0 at x = 0 and NotASimpleRoot
/// if dP/dA vanishes there.
PowerSeries solve_algebraic(const AlgebraicEquation& equation, const mpq_class& a0, std::size_t order);

/// Iterates A <- phi(A) from a0 until the truncated series is stable.
PowerSeries solve_fixed_point(const std::function<PowerSeries(const PowerSeries&)>& phi, const mpq_class& a0,
                              std::size_t order);

/// C = 1 + x C^2
PowerSeries catalan_series(std::size_t order);
/// M = 1 + x M + x^2 M^2
PowerSeries motzkin_series(std::size_t order);

mpz_class binomial(long n, long k);
/// [x^n] C(x)^s = s/(2n+s) binom(2n+s, n). Throws InvalidArgument for s <= 0 or n < 0.
mpz_class catalan_power_coeff(long n, long s);
/// f_1 = f_2 = 1. Throws InvalidArgument for n < 1.
mpz_class fibonacci(long n);
/// 1, 1, 2 at n = 1, 2, 3, then a_{n+3} = a_{n+2} + a_n. Throws InvalidArgument for n < 1.
mpz_class recurrence_a000930(long n);
/// [x^n] C(x^4) / (1 - x C(x^4)).
mpz_class closed_form_udd(long n);
/// [x^n] 1 / (1 - x(1+x) C(x^2)), n >= 1.
mpz_class closed_form_uud_dyck(long n);

enum class CountMethod { BruteForce, GeneratingFunction, Recurrence, ClosedForm };

inline constexpr CountMethod kAllCountMethods[] = {CountMethod::BruteForce, CountMethod::GeneratingFunction,
                                                   CountMethod::Recurrence, CountMethod::ClosedForm};

/// "brute", "gf", "recurrence", "closed"
std::string_view to_string(CountMethod method) noexcept;
/// Throws ParseError.
CountMethod parse_method(std::string_view text);

}  // namespace pathclass
