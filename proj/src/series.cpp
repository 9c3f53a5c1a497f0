#include "pathclass/series.hpp"

#include <sstream>

#include "pathclass/error.hpp"

namespace pathclass {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

PowerSeries::PowerSeries(std::vector<mpq_class> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

PowerSeries PowerSeries::constant(const mpq_class& c, std::size_t order) { return monomial(0, c, order); }

PowerSeries PowerSeries::monomial(std::size_t k, const mpq_class& c, std::size_t order) {
  PowerSeries s(order);
  if (k <= order) s.coeffs_[k] = c;
  return s;
}

PowerSeries PowerSeries::polynomial(std::initializer_list<long> coeffs, std::size_t order) {
  std::vector<mpq_class> q;
  q.reserve(coeffs.size());
  for (long c : coeffs) q.emplace_back(c);
  return PowerSeries(std::move(q), order);
}

bool PowerSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool PowerSeries::is_integral() const {
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

std::vector<mpz_class> PowerSeries::integer_coefficients() const {
  std::vector<mpz_class> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].get_den() != 1) {
      throw Error(ErrorCode::InvalidArgument, "coefficient " + std::to_string(i) + " is not an integer: " +
                                                  coeffs_[i].get_str());
    }
    out.push_back(coeffs_[i].get_num());
  }
  return out;
}

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::OrderMismatch, "truncation orders differ: " + std::to_string(a.order()) + " vs " +
                                              std::to_string(b.order()));
  }
}

}  // namespace

PowerSeries PowerSeries::operator+(const PowerSeries& rhs) const {
  require_same_order(*this, rhs);
  PowerSeries out(*this);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += rhs.coeffs_[i];
  return out;
}

PowerSeries PowerSeries::operator-(const PowerSeries& rhs) const { return *this + (-rhs); }

PowerSeries PowerSeries::operator-() const {
  PowerSeries out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

PowerSeries PowerSeries::operator*(const PowerSeries& rhs) const {
  require_same_order(*this, rhs);
  const std::size_t n = order();
  PowerSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (rhs.coeffs_[j] != 0) out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

PowerSeries PowerSeries::operator*(const mpq_class& c) const {
  PowerSeries out(*this);
  for (auto& v : out.coeffs_) v *= c;
  return out;
}

PowerSeries PowerSeries::pow(std::size_t e) const {
  PowerSeries out = constant(1, order());
  for (std::size_t i = 0; i < e; ++i) out = out * *this;
  return out;
}

PowerSeries PowerSeries::shift(std::size_t s) const {
  PowerSeries out(order());
  for (std::size_t i = 0; i + s <= order(); ++i) out.coeffs_[i + s] = coeffs_[i];
  return out;
}

PowerSeries PowerSeries::inverse() const {
  if (coeffs_[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "cannot invert a series with zero constant term");
  const std::size_t n = order();
  PowerSeries out(n);
  const mpq_class inv0 = 1 / coeffs_[0];
  out.coeffs_[0] = inv0;
  for (std::size_t m = 1; m <= n; ++m) {
    mpq_class acc = 0;
    for (std::size_t i = 1; i <= m; ++i) acc += coeffs_[i] * out.coeffs_[m - i];
    out.coeffs_[m] = -acc * inv0;
  }
  return out;
}

PowerSeries PowerSeries::compose_power(std::size_t k) const {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "compose_power needs k >= 1");
  PowerSeries out(order());
  for (std::size_t i = 0; i * k <= order(); ++i) out.coeffs_[i * k] = coeffs_[i];
  return out;
}

std::string PowerSeries::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i].get_str();
  os << ']';
  return os.str();
}

PowerSeries operator/(const PowerSeries& num, const PowerSeries& den) { return num * den.inverse(); }

PowerSeries AlgebraicEquation::evaluate(const PowerSeries& a) const {
  // Horner
  PowerSeries acc(a.order());
  for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * a + coeffs[j];
  return acc;
}

PowerSeries AlgebraicEquation::evaluate_derivative(const PowerSeries& a) const {
  PowerSeries acc(a.order());
  for (std::size_t j = coeffs.size(); j-- > 1;) acc = acc * a + coeffs[j] * mpq_class(static_cast<long>(j));
  return acc;
}

PowerSeries solve_algebraic(const AlgebraicEquation& equation, const mpq_class& a0, std::size_t order) {
  for (const auto& c : equation.coeffs) require_same_order(c, PowerSeries(order));
  const PowerSeries seed = PowerSeries::constant(a0, order);
  if (equation.evaluate(seed)[0] != 0) {
    throw Error(ErrorCode::NoRationalSeed, "P(" + a0.get_str() + ") does not vanish at x = 0");
  }
  if (equation.evaluate_derivative(seed)[0] == 0) {
    throw Error(ErrorCode::NotASimpleRoot, "dP/dA vanishes at A = " + a0.get_str() + ", x = 0");
  }
  // Each step doubles the number of correct coefficients.
  PowerSeries a = seed;
  for (std::size_t correct = 1; correct <= order; correct *= 2) {
    a = a - equation.evaluate(a) / equation.evaluate_derivative(a);
  }
  return a;
}

PowerSeries solve_fixed_point(const std::function<PowerSeries(const PowerSeries&)>& phi, const mpq_class& a0,
                              std::size_t order) {
  PowerSeries a = PowerSeries::constant(a0, order);
  for (std::size_t i = 0; i <= order + 1; ++i) {
    PowerSeries next = phi(a);
    if (next == a) break;
    a = std::move(next);
  }
  return a;
}

PowerSeries catalan_series(std::size_t order) {
  const PowerSeries one = PowerSeries::constant(1, order);
  return solve_fixed_point([&](const PowerSeries& c) { return one + (c * c).shift(1); }, 1, order);
}

PowerSeries motzkin_series(std::size_t order) {
  const PowerSeries one = PowerSeries::constant(1, order);
  return solve_fixed_point([&](const PowerSeries& m) { return one + m.shift(1) + (m * m).shift(2); }, 1, order);
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class catalan_power_coeff(long n, long s) {
  if (n < 0 || s <= 0) {
    throw Error(ErrorCode::InvalidArgument, "catalan_power_coeff needs n >= 0 and s > 0");
  }
  const mpz_class num = s * binomial(2 * n + s, n);
  return num / (2 * n + s);
}

mpz_class fibonacci(long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "fibonacci index starts at 1");
  mpz_class out;
  mpz_fib_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class recurrence_a000930(long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "recurrence index starts at 1");
  std::vector<mpz_class> a = {1, 1, 2};
  while (static_cast<long>(a.size()) < n) a.push_back(a[a.size() - 1] + a[a.size() - 3]);
  return a[n - 1];
}

namespace {

mpq_class ratio(long num, long den) {
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

mpz_class as_integer(const mpq_class& q, std::string_view what) {
  if (q.get_den() != 1) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is not integral");
  return q.get_num();
}

}  // namespace

mpz_class closed_form_udd(long n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "closed_form_udd needs n >= 0");
  mpq_class sum = 0;
  for (long i = 0; i <= n / 4; ++i) {
    sum += ratio(n - 4 * i + 1, n - 3 * i + 1) * mpq_class(binomial(n - 2 * i, i));
  }
  return as_integer(sum, "closed_form_udd");
}

mpz_class closed_form_uud_dyck(long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "closed_form_uud_dyck needs n >= 1");
  mpq_class sum = 0;
  for (long i = 0; i <= (n - 1) / 2; ++i) {
    for (long j = 0; j <= (n - 2 * i) / 2; ++j) {
      sum += ratio(n - 2 * i - j, n - j) * mpq_class(binomial(n - j, i) * binomial(n - 2 * i - j, j));
    }
  }
  return as_integer(sum, "closed_form_uud_dyck");
}

std::string_view to_string(CountMethod method) noexcept {
  switch (method) {
    case CountMethod::BruteForce: return "brute";
    case CountMethod::GeneratingFunction: return "gf";
    case CountMethod::Recurrence: return "recurrence";
    case CountMethod::ClosedForm: return "closed";
  }
  return "";
}

CountMethod parse_method(std::string_view text) {
  for (CountMethod m : kAllCountMethods) {
    if (to_string(m) == text) return m;
  }
  throw Error(ErrorCode::ParseError, "unknown method '" + std::string(text) + "' (brute, gf, recurrence, closed)");
}

}  // namespace pathclass
