#pragma once

// Exact arithmetic substrate: GMP integers and rationals, dense univariate
// polynomials over Q, truncated power series, combinatorial number tables
// and Sturm-chain real root counting. Nothing in here touches floating point.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ceuler {

using Int = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Int& num, const Int& den = 1);

Int pow(const Int& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

/// Dense polynomial over Q. Coefficient i multiplies t^i. Trailing zeros are
/// never stored, so the zero polynomial has an empty coefficient vector.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t power);
  /// a*t + b
  static Polynomial linear(const Rational& a, const Rational& b);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  /// Coefficient of t^i; zero past the degree.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Rational operator()(const Rational& t) const;

  Polynomial derivative() const;
  bool is_integral() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator-(Polynomial p);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
/// Monic gcd (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p(a*t + b)
Polynomial compose_linear(const Polynomial& p, const Rational& a, const Rational& b);
/// q(t) = p(t + a), by repeated synthetic division.
Polynomial poly_shift(const Polynomial& p, const Rational& a);
/// t^d * p(1/t); throws std::invalid_argument when deg p > d.
Polynomial poly_reverse(const Polynomial& p, std::size_t d);

/// h(t) = (1-t)^(n-1) f(t/(1-t)) for a blocks-indexed f-polynomial
/// (exponent = number of blocks - 1). Throws when deg f > n - 1.
Polynomial f_to_h(const Polynomial& f_blocks, int n);
/// reverse_{n-1}(f_dim(t - 1)) for a dimension-indexed f-polynomial.
Polynomial f_to_h_by_shift(const Polynomial& f_dim, int n);

/// Number of distinct real roots, counted with a Sturm chain on the open
/// Cauchy interval. Throws std::invalid_argument on the zero polynomial.
std::size_t sturm_count_real_roots(const Polynomial& p);
/// gcd(p, p') is constant. Throws std::invalid_argument on zero.
bool is_squarefree(const Polynomial& p);
/// Sturm chain p, p', -rem(...), ... (exposed for tests).
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Power series in x modulo x^(order+1).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order);
  TruncatedSeries(std::size_t order, std::vector<Rational> coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    return lhs += rhs;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
  friend TruncatedSeries operator*(TruncatedSeries s, const Rational& c);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// outer(inner(x)); inner must have a zero constant term.
  static TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

  /// e^x - 1
  static TruncatedSeries exp_minus_one(std::size_t order);

 private:
  std::vector<Rational> coeffs_;
};

/// (e^x - 1) / (1 - alpha (e^x - 1)) mod x^(order+1).
TruncatedSeries egf_colored_fubini(const Int& alpha, std::size_t order);

Int factorial(unsigned n);
Int binomial(long n, long k);
/// Set partitions of [n] into k nonempty blocks, by the triangle recurrence.
Int stirling2(unsigned n, unsigned k);
/// (sum c)! / prod c_i!; parts must be positive.
Int multinomial(std::span<const int> parts);

/// sum_{k=0}^{K} k^n x^k with 0^0 = 1.
Rational partial_power_sum(unsigned n, const Rational& x, unsigned K);

}  // namespace ceuler
