#include "ceuler/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ceuler {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Int pow(const Int& base, unsigned long exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational out(pow(Int(base.get_num()), exponent), pow(Int(base.get_den()), exponent));
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& a, const Rational& b) { return Polynomial({b, a}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(d));
}

bool Polynomial::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Polynomial operator-(Polynomial p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::string Polynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0) os << "-";
    else if (!first) os << "+";
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial out = Polynomial::constant(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = num.coeffs();
  const std::size_t dd = den.size() - 1;
  if (rem.size() < den.size()) return {Polynomial{}, num};
  std::vector<Rational> quot(rem.size() - dd);
  const Rational& lead = den.leading();
  for (std::size_t k = rem.size(); k-- > dd;) {
    Rational q = rem[k] / lead;
    quot[k - dd] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * den.coeffs()[j];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * (Rational(1) / x.leading());
}

Polynomial compose_linear(const Polynomial& p, const Rational& a, const Rational& b) {
  const Polynomial lin = Polynomial::linear(a, b);
  Polynomial acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * lin;
    acc += Polynomial::constant(*it);
  }
  return acc;
}

Polynomial poly_shift(const Polynomial& p, const Rational& a) {
  // Taylor coefficients at a via repeated synthetic division by (t - a).
  std::vector<Rational> c = p.coeffs();
  const std::size_t m = c.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = m - 1; j > i; --j) c[j - 1] += a * c[j];
  return Polynomial(std::move(c));
}

Polynomial poly_reverse(const Polynomial& p, std::size_t d) {
  if (p.is_zero()) return p;
  if (*p.degree() > d) throw std::invalid_argument("poly_reverse: degree exceeds reversal length");
  std::vector<Rational> out(d + 1);
  for (std::size_t i = 0; i < p.size(); ++i) out[d - i] = p.coeffs()[i];
  return Polynomial(std::move(out));
}

Polynomial f_to_h(const Polynomial& f_blocks, int n) {
  if (n < 1) throw std::invalid_argument("f_to_h: n must be positive");
  const auto top = static_cast<std::size_t>(n - 1);
  if (!f_blocks.is_zero() && *f_blocks.degree() > top)
    throw std::invalid_argument("f_to_h: f-polynomial degree exceeds n-1");
  const Polynomial one_minus_t = Polynomial::linear(-1, 1);
  Polynomial h;
  for (std::size_t j = 0; j < f_blocks.size(); ++j) {
    if (f_blocks.coeffs()[j] == 0) continue;
    h += Polynomial::monomial(f_blocks.coeffs()[j], j) * pow(one_minus_t, static_cast<unsigned>(top - j));
  }
  return h;
}

Polynomial f_to_h_by_shift(const Polynomial& f_dim, int n) {
  if (n < 1) throw std::invalid_argument("f_to_h_by_shift: n must be positive");
  return poly_reverse(poly_shift(f_dim, -1), static_cast<std::size_t>(n - 1));
}

// ---------------------------------------------------------------------------
// Real roots

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
  std::vector<Polynomial> chain{p};
  Polynomial next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    next = -divmod(chain[chain.size() - 2], chain.back()).second;
  }
  return chain;
}

namespace {

int sign(const Rational& r) { return sgn(r); }

std::size_t sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  std::size_t changes = 0;
  int prev = 0;
  for (const auto& q : chain) {
    const int s = sign(q(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

std::size_t sturm_count_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count_real_roots: zero polynomial");
  if (*p.degree() == 0) return 0;
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) bound = std::max(bound, Rational(abs(p.coeffs()[i] / p.leading())));
  bound += 1;
  const auto chain = sturm_chain(p);
  return sign_variations(chain, -bound) - sign_variations(chain, bound);
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
  const Polynomial g = gcd(p, p.derivative());
  return g.is_zero() || *g.degree() == 0;
}

// ---------------------------------------------------------------------------
// Series

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  if (rhs.order() != order()) throw std::invalid_argument("series truncation orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  if (rhs.order() != lhs.order()) throw std::invalid_argument("series truncation orders differ");
  const std::size_t N = lhs.order();
  TruncatedSeries out(N);
  for (std::size_t i = 0; i <= N; ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= N; ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return out;
}

TruncatedSeries operator*(TruncatedSeries s, const Rational& c) {
  for (auto& x : s.coeffs_) x *= c;
  return s;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (inner[0] != 0) throw std::invalid_argument("series composition needs a zero constant term");
  const std::size_t N = inner.order();
  TruncatedSeries acc(N);
  // Horner in the inner series; terms past x^N cannot contribute.
  const std::size_t top = std::min(outer.order(), N);
  for (std::size_t k = top + 1; k-- > 0;) {
    acc = acc * inner;
    acc.coeffs_[0] += outer[k];
  }
  return acc;
}

TruncatedSeries TruncatedSeries::exp_minus_one(std::size_t order) {
  TruncatedSeries s(order);
  Int fact = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    fact *= static_cast<unsigned long>(k);
    s.coeffs_[k] = make_rational(1, fact);
  }
  return s;
}

TruncatedSeries egf_colored_fubini(const Int& alpha, std::size_t order) {
  if (order < 1) throw std::invalid_argument("egf_colored_fubini: order must be >= 1");
  // sum_{m>=1} alpha^(m-1) y^m, composed with y = e^x - 1
  TruncatedSeries outer(order);
  Int a_pow = 1;
  for (std::size_t m = 1; m <= order; ++m) {
    outer[m] = a_pow;
    a_pow *= alpha;
  }
  return TruncatedSeries::compose(outer, TruncatedSeries::exp_minus_one(order));
}

// ---------------------------------------------------------------------------
// Number tables

Int factorial(unsigned n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Int stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return 0;
  std::vector<Int> row(k + 1);
  row[0] = 1;  // S(0,0)
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned j = std::min(m, k); j >= 1; --j) row[j] = Int(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

Int multinomial(std::span<const int> parts) {
  Int out = 1;
  long total = 0;
  for (int c : parts) {
    if (c < 1) throw std::invalid_argument("multinomial: parts must be positive");
    total += c;
    out *= binomial(total, c);
  }
  return out;
}

Rational partial_power_sum(unsigned n, const Rational& x, unsigned K) {
  Rational sum = 0;
  Rational x_pow = 1;
  for (unsigned k = 0; k <= K; ++k) {
    if (k == 0) {
      if (n == 0) sum += 1;
    } else {
      x_pow *= x;
      sum += Rational(pow(Int(k), n)) * x_pow;
    }
  }
  return sum;
}

}  // namespace ceuler
