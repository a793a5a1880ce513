#include "ceuler/eulerian.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace ceuler {

namespace {

void check_n(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

void check_n_alpha(int n, int alpha, const char* what) {
  check_n(n, what);
  if (alpha < 1) throw std::invalid_argument(std::string(what) + ": alpha must be >= 1");
}

ColoredEulerianPolynomial wrap(Polynomial p, int n, int alpha) { return {std::move(p), n, alpha}; }

}  // namespace

Polynomial EulerianPolynomial::descent_polynomial() const {
  std::vector<Rational> c(poly.coeffs().begin() + (poly.is_zero() ? 0 : 1), poly.coeffs().end());
  return Polynomial(std::move(c));
}

Int ColoredEulerianPolynomial::coefficient(std::size_t k) const {
  const Rational c = poly.coeff(k);
  if (c.get_den() != 1) throw std::logic_error("colored Eulerian coefficient is not an integer");
  return c.get_num();
}

std::vector<Int> ColoredEulerianPolynomial::coefficients() const {
  std::vector<Int> out;
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) out.push_back(coefficient(k));
  return out;
}

// ---------------------------------------------------------------------------
// Classical

std::vector<Int> descent_counts_by_enumeration(int n) {
  check_n(n, "descent_counts");
  if (n > 12) throw BudgetExceeded("descent enumeration over S_n is limited to n <= 12");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  for_each_permutation(n, [&](std::span<const int> w) {
    std::size_t d = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
    ++counts[d];
  });
  std::vector<Int> out;
  for (auto c : counts) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

std::vector<Int> descent_counts(int n) {
  check_n(n, "descent_counts");
  if (n <= 8) return descent_counts_by_enumeration(n);
  std::vector<Int> row = descent_counts_by_enumeration(8);
  for (int m = 9; m <= n; ++m) {
    std::vector<Int> next(static_cast<std::size_t>(m));
    for (int d = 0; d < m; ++d) {
      Int v = 0;
      if (d < m - 1) v += Int(d + 1) * row[static_cast<std::size_t>(d)];
      if (d >= 1) v += Int(m - d) * row[static_cast<std::size_t>(d - 1)];
      next[static_cast<std::size_t>(d)] = v;
    }
    row = std::move(next);
  }
  return row;
}

EulerianPolynomial classical_eulerian(int n) {
  const auto counts = descent_counts(n);
  std::vector<Rational> c(counts.size() + 1);
  for (std::size_t d = 0; d < counts.size(); ++d) c[d + 1] = counts[d];
  return {Polynomial(std::move(c)), n};
}

// ---------------------------------------------------------------------------
// Colored routes

ColoredEulerianPolynomial colored_eulerian_closed_form(int n, int alpha) {
  check_n_alpha(n, alpha, "colored_eulerian_closed_form");
  const auto counts = descent_counts(n);
  const Polynomial alpha_t = Polynomial::monomial(alpha, 1);
  const Polynomial run = Polynomial::linear(alpha - 1, 1);
  Polynomial sum;
  for (int d = 0; d < n; ++d) {
    const Int& e = counts[static_cast<std::size_t>(d)];
    if (e == 0) continue;
    sum += Rational(e) * pow(alpha_t, static_cast<unsigned>(d)) * pow(run, static_cast<unsigned>(n - 1 - d));
  }
  return wrap(std::move(sum), n, alpha);
}

ColoredEulerianPolynomial colored_eulerian_descents(int n, int alpha, unsigned workers, std::uint64_t budget) {
  check_n_alpha(n, alpha, "colored_eulerian_descents");
  const Int total = count_colored_permutations(n, alpha);
  if (total > Int(static_cast<unsigned long>(budget)))
    throw BudgetExceeded("colored_eulerian_descents: " + total.get_str() + " colored permutations exceed the budget of " +
                         std::to_string(budget));
  workers = std::clamp(workers, 1u, static_cast<unsigned>(n));

  using Counts = std::vector<std::uint64_t>;
  std::vector<Counts> per_letter(static_cast<std::size_t>(n), Counts(static_cast<std::size_t>(n), 0));
  std::atomic<int> next_letter{1};
  auto work = [&] {
    for (int first = next_letter++; first <= n; first = next_letter++) {
      Counts& counts = per_letter[static_cast<std::size_t>(first - 1)];
      for_each_colored_permutation(
          n, alpha, [&](const ColoredPermutation& tau) { ++counts[colored_descent_set(tau).size()]; }, first);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  // ordered reduction, independent of scheduling
  std::vector<Rational> coeffs(static_cast<std::size_t>(n));
  for (const auto& counts : per_letter)
    for (std::size_t d = 0; d < counts.size(); ++d) coeffs[d] += Rational(Int(static_cast<unsigned long>(counts[d])));
  return wrap(Polynomial(std::move(coeffs)), n, alpha);
}

Polynomial blocks_f_polynomial(int n, int alpha) {
  check_n_alpha(n, alpha, "blocks_f_polynomial");
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k - 1)] = count_Q_blocks(n, alpha, k);
  return Polynomial(std::move(c));
}

Polynomial dimension_f_polynomial(int n, int alpha) {
  check_n_alpha(n, alpha, "dimension_f_polynomial");
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) c[static_cast<std::size_t>(d)] = count_Q_blocks(n, alpha, n - d);
  return Polynomial(std::move(c));
}

ColoredEulerianPolynomial colored_eulerian_from_complex(int n, int alpha) {
  return wrap(f_to_h(blocks_f_polynomial(n, alpha), n), n, alpha);
}

Int gamma_coefficient(int n, int i, int alpha) {
  check_n_alpha(n, alpha, "gamma_coefficient");
  if (i < 0 || i > n - 1) throw std::out_of_range("gamma_coefficient: i must lie in 0..n-1");
  const int low = n - 1 - i;
  Int total = 0;
  for (int j = low; j <= n - 1; ++j) {
    // j-dimensional faces have n - j blocks
    const Int term = count_Q_blocks(n, alpha, n - j) * binomial(j, low);
    if ((j - low) % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

ColoredEulerianPolynomial colored_eulerian_gamma(int n, int alpha) {
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = gamma_coefficient(n, i, alpha);
  return wrap(Polynomial(std::move(c)), n, alpha);
}

Int descent_class_count(int n, int m, int alpha) {
  check_n_alpha(n, alpha, "descent_class_count");
  if (m < 0 || m > n - 1) return 0;
  const auto counts = descent_counts(n);
  Int total = 0;
  for (int d = 0; d <= m; ++d)
    total += counts[static_cast<std::size_t>(d)] * pow(Int(alpha), static_cast<unsigned long>(d)) *
             pow(Int(alpha - 1), static_cast<unsigned long>(m - d)) * binomial(n - 1 - d, m - d);
  return total;
}

// ---------------------------------------------------------------------------
// Recurrence audit

std::vector<Int> recurrence_row(int n, int alpha, const std::vector<Int>& previous, RecurrenceBracket bracket) {
  if (n < 2) throw std::invalid_argument("recurrence_row: n must be >= 2");
  auto prev = [&](int k) -> Int {
    return (k >= 0 && k < static_cast<int>(previous.size())) ? previous[static_cast<std::size_t>(k)] : Int(0);
  };
  const Int a = alpha;
  const Int tail = bracket == RecurrenceBracket::Printed ? Int((a - 1) * factorial(static_cast<unsigned>(alpha - 1)))
                                                         : Int(a - 1);
  std::vector<Int> row(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const Int middle = a + (n - k - 1) + Int(k - 1) * (a - 1) + tail;
    row[static_cast<std::size_t>(k)] = Int(k + 1) * prev(k) + middle * prev(k - 1) + (a - 1) * (n - k) * prev(k - 2);
  }
  return row;
}

bool RecurrenceReport::one_step_consistent() const {
  return std::all_of(discrepancies.begin(), discrepancies.end(),
                     [](const RecurrenceDiscrepancy& d) { return d.one_step == d.oracle; });
}

RecurrenceReport colored_eulerian_recurrence(int n_min, int n_max, int alpha, RecurrenceBracket bracket) {
  if (n_min < 2 || n_max < n_min) throw std::invalid_argument("colored_eulerian_recurrence: need 2 <= n_min <= n_max");
  if (alpha < 1) throw std::invalid_argument("colored_eulerian_recurrence: alpha must be >= 1");
  RecurrenceReport report;
  report.alpha = alpha;
  report.n_min = n_min;
  report.n_max = n_max;
  report.bracket = bracket;
  report.table.push_back({Int(1)});

  std::vector<Int> oracle_prev = colored_eulerian_closed_form(1, alpha).coefficients();
  for (int n = 2; n <= n_max; ++n) {
    report.table.push_back(recurrence_row(n, alpha, report.table.back(), bracket));
    const auto oracle = colored_eulerian_closed_form(n, alpha).coefficients();
    if (n >= n_min) {
      const auto one_step = recurrence_row(n, alpha, oracle_prev, bracket);
      const auto& propagated = report.table.back();
      for (int k = 0; k < n; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        if (one_step[idx] != oracle[idx] || propagated[idx] != oracle[idx])
          report.discrepancies.push_back({n, k, one_step[idx], oracle[idx], propagated[idx]});
      }
    }
    oracle_prev = oracle;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Identities

Polynomial colored_fubini_lhs(int n) {
  // (alpha+1)^n sum_j a_j (alpha/(alpha+1))^j = sum_j a_j alpha^j (alpha+1)^(n-j)
  const auto A = classical_eulerian(n).poly;
  const Polynomial alpha_var = Polynomial::monomial(1, 1);
  const Polynomial alpha_plus_one = Polynomial::linear(1, 1);
  Polynomial lhs;
  for (std::size_t j = 0; j < A.size(); ++j) {
    if (A.coeffs()[j] == 0) continue;
    lhs += A.coeffs()[j] * pow(alpha_var, static_cast<unsigned>(j)) *
           pow(alpha_plus_one, static_cast<unsigned>(static_cast<std::size_t>(n) - j));
  }
  return lhs;
}

Polynomial colored_fubini_rhs(int n) {
  check_n(n, "colored_fubini_rhs");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k)
    c[static_cast<std::size_t>(k)] =
        stirling2(static_cast<unsigned>(n), static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(k));
  return Polynomial(std::move(c));
}

bool verify_colored_fubini_identity(int n) { return colored_fubini_lhs(n) == colored_fubini_rhs(n); }

Int fubini(int n) {
  check_n(n, "fubini");
  Int total = 0;
  for (int k = 1; k <= n; ++k)
    total += stirling2(static_cast<unsigned>(n), static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(k));
  return total;
}

bool verify_fubini_half(int n) {
  const Rational value = pow(Rational(2), static_cast<unsigned long>(n)) * classical_eulerian(n).poly(make_rational(1, 2));
  return value == Rational(fubini(n));
}

namespace {

struct PowerSumSetup {
  Rational x;
  Rational r;
};

PowerSumSetup power_sum_setup(const Rational& alpha) {
  if (alpha == 0) throw std::domain_error("power-sum identity: alpha must be nonzero");
  if (alpha <= make_rational(-1, 2)) throw std::domain_error("power-sum identity: alpha must exceed -1/2");
  PowerSumSetup s;
  s.x = alpha / (alpha + 1);
  s.r = abs(s.x);
  return s;
}

std::optional<Rational> tail_bound(unsigned n, const Rational& r, unsigned K) {
  // For k > K the term ratio ((k+1)/k)^n r is at most rho.
  const Rational rho = pow(make_rational(K + 2, K + 1), n) * r;
  if (rho >= 1) return std::nullopt;
  return Rational(pow(Int(K + 1), n)) * pow(r, K + 1) / (1 - rho);
}

}  // namespace

PowerSumCheck verify_power_sum_identity(int n, const Rational& alpha, unsigned K) {
  if (n < 0) throw std::invalid_argument("power-sum identity: n must be >= 0");
  if (K < 1) throw std::invalid_argument("power-sum identity: K must be >= 1");
  const auto setup = power_sum_setup(alpha);
  const auto bound = tail_bound(static_cast<unsigned>(n), setup.r, K);
  if (!bound) throw std::domain_error("power-sum identity: K too small for a geometric tail bound");

  PowerSumCheck out;
  out.lhs_partial = partial_power_sum(static_cast<unsigned>(n), setup.x, K);
  Rational sum = 0;
  for (int k = 0; k <= n; ++k) {
    // S(n,0) 0! alpha^(-1) only survives at n = 0
    const Int s = stirling2(static_cast<unsigned>(n), static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(k));
    if (s == 0) continue;
    sum += Rational(s) * (k == 0 ? 1 / alpha : pow(alpha, static_cast<unsigned long>(k - 1)));
  }
  out.rhs = (alpha + 1) * alpha * sum;
  out.tail_bound = *bound;
  return out;
}

unsigned power_sum_terms_needed(int n, const Rational& alpha, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("power_sum_terms_needed: eps must be positive");
  const auto setup = power_sum_setup(alpha);
  auto ok = [&](unsigned K) {
    const auto b = tail_bound(static_cast<unsigned>(n), setup.r, K);
    return b && *b <= eps;
  };
  unsigned hi = 1;
  while (!ok(hi)) {
    if (hi > (1u << 24)) throw std::domain_error("power_sum_terms_needed: no K below 2^24 meets the bound");
    hi *= 2;
  }
  unsigned lo = hi / 2;  // not ok (or 0)
  while (hi - lo > 1) {
    const unsigned mid = lo + (hi - lo) / 2;
    if (ok(mid)) hi = mid;
    else lo = mid;
  }
  return hi;
}

bool verify_euler_char_of_Pn(int n) {
  check_n(n, "verify_euler_char_of_Pn");
  Int chi = 0;
  for (int k = 0; k < n; ++k) {
    const Int f = count_Q_blocks(n, 1, n - k);
    if (k % 2 == 0) chi += f;
    else chi -= f;
  }
  return chi == 1;
}

RealRootReport real_rootedness_report(int n, int alpha) {
  if (n < 2) throw std::invalid_argument("real_rootedness_report: n must be >= 2");
  const auto poly = colored_eulerian_closed_form(n, alpha).poly;
  RealRootReport r;
  r.degree = *poly.degree();
  r.squarefree = is_squarefree(poly);
  r.distinct_real_roots = sturm_count_real_roots(poly);
  return r;
}

bool coefficient_sum_check(int n, int alpha) {
  const auto poly = colored_eulerian_closed_form(n, alpha).poly;
  return poly(1) == Rational(count_colored_permutations(n, alpha));
}

bool log_concavity_check(int n, int alpha) {
  if (n < 3) throw std::invalid_argument("log_concavity_check: n must be >= 3");
  const auto c = colored_eulerian_closed_form(n, alpha).coefficients();
  for (std::size_t k = 1; k + 1 < c.size(); ++k)
    if (c[k] * c[k] < c[k - 1] * c[k + 1]) return false;
  return true;
}

}  // namespace ceuler
