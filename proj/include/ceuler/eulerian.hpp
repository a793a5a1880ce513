#pragma once

// Classical and alpha-colored Eulerian polynomials.
//
// Convention: the classical polynomial is A_n(x) = sum_{pi in S_n} x^(1+d(pi)),
// so it has zero constant term and degree n. descent_polynomial() gives the
// sum_{pi} t^d(pi) form used by most references.
//
// The colored polynomial A_n^alpha(t) is computed four ways:
//   closed form   sum_d E(n,d) (alpha t)^d (1 + (alpha-1) t)^(n-1-d)
//   descents      sum over colored permutations with fixed last color
//   complex       h-transform of the face counts of P_n^alpha
//   gamma         coefficientwise sum of signed face counts

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ceuler/exact.hpp"
#include "ceuler/structures.hpp"

namespace ceuler {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

struct EulerianPolynomial {
  Polynomial poly;  // sum x^(1+d)
  int n = 0;

  /// sum_{pi} t^d(pi), i.e. poly / x.
  Polynomial descent_polynomial() const;
};

struct ColoredEulerianPolynomial {
  Polynomial poly;
  int n = 0;
  int alpha = 1;

  /// A^alpha(n, k), the coefficient of t^k.
  Int coefficient(std::size_t k) const;
  std::vector<Int> coefficients() const;

  friend bool operator==(const ColoredEulerianPolynomial&, const ColoredEulerianPolynomial&) = default;
};

/// E(n, d) = #{pi in S_n : d(pi) = d}, d = 0..n-1. Enumerates S_n for n <= 8
/// and uses E(n,d) = (d+1) E(n-1,d) + (n-d) E(n-1,d-1) beyond.
std::vector<Int> descent_counts(int n);
/// Same counts by brute-force enumeration only (for cross-checks).
std::vector<Int> descent_counts_by_enumeration(int n);

EulerianPolynomial classical_eulerian(int n);

ColoredEulerianPolynomial colored_eulerian_closed_form(int n, int alpha);

/// Enumerates alpha^(n-1) n! colored permutations, split across `workers`
/// threads by first letter. Throws BudgetExceeded above `budget`.
ColoredEulerianPolynomial colored_eulerian_descents(int n, int alpha, unsigned workers = 1,
                                                    std::uint64_t budget = kDefaultEnumerationBudget);

/// Blocks-indexed f-polynomial sum_k S(n,k) k! alpha^(k-1) x^(k-1).
Polynomial blocks_f_polynomial(int n, int alpha);
/// Dimension-indexed f-polynomial sum_d S(n,n-d) (n-d)! alpha^(n-d-1) x^d.
Polynomial dimension_f_polynomial(int n, int alpha);

ColoredEulerianPolynomial colored_eulerian_from_complex(int n, int alpha);

/// gamma_i = sum_{j=n-1-i}^{n-1} F_j C(j, n-1-i) (-1)^(j-n+1+i), where F_j is
/// the number of j-dimensional faces. Throws std::out_of_range unless
/// 0 <= i <= n-1.
Int gamma_coefficient(int n, int i, int alpha);
ColoredEulerianPolynomial colored_eulerian_gamma(int n, int alpha);

/// Number of colored permutations with exactly m descents, from the
/// underlying descent counts: sum_d E(n,d) alpha^d (alpha-1)^(m-d) C(n-1-d, m-d).
Int descent_class_count(int n, int m, int alpha);

enum class RecurrenceBracket {
  Printed,  // alpha + n - k - 1 + (k-1)(alpha-1) + (alpha-1)(alpha-1)!
  Amended,  // alpha + n - k - 1 + (k-1)(alpha-1) + (alpha-1)
};

/// One row of the three-term recurrence applied to `previous` (row n-1).
std::vector<Int> recurrence_row(int n, int alpha, const std::vector<Int>& previous, RecurrenceBracket bracket);

struct RecurrenceDiscrepancy {
  int n = 0;
  int k = 0;
  Int one_step;    // recurrence applied to the oracle's row n-1
  Int oracle;      // closed-form coefficient
  Int propagated;  // recurrence iterated from the base row n = 1

  friend bool operator==(const RecurrenceDiscrepancy&, const RecurrenceDiscrepancy&) = default;
};

struct RecurrenceReport {
  int alpha = 1;
  int n_min = 2;
  int n_max = 2;
  RecurrenceBracket bracket = RecurrenceBracket::Printed;
  /// Propagated rows, index 0 is n = 1.
  std::vector<std::vector<Int>> table;
  /// Sorted by (n, k). An entry appears when either the one-step or the
  /// propagated value differs from the oracle.
  std::vector<RecurrenceDiscrepancy> discrepancies;

  bool one_step_consistent() const;
  bool consistent() const { return discrepancies.empty(); }
};

/// Audits rows n_min..n_max (n_min >= 2) of the recurrence against the closed form.
RecurrenceReport colored_eulerian_recurrence(int n_min, int n_max, int alpha,
                                             RecurrenceBracket bracket = RecurrenceBracket::Printed);

/// (alpha+1)^n A_n(alpha/(alpha+1)) == alpha sum_k S(n,k) k! alpha^(k-1),
/// both sides expanded as polynomials in alpha.
bool verify_colored_fubini_identity(int n);
/// Left side of the above as a polynomial in alpha.
Polynomial colored_fubini_lhs(int n);
Polynomial colored_fubini_rhs(int n);

/// 2^n A_n(1/2) == sum_k S(n,k) k!
bool verify_fubini_half(int n);
Int fubini(int n);

struct PowerSumCheck {
  Rational lhs_partial;  // sum_{k=0}^{K} k^n x^k, x = alpha/(alpha+1)
  Rational rhs;          // (alpha+1) alpha sum_k S(n,k) k! alpha^(k-1)
  Rational tail_bound;   // bound on sum_{k>K} |k^n x^k|

  bool within_bound() const { return abs(lhs_partial - rhs) <= tail_bound; }
};

/// Requires alpha > -1/2, alpha != 0, K >= 1 (std::domain_error otherwise);
/// also std::domain_error when K is too small for the geometric bound.
PowerSumCheck verify_power_sum_identity(int n, const Rational& alpha, unsigned K);
/// A K whose tail bound is <= eps, located by doubling then bisection.
unsigned power_sum_terms_needed(int n, const Rational& alpha, const Rational& eps);

/// sum_{k=0}^{n-1} (-1)^k S(n,n-k) (n-k)! == 1
bool verify_euler_char_of_Pn(int n);

struct RealRootReport {
  bool squarefree = false;
  std::size_t distinct_real_roots = 0;
  std::size_t degree = 0;

  bool all_real() const { return squarefree && distinct_real_roots == degree; }
};

RealRootReport real_rootedness_report(int n, int alpha);
bool coefficient_sum_check(int n, int alpha);
bool log_concavity_check(int n, int alpha);

}  // namespace ceuler
