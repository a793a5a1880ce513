#pragma once

// The alpha-colored permutohedron P_n^alpha as a face poset.
//
// Faces are elements of Q_n^alpha; a face with b blocks has dimension n - b.
// Facets are the alternating elements, and the component of a facet is its
// lower order ideal, which is isomorphic to the face lattice of
// P_{c_1} x ... x P_{c_k} for the facet's type (c_1, ..., c_k).

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "ceuler/exact.hpp"
#include "ceuler/structures.hpp"

namespace ceuler {

inline constexpr std::uint64_t kDefaultFaceBudget = 2'000'000;
inline constexpr int kMaxComplexN = 7;
inline constexpr int kMaxRealizedDimension = 6;

struct ComplexComponent {
  ColoredOrderedSetPartition facet;
  int dimension = 0;
  /// Faces by dimension 0..dimension, counted by walking the lower ideal.
  std::vector<Int> f_dim;

  Int total_faces() const;
};

struct PolytopalComplex {
  int n = 0;
  int alpha = 1;
  std::vector<ComplexComponent> components;
  std::vector<Int> f_dim;  // index d = number of d-dimensional faces

  Int total_faces() const;
  /// Alternating sum of f_dim.
  Int alternating_sum() const;
};

/// f_d = S(n, n-d) (n-d)! alpha^(n-d-1), d = 0..n-1.
std::vector<Int> f_vector(int n, int alpha);

/// Builds P_n^alpha. Requires 1 <= n <= 7, alpha >= 1 and
/// |Q_n^alpha| <= max_faces (BudgetExceeded otherwise).
PolytopalComplex build_complex(int n, int alpha, std::uint64_t max_faces = kDefaultFaceBudget);

/// Faces of one component grouped by dimension.
std::vector<std::vector<ColoredOrderedSetPartition>> component_faces(const ComplexComponent& comp);

/// Component face counts predicted by the product structure: the coefficientwise
/// product of the f-vectors of P_{c_1}, ..., P_{c_k}.
std::vector<Int> product_f_vector(const Composition& type);

/// sum over Comp(n) of (alpha-1)^(|c|-1) multinomial(c), with 0^0 = 1.
Int count_components(int n, int alpha);

/// Connected components found by union-find over Q covers, without using the
/// facet decomposition. Throws BudgetExceeded when |Q_n^alpha| > max_faces.
Int count_components_by_union_find(int n, int alpha, std::uint64_t max_faces = kDefaultFaceBudget);

/// count_components(n, alpha) equals the total face count of P_n^(alpha-1).
bool verify_components_equal_faces(int n, int alpha);

struct EulerCharacteristic {
  Int alternating_sum;
  Int component_count;
  /// (alpha-1)^n / alpha * A_n(alpha/(alpha-1)); only defined for alpha >= 2.
  std::optional<Rational> eulerian_formula;

  bool consistent() const;
};

EulerCharacteristic euler_characteristic(int n, int alpha);

/// Union of the component ideals is Q_n^alpha without repetition, and the
/// color-blind refinement order inside each component has exactly the covers
/// of covers_in_Q. Requires n <= 5, alpha <= 3.
bool verify_face_lattice(int n, int alpha);

/// Blocks-indexed f-polynomial of P_n^alpha equals that of P_n at alpha*x.
bool verify_f_scaling(int n, int alpha);

struct GeometricVertex {
  std::vector<int> order;       // label order refining the facet's blocks
  std::vector<Rational> point;  // point[label-1] = position of label in order

  friend bool operator==(const GeometricVertex&, const GeometricVertex&) = default;
};

/// One vertex per linear order refining the facet's block order.
/// BudgetExceeded above kMaxRealizedDimension.
std::vector<GeometricVertex> realize_component(const ComplexComponent& comp);

/// Index pairs (i < j) of vertices whose orders differ by swapping two
/// adjacent labels of the same block.
std::vector<std::pair<std::size_t, std::size_t>> realization_edges(const ComplexComponent& comp,
                                                                    const std::vector<GeometricVertex>& vertices);

/// OFF text: header, "V F 0", vertex coordinates as decimals with `precision`
/// fractional digits, then every edge as a two-vertex face record.
void write_off(std::ostream& os, const PolytopalComplex& complex, int precision);
/// Lossless twin of write_off with exact rational coordinates.
void write_geometry_json(std::ostream& os, const PolytopalComplex& complex);

}  // namespace ceuler
