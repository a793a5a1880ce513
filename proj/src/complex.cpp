#include "ceuler/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ceuler/eulerian.hpp"
#include "ceuler/io.hpp"

namespace ceuler {

namespace {

void check_budget(int n, int alpha, std::uint64_t max_faces, const char* what) {
  const Int faces = count_Q(n, alpha);
  if (faces > Int(static_cast<unsigned long>(max_faces)))
    throw BudgetExceeded(std::string(what) + ": |Q_" + std::to_string(n) + "^" + std::to_string(alpha) +
                         "| = " + faces.get_str() + " faces exceed the budget of " + std::to_string(max_faces));
}

Int signed_sum(const std::vector<Int>& f) {
  Int total = 0;
  for (std::size_t d = 0; d < f.size(); ++d) {
    if (d % 2 == 0) total += f[d];
    else total -= f[d];
  }
  return total;
}

Int plain_sum(const std::vector<Int>& f) { return std::accumulate(f.begin(), f.end(), Int(0)); }

class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  std::size_t roots() {
    std::size_t count = 0;
    for (std::uint32_t i = 0; i < parent_.size(); ++i) count += find(i) == i;
    return count;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

// sigma's blocks, merged at one adjacent pair, reproduce tau's blocks.
bool merges_once(const ColoredOrderedSetPartition& sigma, const ColoredOrderedSetPartition& tau) {
  if (sigma.num_blocks() != tau.num_blocks() + 1) return false;
  const auto& sb = sigma.blocks();
  const auto& tb = tau.blocks();
  std::size_t i = 0;
  while (i < tb.size() && sb[i] == tb[i]) ++i;
  if (i == tb.size()) return false;
  std::vector<int> merged;
  std::merge(sb[i].begin(), sb[i].end(), sb[i + 1].begin(), sb[i + 1].end(), std::back_inserter(merged));
  if (merged != tb[i]) return false;
  for (std::size_t j = i + 1; j < tb.size(); ++j)
    if (sb[j + 1] != tb[j]) return false;
  return true;
}

}  // namespace

Int ComplexComponent::total_faces() const { return plain_sum(f_dim); }

Int PolytopalComplex::total_faces() const { return plain_sum(f_dim); }

Int PolytopalComplex::alternating_sum() const { return signed_sum(f_dim); }

std::vector<Int> f_vector(int n, int alpha) {
  if (n < 1 || alpha < 1) throw std::invalid_argument("f_vector: need n >= 1 and alpha >= 1");
  std::vector<Int> f(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) f[static_cast<std::size_t>(d)] = count_Q_blocks(n, alpha, n - d);
  return f;
}

PolytopalComplex build_complex(int n, int alpha, std::uint64_t max_faces) {
  if (n < 1 || n > kMaxComplexN)
    throw BudgetExceeded("build_complex: n must lie in 1.." + std::to_string(kMaxComplexN));
  if (alpha < 1) throw std::invalid_argument("build_complex: alpha must be >= 1");
  check_budget(n, alpha, max_faces, "build_complex");

  PolytopalComplex complex;
  complex.n = n;
  complex.alpha = alpha;
  complex.f_dim.assign(static_cast<std::size_t>(n), 0);
  std::vector<std::uint64_t> counts;
  for_each_alternating(n, alpha, [&](const ColoredOrderedSetPartition& facet) {
    const int dim = n - static_cast<int>(facet.num_blocks());
    counts.assign(static_cast<std::size_t>(dim) + 1, 0);
    for_each_face_below(facet, [&](const ColoredOrderedSetPartition& face) {
      ++counts[static_cast<std::size_t>(n - static_cast<int>(face.num_blocks()))];
    });
    ComplexComponent comp{facet, dim, {}};
    for (std::size_t d = 0; d < counts.size(); ++d) {
      comp.f_dim.emplace_back(static_cast<unsigned long>(counts[d]));
      complex.f_dim[d] += comp.f_dim.back();
    }
    complex.components.push_back(std::move(comp));
  });
  return complex;
}

std::vector<std::vector<ColoredOrderedSetPartition>> component_faces(const ComplexComponent& comp) {
  std::vector<std::vector<ColoredOrderedSetPartition>> out(static_cast<std::size_t>(comp.dimension) + 1);
  const int n = comp.facet.n();
  for_each_face_below(comp.facet, [&](const ColoredOrderedSetPartition& face) {
    out[static_cast<std::size_t>(n - static_cast<int>(face.num_blocks()))].push_back(face);
  });
  return out;
}

std::vector<Int> product_f_vector(const Composition& type) {
  Polynomial product = Polynomial::constant(1);
  for (int c : type.parts()) {
    std::vector<Rational> f(static_cast<std::size_t>(c));
    for (int d = 0; d < c; ++d) f[static_cast<std::size_t>(d)] = count_Q_blocks(c, 1, c - d);
    product *= Polynomial(std::move(f));
  }
  std::vector<Int> out;
  for (const auto& coeff : product.coeffs()) out.push_back(coeff.get_num());
  return out;
}

Int count_components(int n, int alpha) {
  if (n < 1 || alpha < 1) throw std::invalid_argument("count_components: need n >= 1 and alpha >= 1");
  Int total = 0;
  for_each_composition(n, [&](const Composition& c) {
    total += pow(Int(alpha - 1), static_cast<unsigned long>(c.length() - 1)) * multinomial(c);
  });
  return total;
}

Int count_components_by_union_find(int n, int alpha, std::uint64_t max_faces) {
  check_budget(n, alpha, max_faces, "count_components_by_union_find");
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<ColoredOrderedSetPartition> faces;
  for_each_Q(n, alpha, [&](const ColoredOrderedSetPartition& tau) {
    index.emplace(tau.key(), static_cast<std::uint32_t>(faces.size()));
    faces.push_back(tau);
  });
  UnionFind uf(faces.size());
  for (std::uint32_t i = 0; i < faces.size(); ++i)
    for (const auto& up : upper_covers(faces[i])) uf.unite(i, index.at(up.key()));
  return Int(static_cast<unsigned long>(uf.roots()));
}

bool verify_components_equal_faces(int n, int alpha) {
  if (alpha < 2) throw std::invalid_argument("verify_components_equal_faces: alpha must be >= 2");
  Int faces;
  if (n <= kMaxComplexN && count_Q(n, alpha - 1) <= Int(static_cast<unsigned long>(kDefaultFaceBudget)))
    faces = build_complex(n, alpha - 1).total_faces();
  else
    faces = plain_sum(f_vector(n, alpha - 1));
  return count_components(n, alpha) == faces;
}

bool EulerCharacteristic::consistent() const {
  if (alternating_sum != component_count) return false;
  return !eulerian_formula || *eulerian_formula == Rational(alternating_sum);
}

EulerCharacteristic euler_characteristic(int n, int alpha) {
  EulerCharacteristic chi;
  chi.alternating_sum = signed_sum(f_vector(n, alpha));
  chi.component_count = count_components(n, alpha);
  if (alpha >= 2) {
    const Rational a = alpha;
    const auto A = classical_eulerian(n).poly;
    chi.eulerian_formula = pow(a - 1, static_cast<unsigned long>(n)) / a * A(a / (a - 1));
  }
  return chi;
}

bool verify_face_lattice(int n, int alpha) {
  if (n < 1 || n > 5 || alpha < 1 || alpha > 3)
    throw std::invalid_argument("verify_face_lattice: limited to n <= 5, alpha <= 3");
  const auto complex = build_complex(n, alpha);

  std::unordered_map<std::string, std::size_t> owner;
  for (std::size_t c = 0; c < complex.components.size(); ++c) {
    const auto grouped = component_faces(complex.components[c]);
    std::vector<ColoredOrderedSetPartition> faces;
    for (const auto& g : grouped) faces.insert(faces.end(), g.begin(), g.end());
    for (const auto& f : faces)
      if (!owner.emplace(f.key(), c).second) return false;  // shared face
    for (const auto& sigma : faces)
      for (const auto& tau : faces)
        if (merges_once(sigma, tau) != covers_in_Q(sigma, tau)) return false;
  }

  // Every Q element is a face, and Q covers never leave a component.
  std::size_t seen = 0;
  bool ok = true;
  for_each_Q(n, alpha, [&](const ColoredOrderedSetPartition& tau) {
    ++seen;
    const auto it = owner.find(tau.key());
    if (it == owner.end()) {
      ok = false;
      return;
    }
    for (const auto& up : upper_covers(tau)) {
      const auto jt = owner.find(up.key());
      if (jt == owner.end() || jt->second != it->second) ok = false;
    }
  });
  return ok && seen == owner.size();
}

bool verify_f_scaling(int n, int alpha) {
  const Polynomial colored = blocks_f_polynomial(n, alpha);
  const Polynomial plain = blocks_f_polynomial(n, 1);
  return colored == compose_linear(plain, alpha, 0);
}

std::vector<GeometricVertex> realize_component(const ComplexComponent& comp) {
  if (comp.dimension > kMaxRealizedDimension)
    throw BudgetExceeded("realize_component: dimension " + std::to_string(comp.dimension) + " exceeds " +
                         std::to_string(kMaxRealizedDimension));
  const auto& blocks = comp.facet.blocks();
  const int n = comp.facet.n();
  std::vector<GeometricVertex> out;
  std::vector<std::vector<int>> current = blocks;  // each starts sorted
  std::function<void(std::size_t)> permute = [&](std::size_t b) {
    if (b == current.size()) {
      GeometricVertex v;
      v.point.assign(static_cast<std::size_t>(n), 0);
      for (const auto& blk : current) v.order.insert(v.order.end(), blk.begin(), blk.end());
      for (std::size_t pos = 0; pos < v.order.size(); ++pos)
        v.point[static_cast<std::size_t>(v.order[pos] - 1)] = static_cast<unsigned long>(pos + 1);
      out.push_back(std::move(v));
      return;
    }
    std::sort(current[b].begin(), current[b].end());
    do {
      permute(b + 1);
    } while (std::next_permutation(current[b].begin(), current[b].end()));
  };
  permute(0);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> realization_edges(const ComplexComponent& comp,
                                                                    const std::vector<GeometricVertex>& vertices) {
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i].order, i);
  // positions p where p and p+1 lie in the same facet block
  std::vector<std::size_t> swappable;
  std::size_t pos = 0;
  for (const auto& blk : comp.facet.blocks()) {
    for (std::size_t j = 0; j + 1 < blk.size(); ++j) swappable.push_back(pos + j);
    pos += blk.size();
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t p : swappable) {
      auto order = vertices[i].order;
      std::swap(order[p], order[p + 1]);
      const std::size_t j = index.at(order);
      if (i < j) edges.emplace_back(i, j);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

namespace {

struct Realization {
  std::vector<std::vector<GeometricVertex>> vertices;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges;
};

Realization realize_all(const PolytopalComplex& complex) {
  Realization r;
  for (const auto& comp : complex.components) {
    r.vertices.push_back(realize_component(comp));
    r.edges.push_back(realization_edges(comp, r.vertices.back()));
  }
  return r;
}

}  // namespace

void write_off(std::ostream& os, const PolytopalComplex& complex, int precision) {
  const auto r = realize_all(complex);
  std::size_t nv = 0, ne = 0;
  for (std::size_t c = 0; c < r.vertices.size(); ++c) {
    nv += r.vertices[c].size();
    ne += r.edges[c].size();
  }
  os << "OFF\n";
  os << "# colored permutohedron n=" << complex.n << " alpha=" << complex.alpha << " coordinates=" << complex.n
     << " precision=" << precision << " faces=edges\n";
  os << nv << ' ' << ne << " 0\n";
  for (const auto& comp_vertices : r.vertices)
    for (const auto& v : comp_vertices) {
      for (std::size_t i = 0; i < v.point.size(); ++i) os << (i ? " " : "") << to_decimal(v.point[i], precision);
      os << '\n';
    }
  std::size_t offset = 0;
  for (std::size_t c = 0; c < r.vertices.size(); ++c) {
    for (const auto& [a, b] : r.edges[c]) os << "2 " << offset + a << ' ' << offset + b << '\n';
    offset += r.vertices[c].size();
  }
}

void write_geometry_json(std::ostream& os, const PolytopalComplex& complex) {
  const auto r = realize_all(complex);
  Json comps = Json::array();
  for (std::size_t c = 0; c < complex.components.size(); ++c) {
    Json verts = Json::array();
    for (const auto& v : r.vertices[c]) {
      Json point = Json::array();
      for (const auto& x : v.point) point.push_back(rational_to_json(x));
      verts.push_back(Json{{"order", v.order}, {"point", point}});
    }
    Json edges = Json::array();
    for (const auto& [a, b] : r.edges[c]) edges.push_back(Json::array({a, b}));
    comps.push_back(Json{{"facet", partition_to_json(complex.components[c].facet)},
                         {"dimension", complex.components[c].dimension},
                         {"vertices", verts},
                         {"edges", edges}});
  }
  os << Json{{"n", complex.n}, {"alpha", complex.alpha}, {"components", comps}}.dump() << '\n';
}

}  // namespace ceuler
