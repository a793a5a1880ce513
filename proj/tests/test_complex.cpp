#include "doctest.h"

#include <map>
#include <set>
#include <sstream>

#include "ceuler/complex.hpp"
#include "ceuler/eulerian.hpp"
#include "ceuler/io.hpp"
#include "oracles.hpp"

using namespace ceuler;

namespace {

Int alternating_sum(const std::vector<Int>& f) {
  Int s = 0;
  for (std::size_t d = 0; d < f.size(); ++d) s += d % 2 == 0 ? f[d] : Int(-f[d]);
  return s;
}

}  // namespace

TEST_CASE("the n = 3, alpha = 2 complex") {
  const auto c = build_complex(3, 2);
  CHECK(c.components.size() == 13);
  CHECK(c.f_dim == std::vector<Int>{24, 12, 1});
  std::map<int, int> by_dim;
  for (const auto& comp : c.components) ++by_dim[comp.dimension];
  CHECK(by_dim == std::map<int, int>{{0, 6}, {1, 6}, {2, 1}});
  for (const auto& comp : c.components)
    if (comp.dimension == 2) CHECK(comp.f_dim == std::vector<Int>{6, 6, 1});
  CHECK(c.alternating_sum() == 13);
  CHECK(c.total_faces() == 37);
}

TEST_CASE("f-vectors and components against brute force") {
  for (int n = 1; n <= 4; ++n)
    for (int alpha = 1; alpha <= 3; ++alpha) {
      const auto f = f_vector(n, alpha);
      CHECK(f == oracle::f_dim(n, alpha));
      const auto c = build_complex(n, alpha);
      CHECK(c.f_dim == f);
      const auto components = Int(static_cast<unsigned long>(oracle::component_count(n, alpha)));
      CHECK(Int(static_cast<unsigned long>(c.components.size())) == components);
      CHECK(count_components(n, alpha) == components);
      CHECK(count_components_by_union_find(n, alpha) == components);
    }
}

TEST_CASE("each component is a product of permutohedra") {
  for (int n = 1; n <= 5; ++n)
    for (int alpha = 1; alpha <= 3; ++alpha) {
      const auto c = build_complex(n, alpha);
      std::vector<Int> summed(static_cast<std::size_t>(n), 0);
      for (const auto& comp : c.components) {
        CHECK(comp.f_dim == product_f_vector(type_of(comp.facet)));
        CHECK(comp.dimension == n - static_cast<int>(comp.facet.num_blocks()));
        // a contractible piece has Euler characteristic 1
        CHECK(alternating_sum(comp.f_dim) == 1);
        for (std::size_t d = 0; d < comp.f_dim.size(); ++d) summed[d] += comp.f_dim[d];
      }
      CHECK(summed == c.f_dim);
    }
}

TEST_CASE("component faces partition Q") {
  const auto c = build_complex(4, 2);
  std::set<std::string> seen;
  for (const auto& comp : c.components) {
    const auto faces = component_faces(comp);
    for (std::size_t d = 0; d < faces.size(); ++d) {
      CHECK(Int(static_cast<unsigned long>(faces[d].size())) == comp.f_dim[d]);
      for (const auto& f : faces[d]) {
        CHECK(f.rank() == static_cast<int>(d));
        CHECK(seen.insert(f.key()).second);
      }
    }
  }
  CHECK(Int(static_cast<unsigned long>(seen.size())) == count_Q(4, 2));
}

TEST_CASE("Euler characteristic identities") {
  for (int alpha = 2; alpha <= 4; ++alpha)
    for (int n = 1; n <= 7; ++n) {
      const auto chi = euler_characteristic(n, alpha);
      CHECK(chi.consistent());
      REQUIRE(chi.eulerian_formula.has_value());
      CHECK(*chi.eulerian_formula == Rational(chi.component_count));
      // independent evaluation of (alpha-1)^n / alpha * A_n(alpha/(alpha-1))
      const auto a = oracle::eulerian_numbers(n);
      Rational x = make_rational(alpha, alpha - 1), value = 0, xp = x;
      for (const auto& c : a) {
        value += Rational(c) * xp;
        xp *= x;
      }
      value *= pow(Rational(alpha - 1), static_cast<unsigned long>(n)) / Rational(alpha);
      CHECK(value == Rational(chi.alternating_sum));
    }
  for (int n = 1; n <= 10; ++n) CHECK(euler_characteristic(n, 1).alternating_sum == 1);
  for (int alpha = 2; alpha <= 3; ++alpha)
    for (int n = 1; n <= 6; ++n) {
      CHECK(verify_components_equal_faces(n, alpha));
      CHECK(count_components(n, alpha) == count_Q(n, alpha - 1));
    }
}

TEST_CASE("face lattice and f-scaling") {
  for (int n = 1; n <= 4; ++n)
    for (int alpha = 1; alpha <= 3; ++alpha) {
      CHECK(verify_face_lattice(n, alpha));
      CHECK(verify_f_scaling(n, alpha));
    }
}

TEST_CASE("budgets") {
  CHECK_THROWS_AS(build_complex(6, 4, 1000), BudgetExceeded);
  CHECK_THROWS_AS(count_components_by_union_find(6, 4, 1000), BudgetExceeded);
  CHECK_THROWS(build_complex(kMaxComplexN + 1, 1));
  CHECK_THROWS(build_complex(0, 1));
}

TEST_CASE("geometric realization") {
  const auto c = build_complex(3, 2);
  for (const auto& comp : c.components) {
    const auto verts = realize_component(comp);
    CHECK(Int(static_cast<unsigned long>(verts.size())) == comp.f_dim[0]);
    const auto edges = realization_edges(comp, verts);
    if (comp.dimension >= 1) CHECK(Int(static_cast<unsigned long>(edges.size())) == comp.f_dim[1]);
    for (const auto& v : verts) {
      Rational sum = 0;
      for (const auto& x : v.point) sum += x;
      CHECK(sum == 6);  // coordinates are a permutation of 1..n
    }
    for (const auto& [a, b] : edges) {
      int differing = 0;
      for (std::size_t i = 0; i < 3; ++i) differing += verts[a].point[i] != verts[b].point[i];
      CHECK(differing == 2);
    }
  }
  std::ostringstream off;
  write_off(off, c, 3);
  std::istringstream in(off.str());
  std::string magic, comment;
  std::getline(in, magic);
  std::getline(in, comment);
  CHECK(magic == "OFF");
  CHECK(comment.rfind("#", 0) == 0);
  std::size_t v = 0, e = 0, z = 1;
  in >> v >> e >> z;
  CHECK(v == 24);
  CHECK(e == 12);
  CHECK(z == 0);
  std::string x;
  in >> x;
  CHECK(x.find('.') != std::string::npos);
  std::ostringstream js;
  write_geometry_json(js, c);
  const auto doc = Json::parse(js.str());
  CHECK(doc["components"].size() == 13);
}

TEST_CASE("random facets: realization matches the product of factorials") {
  oracle::Gen g(0x5eed21);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = g.uniform(1, 6), alpha = g.uniform(1, 3);
    const auto t = g.colored_osp(n, alpha);
    const auto facet = merge_color_runs(ColoredOrderedSetPartition(t.blocks, t.colors, alpha));
    ComplexComponent comp{facet, n - static_cast<int>(facet.num_blocks()), product_f_vector(type_of(facet))};
    Int expected = 1;
    for (const auto& b : facet.blocks()) expected *= factorial(static_cast<unsigned>(b.size()));
    CHECK(Int(static_cast<unsigned long>(realize_component(comp).size())) == expected);
  }
}
