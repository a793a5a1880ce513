#include "doctest.h"

#include <map>
#include <set>

#include "ceuler/io.hpp"
#include "ceuler/structures.hpp"
#include "oracles.hpp"

using namespace ceuler;

namespace {

ColoredOrderedSetPartition lift(const oracle::ColoredOsp& t, int alpha) {
  return ColoredOrderedSetPartition(t.blocks, t.colors, alpha);
}

oracle::ColoredOsp lower(const ColoredOrderedSetPartition& t) { return {t.blocks(), t.colors()}; }

}  // namespace

TEST_CASE("compositions") {
  const Composition c({2, 1, 3});
  CHECK(c.n() == 6);
  CHECK(c.breaks() == std::vector<int>{2, 3});
  const std::vector<int> br{2, 3};
  CHECK(Composition::from_breaks(6, br) == c);
  CHECK_THROWS(Composition({2, 0}));
  CHECK(compositions_of(5).size() == 16);
  CHECK(multinomial(c) == 60);
  CHECK(refines(Composition({1, 1, 1, 3}), c));
  CHECK_FALSE(refines(Composition({1, 2, 3}), c));
  std::set<Composition> seen;
  for_each_composition(6, [&](const Composition& x) { seen.insert(x); });
  CHECK(seen.size() == 32);
}

TEST_CASE("refinement is a partial order on random compositions") {
  oracle::Gen g(0x5eed11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = g.uniform(1, 8);
    const auto all = compositions_of(n);
    const auto& a = all[static_cast<std::size_t>(g.uniform(0, static_cast<int>(all.size()) - 1))];
    const auto& b = all[static_cast<std::size_t>(g.uniform(0, static_cast<int>(all.size()) - 1))];
    const auto& c = all[static_cast<std::size_t>(g.uniform(0, static_cast<int>(all.size()) - 1))];
    CHECK(refines(a, a));
    if (refines(a, b) && refines(b, a)) CHECK(a == b);
    if (refines(a, b) && refines(b, c)) CHECK(refines(a, c));
    CHECK(refines(Composition(std::vector<int>(static_cast<std::size_t>(n), 1)), a));
  }
}

TEST_CASE("permutations and descent sets") {
  const Permutation p({3, 1, 4, 2});
  CHECK(p.descents() == 2);
  CHECK(descent_set(p).indices()[0] == 1);
  CHECK(descent_composition(p) == Composition({1, 2, 1}));
  CHECK_THROWS(Permutation({1, 1, 2}));
  CHECK(Permutation::identity(4).descents() == 0);
  std::size_t count = 0;
  for_each_permutation(5, [&](std::span<const int>) { ++count; });
  CHECK(count == 120);
  CHECK(DescentSet(5, {3, 1, 3}).size() == 2);
  CHECK_THROWS(DescentSet(4, {4}));
  oracle::Gen g(0x5eed12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = g.uniform(1, 9);
    const Permutation pi(g.permutation(n));
    const auto ds = descent_set(pi);
    CHECK(DescentSet::from_composition(ds.to_composition()) == ds);
    CHECK(ds.size() == pi.descents());
  }
}

TEST_CASE("colored ordered set partitions: validation and text") {
  const ColoredOrderedSetPartition t({{2, 1}, {3}}, {1, 0}, 2);
  CHECK(t.blocks()[0] == std::vector<int>{1, 2});
  CHECK(t.n() == 3);
  CHECK(t.rank() == 1);
  CHECK_THROWS(ColoredOrderedSetPartition({{1}, {2}}, {0, 1}, 2));  // last color fixed
  CHECK_THROWS(ColoredOrderedSetPartition({{1}, {3}}, {0, 0}, 2));  // not [n]
  CHECK_THROWS(ColoredOrderedSetPartition({{1}, {}}, {0, 0}, 2));
  CHECK_THROWS(ColoredOrderedSetPartition({{1}, {2}}, {2, 0}, 2));
  CHECK_THROWS(ColoredOrderedSetPartition({{1, 1}}, {0}, 1));
  CHECK(partition_to_json(t).dump() == R"({"blocks":[[1,2],[3]],"colors":[1,0]})");
  CHECK(partition_from_json(partition_to_json(t), 2) == t);
}

TEST_CASE("Q enumeration matches brute force exactly") {
  for (int n = 1; n <= 5; ++n)
    for (int alpha = 1; alpha <= 3; ++alpha) {
      const auto expected = oracle::colored_osps(n, alpha);
      std::vector<oracle::ColoredOsp> got;
      for_each_Q(n, alpha, [&](const ColoredOrderedSetPartition& t) { got.push_back(lower(t)); });
      CHECK(got.size() == expected.size());
      std::sort(got.begin(), got.end());
      CHECK(got == expected);
      CHECK(count_Q(n, alpha) == Int(static_cast<unsigned long>(expected.size())));
      Int by_blocks = 0;
      for (int k = 1; k <= n; ++k) by_blocks += count_Q_blocks(n, alpha, k);
      CHECK(by_blocks == count_Q(n, alpha));
      CHECK(enumerate_Q(n, alpha).size() == expected.size());
    }
}

TEST_CASE("alternating elements") {
  for (int n = 1; n <= 5; ++n)
    for (int alpha = 1; alpha <= 3; ++alpha) {
      std::set<oracle::ColoredOsp> expected, got;
      for (const auto& t : oracle::colored_osps(n, alpha))
        if (oracle::alternating(t)) expected.insert(t);
      for_each_alternating(n, alpha, [&](const ColoredOrderedSetPartition& t) {
        CHECK(is_alternating(t));
        got.insert(lower(t));
      });
      CHECK(got == expected);
    }
}

TEST_CASE("cover relation against pairwise brute force") {
  for (int n = 1; n <= 4; ++n)
    for (int alpha = 1; alpha <= 3; ++alpha) {
      const auto q = oracle::colored_osps(n, alpha);
      for (const auto& a : q) {
        const auto la = lift(a, alpha);
        std::set<oracle::ColoredOsp> ups;
        for (const auto& u : upper_covers(la)) ups.insert(lower(u));
        for (const auto& b : q) {
          const bool expected = oracle::covers(a, b);
          CHECK(covers_in_Q(la, lift(b, alpha)) == expected);
          CHECK(ups.count(b) == (expected ? 1u : 0u));
        }
      }
    }
  CHECK_THROWS(covers_in_Q(ColoredOrderedSetPartition({{1}}, {0}, 1), ColoredOrderedSetPartition({{1}}, {0}, 2)));
}

TEST_CASE("merge_color_runs, faces below and the forget map on random elements") {
  oracle::Gen g(0x5eed13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = g.uniform(1, 7), alpha = g.uniform(1, 4);
    const auto t = lift(g.colored_osp(n, alpha), alpha);
    const auto top = merge_color_runs(t);
    CHECK(is_alternating(top));
    CHECK(type_of(top).n() == n);
    // t lies below its run merge: following covers reaches top
    auto cur = t;
    while (!is_alternating(cur)) {
      const auto ups = upper_covers(cur);
      REQUIRE_FALSE(ups.empty());
      cur = ups.front();
    }
    CHECK(cur == top);
    // the forget map concatenates the blocks
    std::vector<int> concat;
    for (const auto& b : t.blocks()) concat.insert(concat.end(), b.begin(), b.end());
    const auto pi = forget_map(t);
    const auto w = pi.word();
    CHECK(std::vector<int>(w.begin(), w.end()) == concat);
  }
}

TEST_CASE("faces below a facet form its lower ideal") {
  for (int n = 1; n <= 4; ++n)
    for (int alpha = 1; alpha <= 3; ++alpha)
      for_each_alternating(n, alpha, [&](const ColoredOrderedSetPartition& facet) {
        std::set<std::string> ideal;
        for_each_face_below(facet, [&](const ColoredOrderedSetPartition& f) {
          CHECK(ideal.insert(f.key()).second);
          CHECK(merge_color_runs(f) == facet);
        });
        std::size_t expected = 0;
        for (const auto& t : oracle::colored_osps(n, alpha))
          if (merge_color_runs(lift(t, alpha)) == facet) ++expected;
        CHECK(ideal.size() == expected);
      });
}

TEST_CASE("fibers of the forget map") {
  for (int n = 1; n <= 5; ++n)
    for (int alpha = 1; alpha <= 3; ++alpha) {
      std::map<std::vector<int>, std::pair<Int, Int>> fibers;
      for (const auto& t : oracle::colored_osps(n, alpha)) {
        std::vector<int> w;
        for (const auto& b : t.blocks) w.insert(w.end(), b.begin(), b.end());
        fibers[w].first += 1;
        if (oracle::alternating(t)) fibers[w].second += 1;
      }
      for_each_permutation(n, [&](std::span<const int> w) {
        const Permutation pi(std::vector<int>(w.begin(), w.end()));
        const auto& [all, alt] = fibers[std::vector<int>(w.begin(), w.end())];
        CHECK(fiber_size(pi, alpha) == all);
        CHECK(alternating_fiber_size(pi, alpha) == alt);
      });
    }
}

TEST_CASE("colored permutations") {
  for (int n = 1; n <= 5; ++n)
    for (int alpha = 1; alpha <= 3; ++alpha) {
      std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
      std::vector<Int> dist(static_cast<std::size_t>(n), 0);
      for_each_colored_permutation(n, alpha, [&](const ColoredPermutation& t) {
        CHECK(t.colors().back() == 0);
        seen.insert({t.word(), t.colors()});
        dist[colored_descent_set(t).size()] += 1;
      });
      CHECK(Int(static_cast<unsigned long>(seen.size())) == count_colored_permutations(n, alpha));
      CHECK(enumerate_colored_permutations(n, alpha).size() == seen.size());
      CHECK(dist == oracle::colored_descent_distribution(n, alpha));
    }
  const ColoredPermutation t({2, 1, 3}, {1, 1, 0}, 2);
  CHECK(colored_permutation_to_json(t).dump() == R"({"word":[2,1,3],"colors":[1,1,0]})");
  CHECK(colored_permutation_from_json(colored_permutation_to_json(t), 2) == t);
  CHECK(colored_descent_set(t).size() == 2);
  CHECK_THROWS(ColoredPermutation({1, 2}, {0, 1}, 2));
}

TEST_CASE("first-letter slices partition the colored permutations") {
  const int n = 4, alpha = 2;
  std::size_t total = 0;
  for (int first = 1; first <= n; ++first)
    for_each_colored_permutation(
        n, alpha,
        [&](const ColoredPermutation& t) {
          CHECK(t.word().front() == first);
          ++total;
        },
        first);
  CHECK(Int(static_cast<unsigned long>(total)) == count_colored_permutations(n, alpha));
}
