#pragma once

// Brute-force reference implementations. These deliberately share no code
// with the library beyond the exact number types: partitions come from
// restricted growth strings, orderings from std::next_permutation, colors
// from a plain odometer, and posets from explicit pairwise merge checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Blocks = std::vector<std::vector<int>>;

struct ColoredOsp {
  Blocks blocks;
  std::vector<int> colors;
  friend auto operator<=>(const ColoredOsp&, const ColoredOsp&) = default;
};

// All set partitions of {1..n}, blocks sorted, listed by minimum.
inline std::vector<Blocks> set_partitions(int n) {
  std::vector<Blocks> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == n) {
      Blocks b(static_cast<std::size_t>(max_used + 1));
      for (int j = 0; j < n; ++j) b[static_cast<std::size_t>(rgs[static_cast<std::size_t>(j)])].push_back(j + 1);
      out.push_back(b);
      return;
    }
    for (int v = 0; v <= max_used + 1; ++v) {
      rgs[static_cast<std::size_t>(i)] = v;
      rec(i + 1, std::max(max_used, v));
    }
  };
  if (n == 0) return {Blocks{}};
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

inline mpz_class stirling2(int n, int k) {
  mpz_class c = 0;
  for (const auto& p : set_partitions(n))
    if (static_cast<int>(p.size()) == k) ++c;
  return c;
}

inline std::vector<Blocks> ordered_set_partitions(int n) {
  std::vector<Blocks> out;
  for (const auto& p : set_partitions(n)) {
    std::vector<std::size_t> idx(p.size());
    std::iota(idx.begin(), idx.end(), 0);
    do {
      Blocks ordered;
      for (auto i : idx) ordered.push_back(p[i]);
      out.push_back(ordered);
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return out;
}

// Colorings with values in [0, alpha) and the last entry fixed to 0.
inline void for_each_coloring(std::size_t length, int alpha, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> c(length, 0);
  if (length == 0) {
    f(c);
    return;
  }
  while (true) {
    f(c);
    std::size_t i = 0;
    while (i + 1 < length && c[i] == alpha - 1) c[i++] = 0;
    if (i + 1 >= length) return;
    ++c[i];
  }
}

inline std::vector<ColoredOsp> colored_osps(int n, int alpha) {
  std::vector<ColoredOsp> out;
  for (const auto& b : ordered_set_partitions(n))
    for_each_coloring(b.size(), alpha, [&](const std::vector<int>& c) { out.push_back({b, c}); });
  std::sort(out.begin(), out.end());
  return out;
}

inline bool alternating(const ColoredOsp& t) {
  for (std::size_t i = 0; i + 1 < t.colors.size(); ++i)
    if (t.colors[i] == t.colors[i + 1]) return false;
  return true;
}

// sigma covers tau when it merges exactly one adjacent same-colored pair.
inline bool covers(const ColoredOsp& tau, const ColoredOsp& sigma) {
  if (sigma.blocks.size() + 1 != tau.blocks.size()) return false;
  for (std::size_t i = 0; i + 1 < tau.blocks.size(); ++i) {
    if (tau.colors[i] != tau.colors[i + 1]) continue;
    ColoredOsp m = tau;
    m.blocks[i].insert(m.blocks[i].end(), m.blocks[i + 1].begin(), m.blocks[i + 1].end());
    std::sort(m.blocks[i].begin(), m.blocks[i].end());
    m.blocks.erase(m.blocks.begin() + static_cast<std::ptrdiff_t>(i + 1));
    m.colors.erase(m.colors.begin() + static_cast<std::ptrdiff_t>(i + 1));
    if (m == sigma) return true;
  }
  return false;
}

// Connected components of the cover graph, by quadratic search.
inline std::size_t component_count(int n, int alpha) {
  const auto q = colored_osps(n, alpha);
  std::vector<std::size_t> parent(q.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      if (covers(q[i], q[j])) parent[find(i)] = find(j);
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < q.size(); ++i) roots.insert(find(i));
  return roots.size();
}

// Faces indexed by dimension n - (#blocks).
inline std::vector<mpz_class> f_dim(int n, int alpha) {
  std::vector<mpz_class> f(static_cast<std::size_t>(n), 0);
  for (const auto& t : colored_osps(n, alpha)) ++f[static_cast<std::size_t>(n) - t.blocks.size()];
  return f;
}

// Descents of a colored word: a value drop or any change of color.
inline std::vector<mpz_class> colored_descent_distribution(int n, int alpha) {
  std::vector<mpz_class> dist(static_cast<std::size_t>(std::max(n, 1)), 0);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    for_each_coloring(w.size(), alpha, [&](const std::vector<int>& c) {
      std::size_t d = 0;
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (c[i] != c[i + 1] || w[i] > w[i + 1]) ++d;
      ++dist[d];
    });
  } while (std::next_permutation(w.begin(), w.end()));
  return dist;
}

inline std::vector<mpz_class> eulerian_numbers(int n) {
  return colored_descent_distribution(n, 1);
}

inline mpz_class fubini(int n) {
  return mpz_class(static_cast<unsigned long>(ordered_set_partitions(n).size()));
}

// sum_{k=0}^{K} k^n x^k with 0^0 = 1.
inline mpq_class power_sum(int n, const mpq_class& x, unsigned K) {
  mpq_class s = n == 0 ? mpq_class(1) : mpq_class(0);
  mpq_class xp = 1;
  for (unsigned k = 1; k <= K; ++k) {
    xp *= x;
    mpz_class kn = 1;
    for (int i = 0; i < n; ++i) kn *= k;
    s += xp * kn;
  }
  return s;
}

// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  mpq_class rational(int span = 20) {
    mpq_class q(uniform(-span, span), uniform(1, span));
    q.canonicalize();
    return q;
  }
  std::vector<mpq_class> coefficients(int max_len, int span = 20) {
    std::vector<mpq_class> c(static_cast<std::size_t>(uniform(0, max_len)));
    for (auto& x : c) x = rational(span);
    return c;
  }
  std::vector<int> permutation(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng_);
    return w;
  }
  ColoredOsp colored_osp(int n, int alpha) {
    auto w = permutation(n);
    ColoredOsp t;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= w.size(); ++i) {
      if (i == w.size() || uniform(0, 2) == 0) {
        std::vector<int> b(w.begin() + static_cast<std::ptrdiff_t>(start), w.begin() + static_cast<std::ptrdiff_t>(i));
        std::sort(b.begin(), b.end());
        t.blocks.push_back(b);
        t.colors.push_back(uniform(0, alpha - 1));
        start = i;
      }
    }
    t.colors.back() = 0;
    return t;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
