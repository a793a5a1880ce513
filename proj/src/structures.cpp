#include "ceuler/structures.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ceuler {

namespace {

void check_params(int n, int alpha, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
  if (alpha < 1) throw std::invalid_argument(std::string(what) + ": alpha must be >= 1");
}

// Nonempty subsets of a sorted label list, in lexicographic order of the
// sorted subsets: [1], [1,2], [1,2,3], [1,3], [2], [2,3], [3].
class SubsetWalker {
 public:
  using Visit = std::function<void(const std::vector<int>& subset, const std::vector<int>& rest)>;

  SubsetWalker(const std::vector<int>& labels, const Visit& visit) : labels_(labels), visit_(visit) {
    taken_.assign(labels.size(), false);
  }

  void run() { extend(0); }

 private:
  void extend(std::size_t start) {
    for (std::size_t i = start; i < labels_.size(); ++i) {
      current_.push_back(labels_[i]);
      taken_[i] = true;
      rest_.clear();
      for (std::size_t j = 0; j < labels_.size(); ++j)
        if (!taken_[j]) rest_.push_back(labels_[j]);
      visit_(current_, rest_);
      extend(i + 1);
      taken_[i] = false;
      current_.pop_back();
    }
  }

  const std::vector<int>& labels_;
  const Visit& visit_;
  std::vector<bool> taken_;
  std::vector<int> current_;
  std::vector<int> rest_;
};

// Ordered set partitions of `labels`, appending blocks to `out` and calling
// `done` once per complete partition.
void ordered_partitions(const std::vector<int>& labels, std::vector<std::vector<int>>& out,
                        const std::function<void()>& done) {
  if (labels.empty()) {
    done();
    return;
  }
  SubsetWalker::Visit visit = [&](const std::vector<int>& subset, const std::vector<int>& rest) {
    out.push_back(subset);
    const std::vector<int> rest_copy = rest;
    ordered_partitions(rest_copy, out, done);
    out.pop_back();
  };
  SubsetWalker(labels, visit).run();
}

std::vector<int> iota_labels(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  return labels;
}

}  // namespace

// ---------------------------------------------------------------------------
// Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    n_ += p;
  }
}

std::vector<int> Composition::breaks() const {
  std::vector<int> out;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) out.push_back(acc += parts_[i]);
  return out;
}

Composition Composition::from_breaks(int n, std::span<const int> sorted_breaks) {
  std::vector<int> parts;
  int prev = 0;
  for (int b : sorted_breaks) {
    parts.push_back(b - prev);
    prev = b;
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

std::string Composition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

void for_each_composition(int n, const std::function<void(const Composition&)>& visit) {
  if (n < 1) throw std::invalid_argument("compositions_of: n must be >= 1");
  if (n > 30) throw BudgetExceeded("compositions_of: n > 30 exceeds the 2^29 enumeration bound");
  const unsigned long masks = 1UL << (n - 1);
  std::vector<int> breaks;
  for (unsigned long mask = 0; mask < masks; ++mask) {
    breaks.clear();
    for (int i = 1; i < n; ++i)
      if (mask & (1UL << (i - 1))) breaks.push_back(i);
    visit(Composition::from_breaks(n, breaks));
  }
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  for_each_composition(n, [&](const Composition& c) { out.push_back(c); });
  return out;
}

bool refines(const Composition& finer, const Composition& coarser) {
  if (finer.n() != coarser.n()) throw std::invalid_argument("refines: compositions of different n");
  const auto fb = finer.breaks();
  const auto cb = coarser.breaks();
  return std::includes(fb.begin(), fb.end(), cb.begin(), cb.end());
}

Int multinomial(const Composition& c) { return multinomial(c.parts()); }

// ---------------------------------------------------------------------------
// Permutations and descents

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) { return Permutation(iota_labels(n)); }

std::size_t Permutation::descents() const {
  std::size_t d = 0;
  for (std::size_t i = 0; i + 1 < word_.size(); ++i) d += word_[i] > word_[i + 1];
  return d;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < word_.size(); ++i) os << (i && word_.size() > 9 ? " " : "") << word_[i];
  return os.str();
}

void for_each_permutation(int n, const std::function<void(std::span<const int>)>& visit) {
  if (n < 1) throw std::invalid_argument("for_each_permutation: n must be >= 1");
  std::vector<int> w = iota_labels(n);
  do {
    visit(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

DescentSet::DescentSet(int n, std::vector<int> indices) : n_(n), indices_(std::move(indices)) {
  if (n < 1) throw std::invalid_argument("descent set: n must be >= 1");
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  for (int i : indices_)
    if (i < 1 || i > n - 1) throw std::invalid_argument("descent index outside 1..n-1");
}

Composition DescentSet::to_composition() const { return Composition::from_breaks(n_, indices_); }

DescentSet DescentSet::from_composition(const Composition& c) { return DescentSet(c.n(), c.breaks()); }

DescentSet descent_set(const Permutation& pi) {
  std::vector<int> idx;
  for (int i = 1; i < pi.n(); ++i)
    if (pi[static_cast<std::size_t>(i - 1)] > pi[static_cast<std::size_t>(i)]) idx.push_back(i);
  return DescentSet(pi.n(), std::move(idx));
}

Composition descent_composition(const Permutation& pi) { return descent_set(pi).to_composition(); }

// ---------------------------------------------------------------------------
// Colored ordered set partitions

ColoredOrderedSetPartition::ColoredOrderedSetPartition(std::vector<Block> blocks, std::vector<int> colors, int alpha)
    : blocks_(std::move(blocks)), colors_(std::move(colors)), alpha_(alpha) {
  if (alpha_ < 1) throw std::invalid_argument("alpha must be >= 1");
  if (blocks_.empty()) throw std::invalid_argument("an ordered set partition needs at least one block");
  if (colors_.size() != blocks_.size()) throw std::invalid_argument("one color per block required");
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("blocks must be nonempty");
    std::sort(b.begin(), b.end());
    n_ += static_cast<int>(b.size());
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  for (const auto& b : blocks_)
    for (int v : b) {
      if (v < 1 || v > n_ || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("blocks must partition 1..n");
      seen[static_cast<std::size_t>(v)] = true;
    }
  for (int c : colors_)
    if (c < 0 || c >= alpha_) throw std::invalid_argument("block color outside 0..alpha-1");
  if (colors_.back() != 0) throw std::invalid_argument("the last block must carry the fixed color 0");
}

ColoredOrderedSetPartition::ColoredOrderedSetPartition(Unchecked, std::vector<Block> blocks, std::vector<int> colors,
                                                       int alpha, int n)
    : blocks_(std::move(blocks)), colors_(std::move(colors)), alpha_(alpha), n_(n) {}

std::string ColoredOrderedSetPartition::key() const {
  std::string k;
  k.reserve(static_cast<std::size_t>(n_) + blocks_.size());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (int v : blocks_[i]) k.push_back(static_cast<char>(v));
    k.push_back(static_cast<char>(0x80 | colors_[i]));
  }
  return k;
}

std::string ColoredOrderedSetPartition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << '|';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) os << (j ? "," : "") << blocks_[i][j];
    os << '^' << colors_[i];
  }
  return os.str();
}

Int count_Q_blocks(int n, int alpha, int k) {
  if (k < 1 || k > n) return 0;
  return stirling2(static_cast<unsigned>(n), static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(k)) *
         pow(Int(alpha), static_cast<unsigned long>(k - 1));
}

Int count_Q(int n, int alpha) {
  check_params(n, alpha, "count_Q");
  Int total = 0;
  for (int k = 1; k <= n; ++k) total += count_Q_blocks(n, alpha, k);
  return total;
}

void for_each_Q(int n, int alpha, const std::function<void(const ColoredOrderedSetPartition&)>& visit) {
  check_params(n, alpha, "enumerate_Q");
  ColoredOrderedSetPartition elem(ColoredOrderedSetPartition::Unchecked{}, {}, {}, alpha, n);
  std::vector<std::vector<int>> blocks;
  ordered_partitions(iota_labels(n), blocks, [&] {
    const std::size_t k = blocks.size();
    elem.blocks_ = blocks;
    elem.colors_.assign(k, 0);
    // odometer over the first k-1 colors, most significant first
    while (true) {
      visit(elem);
      std::size_t pos = k - 1;
      while (pos > 0) {
        --pos;
        if (++elem.colors_[pos] < alpha) break;
        elem.colors_[pos] = 0;
        if (pos == 0) return;
      }
      if (k == 1) return;
    }
  });
}

std::vector<ColoredOrderedSetPartition> enumerate_Q(int n, int alpha) {
  std::vector<ColoredOrderedSetPartition> out;
  for_each_Q(n, alpha, [&](const ColoredOrderedSetPartition& t) { out.push_back(t); });
  return out;
}

void for_each_alternating(int n, int alpha, const std::function<void(const ColoredOrderedSetPartition&)>& visit) {
  check_params(n, alpha, "for_each_alternating");
  ColoredOrderedSetPartition elem(ColoredOrderedSetPartition::Unchecked{}, {}, {}, alpha, n);
  std::vector<std::vector<int>> blocks;
  ordered_partitions(iota_labels(n), blocks, [&] {
    const std::size_t k = blocks.size();
    elem.blocks_ = blocks;
    elem.colors_.assign(k, 0);
    std::function<void(std::size_t)> assign = [&](std::size_t pos) {
      if (pos + 1 == k) {
        if (k == 1 || elem.colors_[k - 2] != 0) visit(elem);
        return;
      }
      for (int c = 0; c < alpha; ++c) {
        if (pos > 0 && c == elem.colors_[pos - 1]) continue;
        elem.colors_[pos] = c;
        assign(pos + 1);
      }
    };
    assign(0);
  });
}

void for_each_face_below(const ColoredOrderedSetPartition& tau,
                         const std::function<void(const ColoredOrderedSetPartition&)>& visit) {
  ColoredOrderedSetPartition elem(ColoredOrderedSetPartition::Unchecked{}, {}, {}, tau.alpha(), tau.n());
  std::vector<std::vector<int>> pieces;
  std::vector<int> piece_colors;
  std::function<void(std::size_t)> split_block = [&](std::size_t b) {
    if (b == tau.num_blocks()) {
      elem.blocks_ = pieces;
      elem.colors_ = piece_colors;
      visit(elem);
      return;
    }
    const std::size_t before = pieces.size();
    ordered_partitions(tau.blocks()[b], pieces, [&] {
      piece_colors.resize(before);
      piece_colors.resize(pieces.size(), tau.colors()[b]);
      split_block(b + 1);
    });
    piece_colors.resize(before);
  };
  split_block(0);
}

Composition type_of(const ColoredOrderedSetPartition& tau) {
  std::vector<int> parts;
  parts.reserve(tau.num_blocks());
  for (const auto& b : tau.blocks()) parts.push_back(static_cast<int>(b.size()));
  return Composition(std::move(parts));
}

bool is_alternating(const ColoredOrderedSetPartition& tau) {
  const auto& c = tau.colors();
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i] == c[i + 1]) return false;
  return true;
}

std::vector<ColoredOrderedSetPartition> upper_covers(const ColoredOrderedSetPartition& tau) {
  std::vector<ColoredOrderedSetPartition> out;
  const auto& blocks = tau.blocks();
  const auto& colors = tau.colors();
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    if (colors[i] != colors[i + 1]) continue;
    std::vector<std::vector<int>> nb;
    std::vector<int> nc;
    nb.reserve(blocks.size() - 1);
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (j == i + 1) continue;
      if (j == i) {
        std::vector<int> merged;
        std::merge(blocks[i].begin(), blocks[i].end(), blocks[i + 1].begin(), blocks[i + 1].end(),
                   std::back_inserter(merged));
        nb.push_back(std::move(merged));
      } else {
        nb.push_back(blocks[j]);
      }
      nc.push_back(colors[j]);
    }
    out.push_back(ColoredOrderedSetPartition(ColoredOrderedSetPartition::Unchecked{}, std::move(nb), std::move(nc), tau.alpha(), tau.n()));
  }
  return out;
}

bool covers_in_Q(const ColoredOrderedSetPartition& tau, const ColoredOrderedSetPartition& sigma) {
  if (tau.n() != sigma.n() || tau.alpha() != sigma.alpha())
    throw std::invalid_argument("covers_in_Q: elements of different Q_n^alpha");
  if (sigma.num_blocks() + 1 != tau.num_blocks()) return false;
  for (const auto& up : upper_covers(tau))
    if (up == sigma) return true;
  return false;
}

ColoredOrderedSetPartition merge_color_runs(const ColoredOrderedSetPartition& tau) {
  std::vector<std::vector<int>> nb;
  std::vector<int> nc;
  for (std::size_t i = 0; i < tau.num_blocks(); ++i) {
    if (!nc.empty() && nc.back() == tau.colors()[i]) {
      auto& last = nb.back();
      last.insert(last.end(), tau.blocks()[i].begin(), tau.blocks()[i].end());
      std::sort(last.begin(), last.end());
    } else {
      nb.push_back(tau.blocks()[i]);
      nc.push_back(tau.colors()[i]);
    }
  }
  return ColoredOrderedSetPartition(ColoredOrderedSetPartition::Unchecked{}, std::move(nb), std::move(nc), tau.alpha(),
                                    tau.n());
}

Permutation forget_map(const ColoredOrderedSetPartition& tau) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(tau.n()));
  for (const auto& b : tau.blocks()) word.insert(word.end(), b.begin(), b.end());
  return Permutation(std::move(word));
}

Int fiber_size(const Permutation& pi, int alpha) {
  if (alpha < 1) throw std::invalid_argument("fiber_size: alpha must be >= 1");
  const auto d = static_cast<unsigned long>(pi.descents());
  return pow(Int(alpha + 1), static_cast<unsigned long>(pi.n()) - d - 1) * pow(Int(alpha), d);
}

Int alternating_fiber_size(const Permutation& pi, int alpha) {
  if (alpha < 1) throw std::invalid_argument("alternating_fiber_size: alpha must be >= 1");
  // Compositions below D(pi) add breaks at non-descent positions.
  const auto ds = descent_set(pi);
  std::vector<int> free_positions;
  for (int i = 1; i < pi.n(); ++i)
    if (!std::binary_search(ds.indices().begin(), ds.indices().end(), i)) free_positions.push_back(i);
  if (free_positions.size() > 30) throw BudgetExceeded("alternating_fiber_size: more than 2^30 refinements");
  const Int base = alpha - 1;
  Int total = 0;
  const unsigned long masks = 1UL << free_positions.size();
  for (unsigned long mask = 0; mask < masks; ++mask) {
    const auto parts = ds.size() + 1 + static_cast<std::size_t>(__builtin_popcountl(mask));
    total += pow(base, parts - 1);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Colored permutations

ColoredPermutation::ColoredPermutation(std::vector<int> word, std::vector<int> colors, int alpha)
    : word_(std::move(word)), colors_(std::move(colors)), alpha_(alpha) {
  if (alpha_ < 1) throw std::invalid_argument("alpha must be >= 1");
  if (word_.empty()) throw std::invalid_argument("colored permutation must be nonempty");
  Permutation check(word_);
  if (colors_.size() != word_.size()) throw std::invalid_argument("one color per letter required");
  for (int c : colors_)
    if (c < 0 || c >= alpha_) throw std::invalid_argument("letter color outside 0..alpha-1");
  if (colors_.back() != 0) throw std::invalid_argument("the last letter must carry the fixed color 0");
}

Int count_colored_permutations(int n, int alpha) {
  check_params(n, alpha, "count_colored_permutations");
  return pow(Int(alpha), static_cast<unsigned long>(n - 1)) * factorial(static_cast<unsigned>(n));
}

void for_each_colored_permutation(int n, int alpha, const std::function<void(const ColoredPermutation&)>& visit,
                                  int first_letter) {
  check_params(n, alpha, "enumerate_colored_permutations");
  if (first_letter < 0 || first_letter > n) throw std::invalid_argument("first letter outside 1..n");
  ColoredPermutation tau;
  tau.alpha_ = alpha;
  tau.word_ = iota_labels(n);
  const auto len = static_cast<std::size_t>(n);
  auto tail = tau.word_.begin();
  if (first_letter != 0) {
    std::rotate(tau.word_.begin(), tau.word_.begin() + (first_letter - 1), tau.word_.begin() + first_letter);
    ++tail;
  }
  do {
    tau.colors_.assign(len, 0);
    while (true) {
      visit(tau);
      std::size_t pos = len - 1;
      bool carried_out = true;
      while (pos > 0) {
        --pos;
        if (++tau.colors_[pos] < alpha) {
          carried_out = false;
          break;
        }
        tau.colors_[pos] = 0;
      }
      if (carried_out) break;
    }
  } while (std::next_permutation(tail, tau.word_.end()));
}

std::vector<ColoredPermutation> enumerate_colored_permutations(int n, int alpha) {
  std::vector<ColoredPermutation> out;
  for_each_colored_permutation(n, alpha, [&](const ColoredPermutation& t) { out.push_back(t); });
  return out;
}

DescentSet colored_descent_set(const ColoredPermutation& tau) {
  std::vector<int> idx;
  const auto& w = tau.word();
  const auto& c = tau.colors();
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1] || c[i] != c[i + 1]) idx.push_back(static_cast<int>(i + 1));
  return DescentSet(tau.n(), std::move(idx));
}

}  // namespace ceuler
