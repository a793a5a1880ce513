#pragma once

// Compositions, alpha-colored ordered set partitions, colored permutations,
// descent statistics and the forgetful map onto S_n.
//
// Labels are 1..n. Colors are 0..alpha-1 and the last block (or last letter)
// always carries color 0. Enumerators are callback driven and deterministic:
// ordered set partitions come out with blocks in lexicographic order of their
// sorted label lists, then colorings in odometer order; permutations in
// lexicographic order, then colorings.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ceuler/exact.hpp"

namespace ceuler {

/// Thrown when an exhaustive enumeration would exceed its object budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DescentSet;

class Composition {
 public:
  /// Throws std::invalid_argument unless every part is positive.
  explicit Composition(std::vector<int> parts);

  int n() const noexcept { return n_; }
  std::size_t length() const noexcept { return parts_.size(); }
  std::span<const int> parts() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_.at(i); }

  /// Partial sums c_1, c_1+c_2, ... excluding n.
  std::vector<int> breaks() const;
  static Composition from_breaks(int n, std::span<const int> sorted_breaks);

  std::string to_string() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All 2^(n-1) compositions of n, ordered by break bitmask.
std::vector<Composition> compositions_of(int n);
void for_each_composition(int n, const std::function<void(const Composition&)>& visit);

/// finer <= coarser in Comp(n): coarser arises by merging adjacent parts.
bool refines(const Composition& finer, const Composition& coarser);

Int multinomial(const Composition& c);

class Permutation {
 public:
  /// One-line notation over 1..n; throws unless it is a bijection.
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);

  int n() const noexcept { return static_cast<int>(word_.size()); }
  std::span<const int> word() const noexcept { return word_; }
  int operator[](std::size_t i) const { return word_.at(i); }
  std::size_t descents() const;
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

void for_each_permutation(int n, const std::function<void(std::span<const int>)>& visit);

class DescentSet {
 public:
  /// Indices must lie in 1..n-1; duplicates are collapsed.
  DescentSet(int n, std::vector<int> indices);

  int n() const noexcept { return n_; }
  std::span<const int> indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }

  Composition to_composition() const;
  static DescentSet from_composition(const Composition& c);

  friend bool operator==(const DescentSet&, const DescentSet&) = default;

 private:
  int n_;
  std::vector<int> indices_;
};

DescentSet descent_set(const Permutation& pi);
Composition descent_composition(const Permutation& pi);

/// An element of Q_n^alpha.
class ColoredOrderedSetPartition {
 public:
  using Block = std::vector<int>;

  /// Validates that blocks partition [n], colors lie in [0, alpha) and the
  /// last color is 0. Blocks are stored sorted.
  ColoredOrderedSetPartition(std::vector<Block> blocks, std::vector<int> colors, int alpha);

  int n() const noexcept { return n_; }
  int alpha() const noexcept { return alpha_; }
  std::size_t num_blocks() const noexcept { return blocks_.size(); }
  int rank() const noexcept { return n_ - static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const std::vector<int>& colors() const noexcept { return colors_; }

  /// Compact canonical key; equal keys iff equal elements (same n, alpha).
  std::string key() const;
  std::string to_string() const;

  friend bool operator==(const ColoredOrderedSetPartition&, const ColoredOrderedSetPartition&) = default;

 private:
  struct Unchecked {};
  ColoredOrderedSetPartition(Unchecked, std::vector<Block> blocks, std::vector<int> colors, int alpha, int n);

  friend void for_each_Q(int, int, const std::function<void(const ColoredOrderedSetPartition&)>&);
  friend void for_each_alternating(int, int, const std::function<void(const ColoredOrderedSetPartition&)>&);
  friend void for_each_face_below(const ColoredOrderedSetPartition&,
                                  const std::function<void(const ColoredOrderedSetPartition&)>&);
  friend std::vector<ColoredOrderedSetPartition> upper_covers(const ColoredOrderedSetPartition&);
  friend ColoredOrderedSetPartition merge_color_runs(const ColoredOrderedSetPartition&);

  std::vector<Block> blocks_;
  std::vector<int> colors_;
  int alpha_ = 1;
  int n_ = 0;
};

/// |Q_n^alpha| = sum_k S(n,k) k! alpha^(k-1).
Int count_Q(int n, int alpha);
/// Elements of Q_n^alpha with exactly k blocks: S(n,k) k! alpha^(k-1).
Int count_Q_blocks(int n, int alpha, int k);

void for_each_Q(int n, int alpha, const std::function<void(const ColoredOrderedSetPartition&)>& visit);
std::vector<ColoredOrderedSetPartition> enumerate_Q(int n, int alpha);

/// Elements with no two adjacent blocks of equal color (facets of P_n^alpha),
/// generated directly rather than by filtering Q_n^alpha.
void for_each_alternating(int n, int alpha, const std::function<void(const ColoredOrderedSetPartition&)>& visit);

/// The lower order ideal of tau: every way to split each block into an
/// ordered set partition of itself, all pieces keeping the block's color.
void for_each_face_below(const ColoredOrderedSetPartition& tau,
                         const std::function<void(const ColoredOrderedSetPartition&)>& visit);

Composition type_of(const ColoredOrderedSetPartition& tau);
bool is_alternating(const ColoredOrderedSetPartition& tau);
/// sigma covers tau: sigma merges exactly one adjacent same-colored pair of tau.
/// Throws std::invalid_argument when n or alpha differ.
bool covers_in_Q(const ColoredOrderedSetPartition& tau, const ColoredOrderedSetPartition& sigma);
/// Every sigma covering tau.
std::vector<ColoredOrderedSetPartition> upper_covers(const ColoredOrderedSetPartition& tau);
/// The unique alternating element above tau (merge every maximal color run).
ColoredOrderedSetPartition merge_color_runs(const ColoredOrderedSetPartition& tau);

/// Sort each block ascending, concatenate.
Permutation forget_map(const ColoredOrderedSetPartition& tau);
/// (alpha+1)^(n-d-1) alpha^d
Int fiber_size(const Permutation& pi, int alpha);
/// sum over d <= D(pi) in Comp(n) of (alpha-1)^(|d|-1), with 0^0 = 1.
Int alternating_fiber_size(const Permutation& pi, int alpha);

class ColoredPermutation;

/// first_letter != 0 restricts the stream to words starting with that letter.
void for_each_colored_permutation(int n, int alpha, const std::function<void(const ColoredPermutation&)>& visit,
                                  int first_letter = 0);

class ColoredPermutation {
 public:
  /// Validates the word, colors in [0, alpha) and last color 0.
  ColoredPermutation(std::vector<int> word, std::vector<int> colors, int alpha);

  int n() const noexcept { return static_cast<int>(word_.size()); }
  int alpha() const noexcept { return alpha_; }
  const std::vector<int>& word() const noexcept { return word_; }
  const std::vector<int>& colors() const noexcept { return colors_; }

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;

 private:
  friend void for_each_colored_permutation(int, int, const std::function<void(const ColoredPermutation&)>&, int);
  ColoredPermutation() = default;
  std::vector<int> word_;
  std::vector<int> colors_;
  int alpha_ = 1;
};

/// alpha^(n-1) n!
Int count_colored_permutations(int n, int alpha);
std::vector<ColoredPermutation> enumerate_colored_permutations(int n, int alpha);

/// Positions with a word descent or a color change, each listed once.
DescentSet colored_descent_set(const ColoredPermutation& tau);

}  // namespace ceuler
