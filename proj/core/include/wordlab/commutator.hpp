#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wordlab/cl_bound.hpp"
#include "wordlab/free_product.hpp"
#include "wordlab/matrix.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

// A product of k commutators in A*B has |w_b| <= 12k - 3, hence
// cl(w) >= ceil((|w_b(w)| + 3) / 12). Non-neutral kernel words get at least 1.
// Throws InfiniteCommutatorLength for words outside the commutator subgroup.
std::uint64_t cl_lower_bound(const FreeWord& w, const Split& split, const FreeWord& b);

// Smallest cl consistent with a given weight: ceil((|weight| + 3) / 12).
std::uint64_t weight_bound(std::int64_t weight);

// Wicks test: true iff w is neutral or a single commutator. Exhaustive over rotations
// of the cyclic core and the two cut points, O(n^3) comparisons in the letter length n.
bool is_commutator(const FreeWord& w);

struct ClBounds {
  std::optional<std::uint64_t> lower;  // absent when cl is infinite
  ClBound upper;
};

// Words longer than this skip the Wicks tightening in cl_bounds.
inline constexpr std::uint64_t kWicksLetterLimit = 400;

ClBounds cl_bounds(const FreeWord& w, const Split& split, const FreeWord& b);

struct SupRow {
  std::uint64_t L;
  std::int64_t weight;
  std::uint64_t lower_bound;
};

// Rows for [ab, ba]^L, L = 1..L_max, with the weight measured by syllable counting.
// a and b must be non-neutral and lie in opposite factors; the weight is taken w.r.t. b.
std::vector<SupRow> sup_divergence_table(std::uint64_t L_max, const Split& split,
                                         const FreeWord& a, const FreeWord& b);

struct RemarkTrial {
  Matrix2 a;
  Matrix2 b;
  bool even_holds;  // [a,b]^{2n} == [[a,b]^{-n}, b]
  bool odd_holds;   // [a,b]^{2n+1} == [a [a,b]^{-n}, b]
};

struct RemarkReport {
  std::uint64_t n = 0;
  std::vector<RemarkTrial> trials;
  // In the free group on a, b (no relation) [a,b]^{2n} != [[a,b]^{-n}, b].
  bool free_control_differs = false;
  bool vacuous = false;  // n == 0

  bool passed() const;
};

// Checks the identities for b^2 a = a b^2 on random integer matrices with b^2 = 1.
RemarkReport remark_identity_check(std::uint64_t n, std::uint64_t trials, std::uint64_t seed);

}  // namespace wordlab
