#pragma once

// Normal sets (|T+T| = 2|T|-1) and normal numbers: detection, exhaustive
// enumeration up to 2-isomorphism, C(n), elementary normal sets.
//
// Search reduction for level n: translate 0 into T, replace the ambient by
// span(T) (dim d), and send a maximal independent subset to e_1..e_d, so
// every level-n set is 2-isomorphic to some T containing {0, e_1..e_d} in
// F_2^d. The DFS then fills the remaining n-(d+1) points in increasing index
// order, pruning any prefix whose running sumset already exceeds 2n-1.
// d runs over [ceil(log2(2n-1)), n-1]; each d reports how many candidate
// extensions were examined so "not normal" verdicts carry an auditable
// exhaustion certificate.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "f2lab/freiman.hpp"
#include "f2lab/gf2.hpp"

namespace f2lab {

struct NormalClass {
  int level = 0;
  GF2Set representative;  // spanning, contains 0 and e_1..e_span_dim
  int span_dim = 0;
  int rank = 0;
  std::optional<GF2Set> elementary_model;
};

struct NormalityVerdict {
  int n = 0;
  bool is_normal = false;
  std::optional<GF2Set> witness;
  // (d, candidates examined) for every searched span dimension.
  std::vector<std::pair<int, uint64_t>> search_space;
};

// Persistence hooks for the long-running extended mode. Branches are keyed
// by (span dim, first chosen extra point; -1 when the seed is already full).
class EnumCheckpoint {
 public:
  virtual ~EnumCheckpoint() = default;
  virtual bool is_branch_done(int d, int first_point) const = 0;
  virtual void branch_completed(int d, int first_point) = 0;
  virtual void survivor_found(int d, const GF2Set& t) = 0;
  virtual std::vector<std::pair<int, GF2Set>> stored_survivors() const = 0;
};

bool is_normal_set(const GF2Set& t);

// The half-cube construction: all vectors with first coordinate 0 except the
// one with the rest all ones, plus e_1. Size 2^{m-1}, sumset size 2^m - 1
// (both verified on construction).
GF2Set power_of_two_normal(int m);

// Complete list of level-n classes up to 2-isomorphism. n in [4,12], or
// [4,16] with extended=true (RESOURCE_LIMIT for 13..16 without it).
std::vector<NormalClass> enumerate_normal_level(int n, bool extended = false,
                                                EnumCheckpoint* checkpoint = nullptr);

NormalityVerdict is_normal_number(int n, bool extended = false);

// max rank over the level-n classes; NOT_NORMAL when there are none.
int compute_C(int n, bool extended = false);

// All T' in F_2^m with {0, e_1..e_m} contained, |T'| = 2^{m-1} and
// |T'+T'| = 2^m - 1, enumerated exhaustively. m in [3,5].
std::vector<GF2Set> enumerate_elementary(int m);

// An elementary normal set at the rank of T plus a witnessing 2-isomorphism.
// Asserts |T| = 2^{rank-1} and that the rank-minimal sumset misses exactly
// one point; a violation would be a structural bug, not a bad input.
std::pair<GF2Set, FreimanMap> elementarize(const GF2Set& t);

namespace detail {

// Exhaustive DFS core shared by the level search and enumerate_elementary:
// all T with seed {0, e_1..e_d} ⊆ T ⊆ F_2^d, |T| = size, |T+T| = target_sum.
// Returns candidates examined. The survivor callback returns false to stop.
uint64_t spanning_set_search(int d, int size, uint64_t target_sum,
                             const std::function<bool(const GF2Set&)>& on_survivor,
                             EnumCheckpoint* checkpoint);

}  // namespace detail

}  // namespace f2lab
