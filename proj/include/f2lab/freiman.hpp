#pragma once

// Freiman 2-homomorphism machinery: pair-sum partitions, 2-isomorphism
// testing and search, the universal relation-quotient model, and rank.
//
// Two sets are Freiman 2-isomorphic when a bijection identifies their
// pair-sum partitions: a+b = c+d exactly when the image sums agree. All
// decisions here reduce to comparing those partitions, never to quartic
// scans over quadruples.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "f2lab/gf2.hpp"

namespace f2lab {

// For a set T, the partition of unordered pairs {a,b} (a <= b, repeats
// allowed) by their sum. Classes are keyed by sum value, ascending.
struct PairSumPartition {
  struct Class {
    uint32_t sum;
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
  };
  std::vector<Class> classes;

  static PairSumPartition of(const GF2Set& t);
  size_t class_count() const { return classes.size(); }
  size_t pair_count() const;
};

struct FreimanMap {
  GF2Set domain;
  int codomain_dim = 0;
  std::vector<std::pair<uint32_t, uint32_t>> images;  // sorted by preimage

  static FreimanMap identity(const GF2Set& t);
  bool total() const;
  uint32_t image_of(uint32_t preimage) const;  // throws OUT_OF_RANGE if absent
  GF2Set image_set() const;
};

// True iff phi is a bijection onto its image and pair-sum partitions of
// domain and image correspond under it. O(|T|^2) with hashing.
bool is_2_isomorphism(const FreimanMap& phi);

// First witness in canonical backtracking order, or nullopt. Prunes on
// cardinality, sumset cardinality and per-element pair-degree profiles.
std::optional<FreimanMap> find_2_isomorphism(const GF2Set& t1, const GF2Set& t2);

// The universal 2-model of T: generators indexed by T minus its least
// element, quotiented by the span of all quadruple relations a+b+c+d = 0.
// Every 0-anchored Freiman 2-homomorphic image of T is a linear image of
// this model, which is what makes rank computable from it.
struct UniversalModel {
  uint32_t base_point = 0;  // least element of T, mapped to 0
  int relation_rank = 0;
  int model_dim = 0;  // |T| - 1 - relation_rank
  std::vector<std::pair<uint32_t, uint32_t>> embedding;  // t -> psi(t), sorted
  GF2Set forbidden;  // nonzero values psi(a)+psi(b)+psi(c)+psi(d), in F_2^model_dim

  FreimanMap as_map(const GF2Set& t) const;
};

UniversalModel universal_model(const GF2Set& t);

enum class RankMethod { universal, search, both };

// Least m such that some subset of F_2^m is 2-isomorphic to T.
//   universal: model_dim minus the largest dimension of a subspace meeting
//              `forbidden` only at 0 (exhaustive echelon-chain DFS).
//   search:    smallest m >= ceil(log2 |T+T|) admitting a 0-anchored
//              backtracking embedding (independent images normalized to
//              e1, e2, ... to quotient out GL symmetry).
//   both:      run both, DISAGREEMENT on mismatch.
int rank(const GF2Set& t, RankMethod method = RankMethod::both);

// ceil(log2 |T+T|); never exceeds rank(T).
int rank_lower_bound(const GF2Set& t);

// A 2-isomorphic embedding of T into F_2^m with least element at 0, if one
// exists at exactly that dimension. rank(search) is the first m accepting.
std::optional<FreimanMap> rank_embedding(const GF2Set& t, int m);

}  // namespace f2lab
