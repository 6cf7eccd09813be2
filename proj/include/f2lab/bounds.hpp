#pragma once

// The extremal functions F(K) and G(K) for doubling constant K < 2:
// closed-form values, the normal-number formulas they come from, exact
// minimal coset covers, empirical extremal tables, and the deterministic
// witness constructions that pin the bounds from below.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f2lab/gf2.hpp"
#include "f2lab/rational.hpp"
#include "f2lab/subspace.hpp"

namespace f2lab {

// (level, C(level)) rows, strictly increasing levels.
struct NormalTable {
  std::vector<std::pair<int, int>> rows;
  static NormalTable standard() { return NormalTable{{{4, 3}, {8, 4}, {16, 5}}}; }
};

// F(K) = K on [1, 7/4), (8/7)K on [7/4, 2).
Rational F_theory(const Rational& k);

// G(K) = 2 on (1, 7/4), 3 on [7/4, 31/16), 4 on [31/16, 2).
// G(1) = 1: at K = 1 every admissible set is a coset. The piecewise formula
// starts above 1; the K = 1 value is the degenerate case, reported as 1.
int G_theory(const Rational& k);

// max over table rows with (2n-1)/n <= K of 2^C/(2n-1) * K.
Rational F_formula(const Rational& k, const NormalTable& table = NormalTable::standard());

// (max C+2-ceil(log2 n), max 2^(C-floor(log2(n-1)))) over applicable rows.
std::pair<int, int> G_bounds_formula(const Rational& k,
                                     const NormalTable& table = NormalTable::standard());

// (2K-1)/(3K-1-K^2), exact.
Rational dhp_bound(const Rational& k);

struct CoverResult {
  int count = 0;
  Subspace subspace;
  std::vector<uint32_t> coset_reps;  // canonical (least) representatives, sorted
  bool optimal = false;              // all smaller counts exhaustively excluded
};

// Minimal number of cosets of one subspace V with |V| <= |A| covering A.
// For each candidate count t ascending, the feasible codimensions c satisfy
// 2^(m-c) <= |A| <= t*2^(m-c); codimensions up to 3 are scanned through the
// dual space (c independent functionals in echelon order), larger ones fall
// back to raw subspace enumeration (needs m within the enumeration guard).
// Ambient dims >= 12 are rejected (RESOURCE_LIMIT); CAP_EXCEEDED if no cover
// within cap.
CoverResult cover_number(const GF2Set& a, int cap = 1 << 20);

// Independent route: minimal cover by scanning every subspace. Guarded by the
// subspace enumeration limit.
CoverResult cover_number_bruteforce(const GF2Set& a, int cap = 1 << 20);

// |affine_hull(A)| / |A|.
Rational hull_ratio(const GF2Set& a);

struct ExtremalHullRow {
  Rational sigma;
  Rational max_ratio;
  GF2Set argmax;  // first attaining set in scan order
};
struct ExtremalCoverRow {
  Rational sigma;
  int max_cover = 0;
  GF2Set argmax;
};

// Full power-set scans over F_2^m (m <= 4), restricted to sigma < 2, grouped
// by sigma ascending.
std::vector<ExtremalHullRow> empirical_F(int m, int jobs = 1);
std::vector<ExtremalCoverRow> empirical_G(int m, int jobs = 1);

enum class WitnessKind { F_eq, G3, G4 };

struct WitnessReport {
  WitnessKind kind;
  GF2Set set;
  Rational sigma;
  Rational hull;
  int cover_count = 0;
  std::vector<std::pair<std::string, bool>> claims;
};

// Deterministic witnesses (punctured cubes replacing random factors):
//   F_eq: {0,e1,e2,e3} x (F_2^5 minus all-ones); sigma 56/31, hull ratio
//         64/31 = F_theory(56/31) exactly.
//   G3:   the same set; sigma in [7/4, 31/16), cover number 3.
//   G4:   (weight<=2 in F_2^5) x (F_2^6 minus all-ones); sigma 124/63 in
//         [31/16, 2), cover number 4.
// Every claim is recomputed by the generic operations; a failure raises
// STRUCTURE_VIOLATION.
WitnessReport make_witness(WitnessKind kind);

// The generic cover construction for sigma < 2: H = stabilizer(A+A), B the
// quotient image of level n, l = floor(log2(n-1)); extends H by the lifts of
// the first l canonical hull directions of B and returns the cosets meeting
// A. Count is at most 2^(rank(B)-l); not necessarily optimal.
CoverResult constructive_cover(const GF2Set& a);

}  // namespace f2lab
