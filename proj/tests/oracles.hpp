#pragma once

// Test-only oracles, kept independent of the library's fast paths: plain
// double loops, whole-space scans and the Gaussian binomial recurrence.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "f2lab/gf2.hpp"
#include "f2lab/subspace.hpp"

namespace oracle {

inline f2lab::GF2Set brute_sumset(const f2lab::GF2Set& a) {
  const auto pts = a.elements();
  f2lab::GF2Set out(a.dim());
  for (uint32_t x : pts)
    for (uint32_t y : pts) out.insert(x ^ y);
  return out;
}

// Period test over every shift of the space.
inline std::vector<uint32_t> brute_periods(const f2lab::GF2Set& s) {
  std::vector<uint32_t> periods;
  const auto pts = s.elements();
  for (uint32_t h = 0; h < s.universe(); ++h) {
    bool period = true;
    for (uint32_t x : pts)
      if (!s.contains(x ^ h)) {
        period = false;
        break;
      }
    if (period) periods.push_back(h);
  }
  return periods;
}

// Coset id of a = the least element of a + V, computed by scanning V.
inline int brute_cosets_meeting(const f2lab::GF2Set& a, const f2lab::Subspace& v) {
  const auto vs = v.elements();
  std::set<uint32_t> ids;
  a.for_each([&](uint32_t p) {
    uint32_t least = p;
    for (uint32_t x : vs) least = std::min(least, p ^ x);
    ids.insert(least);
  });
  return static_cast<int>(ids.size());
}

// Affine closure: saturate under three-term combinations a+b+c.
inline f2lab::GF2Set brute_affine_hull(const f2lab::GF2Set& a) {
  std::set<uint32_t> hull(a.elements().begin(), a.elements().end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<uint32_t> cur(hull.begin(), hull.end());
    for (uint32_t x : cur)
      for (uint32_t y : cur)
        for (uint32_t z : cur)
          if (hull.insert(x ^ y ^ z).second) grew = true;
  }
  f2lab::GF2Set out(a.dim());
  for (uint32_t p : hull) out.insert(p);
  return out;
}

// [m k]_2 by the q-Pascal recurrence, independent of the product formula.
inline uint64_t gaussian_binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  std::vector<std::vector<uint64_t>> g(m + 1, std::vector<uint64_t>(m + 1, 0));
  for (int i = 0; i <= m; ++i) {
    g[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      g[i][j] = g[i - 1][j - 1] + (j < i ? (g[i - 1][j] << j) : 0);
  }
  return g[m][k];
}

// Deterministic random sets for property tests.
inline f2lab::GF2Set random_set(std::mt19937_64& rng, int dim, bool nonempty = true) {
  f2lab::GF2Set s(dim);
  for (auto& w : s.words()) w = rng();
  if (dim < 6) s.words()[0] &= (1ull << (1u << dim)) - 1;
  if (nonempty && s.empty()) s.insert(static_cast<uint32_t>(rng() % s.universe()));
  return s;
}

inline f2lab::LinearMap random_invertible(std::mt19937_64& rng, int dim) {
  f2lab::LinearMap l{dim, dim, {}};
  do {
    l.basis_image.clear();
    for (int i = 0; i < dim; ++i)
      l.basis_image.push_back(static_cast<uint32_t>(rng() % (1u << dim)));
  } while (!l.invertible());
  return l;
}

}  // namespace oracle
