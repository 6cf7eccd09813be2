#include "f2lab/bounds.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "f2lab/config.hpp"
#include "f2lab/enumerate.hpp"
#include "f2lab/freiman.hpp"
#include "f2lab/parallel.hpp"

namespace f2lab {

namespace {

int ceil_log2(uint64_t x) { return x <= 1 ? 0 : std::bit_width(x - 1); }
int floor_log2(uint64_t x) { return std::bit_width(x) - 1; }

const Rational kOne(1), kTwo(2), kSevenFourth(7, 4), kThirtyOneSixteenth(31, 16);

void check_table(const NormalTable& table) {
  if (table.rows.empty()) fail(Err::OutOfRange, "empty normal table");
  for (size_t i = 1; i < table.rows.size(); ++i)
    if (table.rows[i].first <= table.rows[i - 1].first)
      fail(Err::OutOfRange, "normal table levels must increase");
}

}  // namespace

Rational F_theory(const Rational& k) {
  if (k < kOne || k >= kTwo) fail(Err::OutOfRange, "F(K) is defined here for 1 <= K < 2");
  if (k < kSevenFourth) return k;
  return Rational(8, 7) * k;
}

int G_theory(const Rational& k) {
  if (k < kOne || k >= kTwo) fail(Err::OutOfRange, "G(K) is defined here for 1 <= K < 2");
  if (k == kOne) return 1;
  if (k < kSevenFourth) return 2;
  if (k < kThirtyOneSixteenth) return 3;
  return 4;
}

Rational F_formula(const Rational& k, const NormalTable& table) {
  check_table(table);
  const Rational first(2 * table.rows[0].first - 1, table.rows[0].first);
  if (k < first || k >= kTwo) fail(Err::OutOfRange, "K outside the formula range");
  Rational best(0);
  for (const auto& [n, c] : table.rows) {
    if (Rational(2 * n - 1, n) > k) continue;
    const Rational term = Rational(1ll << c, 2 * n - 1) * k;
    if (term > best) best = term;
  }
  return best;
}

std::pair<int, int> G_bounds_formula(const Rational& k, const NormalTable& table) {
  check_table(table);
  const Rational first(2 * table.rows[0].first - 1, table.rows[0].first);
  if (k < first || k >= kTwo) fail(Err::OutOfRange, "K outside the formula range");
  int lower = 0, upper = 0;
  for (const auto& [n, c] : table.rows) {
    if (Rational(2 * n - 1, n) > k) continue;
    lower = std::max(lower, c + 2 - ceil_log2(static_cast<uint64_t>(n)));
    upper = std::max(upper, 1 << (c - floor_log2(static_cast<uint64_t>(n - 1))));
  }
  return {lower, upper};
}

Rational dhp_bound(const Rational& k) {
  if (k < kOne || k >= kTwo) fail(Err::OutOfRange, "bound used for 1 <= K < 2");
  return (kTwo * k - kOne) / (Rational(3) * k - kOne - k * k);
}

Rational hull_ratio(const GF2Set& a) {
  if (a.empty()) fail(Err::EmptySet, "hull ratio of empty set");
  return Rational(static_cast<long long>(affine_hull(a).cardinality()),
                  static_cast<long long>(a.cardinality()));
}

namespace {

// Distinct values of the c functionals on A, stopping once more than `limit`
// are seen. Functionals evaluate as parities of masked points.
int image_count(const std::vector<uint32_t>& pts, const std::vector<uint32_t>& duals,
                int limit) {
  uint32_t seen = 0;
  int count = 0;
  for (const uint32_t a : pts) {
    uint32_t val = 0;
    for (size_t i = 0; i < duals.size(); ++i)
      val = (val << 1) | static_cast<uint32_t>(std::popcount(duals[i] & a) & 1);
    if (!((seen >> val) & 1u)) {
      seen |= 1u << val;
      if (++count > limit) return count;
    }
  }
  return count;
}

// Kernel of c independent functionals in echelon form, as a primal subspace.
Subspace dual_kernel(int m, const std::vector<uint32_t>& duals) {
  uint32_t pivot_mask = 0;
  for (uint32_t u : duals) pivot_mask |= 1u << (31 - std::countl_zero(u));
  std::vector<uint32_t> basis;
  for (int bit = m - 1; bit >= 0; --bit) {
    if ((pivot_mask >> bit) & 1u) continue;
    uint32_t v = 1u << bit;
    for (uint32_t u : duals)
      if ((u >> bit) & 1u) v |= 1u << (31 - std::countl_zero(u));
    basis.push_back(v);
  }
  return Subspace::from_generators(m, basis);
}

std::vector<uint32_t> coset_reps(const GF2Set& a, const Subspace& v) {
  std::vector<uint32_t> reps;
  a.for_each([&](uint32_t p) { reps.push_back(v.reduce(p)); });
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

CoverResult finish_cover(const GF2Set& a, Subspace v, bool optimal) {
  CoverResult r;
  r.subspace = std::move(v);
  r.coset_reps = coset_reps(a, r.subspace);
  r.count = static_cast<int>(r.coset_reps.size());
  r.optimal = optimal;
  return r;
}

}  // namespace

CoverResult cover_number(const GF2Set& a, int cap) {
  if (a.empty()) fail(Err::EmptySet, "cover of empty set");
  const int m = a.dim();
  if (m >= limits().cover_dim)
    fail(Err::ResourceLimit, "cover search guarded below dim " +
                                 std::to_string(limits().cover_dim));
  const uint64_t n = a.cardinality();
  const auto pts = a.elements();

  bool exhausted = true;
  for (int t = 1; t <= cap; ++t) {
    if (static_cast<uint64_t>(t) >= n) {
      // The zero subspace covers with |A| singleton cosets.
      return finish_cover(a, Subspace::zero(m), exhausted);
    }
    for (int c = 0; c <= m; ++c) {
      const uint64_t v_size = 1ull << (m - c);
      if (v_size > n || static_cast<uint64_t>(t) * v_size < n) continue;
      if (c <= 3) {
        std::optional<Subspace> hit;
        detail::enumerate_rref(m, c, [&](const std::vector<uint32_t>& duals) {
          if (image_count(pts, duals, t) <= t) {
            hit = dual_kernel(m, duals);
            return false;
          }
          return true;
        });
        if (hit) return finish_cover(a, std::move(*hit), exhausted);
      } else if (m <= limits().subspace_enum_dim) {
        std::optional<Subspace> hit;
        detail::enumerate_rref(m, m - c, [&](const std::vector<uint32_t>& rows) {
          Subspace v = Subspace::from_generators(m, rows);
          if (cosets_meeting(a, v) <= t) {
            hit = std::move(v);
            return false;
          }
          return true;
        });
        if (hit) return finish_cover(a, std::move(*hit), exhausted);
      } else {
        exhausted = false;  // feasible codimension we cannot scan
      }
    }
  }
  fail(Err::CapExceeded, "no cover within cap " + std::to_string(cap));
}

CoverResult cover_number_bruteforce(const GF2Set& a, int cap) {
  if (a.empty()) fail(Err::EmptySet, "cover of empty set");
  const int m = a.dim();
  if (m > limits().subspace_enum_dim)
    fail(Err::ResourceLimit, "brute-force cover needs full subspace enumeration");
  const uint64_t n = a.cardinality();
  std::vector<Subspace> candidates;
  enumerate_subspaces(m, std::nullopt, [&](const Subspace& v) {
    if (v.cardinality() <= n) candidates.push_back(v);
    return true;
  });
  for (int t = 1; t <= cap; ++t)
    for (const Subspace& v : candidates)
      if (cosets_meeting(a, v) <= t) return finish_cover(a, v, true);
  fail(Err::CapExceeded, "no cover within cap " + std::to_string(cap));
}

namespace {

GF2Set set_from_mask(int m, uint64_t mask) {
  GF2Set s(m);
  s.words()[0] = mask;
  return s;
}

}  // namespace

std::vector<ExtremalHullRow> empirical_F(int m, int jobs) {
  if (m > limits().power_set_scan_dim)
    fail(Err::ResourceLimit, "power-set scan guarded at m <= " +
                                 std::to_string(limits().power_set_scan_dim));
  using Table = std::map<std::pair<long long, long long>, ExtremalHullRow>;
  auto chunks = run_chunked<Table>(1, 1ull << (1u << m), jobs, [&](uint64_t lo, uint64_t hi) {
    Table t;
    for (uint64_t mask = lo; mask < hi; ++mask) {
      const GF2Set a = set_from_mask(m, mask);
      const Rational sigma = doubling_constant(a);
      if (sigma >= kTwo) continue;
      const Rational ratio = hull_ratio(a);
      auto [it, fresh] = t.try_emplace({sigma.num(), sigma.den()},
                                       ExtremalHullRow{sigma, ratio, a});
      if (!fresh && ratio > it->second.max_ratio) it->second = {sigma, ratio, a};
    }
    return t;
  });
  Table merged;  // chunk order keeps the first attaining mask on ties
  for (const auto& t : chunks)
    for (const auto& [key, row] : t) {
      auto [it, fresh] = merged.try_emplace(key, row);
      if (!fresh && row.max_ratio > it->second.max_ratio) it->second = row;
    }
  std::vector<ExtremalHullRow> out;
  out.reserve(merged.size());
  for (auto& [key, row] : merged) out.push_back(std::move(row));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.sigma < b.sigma; });
  return out;
}

std::vector<ExtremalCoverRow> empirical_G(int m, int jobs) {
  if (m > limits().power_set_scan_dim)
    fail(Err::ResourceLimit, "power-set scan guarded at m <= " +
                                 std::to_string(limits().power_set_scan_dim));
  using Table = std::map<std::pair<long long, long long>, ExtremalCoverRow>;
  auto chunks = run_chunked<Table>(1, 1ull << (1u << m), jobs, [&](uint64_t lo, uint64_t hi) {
    Table t;
    for (uint64_t mask = lo; mask < hi; ++mask) {
      const GF2Set a = set_from_mask(m, mask);
      const Rational sigma = doubling_constant(a);
      if (sigma >= kTwo) continue;
      const int cover = cover_number(a).count;
      auto [it, fresh] = t.try_emplace({sigma.num(), sigma.den()},
                                       ExtremalCoverRow{sigma, cover, a});
      if (!fresh && cover > it->second.max_cover) it->second = {sigma, cover, a};
    }
    return t;
  });
  Table merged;
  for (const auto& t : chunks)
    for (const auto& [key, row] : t) {
      auto [it, fresh] = merged.try_emplace(key, row);
      if (!fresh && row.max_cover > it->second.max_cover) it->second = row;
    }
  std::vector<ExtremalCoverRow> out;
  out.reserve(merged.size());
  for (auto& [key, row] : merged) out.push_back(std::move(row));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.sigma < b.sigma; });
  return out;
}

WitnessReport make_witness(WitnessKind kind) {
  WitnessReport r;
  r.kind = kind;
  const bool g4 = (kind == WitnessKind::G4);
  r.set = g4 ? product_set(weight_le_set(5, 2), punctured_cube(6))
             : product_set(simplex(3), punctured_cube(5));

  r.sigma = doubling_constant(r.set);
  r.hull = hull_ratio(r.set);
  auto claim = [&](const std::string& name, bool ok) { r.claims.emplace_back(name, ok); };

  switch (kind) {
    case WitnessKind::F_eq:
      claim("|A| = 124", r.set.cardinality() == 124);
      claim("|A+A| = 224", sumset(r.set).cardinality() == 224);
      claim("sigma = 56/31", r.sigma == Rational(56, 31));
      claim("hull ratio = 64/31", r.hull == Rational(64, 31));
      claim("hull ratio = F_theory(sigma)", r.hull == F_theory(r.sigma));
      break;
    case WitnessKind::G3: {
      claim("sigma in [7/4, 31/16)", r.sigma >= kSevenFourth && r.sigma < kThirtyOneSixteenth);
      const CoverResult cover = cover_number(r.set);
      r.cover_count = cover.count;
      claim("cover number = 3", cover.count == 3);
      claim("cover search exhaustive", cover.optimal);
      claim("cover number = G_theory(sigma)", cover.count == G_theory(r.sigma));
      break;
    }
    case WitnessKind::G4: {
      claim("|A| = 1008", r.set.cardinality() == 1008);
      claim("|A+A| = 1984", sumset(r.set).cardinality() == 1984);
      claim("sigma = 124/63", r.sigma == Rational(124, 63));
      claim("sigma in [31/16, 2)", r.sigma >= kThirtyOneSixteenth && r.sigma < kTwo);
      const CoverResult cover = cover_number(r.set);
      r.cover_count = cover.count;
      claim("cover number = 4", cover.count == 4);
      claim("cover search exhaustive", cover.optimal);
      break;
    }
  }
  if (kind == WitnessKind::F_eq) {
    const CoverResult cover = cover_number(r.set);
    r.cover_count = cover.count;
  }
  for (const auto& [name, ok] : r.claims)
    if (!ok) fail(Err::StructureViolation, "witness claim failed: " + name);
  return r;
}

CoverResult constructive_cover(const GF2Set& a) {
  if (a.empty()) fail(Err::EmptySet, "cover of empty set");
  if (doubling_constant(a) >= kTwo)
    fail(Err::SigmaTooLarge, "construction needs sigma < 2");
  const int m = a.dim();
  const Subspace h = stabilizer(sumset(a));
  const Quotient q(m, h);
  const GF2Set b = q.project(a);
  const uint64_t level = b.cardinality();

  if (level == 1) {
    if (h.cardinality() <= a.cardinality()) return finish_cover(a, h, false);
    // A sits strictly inside one coset of H: halve H once.
    std::vector<uint32_t> rows = h.basis();
    rows.pop_back();
    return finish_cover(a, Subspace::from_generators(m, rows), false);
  }

  if (sumset(b).cardinality() != 2 * level - 1)
    fail(Err::StructureViolation, "quotient image is not normal");
  const int l = floor_log2(level - 1);
  const AffineSubspace hull_b = affine_hull(b);
  const int span_dim = hull_b.direction.dim();
  if (span_dim != rank(b, RankMethod::search))
    fail(Err::StructureViolation, "quotient hull dimension differs from its rank");

  std::vector<uint32_t> rows = h.basis();
  for (int i = 0; i < l; ++i)
    rows.push_back(q.lift(hull_b.direction.basis()[static_cast<size_t>(i)]));
  const Subspace h_prime = Subspace::from_generators(m, rows);
  if (h_prime.dim() != h.dim() + l)
    fail(Err::StructureViolation, "lifted directions collapsed into H");
  if (h_prime.cardinality() > a.cardinality())
    fail(Err::StructureViolation, "extended subspace outgrew |A|");

  CoverResult r = finish_cover(a, h_prime, false);
  if (r.count > (1 << (span_dim - l)))
    fail(Err::StructureViolation, "cover exceeded its guaranteed count");
  return r;
}

}  // namespace f2lab
