#include "f2lab/normal.hpp"

#include <algorithm>
#include <bit>

#include "f2lab/subspace.hpp"

namespace f2lab {

namespace {

int ceil_log2(uint64_t x) { return x <= 1 ? 0 : std::bit_width(x - 1); }

void check_level_range(int n, bool extended) {
  if (n < 4 || n > 16) fail(Err::OutOfRange, "level must be in [4,16]");
  if (n > 12 && !extended)
    fail(Err::ResourceLimit, "levels 13..16 need extended=true (long-running mode)");
}

// Ordered basis chart: coordinates of v with respect to b_1..b_r, as a bit
// mask over basis indices (bit r-1-i for b_{i+1}, matching e_i positions).
struct BasisChart {
  int dim;
  std::vector<std::pair<uint32_t, uint32_t>> ech;  // (vector, basis mask), leading bits desc

  bool insert(uint32_t v, uint32_t mask) {
    for (const auto& [r, rm] : ech) {
      const uint32_t x = v ^ r;
      if (x < v) {
        v = x;
        mask ^= rm;
      }
    }
    if (!v) return false;
    auto it = std::upper_bound(
        ech.begin(), ech.end(), v,
        [](uint32_t val, const auto& row) { return val > row.first; });
    ech.insert(it, {v, mask});
    return true;
  }
  std::optional<uint32_t> coords(uint32_t v) const {
    uint32_t mask = 0;
    for (const auto& [r, rm] : ech) {
      const uint32_t x = v ^ r;
      if (x < v) {
        v = x;
        mask ^= rm;
      }
    }
    if (v) return std::nullopt;
    return mask;
  }
};

}  // namespace

bool is_normal_set(const GF2Set& t) {
  const size_t n = t.cardinality();
  if (n < 4) return false;
  return sumset(t).cardinality() == 2 * n - 1;
}

GF2Set power_of_two_normal(int m) {
  if (m < 3) fail(Err::OutOfRange, "construction needs m >= 3");
  GF2Set t(m);
  const uint32_t half = 1u << (m - 1);
  for (uint32_t p = 0; p + 1 < half; ++p) t.insert(p);  // first coord 0, rest not all ones
  t.insert(half);                                       // e_1
  if (t.cardinality() != half || sumset(t).cardinality() != 2ull * half - 1)
    fail(Err::StructureViolation, "power-of-two construction failed its invariants");
  return t;
}

namespace detail {

uint64_t spanning_set_search(int d, int size, uint64_t target_sum,
                             const std::function<bool(const GF2Set&)>& on_survivor,
                             EnumCheckpoint* checkpoint) {
  GF2Set t = simplex(d);
  const int need = size - static_cast<int>(t.cardinality());
  if (need < 0) return 0;
  GF2Set s = sumset(t);
  if (s.cardinality() > target_sum) return 0;

  std::vector<uint32_t> pool;
  for (uint32_t p = 0; p < (1u << d); ++p)
    if (!t.contains(p)) pool.push_back(p);

  if (need == 0) {
    if (checkpoint && checkpoint->is_branch_done(d, -1)) return 0;
    if (s.cardinality() == target_sum) on_survivor(t);
    if (checkpoint) checkpoint->branch_completed(d, -1);
    return 1;
  }

  uint64_t examined = 0;
  bool keep_going = true;

  // depth-first over pool indices, ascending
  auto dfs = [&](auto&& self, size_t from, int remaining, const GF2Set& sum_so_far) -> void {
    for (size_t i = from; keep_going && i + remaining <= pool.size(); ++i) {
      const uint32_t p = pool[i];
      const bool top_level = (remaining == need);
      if (top_level && checkpoint && checkpoint->is_branch_done(d, static_cast<int>(p)))
        continue;
      ++examined;
      t.insert(p);
      GF2Set grown = sum_so_far;
      or_translated(grown, t, p);
      if (grown.cardinality() <= target_sum) {
        if (remaining == 1) {
          if (grown.cardinality() == target_sum) {
            if (checkpoint) checkpoint->survivor_found(d, t);
            keep_going = on_survivor(t);
          }
        } else {
          self(self, i + 1, remaining - 1, grown);
        }
      }
      t.erase(p);
      if (top_level && keep_going && checkpoint)
        checkpoint->branch_completed(d, static_cast<int>(p));
    }
  };
  dfs(dfs, 0, need, s);
  return examined;
}

}  // namespace detail

namespace {

struct LevelSearch {
  std::vector<std::pair<int, uint64_t>> examined;
  std::vector<std::pair<int, GF2Set>> survivors;  // (span dim, set)
};

LevelSearch search_level(int n, bool stop_at_first, EnumCheckpoint* checkpoint) {
  LevelSearch out;
  const int target = 2 * n - 1;
  bool stop = false;
  for (int d = ceil_log2(static_cast<uint64_t>(target)); d <= n - 1 && !stop; ++d) {
    const uint64_t count = detail::spanning_set_search(
        d, n, static_cast<uint64_t>(target),
        [&](const GF2Set& t) {
          out.survivors.emplace_back(d, t);
          if (stop_at_first) stop = true;
          return !stop;
        },
        checkpoint);
    out.examined.emplace_back(d, count);
  }
  return out;
}

}  // namespace

std::vector<NormalClass> enumerate_normal_level(int n, bool extended,
                                                EnumCheckpoint* checkpoint) {
  check_level_range(n, extended);
  LevelSearch found = search_level(n, false, checkpoint);
  if (checkpoint) {
    auto stored = checkpoint->stored_survivors();
    found.survivors.insert(found.survivors.end(), stored.begin(), stored.end());
  }
  // Canonical order regardless of checkpoint interleaving.
  std::sort(found.survivors.begin(), found.survivors.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return a.second < b.second;
            });
  found.survivors.erase(std::unique(found.survivors.begin(), found.survivors.end()),
                        found.survivors.end());

  std::vector<NormalClass> classes;
  for (const auto& [d, t] : found.survivors) {
    bool known = false;
    for (const auto& cls : classes)
      if (find_2_isomorphism(cls.representative, t)) {
        known = true;
        break;
      }
    if (known) continue;
    NormalClass cls;
    cls.level = n;
    cls.representative = t;
    cls.span_dim = d;
    cls.rank = rank(t, RankMethod::both);
    cls.elementary_model = elementarize(t).first;
    classes.push_back(std::move(cls));
  }
  return classes;
}

NormalityVerdict is_normal_number(int n, bool extended) {
  check_level_range(n, extended);
  LevelSearch found = search_level(n, true, nullptr);
  NormalityVerdict v;
  v.n = n;
  v.is_normal = !found.survivors.empty();
  if (v.is_normal) v.witness = found.survivors.front().second;
  v.search_space = std::move(found.examined);
  return v;
}

int compute_C(int n, bool extended) {
  const auto classes = enumerate_normal_level(n, extended);
  if (classes.empty()) fail(Err::NotNormal, std::to_string(n) + " is not a normal number");
  int best = 0;
  for (const auto& cls : classes) best = std::max(best, cls.rank);
  return best;
}

std::vector<GF2Set> enumerate_elementary(int m) {
  if (m < 3 || m > 5) fail(Err::OutOfRange, "elementary enumeration needs 3 <= m <= 5");
  std::vector<GF2Set> out;
  detail::spanning_set_search(m, 1 << (m - 1), (1ull << m) - 1,
                              [&](const GF2Set& t) {
                                out.push_back(t);
                                return true;
                              },
                              nullptr);
  return out;
}

std::pair<GF2Set, FreimanMap> elementarize(const GF2Set& t) {
  if (!is_normal_set(t)) fail(Err::NotNormal, "elementarize needs a normal set");
  const int r = rank(t, RankMethod::both);
  auto phi = rank_embedding(t, r);
  if (!phi) fail(Err::StructureViolation, "no embedding at the computed rank");

  // Normalize: send the first independent elements of the embedded image to
  // e_1..e_r (a linear 2-isomorphism), producing {0, e_1..e_r} ⊆ T'.
  const GF2Set embedded = phi->image_set();
  BasisChart chart;
  chart.dim = r;
  int picked = 0;
  embedded.for_each([&](uint32_t v) {
    if (picked < r && chart.insert(v, 1u << (r - 1 - picked))) ++picked;
  });
  if (picked != r)
    fail(Err::StructureViolation, "rank-minimal image does not span its space");

  FreimanMap out_map{t, r, {}};
  GF2Set model(r);
  for (const auto& [pre, img] : phi->images) {
    const auto c = chart.coords(img);
    out_map.images.emplace_back(pre, *c);
    model.insert(*c);
  }

  if (model.cardinality() != (1ull << (r - 1)))
    fail(Err::StructureViolation, "elementary model is not half its space");
  if (sumset(model).cardinality() != (1ull << r) - 1)
    fail(Err::StructureViolation, "rank-minimal sumset misses more than one point");
  if (!is_2_isomorphism(out_map))
    fail(Err::StructureViolation, "elementarization map is not a 2-isomorphism");
  return {std::move(model), std::move(out_map)};
}

}  // namespace f2lab
