#include "f2lab/enumerate.hpp"

#include "f2lab/config.hpp"

namespace f2lab {

namespace detail {

namespace {

// Pivot coordinates are 1-based positions; coordinate c is bit (m - c).
struct RrefGen {
  int m, k;
  std::vector<int> pivots;               // increasing coordinate positions
  std::vector<std::pair<int, int>> free_slots;  // (row, bit) row-major
  std::vector<uint32_t> rows;

  bool emit(const std::function<bool(const std::vector<uint32_t>&)>& visit) {
    const size_t f = free_slots.size();
    for (uint64_t counter = 0; counter < (1ull << f); ++counter) {
      for (int r = 0; r < k; ++r)
        rows[static_cast<size_t>(r)] = 1u << (m - pivots[static_cast<size_t>(r)]);
      for (size_t s = 0; s < f; ++s)
        if ((counter >> s) & 1ull)
          rows[static_cast<size_t>(free_slots[s].first)] |= 1u << free_slots[s].second;
      if (!visit(rows)) return false;
    }
    return true;
  }

  bool choose(int row, int first,
              const std::function<bool(const std::vector<uint32_t>&)>& visit) {
    if (row == k) {
      free_slots.clear();
      uint32_t pivot_mask = 0;
      for (int p : pivots) pivot_mask |= 1u << (m - p);
      for (int r = 0; r < k; ++r)
        for (int c = pivots[static_cast<size_t>(r)] + 1; c <= m; ++c) {
          const int bit = m - c;
          if (!((pivot_mask >> bit) & 1u)) free_slots.emplace_back(r, bit);
        }
      return emit(visit);
    }
    for (int c = first; c <= m - (k - row - 1); ++c) {
      pivots[static_cast<size_t>(row)] = c;
      if (!choose(row + 1, c + 1, visit)) return false;
    }
    return true;
  }
};

}  // namespace

void enumerate_rref(int m, int k,
                    const std::function<bool(const std::vector<uint32_t>&)>& visit) {
  if (k == 0) {
    std::vector<uint32_t> none;
    visit(none);
    return;
  }
  RrefGen gen;
  gen.m = m;
  gen.k = k;
  gen.pivots.assign(static_cast<size_t>(k), 0);
  gen.rows.assign(static_cast<size_t>(k), 0);
  gen.choose(0, 1, visit);
}

}  // namespace detail

void enumerate_subspaces(int m, std::optional<int> dim_filter,
                         const std::function<bool(const Subspace&)>& visit) {
  if (m > limits().subspace_enum_dim)
    fail(Err::ResourceLimit, "subspace enumeration guarded at m <= " +
                                 std::to_string(limits().subspace_enum_dim));
  if (m < 0 || (dim_filter && (*dim_filter < 0 || *dim_filter > m)))
    fail(Err::OutOfRange, "bad subspace enumeration arguments");
  bool keep_going = true;
  for (int k = 0; k <= m && keep_going; ++k) {
    if (dim_filter && *dim_filter != k) continue;
    detail::enumerate_rref(m, k, [&](const std::vector<uint32_t>& rows) {
      Subspace s = Subspace::from_generators(m, rows);
      keep_going = visit(s);
      return keep_going;
    });
  }
}

std::vector<Subspace> all_subspaces(int m, std::optional<int> dim_filter) {
  std::vector<Subspace> out;
  enumerate_subspaces(m, dim_filter, [&](const Subspace& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace f2lab
