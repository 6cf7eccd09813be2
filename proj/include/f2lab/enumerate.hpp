#pragma once

// Exhaustive subspace enumeration via reduced-echelon matrices.
//
// Every k-dimensional subspace of F_2^m has exactly one reduced-echelon basis,
// so enumerating pivot-column choices and free entries emits each subspace
// once. Order: dimension ascending, pivot coordinate tuples lexicographically,
// then free-entry counters ascending (counter bit 0 = first free slot in
// row-major, coordinate-ascending order).

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "f2lab/subspace.hpp"

namespace f2lab {

namespace detail {

// Visits all reduced-echelon bases of dimension k in F_2^m, no resource guard.
// Returning false from the visitor stops the enumeration.
void enumerate_rref(int m, int k, const std::function<bool(const std::vector<uint32_t>&)>& visit);

}  // namespace detail

// Streams each subspace exactly once in canonical echelon order. Guarded by
// limits().subspace_enum_dim (RESOURCE_LIMIT above it).
void enumerate_subspaces(int m, std::optional<int> dim_filter,
                         const std::function<bool(const Subspace&)>& visit);

std::vector<Subspace> all_subspaces(int m, std::optional<int> dim_filter = std::nullopt);

}  // namespace f2lab
