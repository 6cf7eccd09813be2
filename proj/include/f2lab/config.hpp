#pragma once

namespace f2lab {

// Resource guards. Limits are configuration, not silent truncation: every
// operation that would exceed its guard raises RESOURCE_LIMIT instead.
struct Limits {
  int max_dim = 20;               // largest ambient dimension for GF2Set
  int subspace_enum_dim = 6;      // full subspace enumeration
  int power_set_scan_dim = 4;     // full power-set scans (empirical tables)
  int cover_dim = 12;             // cover_number rejects ambient dim >= this
  int universal_rank_dim = 12;    // model-space DFS in rank(method=universal)
};

Limits& limits();

// Reads F2LAB_MAX_DIM from the environment, if set.
void apply_env_overrides();

}  // namespace f2lab
