#include "f2lab/config.hpp"

#include <cstdlib>
#include <string>

namespace f2lab {

Limits& limits() {
  static Limits instance;
  return instance;
}

void apply_env_overrides() {
  if (const char* v = std::getenv("F2LAB_MAX_DIM")) {
    const int m = std::atoi(v);
    if (m >= 1 && m <= 26) limits().max_dim = m;
  }
}

}  // namespace f2lab
