#pragma once

#include <cstddef>

namespace logfw {

// Hard limits for every search in the library. Exhausting one raises a
// budget error rather than returning a partial answer.
struct Budgets {
  std::size_t groebner_pairs = 200000;
  std::size_t membership_nodes = 2000000;
  std::size_t hilbert_candidates = 200000;
  std::size_t fitting_minors = 200000;
  std::size_t oracle_ring_size = 4096;
};

}  // namespace logfw
