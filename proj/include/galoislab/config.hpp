#ifndef GALOISLAB_CONFIG_HPP
#define GALOISLAB_CONFIG_HPP

#include <cstdint>

namespace galoislab {

// Global caps for combinatorially large computations. The cell cap bounds
// the number of entries in a full Rogers-Szego expansion and the number of
// vectors visited by the subspace enumerator. The initial value is read
// once from the environment variable GALOIS_LAB_MAX_CELLS, falling back to
// 10^7 when unset or unparsable.
std::uint64_t max_cells();
void set_max_cells(std::uint64_t cap);

// Largest N for which permutation statistics are gathered by direct
// enumeration of S_N; beyond it the inclusion-exclusion path is used.
constexpr unsigned enumeration_threshold = 11;

// Largest N accepted by descent_inv_table at all (the inclusion-exclusion
// aggregation walks 3^(N-1) subset pairs).
constexpr unsigned descent_table_cap = 16;

} // namespace galoislab

#endif
