#pragma once

#include <cstdint>

#include "smallarr/arrangement.hpp"

namespace smallarr {

/// Seeded generator of guaranteed-small arrangements: builds a random
/// linearly joined sequence where every new component passes through a
/// random linear section of one earlier component and adds fresh directions
/// outside the current span. Infeasible parameters (ambient_rank <
/// components) raise input_error; the result is re-confirmed small before
/// being returned.
Arrangement random_small_arrangement(int components, int ambient_rank, std::uint64_t seed);

}  // namespace smallarr
