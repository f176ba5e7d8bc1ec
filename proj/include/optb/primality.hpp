#pragma once

#include <cstdint>

namespace optb {

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::int64_t n);

} // namespace optb
