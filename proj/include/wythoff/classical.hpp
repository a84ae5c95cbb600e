#pragma once

#include "wythoff/game.hpp"

#include <cstdint>

namespace wythoff {

// Exact integer square root: largest r with r*r <= n.
[[nodiscard]] std::uint64_t isqrt_u128(unsigned __int128 n);

// floor(k * phi) for the golden ratio phi = (1+sqrt(5))/2, computed exactly
// as floor((k + isqrt(5*k*k)) / 2). 5*k*k is never a perfect square for k > 0,
// so the floor is never on a tie.
[[nodiscard]] coord floor_k_phi(coord k);

struct golden_pair {
    coord x = 0, y = 0; // y - x = k
};

// k-th cold position of the classical game: (floor(k*phi), floor(k*phi) + k).
[[nodiscard]] golden_pair cold_pair(coord k);

[[nodiscard]] bool is_cold(coord x, coord y);

} // namespace wythoff
