#include "wythoff/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace wythoff {

std::uint64_t isqrt_u128(unsigned __int128 n) {
    if (n == 0) return 0;
    // long double seed gives ~64 significant bits; correct the last few by hand
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

coord floor_k_phi(coord k) {
    if (k < 0) throw std::invalid_argument("floor_k_phi: k must be >= 0");
    if (k > (coord{1} << 61)) throw std::invalid_argument("floor_k_phi: k too large");
    const auto uk = static_cast<unsigned __int128>(k);
    const std::uint64_t s = isqrt_u128(5 * uk * uk);
    return static_cast<coord>((static_cast<std::uint64_t>(k) + s) / 2);
}

golden_pair cold_pair(coord k) {
    const coord x = floor_k_phi(k);
    return {x, x + k};
}

bool is_cold(coord x, coord y) {
    if (x < 0 || y < 0) return false;
    const coord lo = x < y ? x : y;
    const coord hi = x < y ? y : x;
    return cold_pair(hi - lo).x == lo;
}

} // namespace wythoff
