#pragma once

#include "wythoff/grid.hpp"

#include <cstddef>
#include <vector>

namespace wythoff {

// Greedy cold-pair generator for the (b,b) game, any b >= 1. Pair n takes
// a_n = mex of all earlier coordinates, then b_n = the smallest unused value
// (a_n itself is allowed) whose difference class (b_n - a_n, a_n mod b) has
// not been claimed by an earlier pair. Emits canonical pairs in a_n order.
class bb_generator {
public:
    explicit bb_generator(coord b);
    canonical_pair next();
    [[nodiscard]] coord b() const { return b_; }

private:
    coord b_;
    mex_allocator used_;
    bitvec claimed_; // key (b_n - a_n) * b + (a_n mod b)
};

[[nodiscard]] std::vector<canonical_pair> generate_bb(coord b, std::size_t count);

struct bb_oracle_report {
    coord b = 0;
    coord bound = 0;
    std::vector<canonical_pair> missing; // oracle-cold pairs the generator never emits
    std::vector<canonical_pair> extra;   // generated pairs the oracle rejects
    [[nodiscard]] bool ok() const { return missing.empty() && extra.empty(); }
};

// Compares generator output against the retrograde oracle on [0,bound)^2.
[[nodiscard]] bb_oracle_report verify_against_oracle(coord b, coord bound);

} // namespace wythoff
