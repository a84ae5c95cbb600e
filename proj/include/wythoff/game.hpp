#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace wythoff {

using coord = std::int64_t;
using pos_vec = std::vector<coord>;

// A take-away game on n piles: a move subtracts a positive multiple of one
// basis vector from the position, and no coordinate may go negative.
// Normal play: the player left with no legal move loses.
struct game_spec {
    std::size_t dimension = 0;
    std::vector<pos_vec> basis; // every entry >= 0, at least one positive per vector
};

struct game_move {
    std::size_t vector_index = 0;
    coord multiple = 1; // >= 1
};

// {(1,0),(0,1),(a,a)}: take from either pile, or a multiple of a from both.
[[nodiscard]] game_spec wythoff_spec(coord a);

// {(1,0,0),(0,1,0),(0,0,1),(1,1,1)}: the three-pile analogue.
[[nodiscard]] game_spec wythoff3_spec();

void validate_spec(const game_spec& g); // throws std::invalid_argument

// nullopt when the move would drive a coordinate negative.
[[nodiscard]] std::optional<pos_vec> apply_move(const pos_vec& p, const game_spec& g,
                                                const game_move& m);

// All positions q with q - k*v = p for some basis vector v and k >= 1, with
// every coordinate of q <= max_corner (inclusive). Sorted, deduplicated.
[[nodiscard]] std::vector<pos_vec> predecessors_reached(const pos_vec& p, const game_spec& g,
                                                        const pos_vec& max_corner);

} // namespace wythoff
