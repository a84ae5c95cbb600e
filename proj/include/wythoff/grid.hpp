#pragma once

#include "wythoff/bitvec.hpp"
#include "wythoff/game.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace wythoff {

// Dense cold/hot classification of the box [0, bound_i) per axis.
// Storage is one bit per cell, row-major with x (axis 0) fastest. Set = cold (P).
class pn_grid {
public:
    pn_grid(game_spec spec, pos_vec bound);

    [[nodiscard]] const game_spec& spec() const { return spec_; }
    [[nodiscard]] const pos_vec& bound() const { return bound_; }
    [[nodiscard]] std::uint64_t volume() const { return volume_; }

    [[nodiscard]] std::uint64_t index_of(const pos_vec& p) const;
    [[nodiscard]] bool is_p(const pos_vec& p) const { return cells_.test(index_of(p)); }
    [[nodiscard]] bool is_p_index(std::uint64_t i) const { return cells_.test(i); }
    [[nodiscard]] std::uint64_t p_count() const { return cells_.popcount(); }

    void mark_p(std::uint64_t i) { cells_.set(i); }

private:
    game_spec spec_;
    pos_vec bound_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t volume_ = 0;
    bitvec cells_;
};

// Retrograde classification of the whole box. Dispatches to an O(volume)-time
// sweep for two-pile specs of the form {(1,0),(0,1),(a,a)}, and to the generic
// move-enumeration scan otherwise.
[[nodiscard]] pn_grid classify_box(const game_spec& g, const pos_vec& bound);

// Reference path: classifies every cell straight from the move rule.
[[nodiscard]] pn_grid classify_box_generic(const game_spec& g, const pos_vec& bound);

// The stride a when g is {(1,0),(0,1),(a,a)} up to basis order, else nullopt.
[[nodiscard]] std::optional<coord> equal_take_stride(const game_spec& g);

// Re-derives every cell's label from its neighbours and compares with the
// stored label; a correctly classified grid is a fixed point of this scan.
[[nodiscard]] bool rescan_check(const pn_grid& grid);

struct canonical_pair {
    coord x = 0, y = 0; // x <= y
    auto operator<=>(const canonical_pair&) const = default;
};

// Cold cells of a two-pile grid as (min,max) pairs, mirrors collapsed, sorted by x.
[[nodiscard]] std::vector<canonical_pair> p_positions(const pn_grid& grid);

// Signed difference sequence d_0..d_{count-1} over the indexed cold positions
// of an (a,a)-type game. Index n consumes the pair holding the smallest value
// not seen so far; within the opening a*a indices both orientations of an
// asymmetric pair get their own index (+d where the smaller coordinate is
// fresh, -d where the larger one is), afterwards a pair consumes both of its
// coordinates at once. Throws std::runtime_error("insufficient data") when
// `list` does not reach far enough.
[[nodiscard]] std::vector<std::int64_t> difference_sequence(const std::vector<canonical_pair>& list,
                                                            coord a, std::size_t count);

} // namespace wythoff
