#include "doctest.h"

#include "wythoff/game.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace wythoff;

TEST_CASE("wythoff_spec basis") {
    for (coord a : {coord{1}, coord{2}, coord{8}}) {
        const game_spec g = wythoff_spec(a);
        CHECK(g.dimension == 2);
        REQUIRE(g.basis.size() == 3);
        CHECK(g.basis[0] == pos_vec{1, 0});
        CHECK(g.basis[1] == pos_vec{0, 1});
        CHECK(g.basis[2] == pos_vec{a, a});
    }
    CHECK_THROWS_AS((void)wythoff_spec(0), std::invalid_argument);
}

TEST_CASE("wythoff3_spec basis") {
    const game_spec g = wythoff3_spec();
    CHECK(g.dimension == 3);
    REQUIRE(g.basis.size() == 4);
    CHECK(g.basis[3] == pos_vec{1, 1, 1});
}

TEST_CASE("validate_spec rejects malformed specs") {
    game_spec g = wythoff_spec(2);
    CHECK_NOTHROW(validate_spec(g));

    game_spec zero_vec = g;
    zero_vec.basis.push_back({0, 0});
    CHECK_THROWS_AS(validate_spec(zero_vec), std::invalid_argument);

    game_spec wrong_len = g;
    wrong_len.basis.push_back({1, 2, 3});
    CHECK_THROWS_AS(validate_spec(wrong_len), std::invalid_argument);

    game_spec dup = g;
    dup.basis.push_back({1, 0});
    CHECK_THROWS_AS(validate_spec(dup), std::invalid_argument);

    game_spec empty;
    empty.dimension = 2;
    CHECK_THROWS_AS(validate_spec(empty), std::invalid_argument);
}

TEST_CASE("apply_move subtracts multiples and rejects negatives") {
    const game_spec g = wythoff_spec(2);
    CHECK(apply_move({5, 7}, g, {2, 2}) == pos_vec{1, 3});
    CHECK(apply_move({4, 6}, g, {0, 4}) == pos_vec{0, 6});
    CHECK_FALSE(apply_move({1, 2}, g, {2, 1}).has_value());
    CHECK_FALSE(apply_move({5, 0}, g, {1, 3}).has_value());
}

TEST_CASE("apply_move never increases a coordinate") {
    const game_spec g = wythoff_spec(3);
    for (coord x = 0; x < 8; ++x)
        for (coord y = 0; y < 8; ++y)
            for (std::size_t v = 0; v < g.basis.size(); ++v)
                for (coord k = 1; k <= 3; ++k) {
                    const auto q = apply_move({x, y}, g, {v, k});
                    if (!q) continue;
                    CHECK((*q)[0] <= x);
                    CHECK((*q)[1] <= y);
                }
}

TEST_CASE("apply_move commutes with coordinate swap") {
    const game_spec g = wythoff_spec(2);
    // basis closed under swap: (1,0) <-> (0,1), (2,2) fixed
    auto swapped_index = [](std::size_t v) { return v == 2 ? std::size_t{2} : 1 - v; };
    for (coord x = 0; x < 10; ++x)
        for (coord y = 0; y < 10; ++y)
            for (std::size_t v = 0; v < 3; ++v)
                for (coord k = 1; k <= 4; ++k) {
                    const auto a = apply_move({x, y}, g, {v, k});
                    const auto b = apply_move({y, x}, g, {swapped_index(v), k});
                    REQUIRE(a.has_value() == b.has_value());
                    if (a) CHECK(*a == pos_vec{(*b)[1], (*b)[0]});
                }
}

TEST_CASE("predecessors_reached enumerates move preimages") {
    const std::vector<pos_vec> from_origin =
        predecessors_reached({0, 0}, wythoff_spec(1), {2, 2});
    CHECK(from_origin == std::vector<pos_vec>{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}, {2, 2}});

    const std::vector<pos_vec> tight =
        predecessors_reached({0, 0}, wythoff_spec(2), {1, 1});
    CHECK(tight == std::vector<pos_vec>{{0, 1}, {1, 0}});

    const std::vector<pos_vec> inner =
        predecessors_reached({1, 1}, wythoff_spec(2), {3, 3});
    CHECK(inner == std::vector<pos_vec>{{1, 2}, {1, 3}, {2, 1}, {3, 1}, {3, 3}});
}

TEST_CASE("predecessors_reached inverts apply_move on a full box") {
    const game_spec g = wythoff_spec(2);
    const coord n = 9;
    for (coord px = 0; px <= n; ++px)
        for (coord py = 0; py <= n; ++py) {
            const pos_vec p{px, py};
            std::set<pos_vec> via_moves;
            for (coord qx = 0; qx <= n; ++qx)
                for (coord qy = 0; qy <= n; ++qy)
                    for (std::size_t v = 0; v < g.basis.size(); ++v)
                        for (coord k = 1; k <= n; ++k) {
                            const auto r = apply_move({qx, qy}, g, {v, k});
                            if (r && *r == p) via_moves.insert({qx, qy});
                        }
            const std::vector<pos_vec> listed = predecessors_reached(p, g, {n, n});
            CHECK(std::set<pos_vec>(listed.begin(), listed.end()) == via_moves);
        }
}
