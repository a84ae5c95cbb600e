#include "doctest.h"

#include "wythoff/grid.hpp"
#include "wythoff/ndim.hpp"

#include <set>
#include <stdexcept>
#include <vector>

using namespace wythoff;

namespace {

std::vector<canonical_pair> head(const std::vector<canonical_pair>& v, std::size_t n) {
    return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

} // namespace

TEST_CASE("classify_box small boxes") {
    const pn_grid one = classify_box(wythoff_spec(2), {1, 1});
    CHECK(one.volume() == 1);
    CHECK(one.is_p({0, 0}));
    CHECK(one.p_count() == 1);

    const pn_grid g = classify_box(wythoff_spec(1), {5, 5});
    std::set<std::pair<coord, coord>> cold;
    for (coord y = 0; y < 5; ++y)
        for (coord x = 0; x < 5; ++x)
            if (g.is_p({x, y})) cold.insert({x, y});
    CHECK(cold == std::set<std::pair<coord, coord>>{{0, 0}, {1, 2}, {2, 1}});

    const pn_grid h = classify_box(wythoff_spec(2), {8, 8});
    CHECK(h.is_p({4, 6}));
    CHECK(h.is_p({5, 7}));
    CHECK_FALSE(h.is_p({4, 5}));
}

TEST_CASE("classify_box rejects zero volume") {
    CHECK_THROWS_AS((void)classify_box(wythoff_spec(1), {0, 5}), std::invalid_argument);
    CHECK_THROWS_AS((void)classify_box(wythoff_spec(1), {5}), std::invalid_argument);
}

TEST_CASE("equal_take_stride recognizes the family") {
    CHECK(equal_take_stride(wythoff_spec(1)) == 1);
    CHECK(equal_take_stride(wythoff_spec(7)) == 7);

    game_spec permuted = wythoff_spec(3);
    std::swap(permuted.basis[0], permuted.basis[2]);
    CHECK(equal_take_stride(permuted) == 3);

    CHECK_FALSE(equal_take_stride(wythoff3_spec()).has_value());
    game_spec skewed{2, {{1, 0}, {0, 1}, {1, 2}}};
    CHECK_FALSE(equal_take_stride(skewed).has_value());
}

TEST_CASE("fast sweep equals generic classification") {
    for (coord a : {coord{1}, coord{2}, coord{3}, coord{4}, coord{5}, coord{8}}) {
        const game_spec g = wythoff_spec(a);
        const pn_grid fast = classify_box(g, {128, 128});
        const pn_grid slow = classify_box_generic(g, {128, 128});
        REQUIRE(fast.volume() == slow.volume());
        for (std::uint64_t i = 0; i < fast.volume(); ++i)
            REQUIRE(fast.is_p_index(i) == slow.is_p_index(i));
    }
}

TEST_CASE("rescan fixed point") {
    for (coord a : {coord{1}, coord{2}, coord{3}, coord{5}})
        CHECK(rescan_check(classify_box(wythoff_spec(a), {64, 64})));
    CHECK(rescan_check(classify_box(wythoff3_spec(), {16, 16, 16})));
}

TEST_CASE("grid is symmetric across the diagonal") {
    const pn_grid g = classify_box(wythoff_spec(3), {40, 40});
    for (coord y = 0; y < 40; ++y)
        for (coord x = 0; x < 40; ++x)
            REQUIRE(g.is_p({x, y}) == g.is_p({y, x}));
}

TEST_CASE("one cold cell per row and column") {
    const pn_grid g = classify_box(wythoff_spec(4), {96, 96});
    std::vector<int> row(96, 0), col(96, 0);
    for (coord y = 0; y < 96; ++y)
        for (coord x = 0; x < 96; ++x)
            if (g.is_p({x, y})) {
                ++row[static_cast<std::size_t>(y)];
                ++col[static_cast<std::size_t>(x)];
            }
    for (int c : row) CHECK(c <= 1);
    for (int c : col) CHECK(c <= 1);
}

TEST_CASE("no cold cell reaches another cold cell") {
    const game_spec g = wythoff_spec(2);
    const pn_grid grid = classify_box(g, {48, 48});
    for (coord y = 0; y < 48; ++y)
        for (coord x = 0; x < 48; ++x) {
            if (!grid.is_p({x, y})) continue;
            for (std::size_t v = 0; v < g.basis.size(); ++v)
                for (coord k = 1;; ++k) {
                    const auto q = apply_move({x, y}, g, {v, k});
                    if (!q) break;
                    REQUIRE_FALSE(grid.is_p(*q));
                }
        }
}

TEST_CASE("p_positions canonical lists") {
    const std::vector<canonical_pair> w1 = p_positions(classify_box(wythoff_spec(1), {8, 8}));
    CHECK(w1 == std::vector<canonical_pair>{{0, 0}, {1, 2}, {3, 5}, {4, 7}});

    const std::vector<canonical_pair> w2 =
        head(p_positions(classify_box(wythoff_spec(2), {12, 12})), 7);
    CHECK(w2 == std::vector<canonical_pair>{{0, 0}, {1, 1}, {2, 3}, {4, 6}, {5, 7}, {8, 11}, {9, 10}});

    const std::vector<canonical_pair> w3 =
        head(p_positions(classify_box(wythoff_spec(3), {30, 30})), 12);
    CHECK(w3 == std::vector<canonical_pair>{{0, 0}, {1, 1}, {2, 2}, {3, 4}, {5, 6}, {7, 8},
                                            {9, 11}, {10, 12}, {13, 16}, {14, 17}, {15, 18}, {19, 23}});

    const std::vector<canonical_pair> w5 =
        head(p_positions(classify_box(wythoff_spec(5), {24, 24})), 12);
    CHECK(w5 == std::vector<canonical_pair>{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 6},
                                            {7, 8}, {9, 10}, {11, 12}, {13, 14}, {15, 17}, {16, 18}});

    const std::vector<canonical_pair> tiny = p_positions(classify_box(wythoff_spec(1), {1, 1}));
    CHECK(tiny == std::vector<canonical_pair>{{0, 0}});
}

TEST_CASE("difference_sequence reproduces the signed tables") {
    const auto pairs2 = p_positions(classify_box(wythoff_spec(2), {64, 64}));
    CHECK(difference_sequence(pairs2, 2, 4) == std::vector<std::int64_t>{0, 0, 1, -1});
    CHECK(difference_sequence(pairs2, 2, 8) == std::vector<std::int64_t>{0, 0, 1, -1, 2, 2, 3, 1});
    CHECK(difference_sequence(pairs2, 2, 16) ==
          std::vector<std::int64_t>{0, 0, 1, -1, 2, 2, 3, 1, 4, 4, 5, 3, 6, 6, 7, 5});

    const auto pairs4 = p_positions(classify_box(wythoff_spec(4), {96, 96}));
    CHECK(difference_sequence(pairs4, 4, 16) ==
          std::vector<std::int64_t>{0, 0, 0, 0, 1, -1, 1, -1, 2, 2, -2, -2, 3, 1, -1, -3});

    const auto pairs3 = p_positions(classify_box(wythoff_spec(3), {128, 128}));
    CHECK(difference_sequence(pairs3, 3, 18) ==
          std::vector<std::int64_t>{0, 0, 0, 1, -1, 1, -1, 1, -1, 2, 2, 3, 3, 3, 4, 2, 4, 5});
    CHECK(difference_sequence(pairs3, 3, 36) ==
          std::vector<std::int64_t>{0, 0, 0, 1,  -1, 1, -1, 1, -1, 2, 2, 3,  3,  3, 4, 2, 4, 5,
                                    4, 6, 6, 5,  5,  6, 7,  7, 7,  8, 8, 8,  9,  9, 9, 10, 10, 10});
}

TEST_CASE("difference_sequence rejects bad input") {
    const auto pairs = p_positions(classify_box(wythoff_spec(2), {12, 12}));
    CHECK_THROWS_AS((void)difference_sequence(pairs, 2, 64), std::runtime_error);

    std::vector<canonical_pair> clash{{0, 0}, {1, 2}, {2, 3}};
    CHECK_THROWS_AS((void)difference_sequence(clash, 2, 4), std::invalid_argument);
}

TEST_CASE("pn_grid indexing is row major with x fastest") {
    const pn_grid g = classify_box(wythoff_spec(1), {4, 3});
    CHECK(g.volume() == 12);
    CHECK(g.index_of({0, 0}) == 0);
    CHECK(g.index_of({3, 0}) == 3);
    CHECK(g.index_of({0, 1}) == 4);
    CHECK(g.index_of({2, 2}) == 10);
    CHECK_THROWS_AS((void)g.index_of({4, 0}), std::out_of_range);
    CHECK_THROWS_AS((void)g.index_of({0, 3}), std::out_of_range);
}

TEST_CASE("three pile box classification") {
    const pn_grid g = classify_box(wythoff3_spec(), {4, 4, 4});
    CHECK(g.is_p({0, 0, 0}));
    CHECK(g.is_p({1, 2, 3}));
    CHECK_FALSE(g.is_p({1, 1, 1}));
    CHECK_FALSE(g.is_p({1, 0, 0}));
}
