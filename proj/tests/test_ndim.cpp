#include "doctest.h"

#include "wythoff/ndim.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

using namespace wythoff;

TEST_CASE("basis_matrix validates shape") {
    CHECK_NOTHROW(basis_matrix(2, {{1, 0}, {0, 1}}));
    CHECK_THROWS_AS(basis_matrix(2, {{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(basis_matrix(2, {{1, 0}, {0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(basis_matrix(2, {{1, 0}, {0, -1}}), std::invalid_argument);
    CHECK_THROWS_AS(basis_matrix(2, {{1, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("determinant") {
    CHECK(determinant(basis_matrix(2, {{1, 0}, {0, 1}})) == 1);
    CHECK(determinant(basis_matrix(2, {{1, 0}, {1, 1}})) == 1);
    CHECK(determinant(basis_matrix(2, {{2, 0}, {0, 3}})) == 6);
    CHECK(determinant(basis_matrix(2, {{1, 2}, {2, 4}})) == 0);
    CHECK(determinant(basis_matrix(3, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}})) == 6);
    // swapped columns flip the sign
    CHECK(determinant(basis_matrix(2, {{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("decompose solves the integer system") {
    const basis_matrix id2(2, {{1, 0}, {0, 1}});
    CHECK(decompose({3, 5}, id2) == std::vector<coord>{3, 5});

    const basis_matrix shear(2, {{1, 0}, {1, 1}});
    CHECK(decompose({4, 4}, shear) == std::vector<coord>{0, 4});
    CHECK(decompose({5, 2}, shear) == std::vector<coord>{3, 2});
    // coefficient would be negative
    CHECK_FALSE(decompose({1, 4}, shear).has_value());

    const basis_matrix even(2, {{2, 0}, {0, 2}});
    CHECK_FALSE(decompose({1, 2}, even).has_value());
    CHECK(decompose({4, 6}, even) == std::vector<coord>{2, 3});

    const basis_matrix singular(2, {{1, 2}, {2, 4}});
    CHECK_THROWS_AS((void)decompose({1, 2}, singular), std::invalid_argument);
}

TEST_CASE("nim_cold is the xor rule") {
    CHECK(nim_cold({0, 0, 0}));
    CHECK(nim_cold({1, 2, 3}));
    CHECK_FALSE(nim_cold({1, 1, 1}));
    CHECK(nim_cold({1, 1}));
    CHECK(nim_cold({}));
    CHECK_FALSE(nim_cold({5}));
}

TEST_CASE("moves decrement coefficients") {
    const basis_matrix b(2, {{1, 0}, {1, 1}});
    game_spec g;
    g.dimension = 2;
    g.basis = b.columns;
    for (coord x = 0; x < 12; ++x)
        for (coord y = 0; y < 12; ++y) {
            const auto c = decompose({x, y}, b);
            if (!c) continue;
            for (std::size_t v = 0; v < 2; ++v)
                for (coord k = 1; k <= 4; ++k) {
                    const auto q = apply_move({x, y}, g, {v, k});
                    if (!q) continue;
                    const auto cq = decompose(*q, b);
                    std::vector<coord> want = *c;
                    want[v] -= k;
                    if (want[v] < 0) {
                        // decomposition is unique, so q cannot be representable
                        CHECK_FALSE(cq.has_value());
                        continue;
                    }
                    REQUIRE(cq.has_value());
                    CHECK(*cq == want);
                }
        }
}

TEST_CASE("nim reduction agrees with the oracle on diagonal bases") {
    const std::vector<basis_matrix> bases{
        basis_matrix(2, {{1, 0}, {0, 1}}),
        basis_matrix(2, {{2, 0}, {0, 3}}),
        basis_matrix(2, {{0, 2}, {1, 0}}), // permutation times diagonal
    };
    for (const basis_matrix& b : bases) {
        game_spec g;
        g.dimension = 2;
        g.basis = b.columns;
        const pn_grid grid = classify_box_generic(g, {16, 16});
        for (coord y = 0; y < 16; ++y)
            for (coord x = 0; x < 16; ++x) {
                const auto c = decompose({x, y}, b);
                if (!c) continue;
                REQUIRE(nim_cold(*c) == grid.is_p({x, y}));
            }
    }
}

TEST_CASE("three pile nim with unit basis matches xor everywhere") {
    const basis_matrix id3(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    game_spec g;
    g.dimension = 3;
    g.basis = id3.columns;
    const pn_grid grid = classify_box_generic(g, {8, 8, 8});
    for (coord z = 0; z < 8; ++z)
        for (coord y = 0; y < 8; ++y)
            for (coord x = 0; x < 8; ++x)
                REQUIRE(grid.is_p({x, y, z}) == ((x ^ y ^ z) == 0));
}

TEST_CASE("representable_coverage counts lattice reach") {
    const coverage_report full = representable_coverage(basis_matrix(2, {{1, 0}, {0, 1}}), {8, 8});
    CHECK(full.representable == 64);
    CHECK(full.total == 64);

    const coverage_report quarter = representable_coverage(basis_matrix(2, {{2, 0}, {0, 2}}), {8, 8});
    CHECK(quarter.representable == 16);
    CHECK(quarter.total == 64);

    CHECK_THROWS_AS((void)representable_coverage(basis_matrix(2, {{1, 0}, {0, 1}}), {0, 8}),
                    std::invalid_argument);
}

TEST_CASE("wythoff3_grid delegates to the oracle") {
    const pn_grid tiny = wythoff3_grid(1);
    CHECK(tiny.volume() == 1);
    CHECK(tiny.is_p({0, 0, 0}));

    const pn_grid g = wythoff3_grid(4);
    CHECK(g.is_p({1, 2, 3}));
    CHECK_FALSE(g.is_p({1, 1, 1}));
    CHECK(rescan_check(g));
}

TEST_CASE("three pile cold set matches the xor-zero set at desk scale") {
    const coord bound = 16;
    const pn_grid g = wythoff3_grid(bound);
    for (coord z = 0; z < bound; ++z)
        for (coord y = 0; y < bound; ++y)
            for (coord x = 0; x < bound; ++x)
                REQUIRE(g.is_p({x, y, z}) == ((x ^ y ^ z) == 0));
}
