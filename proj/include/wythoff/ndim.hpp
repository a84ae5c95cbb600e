#pragma once

#include "wythoff/grid.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace wythoff {

// Square move basis: column j is the j-th move vector. Nonsingular by contract.
struct basis_matrix {
    std::size_t n = 0;
    std::vector<pos_vec> columns;

    basis_matrix(std::size_t dim, std::vector<pos_vec> cols);
};

[[nodiscard]] std::int64_t determinant(const basis_matrix& b);

// Non-negative integer coefficients c with sum c_j * column_j = p, or nullopt
// when p is not representable that way.
[[nodiscard]] std::optional<std::vector<coord>> decompose(const pos_vec& p, const basis_matrix& b);

// With independent move vectors the game is Nim on the coefficients: a
// position is cold iff the coefficient xor vanishes.
[[nodiscard]] bool nim_cold(const std::vector<coord>& coefficients);

struct coverage_report {
    std::uint64_t representable = 0;
    std::uint64_t total = 0;
};

// How much of the box [0,bound)^n the coefficient lattice reaches.
[[nodiscard]] coverage_report representable_coverage(const basis_matrix& b, const pos_vec& bound);

// Retrograde classification of the three-pile game on [0,bound)^3.
[[nodiscard]] pn_grid wythoff3_grid(coord bound);

} // namespace wythoff
