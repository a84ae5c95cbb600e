#pragma once

#include "wythoff/grid.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wythoff {

// gap tolerance for the slope conjecture; recorded, never load-bearing
inline constexpr long double asymptote_tolerance = 1e-3L;

struct grid_conjecture_result {
    coord a = 0;
    std::uint64_t count = 0;
    std::uint64_t expected = 0; // a*a
    bool holds = false;
    std::vector<canonical_pair> witness_cells; // the cold cells, filled on failure
};

struct asymptote_result {
    coord a = 0;
    std::uint64_t samples = 0;
    long double alpha = 0;        // (1 + sqrt(4a^2+1)) / (2a)
    long double slope_min = 0;    // q/p over the trailing decile, upper branch
    long double slope_median = 0;
    long double slope_max = 0;
    long double gap = 0; // |median - alpha|
    bool within_tolerance = false;
};

struct cyclic_scan_row {
    coord b = 0;
    std::uint64_t window = 0;
    bool shift_cyclic = false;       // d_{i+b^2} = d_i + b
    bool congruent_mod_b = false;    // d_{i+b^2} = d_i (mod b)
    bool congruent_mod_b2 = false;   // d_{i+b^2} = d_i (mod b^2)
    std::optional<std::size_t> witness_index; // first shift violation
    std::int64_t witness_got = 0;
    std::int64_t witness_want = 0;
};

struct cyclic_scan_result {
    coord b_max = 0;
    std::vector<cyclic_scan_row> rows;
    [[nodiscard]] std::vector<coord> shift_cyclic_set() const;
};

struct sierpinski_result {
    coord bound = 0;
    std::uint64_t p_count = 0;
    std::vector<std::uint64_t> box_counts; // occupied cubes of side 2^j, j = 0..
    std::vector<double> pairwise_dims;     // log2(count_j / count_{j+1})
    double lsq_dimension = 0;              // least-squares slope over all scales
    std::uint64_t doubling_eligible = 0;   // cold p with 2p inside the box
    std::uint64_t doubling_matched = 0;    // ... where 2p is cold too
    double doubling_score = 0;
    double menger_reference = 0;      // log 20 / log 3
    double tetrahedron_reference = 0; // log 4 / log 2
};

// Does the box [0,a^2)^2 hold exactly a^2 cold cells (mirrors counted apart)?
[[nodiscard]] grid_conjecture_result check_grid_conjecture(coord a);

// Trailing-decile slope statistics against the conjectured asymptote. Pairs
// come from the closed form (a = 1), the difference-table stream (a a power
// of two) or the greedy generator (any other a).
[[nodiscard]] asymptote_result check_asymptote(coord a, std::uint64_t n_samples);

// Cyclic-law scan over b = 1..b_max. window = indices checked per b; 0 picks
// 4*b^2. Each b needs window >= 2*b^2.
[[nodiscard]] cyclic_scan_result scan_cyclic_games(coord b_max, std::uint64_t window);

// Fractal measurements of the three-pile cold set; reports numbers, no verdict.
[[nodiscard]] sierpinski_result sierpinski_analysis(coord bound);

// Line-delimited report text, one key=value record per line. Byte-stable
// across runs of the same build.
[[nodiscard]] std::string report_text(const grid_conjecture_result& r);
[[nodiscard]] std::string report_text(const asymptote_result& r);
[[nodiscard]] std::string report_text(const cyclic_scan_result& r);
[[nodiscard]] std::string report_text(const sierpinski_result& r);

} // namespace wythoff
