#pragma once

#include "wythoff/bitvec.hpp"
#include "wythoff/game.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace wythoff {

[[nodiscard]] constexpr bool is_power_of_two(coord a) { return a >= 1 && (a & (a - 1)) == 0; }

// Difference table of an (a,a)-type game: the a*a signed differences d_0..d_{a*a-1}
// over the opening block of indexed cold positions. Beyond the table the sequence
// continues by d_{i+a*a} = d_i + a.
struct difference_table {
    coord stride = 1;
    std::vector<std::int64_t> values; // size stride*stride

    difference_table(coord a, std::vector<std::int64_t> v);
};

// Doubles the stride: blocks of the input table are first repeated verbatim,
// then repeated once shifted by +a and once by -a. Maps the stride-a table to
// the stride-2a table.
[[nodiscard]] difference_table double_table(const difference_table& t);

// Table for stride a (a power of two), built by repeated doubling from [0].
[[nodiscard]] difference_table base_difference_table(coord a);

// d_i for any i >= 0, extending the table by d_{i+a*a} = d_i + a.
[[nodiscard]] std::int64_t extended_value(const difference_table& t, std::uint64_t i);

// Every value in (-a, a) occurs, and nothing outside that range.
[[nodiscard]] bool check_property_1(const difference_table& t);

// Indices congruent mod a carry values pairwise distinct mod a.
[[nodiscard]] bool check_property_2(const difference_table& t);

// The final block of a entries pairs to zero: d_{a*a-a+i} + d_{a*a-1-i} = 0.
[[nodiscard]] bool check_property_3(const difference_table& t);

// d_i + d_{i+d_i} < a for all i < horizon (periodic extension; negative
// target indices are skipped).
[[nodiscard]] bool check_property_4(const difference_table& t, std::uint64_t horizon);

// d_j + d_{j-a+d_j} < a for all j < horizon with j-a+d_j >= 0.
[[nodiscard]] bool check_property_5(const difference_table& t, std::uint64_t horizon);

struct stream_pair {
    std::uint64_t n = 0;
    coord p = 0, q = 0;
};

// Emits the cold positions of the (a,a) game, a a power of two, without a grid:
// p_n is the mex of all coordinates the underlying pair sequence has produced,
// and q_n - p_n follows the schedule a*floor(n/a^2) + d_{n mod a^2}. Inside the
// opening a^2 indices both orientations of an asymmetric pair are emitted.
class p_position_stream {
public:
    explicit p_position_stream(coord a);
    stream_pair next();
    [[nodiscard]] std::uint64_t emitted() const { return n_; }
    [[nodiscard]] const difference_table& table() const { return table_; }

private:
    difference_table table_;
    std::uint64_t a2_;
    mex_allocator used_;
    std::uint64_t n_ = 0;
};

[[nodiscard]] std::vector<stream_pair> stream_p_positions(coord a, std::uint64_t limit);

// Exact-shift cyclic law d_{i+a*a} = d_i + a over every checkable index.
// Requires at least 2*a*a entries.
[[nodiscard]] bool is_cyclic_shift(const std::vector<std::int64_t>& d, coord a);

// First index violating the shift law, if any.
[[nodiscard]] std::optional<std::size_t> cyclic_shift_violation(const std::vector<std::int64_t>& d,
                                                                coord a);

// Weaker congruence reading: d_{i+a*a} = d_i (mod modulus) for every checkable i.
[[nodiscard]] bool is_cyclic_congruence(const std::vector<std::int64_t>& d, coord a,
                                        std::int64_t modulus);

} // namespace wythoff
