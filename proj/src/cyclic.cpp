#include "wythoff/cyclic.hpp"

#include <stdexcept>

namespace wythoff {

difference_table::difference_table(coord a, std::vector<std::int64_t> v)
    : stride(a), values(std::move(v)) {
    if (a < 1) throw std::invalid_argument("difference_table: stride must be >= 1");
    if (values.size() != static_cast<std::size_t>(a) * static_cast<std::size_t>(a))
        throw std::invalid_argument("difference_table: need stride*stride values");
}

difference_table double_table(const difference_table& t) {
    const coord a = t.stride;
    const auto ua = static_cast<std::size_t>(a);
    std::vector<std::int64_t> out;
    out.reserve(4 * ua * ua);
    // block i of the input is values[i*a .. i*a+a)
    for (std::size_t i = 0; i < ua; ++i)
        for (int rep = 0; rep < 2; ++rep)
            for (std::size_t j = 0; j < ua; ++j) out.push_back(t.values[i * ua + j]);
    for (std::size_t i = 0; i < ua; ++i)
        for (std::int64_t offset : {static_cast<std::int64_t>(a), static_cast<std::int64_t>(-a)})
            for (std::size_t j = 0; j < ua; ++j) out.push_back(t.values[i * ua + j] + offset);
    return difference_table(2 * a, std::move(out));
}

difference_table base_difference_table(coord a) {
    if (!is_power_of_two(a)) throw std::invalid_argument("base_difference_table: a must be a power of two");
    if (a > (coord{1} << 15)) throw std::invalid_argument("base_difference_table: a too large");
    difference_table t(1, {0});
    while (t.stride < a) t = double_table(t);
    return t;
}

std::int64_t extended_value(const difference_table& t, std::uint64_t i) {
    const std::uint64_t a2 = t.values.size();
    return t.values[i % a2] + t.stride * static_cast<std::int64_t>(i / a2);
}

bool check_property_1(const difference_table& t) {
    const coord a = t.stride;
    std::vector<bool> seen(static_cast<std::size_t>(2 * a - 1), false);
    for (std::int64_t v : t.values) {
        if (v <= -a || v >= a) return false;
        seen[static_cast<std::size_t>(v + a - 1)] = true;
    }
    for (bool s : seen)
        if (!s) return false;
    return true;
}

bool check_property_2(const difference_table& t) {
    const auto a = static_cast<std::size_t>(t.stride);
    const std::size_t a2 = t.values.size();
    std::vector<bool> seen(a);
    for (std::size_t r = 0; r < a; ++r) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t i = r; i < a2; i += a) {
            const auto m = static_cast<std::size_t>(((t.values[i] % t.stride) + t.stride) % t.stride);
            if (seen[m]) return false;
            seen[m] = true;
        }
    }
    return true;
}

bool check_property_3(const difference_table& t) {
    const auto a = static_cast<std::size_t>(t.stride);
    const std::size_t a2 = t.values.size();
    for (std::size_t i = 0; i < a; ++i)
        if (t.values[a2 - a + i] + t.values[a2 - 1 - i] != 0) return false;
    return true;
}

bool check_property_4(const difference_table& t, std::uint64_t horizon) {
    for (std::uint64_t i = 0; i < horizon; ++i) {
        const std::int64_t di = extended_value(t, i);
        const std::int64_t j = static_cast<std::int64_t>(i) + di;
        if (j < 0) continue;
        if (di + extended_value(t, static_cast<std::uint64_t>(j)) >= t.stride) return false;
    }
    return true;
}

bool check_property_5(const difference_table& t, std::uint64_t horizon) {
    for (std::uint64_t i = 0; i < horizon; ++i) {
        const std::int64_t di = extended_value(t, i);
        const std::int64_t j = static_cast<std::int64_t>(i) - t.stride + di;
        if (j < 0) continue;
        if (di + extended_value(t, static_cast<std::uint64_t>(j)) >= t.stride) return false;
    }
    return true;
}

p_position_stream::p_position_stream(coord a)
    : table_(base_difference_table(a)), a2_(table_.values.size()) {}

stream_pair p_position_stream::next() {
    const auto p = static_cast<coord>(used_.mex());
    const std::int64_t lift = table_.stride * static_cast<std::int64_t>(n_ / a2_);
    const coord q = p + lift + table_.values[n_ % a2_];
    used_.insert(static_cast<std::uint64_t>(p));
    // the pair sequence behind the stream pairs p with p+lift; the emitted q is
    // that partner from a nearby index, so p+lift is what the mex must consume
    used_.insert(static_cast<std::uint64_t>(p + lift));
    return {n_++, p, q};
}

std::vector<stream_pair> stream_p_positions(coord a, std::uint64_t limit) {
    p_position_stream s(a);
    std::vector<stream_pair> out;
    out.reserve(limit);
    for (std::uint64_t i = 0; i < limit; ++i) out.push_back(s.next());
    return out;
}

namespace {

std::uint64_t checkable_span(const std::vector<std::int64_t>& d, coord a) {
    if (a < 1) throw std::invalid_argument("cyclic check: a must be >= 1");
    const std::uint64_t a2 = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(a);
    if (d.size() < 2 * a2) throw std::invalid_argument("cyclic check: need at least 2*a*a values");
    return d.size() - a2;
}

} // namespace

std::optional<std::size_t> cyclic_shift_violation(const std::vector<std::int64_t>& d, coord a) {
    const std::uint64_t span = checkable_span(d, a);
    const std::uint64_t a2 = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(a);
    for (std::uint64_t i = 0; i < span; ++i)
        if (d[i + a2] != d[i] + a) return i;
    return std::nullopt;
}

bool is_cyclic_shift(const std::vector<std::int64_t>& d, coord a) {
    return !cyclic_shift_violation(d, a).has_value();
}

bool is_cyclic_congruence(const std::vector<std::int64_t>& d, coord a, std::int64_t modulus) {
    if (modulus < 1) throw std::invalid_argument("cyclic check: modulus must be >= 1");
    const std::uint64_t span = checkable_span(d, a);
    const std::uint64_t a2 = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(a);
    for (std::uint64_t i = 0; i < span; ++i)
        if ((d[i + a2] - d[i]) % modulus != 0) return false;
    return true;
}

} // namespace wythoff
