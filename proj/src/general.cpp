#include "wythoff/general.hpp"

#include <algorithm>
#include <stdexcept>

namespace wythoff {

bb_generator::bb_generator(coord b) : b_(b) {
    if (b < 1) throw std::invalid_argument("bb_generator: b must be >= 1");
}

canonical_pair bb_generator::next() {
    const auto an = static_cast<coord>(used_.mex());
    const std::uint64_t r = static_cast<std::uint64_t>(an % b_);
    coord bn = an; // bn == an is a legal (symmetric) pair
    for (;;) {
        const std::uint64_t key = static_cast<std::uint64_t>(bn - an) * static_cast<std::uint64_t>(b_) + r;
        if ((bn == an || !used_.contains(static_cast<std::uint64_t>(bn))) && !claimed_.test(key))
            break;
        ++bn;
    }
    used_.insert(static_cast<std::uint64_t>(an));
    used_.insert(static_cast<std::uint64_t>(bn));
    claimed_.set(static_cast<std::uint64_t>(bn - an) * static_cast<std::uint64_t>(b_) + r);
    return {an, bn};
}

std::vector<canonical_pair> generate_bb(coord b, std::size_t count) {
    bb_generator gen(b);
    std::vector<canonical_pair> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(gen.next());
    return out;
}

bb_oracle_report verify_against_oracle(coord b, coord bound) {
    if (bound < 1) throw std::invalid_argument("verify_against_oracle: bound must be >= 1");
    bb_oracle_report report{b, bound, {}, {}};

    const pn_grid grid = classify_box(wythoff_spec(b), {bound, bound});
    const std::vector<canonical_pair> expect = p_positions(grid);

    std::vector<canonical_pair> got;
    bb_generator gen(b);
    for (;;) {
        const canonical_pair c = gen.next();
        if (c.x >= bound) break; // x is the running mex, so it only grows
        if (c.y < bound) got.push_back(c);
    }
    std::sort(got.begin(), got.end());

    std::set_difference(expect.begin(), expect.end(), got.begin(), got.end(),
                        std::back_inserter(report.missing));
    std::set_difference(got.begin(), got.end(), expect.begin(), expect.end(),
                        std::back_inserter(report.extra));
    return report;
}

} // namespace wythoff
