#include "wythoff/conjectures.hpp"

#include "wythoff/classical.hpp"
#include "wythoff/cyclic.hpp"
#include "wythoff/general.hpp"
#include "wythoff/ndim.hpp"
#include "wythoff/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

namespace wythoff {

namespace {

std::string fmt(const char* format, ...) {
    char buf[128];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

} // namespace

grid_conjecture_result check_grid_conjecture(coord a) {
    if (a < 1) throw std::invalid_argument("check_grid_conjecture: a must be >= 1");
    const coord n = a * a;
    const pn_grid grid = classify_box(wythoff_spec(a), {n, n});
    grid_conjecture_result r;
    r.a = a;
    r.count = grid.p_count();
    r.expected = static_cast<std::uint64_t>(n);
    r.holds = r.count == r.expected;
    if (!r.holds) {
        for (coord y = 0; y < n; ++y)
            for (coord x = 0; x < n; ++x)
                if (grid.is_p({x, y})) r.witness_cells.push_back({x, y});
    }
    return r;
}

asymptote_result check_asymptote(coord a, std::uint64_t n_samples) {
    if (a < 1) throw std::invalid_argument("check_asymptote: a must be >= 1");
    if (n_samples < 10) throw std::invalid_argument("check_asymptote: need at least 10 samples");

    const std::uint64_t start = n_samples * 9 / 10; // trailing decile
    std::vector<long double> ratios;
    auto take = [&](std::uint64_t n, coord p, coord q) {
        if (n >= start && p > 0 && q > p)
            ratios.push_back(static_cast<long double>(q) / static_cast<long double>(p));
    };
    if (a == 1) {
        for (std::uint64_t k = 0; k < n_samples; ++k) {
            const golden_pair g = cold_pair(static_cast<coord>(k));
            take(k, g.x, g.y);
        }
    } else if (is_power_of_two(a)) {
        p_position_stream s(a);
        for (std::uint64_t n = 0; n < n_samples; ++n) {
            const stream_pair sp = s.next();
            take(n, sp.p, sp.q);
        }
    } else {
        bb_generator gen(a);
        for (std::uint64_t n = 0; n < n_samples; ++n) {
            const canonical_pair c = gen.next();
            take(n, c.x, c.y);
        }
    }
    if (ratios.empty()) throw std::runtime_error("check_asymptote: no upper-branch samples");
    std::sort(ratios.begin(), ratios.end());

    asymptote_result r;
    r.a = a;
    r.samples = n_samples;
    const long double da = static_cast<long double>(a);
    r.alpha = (1.0L + std::sqrt(4.0L * da * da + 1.0L)) / (2.0L * da);
    r.slope_min = ratios.front();
    r.slope_max = ratios.back();
    r.slope_median = ratios[ratios.size() / 2];
    r.gap = std::fabs(r.slope_median - r.alpha);
    r.within_tolerance = r.gap < asymptote_tolerance;
    return r;
}

namespace {

cyclic_scan_row scan_one_b(coord b, std::uint64_t window) {
    const std::uint64_t b2 = static_cast<std::uint64_t>(b) * static_cast<std::uint64_t>(b);
    cyclic_scan_row row;
    row.b = b;
    row.window = window;

    // coordinates grow like 2n + diff(n); retry covers the estimate being shy
    coord bound = static_cast<coord>(2 * window + window / static_cast<std::uint64_t>(b) + 7 * static_cast<std::uint64_t>(b) + 16);
    std::vector<std::int64_t> d;
    for (int attempt = 0;; ++attempt) {
        const pn_grid grid = classify_box(wythoff_spec(b), {bound, bound});
        try {
            d = difference_sequence(p_positions(grid), b, window);
            break;
        } catch (const std::runtime_error&) {
            if (attempt == 3) throw;
            bound *= 2;
        }
    }

    row.witness_index = cyclic_shift_violation(d, b);
    row.shift_cyclic = !row.witness_index.has_value();
    row.congruent_mod_b = is_cyclic_congruence(d, b, b);
    row.congruent_mod_b2 = is_cyclic_congruence(d, b, static_cast<std::int64_t>(b2));
    if (row.witness_index) {
        row.witness_got = d[*row.witness_index + b2];
        row.witness_want = d[*row.witness_index] + b;
    }
    return row;
}

} // namespace

std::vector<coord> cyclic_scan_result::shift_cyclic_set() const {
    std::vector<coord> out;
    for (const cyclic_scan_row& r : rows)
        if (r.shift_cyclic) out.push_back(r.b);
    return out;
}

cyclic_scan_result scan_cyclic_games(coord b_max, std::uint64_t window) {
    if (b_max < 1) throw std::invalid_argument("scan_cyclic_games: b_max must be >= 1");
    std::vector<std::uint64_t> windows(static_cast<std::size_t>(b_max));
    for (coord b = 1; b <= b_max; ++b) {
        const std::uint64_t b2 = static_cast<std::uint64_t>(b) * static_cast<std::uint64_t>(b);
        const std::uint64_t w = window == 0 ? 4 * b2 : window;
        if (w < 2 * b2)
            throw std::invalid_argument("scan_cyclic_games: window must cover 2*b*b indices");
        windows[static_cast<std::size_t>(b - 1)] = w;
    }

    cyclic_scan_result result;
    result.b_max = b_max;
    result.rows.resize(static_cast<std::size_t>(b_max));
    parallel_for(static_cast<std::size_t>(b_max), [&](std::size_t i) {
        result.rows[i] = scan_one_b(static_cast<coord>(i) + 1, windows[i]);
    });
    return result;
}

sierpinski_result sierpinski_analysis(coord bound) {
    if (bound < 2) throw std::invalid_argument("sierpinski_analysis: bound must be >= 2");
    const pn_grid grid = wythoff3_grid(bound);

    sierpinski_result r;
    r.bound = bound;
    r.p_count = grid.p_count();
    r.menger_reference = std::log(20.0) / std::log(3.0);
    r.tetrahedron_reference = 2.0;

    std::vector<std::array<coord, 3>> cells;
    std::uint64_t idx = 0;
    for (coord z = 0; z < bound; ++z)
        for (coord y = 0; y < bound; ++y)
            for (coord x = 0; x < bound; ++x, ++idx)
                if (grid.is_p_index(idx)) cells.push_back({x, y, z});

    for (int j = 0; (coord{1} << j) < 2 * bound; ++j) {
        const coord side = coord{1} << j;
        std::unordered_set<std::uint64_t> occupied;
        for (const auto& c : cells)
            occupied.insert((static_cast<std::uint64_t>(c[0] / side) << 42) |
                            (static_cast<std::uint64_t>(c[1] / side) << 21) |
                            static_cast<std::uint64_t>(c[2] / side));
        r.box_counts.push_back(occupied.size());
        if (side >= bound) break; // one cube covers the whole box
    }
    for (std::size_t j = 0; j + 1 < r.box_counts.size(); ++j)
        r.pairwise_dims.push_back(std::log2(static_cast<double>(r.box_counts[j]) /
                                            static_cast<double>(r.box_counts[j + 1])));

    // least squares of log2(boxes) against scale exponent j
    const std::size_t n = r.box_counts.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const double x = static_cast<double>(j);
        const double y = std::log2(static_cast<double>(r.box_counts[j]));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double dn = static_cast<double>(n);
    r.lsq_dimension = -(dn * sxy - sx * sy) / (dn * sxx - sx * sx);

    for (const auto& c : cells) {
        if (2 * c[0] < bound && 2 * c[1] < bound && 2 * c[2] < bound) {
            ++r.doubling_eligible;
            if (grid.is_p({2 * c[0], 2 * c[1], 2 * c[2]})) ++r.doubling_matched;
        }
    }
    r.doubling_score = r.doubling_eligible == 0
                           ? 0.0
                           : static_cast<double>(r.doubling_matched) /
                                 static_cast<double>(r.doubling_eligible);
    return r;
}

std::string report_text(const grid_conjecture_result& r) {
    std::string out = "grid a=" + std::to_string(r.a) + " count=" + std::to_string(r.count) +
                      " expected=" + std::to_string(r.expected) +
                      " verdict=" + (r.holds ? "holds" : "fails") + "\n";
    if (!r.holds) {
        out += "grid-witness a=" + std::to_string(r.a) + " cells=";
        const std::size_t shown = std::min<std::size_t>(r.witness_cells.size(), 128);
        for (std::size_t i = 0; i < shown; ++i) {
            if (i) out += ';';
            out += "(" + std::to_string(r.witness_cells[i].x) + "," +
                   std::to_string(r.witness_cells[i].y) + ")";
        }
        if (shown < r.witness_cells.size()) out += ";...";
        out += "\n";
    }
    return out;
}

std::string report_text(const asymptote_result& r) {
    std::string out = "asymptote a=" + std::to_string(r.a) + " samples=" + std::to_string(r.samples);
    out += fmt(" alpha=%.15Lg", r.alpha);
    out += fmt(" slope_min=%.15Lg", r.slope_min);
    out += fmt(" slope_median=%.15Lg", r.slope_median);
    out += fmt(" slope_max=%.15Lg", r.slope_max);
    out += fmt(" gap=%.6Le", r.gap);
    out += std::string(" verdict=") + (r.within_tolerance ? "within-tolerance" : "gap-recorded");
    out += "\n";
    return out;
}

std::string report_text(const cyclic_scan_result& r) {
    std::string out;
    for (const cyclic_scan_row& row : r.rows) {
        out += "cyclic-scan b=" + std::to_string(row.b) + " window=" + std::to_string(row.window);
        out += std::string(" shift=") + (row.shift_cyclic ? "yes" : "no");
        out += std::string(" mod_b=") + (row.congruent_mod_b ? "yes" : "no");
        out += std::string(" mod_b2=") + (row.congruent_mod_b2 ? "yes" : "no");
        if (row.witness_index) {
            out += " witness_index=" + std::to_string(*row.witness_index);
            out += " witness_got=" + std::to_string(row.witness_got);
            out += " witness_want=" + std::to_string(row.witness_want);
        }
        out += "\n";
    }
    out += "cyclic-scan-summary b_max=" + std::to_string(r.b_max) + " shift_cyclic=";
    const std::vector<coord> set = r.shift_cyclic_set();
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(set[i]);
    }
    out += "\n";
    return out;
}

std::string report_text(const sierpinski_result& r) {
    std::string out = "sierpinski bound=" + std::to_string(r.bound) +
                      " p_count=" + std::to_string(r.p_count) + "\n";
    for (std::size_t j = 0; j < r.box_counts.size(); ++j)
        out += "sierpinski-scale j=" + std::to_string(j) +
               " side=" + std::to_string(std::uint64_t{1} << j) +
               " boxes=" + std::to_string(r.box_counts[j]) + "\n";
    for (std::size_t j = 0; j < r.pairwise_dims.size(); ++j)
        out += "sierpinski-slope from=" + std::to_string(j) + " to=" + std::to_string(j + 1) +
               fmt(" dim=%.6f", r.pairwise_dims[j]) + "\n";
    out += fmt("sierpinski-dimension lsq=%.6f", r.lsq_dimension) +
           fmt(" menger=%.6f", r.menger_reference) +
           fmt(" tetrahedron=%.6f", r.tetrahedron_reference) + "\n";
    out += "sierpinski-doubling matched=" + std::to_string(r.doubling_matched) +
           " eligible=" + std::to_string(r.doubling_eligible) +
           fmt(" score=%.6f", r.doubling_score) + "\n";
    return out;
}

} // namespace wythoff
