#include "wythoff/grid.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace wythoff {

namespace {

// classification grids are capped at 2^33 cells (1 GiB of bits)
constexpr std::uint64_t max_volume = std::uint64_t{1} << 33;

std::uint64_t checked_volume(const pos_vec& bound) {
    if (bound.empty()) throw std::invalid_argument("pn_grid: empty bound");
    std::uint64_t vol = 1;
    for (coord b : bound) {
        if (b < 1) throw std::invalid_argument("pn_grid: bound entries must be >= 1");
        if (vol > max_volume / static_cast<std::uint64_t>(b))
            throw std::invalid_argument("pn_grid: box too large");
        vol *= static_cast<std::uint64_t>(b);
    }
    return vol;
}

// Steps an odometer through the box in index order (axis 0 fastest).
bool advance(pos_vec& p, const pos_vec& bound) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (++p[i] < bound[i]) return true;
        p[i] = 0;
    }
    return false;
}

} // namespace

pn_grid::pn_grid(game_spec spec, pos_vec bound)
    : spec_(std::move(spec)), bound_(std::move(bound)) {
    validate_spec(spec_);
    if (bound_.size() != spec_.dimension)
        throw std::invalid_argument("pn_grid: bound arity mismatch");
    volume_ = checked_volume(bound_);
    strides_.resize(bound_.size());
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < bound_.size(); ++i) {
        strides_[i] = s;
        s *= static_cast<std::uint64_t>(bound_[i]);
    }
    cells_ = bitvec(volume_);
}

std::uint64_t pn_grid::index_of(const pos_vec& p) const {
    if (p.size() != bound_.size()) throw std::invalid_argument("pn_grid: arity mismatch");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= bound_[i]) throw std::out_of_range("pn_grid: cell outside box");
        idx += static_cast<std::uint64_t>(p[i]) * strides_[i];
    }
    return idx;
}

std::optional<coord> equal_take_stride(const game_spec& g) {
    if (g.dimension != 2 || g.basis.size() != 3) return std::nullopt;
    bool unit_x = false, unit_y = false;
    coord a = 0;
    for (const pos_vec& v : g.basis) {
        if (v[0] == 1 && v[1] == 0 && !unit_x) unit_x = true;
        else if (v[0] == 0 && v[1] == 1 && !unit_y) unit_y = true;
        else if (v[0] == v[1] && v[0] >= 1 && a == 0) a = v[0];
        else return std::nullopt;
    }
    if (!unit_x || !unit_y || a == 0) return std::nullopt;
    return a;
}

namespace {

// Sweep for {(1,0),(0,1),(a,a)}: a cell is cold iff no earlier cold cell sits
// in its row, its column, or on its diagonal at the same x residue mod a
// (the (a,a) move preserves y-x and x mod a). Cells are visited row-major, so
// every position a move could reach is already labelled. O(1) work per cell,
// O((nx+ny)*a) bits of sweep state.
void classify_equal_take(pn_grid& out, coord a) {
    const coord nx = out.bound()[0];
    const coord ny = out.bound()[1];
    const auto ua = static_cast<std::uint64_t>(a);
    bitvec row_cold(static_cast<std::uint64_t>(ny));
    bitvec col_cold(static_cast<std::uint64_t>(nx));
    bitvec diag_cold(static_cast<std::uint64_t>(nx + ny - 1) * ua);
    std::uint64_t idx = 0;
    for (coord y = 0; y < ny; ++y) {
        for (coord x = 0; x < nx; ++x, ++idx) {
            const std::uint64_t dk =
                static_cast<std::uint64_t>(y - x + nx - 1) * ua + static_cast<std::uint64_t>(x % a);
            if (!row_cold.test(static_cast<std::uint64_t>(y)) &&
                !col_cold.test(static_cast<std::uint64_t>(x)) && !diag_cold.test(dk)) {
                out.mark_p(idx);
                row_cold.set(static_cast<std::uint64_t>(y));
                col_cold.set(static_cast<std::uint64_t>(x));
                diag_cold.set(dk);
            }
        }
    }
}

// True when some multiple of a basis vector leads from cell `idx` to a cold cell.
bool reaches_cold(const pn_grid& grid, const pos_vec& p, std::uint64_t idx,
                  const std::vector<std::int64_t>& vector_step, const game_spec& g) {
    for (std::size_t j = 0; j < g.basis.size(); ++j) {
        const pos_vec& v = g.basis[j];
        coord kmax = std::numeric_limits<coord>::max();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] > 0) kmax = std::min(kmax, p[i] / v[i]);
        std::uint64_t q = idx;
        for (coord k = 1; k <= kmax; ++k) {
            q -= static_cast<std::uint64_t>(vector_step[j]);
            if (grid.is_p_index(q)) return true;
        }
    }
    return false;
}

std::vector<std::int64_t> vector_steps(const pn_grid& grid) {
    const game_spec& g = grid.spec();
    std::vector<std::int64_t> steps(g.basis.size(), 0);
    std::uint64_t s = 1;
    std::vector<std::uint64_t> strides(g.dimension);
    for (std::size_t i = 0; i < g.dimension; ++i) {
        strides[i] = s;
        s *= static_cast<std::uint64_t>(grid.bound()[i]);
    }
    for (std::size_t j = 0; j < g.basis.size(); ++j)
        for (std::size_t i = 0; i < g.dimension; ++i)
            steps[j] += g.basis[j][i] * static_cast<std::int64_t>(strides[i]);
    return steps;
}

} // namespace

pn_grid classify_box_generic(const game_spec& g, const pos_vec& bound) {
    pn_grid out(g, bound);
    const std::vector<std::int64_t> steps = vector_steps(out);
    pos_vec p(g.dimension, 0);
    std::uint64_t idx = 0;
    do {
        if (!reaches_cold(out, p, idx, steps, g)) out.mark_p(idx);
        ++idx;
    } while (advance(p, bound));
    return out;
}

pn_grid classify_box(const game_spec& g, const pos_vec& bound) {
    if (bound.size() == 2) {
        if (const auto a = equal_take_stride(g)) {
            pn_grid out(g, bound);
            classify_equal_take(out, *a);
            return out;
        }
    }
    return classify_box_generic(g, bound);
}

bool rescan_check(const pn_grid& grid) {
    const std::vector<std::int64_t> steps = vector_steps(grid);
    pos_vec p(grid.spec().dimension, 0);
    std::uint64_t idx = 0;
    do {
        const bool cold = !reaches_cold(grid, p, idx, steps, grid.spec());
        if (cold != grid.is_p_index(idx)) return false;
        ++idx;
    } while (advance(p, grid.bound()));
    return true;
}

std::vector<canonical_pair> p_positions(const pn_grid& grid) {
    if (grid.spec().dimension != 2)
        throw std::invalid_argument("p_positions: two-pile grids only");
    const coord nx = grid.bound()[0];
    const coord ny = grid.bound()[1];
    std::vector<canonical_pair> out;
    std::uint64_t idx = 0;
    for (coord y = 0; y < ny; ++y)
        for (coord x = 0; x < nx; ++x, ++idx)
            if (grid.is_p_index(idx)) out.push_back({std::min(x, y), std::max(x, y)});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::int64_t> difference_sequence(const std::vector<canonical_pair>& list, coord a,
                                              std::size_t count) {
    if (a < 1) throw std::invalid_argument("difference_sequence: a must be >= 1");
    coord maxv = 0;
    for (const canonical_pair& c : list) {
        if (c.x < 0 || c.y < c.x) throw std::invalid_argument("difference_sequence: bad pair");
        maxv = std::max(maxv, c.y);
    }
    // each coordinate value belongs to exactly one pair; 0 marks "no pair"
    std::vector<std::uint32_t> owner(static_cast<std::size_t>(maxv) + 1, 0);
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (coord v : {list[i].x, list[i].y}) {
            auto& slot = owner[static_cast<std::size_t>(v)];
            if (slot != 0 && slot != i + 1)
                throw std::invalid_argument("difference_sequence: coordinate in two pairs");
            slot = static_cast<std::uint32_t>(i + 1);
        }
    }

    const std::uint64_t a2 = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(a);
    mex_allocator used;
    std::vector<std::int64_t> out;
    out.reserve(count);
    for (std::uint64_t n = 0; n < count; ++n) {
        const std::uint64_t m = used.mex();
        if (m > static_cast<std::uint64_t>(maxv) || owner[m] == 0)
            throw std::runtime_error("insufficient data");
        const canonical_pair c = list[owner[m] - 1];
        if (c.x == c.y) {
            out.push_back(0);
            used.insert(static_cast<std::uint64_t>(c.x));
        } else if (static_cast<coord>(m) == c.y) {
            // the mirror orientation of a pair whose smaller half was indexed earlier
            out.push_back(c.x - c.y);
            used.insert(static_cast<std::uint64_t>(c.y));
        } else {
            out.push_back(c.y - c.x);
            used.insert(static_cast<std::uint64_t>(c.x));
            // past the opening a^2 indices a pair owns a single index, so its
            // larger coordinate is consumed here instead of getting one later
            if (n / a2 != 0) used.insert(static_cast<std::uint64_t>(c.y));
        }
    }
    return out;
}

} // namespace wythoff
