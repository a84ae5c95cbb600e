#include "wythoff/ndim.hpp"

#include <stdexcept>

namespace wythoff {

namespace {

using wide = __int128;

// Fraction-free Gaussian elimination (Bareiss); exact for integer matrices.
wide det_bareiss(std::vector<std::vector<wide>> m) {
    const std::size_t n = m.size();
    wide sign = 1;
    wide prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<std::vector<wide>> to_matrix(const basis_matrix& b) {
    std::vector<std::vector<wide>> m(b.n, std::vector<wide>(b.n));
    for (std::size_t j = 0; j < b.n; ++j)
        for (std::size_t i = 0; i < b.n; ++i) m[i][j] = b.columns[j][i];
    return m;
}

} // namespace

basis_matrix::basis_matrix(std::size_t dim, std::vector<pos_vec> cols)
    : n(dim), columns(std::move(cols)) {
    if (n == 0) throw std::invalid_argument("basis_matrix: zero dimension");
    if (columns.size() != n) throw std::invalid_argument("basis_matrix: need n columns");
    for (const pos_vec& c : columns) {
        if (c.size() != n) throw std::invalid_argument("basis_matrix: column arity mismatch");
        bool positive = false;
        for (coord v : c) {
            if (v < 0) throw std::invalid_argument("basis_matrix: negative entry");
            positive |= v > 0;
        }
        if (!positive) throw std::invalid_argument("basis_matrix: zero column");
    }
}

std::int64_t determinant(const basis_matrix& b) {
    return static_cast<std::int64_t>(det_bareiss(to_matrix(b)));
}

std::optional<std::vector<coord>> decompose(const pos_vec& p, const basis_matrix& b) {
    if (p.size() != b.n) throw std::invalid_argument("decompose: arity mismatch");
    const wide det = det_bareiss(to_matrix(b));
    if (det == 0) throw std::invalid_argument("decompose: singular basis");

    // Cramer: coefficient j is det(basis with column j := p) / det
    std::vector<coord> out(b.n);
    for (std::size_t j = 0; j < b.n; ++j) {
        auto m = to_matrix(b);
        for (std::size_t i = 0; i < b.n; ++i) m[i][j] = p[i];
        const wide dj = det_bareiss(std::move(m));
        if (dj % det != 0) return std::nullopt;
        const wide c = dj / det;
        if (c < 0) return std::nullopt;
        out[j] = static_cast<coord>(c);
    }
    return out;
}

bool nim_cold(const std::vector<coord>& coefficients) {
    std::uint64_t x = 0;
    for (coord c : coefficients) {
        if (c < 0) throw std::invalid_argument("nim_cold: negative coefficient");
        x ^= static_cast<std::uint64_t>(c);
    }
    return x == 0;
}

coverage_report representable_coverage(const basis_matrix& b, const pos_vec& bound) {
    if (bound.size() != b.n) throw std::invalid_argument("representable_coverage: arity mismatch");
    for (coord c : bound)
        if (c < 1) throw std::invalid_argument("representable_coverage: bound entries must be >= 1");
    coverage_report rep;
    pos_vec p(b.n, 0);
    for (;;) {
        ++rep.total;
        if (decompose(p, b)) ++rep.representable;
        std::size_t i = 0;
        while (i < b.n && ++p[i] >= bound[i]) p[i++] = 0;
        if (i == b.n) break;
    }
    return rep;
}

pn_grid wythoff3_grid(coord bound) {
    return classify_box(wythoff3_spec(), {bound, bound, bound});
}

} // namespace wythoff
