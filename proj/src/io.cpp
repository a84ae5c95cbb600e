#include "wythoff/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace wythoff {

void atomic_write(const std::string& path, const std::string& bytes) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
    }
}

std::string pairs_csv(const std::vector<stream_pair>& rows) {
    std::string out = "n,p,q,diff\n";
    for (const stream_pair& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.p);
        out += ',';
        out += std::to_string(r.q);
        out += ',';
        out += std::to_string(r.q - r.p);
        out += '\n';
    }
    return out;
}

std::string pairs_csv(const std::vector<canonical_pair>& rows) {
    std::string out = "n,p,q,diff\n";
    for (std::size_t n = 0; n < rows.size(); ++n) {
        out += std::to_string(n);
        out += ',';
        out += std::to_string(rows[n].x);
        out += ',';
        out += std::to_string(rows[n].y);
        out += ',';
        out += std::to_string(rows[n].y - rows[n].x);
        out += '\n';
    }
    return out;
}

std::string difftable_csv(const std::vector<std::int64_t>& values) {
    std::string out = "index,d\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += std::to_string(values[i]);
        out += '\n';
    }
    return out;
}

namespace {

void append_le64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

} // namespace

std::string pngrid_bytes(const pn_grid& grid) {
    std::string out = "PNGRID01";
    append_le64(out, grid.bound().size());
    for (coord b : grid.bound()) append_le64(out, static_cast<std::uint64_t>(b));
    const std::uint64_t vol = grid.volume();
    std::string payload((vol + 7) / 8, '\0');
    for (std::uint64_t i = 0; i < vol; ++i)
        if (grid.is_p_index(i)) payload[i >> 3] |= static_cast<char>(1u << (i & 7));
    out += payload;
    return out;
}

std::string render_pgm(const pn_grid& grid) {
    const auto a = equal_take_stride(grid.spec());
    if (!a) throw std::invalid_argument("render_pgm: equal-take two-pile grids only");
    const coord nx = grid.bound()[0];
    const coord ny = grid.bound()[1];
    std::string out = "P5\n" + std::to_string(nx) + " " + std::to_string(ny) + "\n255\n";
    out.reserve(out.size() + static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));

    // same sweep as the classifier; at each hot cell row/column/diagonal marks
    // count exactly the cold cells reachable in one move (at most one each)
    const auto ua = static_cast<std::uint64_t>(*a);
    bitvec row_cold(static_cast<std::uint64_t>(ny));
    bitvec col_cold(static_cast<std::uint64_t>(nx));
    bitvec diag_cold(static_cast<std::uint64_t>(nx + ny - 1) * ua);
    for (coord y = 0; y < ny; ++y) {
        for (coord x = 0; x < nx; ++x) {
            const std::uint64_t dk =
                static_cast<std::uint64_t>(y - x + nx - 1) * ua + static_cast<std::uint64_t>(x % *a);
            const int reach = static_cast<int>(row_cold.test(static_cast<std::uint64_t>(y))) +
                              static_cast<int>(col_cold.test(static_cast<std::uint64_t>(x))) +
                              static_cast<int>(diag_cold.test(dk));
            if (reach == 0) {
                out.push_back(static_cast<char>(0));
                row_cold.set(static_cast<std::uint64_t>(y));
                col_cold.set(static_cast<std::uint64_t>(x));
                diag_cold.set(dk);
            } else {
                out.push_back(static_cast<char>(reach >= 2 ? 128 : 255));
            }
        }
    }
    return out;
}

std::string render_svg(const pn_grid& grid) {
    if (grid.spec().dimension != 2) throw std::invalid_argument("render_svg: two-pile grids only");
    const coord nx = grid.bound()[0];
    const coord ny = grid.bound()[1];
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                      std::to_string(nx) + " " + std::to_string(ny) + "\">\n";
    out += "<rect width=\"" + std::to_string(nx) + "\" height=\"" + std::to_string(ny) +
           "\" fill=\"white\"/>\n";
    std::uint64_t idx = 0;
    for (coord y = 0; y < ny; ++y)
        for (coord x = 0; x < nx; ++x, ++idx)
            if (grid.is_p_index(idx))
                out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(ny - 1 - y) +
                       "\" width=\"1\" height=\"1\"/>\n";
    out += "</svg>\n";
    return out;
}

std::string voxel_csv(const pn_grid& grid) {
    if (grid.spec().dimension != 3) throw std::invalid_argument("voxel_csv: three-pile grids only");
    const coord nx = grid.bound()[0];
    const coord ny = grid.bound()[1];
    const coord nz = grid.bound()[2];
    std::string out = "x,y,z\n";
    std::uint64_t idx = 0;
    for (coord z = 0; z < nz; ++z)
        for (coord y = 0; y < ny; ++y)
            for (coord x = 0; x < nx; ++x, ++idx)
                if (grid.is_p_index(idx))
                    out += std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + "\n";
    return out;
}

} // namespace wythoff
