#pragma once

#include "wythoff/cyclic.hpp"
#include "wythoff/grid.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wythoff {

// Writes via a temp file in the same directory, then renames into place, so a
// crashed run never leaves a half-written artifact.
void atomic_write(const std::string& path, const std::string& bytes);

// "n,p,q,diff" rows.
[[nodiscard]] std::string pairs_csv(const std::vector<stream_pair>& rows);
[[nodiscard]] std::string pairs_csv(const std::vector<canonical_pair>& rows);

// "index,d" rows.
[[nodiscard]] std::string difftable_csv(const std::vector<std::int64_t>& values);

// Raw bit dump: magic "PNGRID01", then dimension and per-axis bounds as
// little-endian 64-bit words (32 bytes of header for two axes), then one bit
// per cell in grid index order, LSB first within each byte, zero-padded.
[[nodiscard]] std::string pngrid_bytes(const pn_grid& grid);

// Binary PGM (P5) for an equal-take two-pile grid. Cold cells are 0, hot cells
// that can reach two or more cold cells in one move are 128, other hot cells 255.
// Image row r is the cells with y = r.
[[nodiscard]] std::string render_pgm(const pn_grid& grid);

// 1x1 rectangles for the cold cells, y axis pointing up.
[[nodiscard]] std::string render_svg(const pn_grid& grid);

// "x,y,z" rows for the cold cells of a three-pile grid, in grid index order.
[[nodiscard]] std::string voxel_csv(const pn_grid& grid);

} // namespace wythoff
