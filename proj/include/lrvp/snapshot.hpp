#pragma once

#include <string>

#include "lrvp/grid.hpp"

namespace lrvp {

// Binary layout: uint64 n_x, uint64 n_v, then n_x * n_v float64 values in
// x-major order; everything little-endian.
void write_snapshot(const std::string& path, const Matrix& f);
Matrix read_snapshot(const std::string& path);

} // namespace lrvp
