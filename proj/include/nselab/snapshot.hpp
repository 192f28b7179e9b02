#pragma once

#include <string>

#include "nselab/grid.hpp"

namespace nselab {

// Binary field snapshot: magic "NSEF", u32 little-endian n, then for each of
// the 3 components n^3 float64 little-endian values in row-major order.
void write_nsef(const std::string& path, const VecField3& u);
VecField3 read_nsef(const std::string& path);

}  // namespace nselab
