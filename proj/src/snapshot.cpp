#include "nselab/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace nselab {

static_assert(std::endian::native == std::endian::little,
              "NSEF io assumes a little-endian host");

void write_nsef(const std::string& path, const VecField3& u) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_nsef: cannot open " + path);
    out.write("NSEF", 4);
    const std::uint32_t n = static_cast<std::uint32_t>(u.grid().n);
    out.write(reinterpret_cast<const char*>(&n), sizeof(n));
    for (int c = 0; c < 3; ++c)
        out.write(reinterpret_cast<const char*>(u[c].values.data()),
                  static_cast<std::streamsize>(u[c].values.size() * sizeof(double)));
    if (!out) throw std::runtime_error("write_nsef: write failed for " + path);
}

VecField3 read_nsef(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_nsef: cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "NSEF", 4) != 0)
        throw std::runtime_error("read_nsef: bad magic in " + path);
    std::uint32_t n = 0;
    in.read(reinterpret_cast<char*>(&n), sizeof(n));
    if (!in) throw std::runtime_error("read_nsef: truncated header in " + path);
    const Grid3 grid(static_cast<int>(n));
    VecField3 u(grid);
    for (int c = 0; c < 3; ++c) {
        in.read(reinterpret_cast<char*>(u[c].values.data()),
                static_cast<std::streamsize>(u[c].values.size() * sizeof(double)));
        if (!in) throw std::runtime_error("read_nsef: truncated data in " + path);
    }
    return u;
}

}  // namespace nselab
