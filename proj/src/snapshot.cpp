#include "lrvp/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "lrvp/errors.hpp"

namespace lrvp {

namespace {

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

uint64_t to_little(uint64_t x) {
  if constexpr (std::endian::native == std::endian::big) {
    uint64_t y = 0;
    for (int i = 0; i < 8; ++i) y |= ((x >> (8 * i)) & 0xffu) << (8 * (7 - i));
    return y;
  }
  return x;
}

void put(std::ofstream& os, uint64_t x) {
  x = to_little(x);
  os.write(reinterpret_cast<const char*>(&x), sizeof x);
}

uint64_t get(std::ifstream& is) {
  uint64_t x = 0;
  if (!is.read(reinterpret_cast<char*>(&x), sizeof x)) throw invalid_input("snapshot: truncated file");
  return to_little(x);
}

} // namespace

void write_snapshot(const std::string& path, const Matrix& f) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open snapshot file " + path);
  put(os, static_cast<uint64_t>(f.rows()));
  put(os, static_cast<uint64_t>(f.cols()));
  for (Index i = 0; i < f.rows(); ++i)
    for (Index j = 0; j < f.cols(); ++j) put(os, std::bit_cast<uint64_t>(f(i, j)));
  if (!os) throw std::runtime_error("failed writing snapshot " + path);
}

Matrix read_snapshot(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open snapshot file " + path);
  const uint64_t nx = get(is);
  const uint64_t nv = get(is);
  // Check the header against the file size before allocating.
  const auto body = static_cast<uint64_t>(std::filesystem::file_size(path)) - 16;
  if (nv != 0 && nx > body / 8 / nv) throw invalid_input("snapshot: header does not match file size");
  if (nx * nv * 8 != body) throw invalid_input("snapshot: header does not match file size");
  Matrix f(static_cast<Index>(nx), static_cast<Index>(nv));
  for (Index i = 0; i < f.rows(); ++i)
    for (Index j = 0; j < f.cols(); ++j) f(i, j) = std::bit_cast<double>(get(is));
  return f;
}

} // namespace lrvp
