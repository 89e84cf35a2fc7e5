#pragma once

#include <cstdint>
#include <fstream>
#include <string>

#include "afanet/image.hpp"

namespace afa {

// "FASD" tile: little-endian u32 header (height, width, max_raw) followed by
// row-major u32 values. Carries depth/IR ranges wider than 16-bit PNG.
namespace detail {
inline std::uint32_t read_u32le(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

inline void write_u32le(std::ostream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  out.write(reinterpret_cast<const char*>(b), 4);
}
}  // namespace detail

inline RawDepthMap read_fasd(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": cannot open");
  char magic[4];
  in.read(magic, 4);
  if (!in || std::string(magic, 4) != "FASD") throw IoError(path + ": bad FASD magic");
  std::uint32_t h = detail::read_u32le(in);
  std::uint32_t w = detail::read_u32le(in);
  std::uint32_t max_raw = detail::read_u32le(in);
  if (h == 0 || w == 0) throw IoError(path + ": empty FASD tile");
  RawDepthMap map;
  map.max_raw = max_raw;
  map.values.resize(h, w);
  for (std::uint32_t y = 0; y < h; ++y)
    for (std::uint32_t x = 0; x < w; ++x) map.values(y, x) = detail::read_u32le(in);
  if (!in) throw IoError(path + ": truncated FASD tile");
  return map;
}

inline void write_fasd(const std::string& path, const RawDepthMap& map) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path + ": cannot open for writing");
  out.write("FASD", 4);
  detail::write_u32le(out, static_cast<std::uint32_t>(map.height()));
  detail::write_u32le(out, static_cast<std::uint32_t>(map.width()));
  detail::write_u32le(out, map.max_raw);
  for (int y = 0; y < map.height(); ++y)
    for (int x = 0; x < map.width(); ++x) detail::write_u32le(out, map.values(y, x));
  if (!out) throw IoError(path + ": write failed");
}

}  // namespace afa
