#pragma once

#include <string>

#include "afanet/image.hpp"

namespace afa {

// 8-bit grayscale or RGB. Palette/alpha/16-bit inputs are converted.
ImageU8 read_png_u8(const std::string& path);

// Single-channel 16-bit PNG as a raw map with max_raw = 65535.
// 8-bit grayscale inputs are accepted (max_raw = 255).
RawDepthMap read_png_raw(const std::string& path);

// channels must be 1 or 3.
void write_png_u8(const std::string& path, const ImageU8& img);

}  // namespace afa
