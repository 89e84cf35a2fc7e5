#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace afa {

// Raised when a face box contains no valid (nonzero) depth pixels.
struct EmptyFaceDepth : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a rate (APCER/NPCER/TPR) is requested for an empty class.
struct UndefinedRate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a gradient goes non-finite during training; names the parameter.
struct TrainingDiverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rounding used for every float -> 8-bit conversion: half-up, toward +inf.
inline int round_half_up(double x) { return static_cast<int>(std::floor(x + 0.5)); }

inline std::uint8_t clamp_u8(double x) {
  int v = round_half_up(x);
  if (v < 0) v = 0;
  if (v > 255) v = 255;
  return static_cast<std::uint8_t>(v);
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace afa
