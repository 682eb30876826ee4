#pragma once

namespace taes {

inline constexpr const char* kVersion = "0.1.0";

// Bumped whenever the on-disk model layout changes.
inline constexpr int kModelFormatVersion = 1;

}  // namespace taes
