#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "taes/error.hpp"

namespace taes {

// FNV-1a 64-bit. Digests identify run inputs in manifests and let reports
// assert that both comparison arms saw identical splits; they are not
// cryptographic.
inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xCBF29CE484222325ULL) {
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

inline std::string digest_string(std::string_view bytes) { return hex64(fnv1a64(bytes)); }

inline std::string digest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("FileNotFound", "cannot open for digest: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return digest_string(buf.str());
}

}  // namespace taes
