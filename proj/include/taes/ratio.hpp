#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "taes/error.hpp"

namespace taes {

// Exact rational. Used for train fractions and accuracies so identities like
// "overall accuracy equals the count-weighted mean of per-topic accuracies"
// hold exactly, not just within float tolerance.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Ratio of(std::int64_t num, std::int64_t den) {
    if (den == 0) fail("ZeroDenominator", "ratio denominator is zero");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return Ratio{num, den};
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }

  bool in_open_unit_interval() const { return num > 0 && num < den; }

  // floor(r * n) without overflow for the corpus sizes this library handles.
  std::int64_t floor_times(std::int64_t n) const { return num * n / den; }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Accepts "2/3", "0.5" or "1" style spellings.
inline Ratio parse_ratio(const std::string& text) {
  if (text.empty()) fail("BadRatio", "empty ratio");
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const std::int64_t num = std::stoll(text.substr(0, slash));
      const std::int64_t den = std::stoll(text.substr(slash + 1));
      return Ratio::of(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Ratio::of(std::stoll(text), 1);
    const std::string frac = text.substr(dot + 1);
    if (frac.size() > 15) fail("BadRatio", "too many fraction digits: " + text);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::string whole = text.substr(0, dot);
    const std::int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
    std::int64_t num = w * den + (text[0] == '-' ? -1 : 1) * (frac.empty() ? 0 : std::stoll(frac));
    return Ratio::of(num, den);
  } catch (const std::invalid_argument&) {
    fail("BadRatio", "cannot parse ratio: " + text);
  } catch (const std::out_of_range&) {
    fail("BadRatio", "ratio out of range: " + text);
  }
}

}  // namespace taes
