#pragma once

#include <string>

#include "taes/corpus.hpp"
#include "taes/error.hpp"

namespace taes {

// Scores live on a common integer 0..10 scale; classification labels are the
// eleven buckets 1..11 with bucket = score + 1.

struct NormalizedScore {
  int value = 0;  // 0..10
};

struct Bucket {
  int index = 1;  // 1..11

  friend bool operator==(const Bucket& a, const Bucket& b) { return a.index == b.index; }
  friend bool operator!=(const Bucket& a, const Bucket& b) { return a.index != b.index; }
};

inline constexpr int kNumBuckets = 11;

// Affine map of [min,max] onto 0..10 with round-half-up, computed in exact
// integer arithmetic: round_half_up(10*(raw-min)/(max-min)).
inline NormalizedScore normalize_score(int raw, const TopicSpec& spec) {
  if (spec.min_score >= spec.max_score)
    fail("DegenerateRange", "topic " + std::to_string(spec.topic_id) + " has degenerate range");
  if (raw < spec.min_score || raw > spec.max_score)
    fail("OutOfRange", "raw score " + std::to_string(raw) + " outside [" +
                           std::to_string(spec.min_score) + "," + std::to_string(spec.max_score) +
                           "] for topic " + std::to_string(spec.topic_id));
  const long long num = 10LL * (raw - spec.min_score);
  const long long den = spec.max_score - spec.min_score;
  return NormalizedScore{static_cast<int>((2 * num + den) / (2 * den))};
}

inline Bucket bucket_of_score(NormalizedScore score) {
  if (score.value < 0 || score.value > 10)
    fail("OutOfRange", "normalized score " + std::to_string(score.value) + " outside 0..10");
  return Bucket{score.value + 1};
}

inline NormalizedScore score_of_bucket(Bucket bucket) {
  if (bucket.index < 1 || bucket.index > kNumBuckets)
    fail("OutOfRange", "bucket " + std::to_string(bucket.index) + " outside 1..11");
  return NormalizedScore{bucket.index - 1};
}

}  // namespace taes
