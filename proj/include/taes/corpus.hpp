#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "taes/error.hpp"
#include "taes/ratio.hpp"
#include "taes/rng.hpp"
#include "taes/utf8.hpp"

namespace taes {

struct RawEssay {
  std::string essay_id;
  int topic_id = 0;
  std::string text;
  int raw_score = 0;
};

struct TopicSpec {
  int topic_id = 0;
  std::string prompt_text;
  int min_score = 0;
  int max_score = 0;
};

struct Corpus {
  std::map<int, TopicSpec> topics;  // keyed by topic_id, iteration order fixed
  std::vector<RawEssay> essays;     // file order

  const RawEssay& by_id(const std::string& essay_id) const {
    const auto it = index_.find(essay_id);
    if (it == index_.end()) fail("UnknownEssay", "no essay with id " + essay_id);
    return essays[it->second];
  }

  std::vector<const RawEssay*> essays_of_topic(int topic_id) const {
    std::vector<const RawEssay*> out;
    for (const auto& e : essays)
      if (e.topic_id == topic_id) out.push_back(&e);
    return out;
  }

  void rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < essays.size(); ++i) index_.emplace(essays[i].essay_id, i);
  }

 private:
  std::unordered_map<std::string, std::size_t> index_;
};

struct CorpusSplit {
  std::vector<std::string> train_ids;
  std::vector<std::string> test_ids;
  std::uint64_t seed = 0;
  Ratio train_fraction;
};

enum class EssayFormat { asap_tsv, jsonl };

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline bool parse_int(const std::string& s, int& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  std::size_t pos = 0;
  try {
    const long v = std::stol(t, &pos);
    if (pos != t.size()) return false;
    out = static_cast<int>(v);
    return true;
  } catch (...) {
    return false;
  }
}

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cells;
}

// getline that accepts LF and CRLF.
inline bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace detail

inline std::vector<RawEssay> parse_essays_tsv(std::istream& in) {
  std::string line;
  if (!detail::next_line(in, line)) fail("MalformedRow", "line 1: missing header");
  if (!valid_utf8(line)) fail("InvalidUtf8", "line 1: invalid UTF-8");
  const auto header = detail::split_tabs(line);
  std::unordered_map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col.emplace(detail::trim(header[i]), i);
  for (const char* name : {"essay_id", "essay_set", "essay", "domain1_score"})
    if (!col.count(name)) fail("MissingColumn", std::string("header lacks column ") + name);
  const std::size_t id_col = col["essay_id"], set_col = col["essay_set"];
  const std::size_t text_col = col["essay"], score_col = col["domain1_score"];
  const std::size_t max_col = std::max({id_col, set_col, text_col, score_col});

  std::vector<RawEssay> essays;
  std::unordered_set<std::string> seen;
  int line_no = 1;
  while (detail::next_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (!valid_utf8(line)) fail("InvalidUtf8", where + ": invalid UTF-8");
    const auto cells = detail::split_tabs(line);
    if (cells.size() <= max_col) fail("MalformedRow", where + ": too few columns");
    RawEssay e;
    e.essay_id = detail::trim(cells[id_col]);
    if (e.essay_id.empty()) fail("MalformedRow", where + ": empty essay_id");
    if (!seen.insert(e.essay_id).second)
      fail("DuplicateId", where + ": duplicate essay_id " + e.essay_id);
    if (!detail::parse_int(cells[set_col], e.topic_id))
      fail("MalformedRow", where + ": non-integer essay_set");
    e.text = cells[text_col];
    if (detail::trim(e.text).empty()) fail("MalformedRow", where + ": empty text");
    if (!detail::parse_int(cells[score_col], e.raw_score))
      fail("NonIntegerScore", where + ": non-integer domain1_score");
    essays.push_back(std::move(e));
  }
  return essays;
}

inline std::vector<RawEssay> parse_essays_jsonl(std::istream& in) {
  std::vector<RawEssay> essays;
  std::unordered_set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (detail::next_line(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (!valid_utf8(line)) fail("InvalidUtf8", where + ": invalid UTF-8");
    nlohmann::json row = nlohmann::json::parse(line, nullptr, false);
    if (row.is_discarded() || !row.is_object()) fail("MalformedRow", where + ": not a JSON object");
    for (const char* key : {"essay_id", "topic_id", "text", "raw_score"})
      if (!row.contains(key)) fail("MalformedRow", where + std::string(": missing key ") + key);
    RawEssay e;
    if (row["essay_id"].is_string())
      e.essay_id = row["essay_id"].get<std::string>();
    else if (row["essay_id"].is_number_integer())
      e.essay_id = std::to_string(row["essay_id"].get<long long>());
    else
      fail("MalformedRow", where + ": essay_id must be string or integer");
    if (e.essay_id.empty()) fail("MalformedRow", where + ": empty essay_id");
    if (!seen.insert(e.essay_id).second)
      fail("DuplicateId", where + ": duplicate essay_id " + e.essay_id);
    if (!row["topic_id"].is_number_integer()) fail("MalformedRow", where + ": topic_id not integer");
    e.topic_id = row["topic_id"].get<int>();
    if (!row["text"].is_string()) fail("MalformedRow", where + ": text not a string");
    e.text = row["text"].get<std::string>();
    if (detail::trim(e.text).empty()) fail("MalformedRow", where + ": empty text");
    if (!row["raw_score"].is_number_integer()) fail("NonIntegerScore", where + ": raw_score not integer");
    e.raw_score = row["raw_score"].get<int>();
    essays.push_back(std::move(e));
  }
  return essays;
}

inline std::vector<RawEssay> parse_essays(const std::string& path, EssayFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("FileNotFound", "cannot open " + path);
  return format == EssayFormat::asap_tsv ? parse_essays_tsv(in) : parse_essays_jsonl(in);
}

inline std::map<int, TopicSpec> parse_topics(std::istream& in) {
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) fail("MalformedRow", "topics file is not a JSON array");
  std::map<int, TopicSpec> topics;
  for (const auto& row : doc) {
    for (const char* key : {"topic_id", "prompt_text", "min_score", "max_score"})
      if (!row.contains(key)) fail("MalformedRow", std::string("topic entry missing key ") + key);
    TopicSpec t;
    t.topic_id = row["topic_id"].get<int>();
    t.prompt_text = row["prompt_text"].get<std::string>();
    t.min_score = row["min_score"].get<int>();
    t.max_score = row["max_score"].get<int>();
    if (t.topic_id <= 0) fail("MalformedRow", "topic_id must be positive");
    if (!valid_utf8(t.prompt_text)) fail("InvalidUtf8", "topic " + std::to_string(t.topic_id));
    if (detail::trim(t.prompt_text).empty())
      fail("MalformedRow", "topic " + std::to_string(t.topic_id) + ": empty prompt_text");
    if (t.min_score >= t.max_score)
      fail("DegenerateRange", "topic " + std::to_string(t.topic_id) + ": min_score >= max_score");
    if (!topics.emplace(t.topic_id, t).second)
      fail("DuplicateTopic", "duplicate topic_id " + std::to_string(t.topic_id));
  }
  return topics;
}

inline std::map<int, TopicSpec> parse_topics(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("FileNotFound", "cannot open " + path);
  return parse_topics(in);
}

// Joins essays with their topic specs, enforcing the corpus invariants:
// every essay resolves to a topic and its raw score lies in the topic range.
inline Corpus make_corpus(std::map<int, TopicSpec> topics, std::vector<RawEssay> essays) {
  Corpus c;
  c.topics = std::move(topics);
  c.essays = std::move(essays);
  for (const auto& e : c.essays) {
    const auto it = c.topics.find(e.topic_id);
    if (it == c.topics.end())
      fail("UnknownTopic", "essay " + e.essay_id + " references unknown topic " +
                               std::to_string(e.topic_id));
    const TopicSpec& t = it->second;
    if (e.raw_score < t.min_score || e.raw_score > t.max_score)
      fail("OutOfRange", "essay " + e.essay_id + " raw score " + std::to_string(e.raw_score) +
                             " outside [" + std::to_string(t.min_score) + "," +
                             std::to_string(t.max_score) + "]");
  }
  c.rebuild_index();
  return c;
}

inline void write_corpus_jsonl(const Corpus& corpus, std::ostream& out) {
  for (const auto& e : corpus.essays) {
    nlohmann::ordered_json row;
    row["essay_id"] = e.essay_id;
    row["topic_id"] = e.topic_id;
    row["text"] = e.text;
    row["raw_score"] = e.raw_score;
    out << row.dump() << '\n';
  }
}

inline void write_topics_json(const std::map<int, TopicSpec>& topics, std::ostream& out) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [id, t] : topics) {
    nlohmann::ordered_json row;
    row["topic_id"] = id;
    row["prompt_text"] = t.prompt_text;
    row["min_score"] = t.min_score;
    row["max_score"] = t.max_score;
    arr.push_back(std::move(row));
  }
  out << arr.dump(2) << '\n';
}

// Per-topic stratified split: floor(train_fraction * n) to train, remainder
// to test, membership by a seeded Fisher-Yates shuffle of each topic's ids.
inline CorpusSplit split_corpus(const Corpus& corpus, Ratio train_fraction, std::uint64_t seed) {
  if (!train_fraction.in_open_unit_interval())
    fail("BadRatio", "train fraction must lie strictly between 0 and 1");
  CorpusSplit split;
  split.seed = seed;
  split.train_fraction = train_fraction;
  for (const auto& [topic_id, spec] : corpus.topics) {
    (void)spec;
    std::vector<std::string> ids;
    for (const auto& e : corpus.essays)
      if (e.topic_id == topic_id) ids.push_back(e.essay_id);
    if (ids.size() < 2)
      fail("TopicTooSmall", "topic " + std::to_string(topic_id) + " has fewer than 2 essays");
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(topic_id)));
    fisher_yates(ids, rng);
    const std::size_t n_train =
        static_cast<std::size_t>(train_fraction.floor_times(static_cast<std::int64_t>(ids.size())));
    for (std::size_t i = 0; i < ids.size(); ++i)
      (i < n_train ? split.train_ids : split.test_ids).push_back(std::move(ids[i]));
  }
  return split;
}

inline std::string digest_split(const CorpusSplit& split) {
  std::string blob = "seed=" + std::to_string(split.seed) +
                     ";fraction=" + split.train_fraction.str() + ";train=";
  for (const auto& id : split.train_ids) blob += id + ",";
  blob += ";test=";
  for (const auto& id : split.test_ids) blob += id + ",";
  return digest_string(blob);
}

}  // namespace taes
