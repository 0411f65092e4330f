#include "apt/conllu.hpp"

#include <charconv>
#include <istream>
#include <string_view>

#include "apt/errors.hpp"

namespace apt {

namespace {

constexpr std::size_t kMaxRecordedProblems = 64;

bool parse_int(std::string_view field, int& out) {
  if (field.empty()) return false;
  auto res = std::from_chars(field.data(), field.data() + field.size(), out);
  return res.ec == std::errc{} && res.ptr == field.data() + field.size();
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

}  // namespace

bool is_valid_tree(const Sentence& s) {
  const int n = static_cast<int>(s.tokens.size());
  if (n == 0) return false;
  int root = 0;
  std::vector<std::vector<int>> children(n + 1);
  for (int i = 0; i < n; ++i) {
    const Token& t = s.tokens[i];
    if (t.index != i + 1) return false;  // word IDs must be 1..n in order
    if (t.head < 0 || t.head > n || t.head == t.index) return false;
    if (t.head == 0) {
      if (root != 0) return false;  // more than one root
      root = t.index;
    } else {
      children[t.head].push_back(t.index);
    }
  }
  if (root == 0) return false;
  // BFS from the root: every token reachable <=> single tree, no cycles.
  std::vector<int> queue{root};
  std::size_t seen = 0;
  while (seen < queue.size()) {
    int node = queue[seen++];
    for (int c : children[node]) queue.push_back(c);
  }
  return seen == static_cast<std::size_t>(n);
}

ConlluReader::ConlluReader(std::istream& in) : in_(in) {}

void ConlluReader::record(std::size_t line_no, const std::string& reason) {
  ++stats_.malformed_lines;
  if (stats_.problems.size() < kMaxRecordedProblems) {
    stats_.problems.push_back("line " + std::to_string(line_no) + ": " + reason);
  }
}

bool ConlluReader::next(Sentence& out) {
  std::string line;
  while (true) {
    Sentence sentence;
    bool bad = false;
    bool saw_content = false;
    while (true) {
      if (!std::getline(in_, line)) {
        if (in_.bad()) throw IoError("failed reading input stream");
        break;
      }
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) {
        if (!saw_content && sentence.tokens.empty()) continue;  // stray blanks
        break;
      }
      if (line[0] == '#') continue;
      saw_content = true;
      if (bad) continue;  // keep consuming the rest of a doomed sentence

      auto fields = split_tabs(line);
      if (fields.size() < 8) {
        record(line_no_, "expected at least 8 tab-separated columns, got " +
                             std::to_string(fields.size()));
        bad = true;
        continue;
      }
      std::string_view id = fields[0];
      if (id.find('-') != std::string_view::npos || id.find('.') != std::string_view::npos) {
        continue;  // multiword token range or empty node
      }
      Token t;
      if (!parse_int(id, t.index)) {
        record(line_no_, "non-integer ID '" + std::string(id) + "'");
        bad = true;
        continue;
      }
      if (!parse_int(fields[6], t.head)) {
        record(line_no_, "non-integer HEAD '" + std::string(fields[6]) + "'");
        bad = true;
        continue;
      }
      t.form = std::string(fields[1]);
      t.lemma = std::string(fields[2]);
      t.upos = std::string(fields[3]);
      t.deprel = std::string(fields[7]);
      sentence.tokens.push_back(std::move(t));
    }

    if (!saw_content) return false;  // end of input
    if (!bad && sentence.tokens.empty()) continue;  // comments/skipped lines only
    if (bad || !is_valid_tree(sentence)) {
      ++stats_.sentences_skipped;
      continue;
    }
    ++stats_.sentences_ok;
    out = std::move(sentence);
    return true;
  }
}

std::vector<Sentence> read_conllu(std::istream& in, ReadStats* stats) {
  ConlluReader reader(in);
  std::vector<Sentence> sentences;
  Sentence s;
  while (reader.next(s)) sentences.push_back(std::move(s));
  if (stats) {
    stats->sentences_ok += reader.stats().sentences_ok;
    stats->sentences_skipped += reader.stats().sentences_skipped;
    stats->malformed_lines += reader.stats().malformed_lines;
    for (const auto& p : reader.stats().problems) stats->problems.push_back(p);
  }
  return sentences;
}

}  // namespace apt
