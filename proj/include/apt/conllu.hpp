#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace apt {

// One word line of a CoNLL-U sentence. head is 0 for the root.
struct Token {
  int index = 0;  // 1-based position
  std::string form;
  std::string lemma;
  std::string upos;
  int head = 0;
  std::string deprel;
};

struct Sentence {
  std::vector<Token> tokens;
};

struct ReadStats {
  std::size_t sentences_ok = 0;
  std::size_t sentences_skipped = 0;
  std::size_t malformed_lines = 0;
  // "line N: reason" for each recorded problem, capped to keep memory bounded.
  std::vector<std::string> problems;
};

// True when head references form a single-rooted tree over the tokens.
bool is_valid_tree(const Sentence& s);

// Streaming CoNLL-U reader. Tab-separated word lines, blank-line sentence
// separators, '#' comments ignored, multiword/empty-node IDs ('-' or '.')
// skipped. Sentences with malformed lines or invalid trees are dropped and
// counted, never fatal; a bad underlying stream throws IoError.
class ConlluReader {
 public:
  explicit ConlluReader(std::istream& in);

  // Fills out with the next valid sentence; false at end of input.
  bool next(Sentence& out);

  const ReadStats& stats() const { return stats_; }

 private:
  void record(std::size_t line_no, const std::string& reason);

  std::istream& in_;
  std::size_t line_no_ = 0;
  ReadStats stats_;
};

// Reads the whole stream; stats are merged into *stats when given.
std::vector<Sentence> read_conllu(std::istream& in, ReadStats* stats = nullptr);

}  // namespace apt
