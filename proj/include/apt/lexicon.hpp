#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "apt/apt.hpp"
#include "apt/conllu.hpp"
#include "apt/path.hpp"

namespace apt {

enum class KeySource { Lemma, Form };

// Everything that determines the content of a built lexicon. The fingerprint
// of this struct is embedded in the lexicon file header so a model is never
// silently queried under a different keying scheme than it was built with.
struct BuildConfig {
  std::size_t max_order = 2;
  KeySource key_source = KeySource::Lemma;
  bool key_pos = true;
  bool lowercase = true;
  std::vector<std::string> stoplist = {"punct"};

  std::string fingerprint() const;

  friend bool operator==(const BuildConfig&, const BuildConfig&) = default;
};

// Lexeme key for a token under the configured scheme. Lemma "_" falls back
// to the surface form; internal whitespace becomes '_' so keys survive the
// space-separated record format.
Lexeme make_lexeme(const Token& t, const BuildConfig& cfg);

// One extracted typed co-occurrence (count is always 1).
struct Cooccurrence {
  Lexeme target;
  DepPath path;
  Lexeme context;
};

// Emits (w, empty, w) once per token, and (w, path, w') for every ordered
// token pair whose tree path has order <= max_order. Tree paths ascend via
// inverse deprel edges to the lowest common ancestor and then descend via
// forward edges; they are emitted unreduced. Edges whose relation is on the
// stoplist are never traversed.
std::vector<Cooccurrence> extract(const Sentence& s, const BuildConfig& cfg);

// The distributional model: one Apt per lexeme plus cached marginal totals.
// Immutable after construction; safe for concurrent readers.
class Lexicon {
 public:
  using Entries = std::map<Lexeme, Apt>;

  Lexicon() = default;
  Lexicon(Entries entries, std::string fingerprint);

  const Entries& entries() const { return entries_; }
  const Apt* find(const Lexeme& l) const;
  bool contains(const Lexeme& l) const { return find(l) != nullptr; }

  // c(w): total count mass of the lexeme's Apt; 0 when absent.
  double lexeme_total(const Lexeme& l) const;
  // c(f): total count of the feature string across all lexemes; 0 when absent.
  double feature_total(const std::string& feature) const;
  // N: grand total over the whole lexicon.
  double grand_total() const { return grand_total_; }

  std::size_t lexeme_count() const { return entries_.size(); }
  std::size_t feature_count() const { return feature_totals_.size(); }
  const std::string& fingerprint() const { return fingerprint_; }

  // Recomputes all marginals from the entries and compares.
  bool marginals_consistent() const;

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.entries_ == b.entries_ && a.fingerprint_ == b.fingerprint_;
  }

 private:
  Entries entries_;
  std::unordered_map<std::string, double> feature_totals_;
  double grand_total_ = 0.0;
  std::string fingerprint_;
};

// Aggregates extract() emissions over the corpus. With threads > 1 the
// corpus is split into contiguous shards whose partial counts are merged by
// addition; the result is identical to a sequential build.
Lexicon build(const std::vector<Sentence>& corpus, const BuildConfig& cfg,
              unsigned threads = 1);

// One record line "<label>\t<feature>:<count>( <feature>:<count>)*\n" with
// features sorted lexicographically by feature string.
std::string format_record(std::string_view label, const Apt& a);

// The uncompressed file body: "#apt-lexicon v1 <fingerprint>" followed by
// one record per lexeme, sorted by label.
std::string serialize(const Lexicon& lex);
Lexicon deserialize(std::string_view text);

// Gzip-compressed serialize/deserialize to a file.
void save(const Lexicon& lex, const std::string& path);
Lexicon load(const std::string& path);

}  // namespace apt
