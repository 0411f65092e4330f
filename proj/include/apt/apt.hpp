#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <string_view>

#include "apt/path.hpp"

namespace apt {

// A lexeme key: surface lemma (or form) plus an optional coarse POS tag.
// Renders as "text" or "text/POS".
struct Lexeme {
  std::string text;
  std::string pos;

  std::string label() const;

  // Splits at the last '/' when present. Text containing '/' therefore needs
  // a POS suffix to round-trip; the tab-separated lexicon format has no
  // escaping.
  static Lexeme parse(std::string_view label);

  friend bool operator==(const Lexeme&, const Lexeme&) = default;
  friend auto operator<=>(const Lexeme& a, const Lexeme& b) {
    if (auto c = a.text <=> b.text; c != 0) return c;
    return a.pos <=> b.pos;
  }
};

// One typed co-occurrence dimension: a dependency path and the lexeme found
// at its end. The empty path denotes the anchor itself.
struct Feature {
  DepPath path;
  Lexeme lexeme;

  // "<path>:<lexeme>", e.g. "_amod._dobj:prefer" or ":white" at the anchor.
  std::string str() const;

  friend bool operator==(const Feature&, const Feature&) = default;
  friend auto operator<=>(const Feature& a, const Feature& b) {
    if (auto c = a.path <=> b.path; c != 0) return c;
    return a.lexeme <=> b.lexeme;
  }
};

// Shortest decimal string that parses back to exactly the same double.
// Integral values render without a decimal point.
std::string format_number(double value);

// Parses a number written by format_number. Throws ParseError on garbage.
double parse_number(std::string_view text);

inline constexpr std::size_t kUnlimitedOrder = std::numeric_limits<std::size_t>::max();

enum class MergeOp { Add, Min, Max, Mult };

MergeOp parse_merge_op(std::string_view name);
std::string_view to_string(MergeOp op);

// Entries dropped by an order-limited offset.
struct OffsetStats {
  std::size_t dropped_entries = 0;
  double dropped_mass = 0.0;
};

// Sparse typed count collection for one lexeme or offset view. Counts are
// strictly positive reals; zero entries are never stored.
class Apt {
 public:
  using Entries = std::map<Feature, double>;

  Apt() = default;

  // Accumulates count onto the feature; erases the entry if the sum drops
  // to zero or below.
  void add(const Feature& f, double count);
  void add(DepPath path, Lexeme lexeme, double count);

  double at(const Feature& f) const;
  bool contains(const Feature& f) const { return entries_.count(f) > 0; }

  const Entries& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Sum of all counts; 0 for the empty Apt.
  double total() const;

  friend bool operator==(const Apt&, const Apt&) = default;

 private:
  Entries entries_;
};

double total_count(const Apt& a);

// Shifts the anchor: every entry (q, l, c) maps to (concat_reduce(p, q), l, c).
// Colliding keys are summed. Entries whose shifted path exceeds max_order are
// dropped and accounted in *stats when given. offset(a, empty, unlimited) == a.
Apt offset(const Apt& a, const DepPath& p, std::size_t max_order = kUnlimitedOrder,
           OffsetStats* stats = nullptr);

// Pointwise combination over the union of keys with absent = 0; zero results
// are dropped, so Min and Mult keep only the key intersection.
Apt merge(const Apt& a, const Apt& b, MergeOp op);

// A lexeme viewed from a shifted anchor. Renders as "text^path"; a view with
// the empty offset is the plain lexeme and renders without the '^'.
struct OffsetView {
  Lexeme base;
  DepPath offset;

  std::string label() const;

  friend bool operator==(const OffsetView&, const OffsetView&) = default;
};

// Parses "lexeme" or "lexeme^path" (split at the first '^').
OffsetView parse_view_label(std::string_view label);

}  // namespace apt
