#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace apt {

// A single directed dependency edge. Forward follows the relation from head
// to dependent; Inverse walks it the other way (the overline in the usual
// typed-path notation, rendered here with a leading '_').
enum class Direction { Forward, Inverse };

struct Edge {
  std::string relation;
  Direction direction = Direction::Forward;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge& a, const Edge& b) {
    if (auto c = a.relation <=> b.relation; c != 0) return c;
    return a.direction <=> b.direction;
  }
};

// e with its direction flipped.
Edge inverse_edge(const Edge& e);

// True if b is exactly the inverse of a (same relation, opposite direction).
bool cancels(const Edge& a, const Edge& b);

// An ordered sequence of edges. The empty path is the identity; a path is
// canonical when no adjacent pair of edges cancels.
struct DepPath {
  std::vector<Edge> edges;

  DepPath() = default;
  explicit DepPath(std::vector<Edge> e) : edges(std::move(e)) {}

  std::size_t order() const { return edges.size(); }
  bool empty() const { return edges.empty(); }

  friend bool operator==(const DepPath&, const DepPath&) = default;
  friend auto operator<=>(const DepPath& a, const DepPath& b) {
    return a.edges <=> b.edges;
  }
};

// Parses the textual path syntax: dot-separated segments, each a relation
// label with an optional leading '_' marking the inverse direction. "" is
// the empty path. No reduction is applied. Throws ParseError on malformed
// segments (empty labels, embedded '.', ':', whitespace, or an ambiguous
// extra leading '_').
DepPath parse_path(std::string_view text);

// Renders a path in the same syntax parse_path accepts; empty path -> "".
std::string to_string(const DepPath& p);

// Validates a bare relation label (as used in phrase specs); throws
// ParseError when it violates the segment rules above.
void validate_relation(std::string_view relation);

// Reverses the edge order and flips every direction. Involution.
DepPath invert(const DepPath& p);

// Cancels adjacent inverse pairs until none remain. The result is the
// unique canonical form of p (confluence is exercised in the tests).
DepPath reduce(const DepPath& p);

// reduce(p . q): concatenation followed by full cancellation.
DepPath concat_reduce(const DepPath& p, const DepPath& q);

// True when no adjacent pair of edges cancels.
bool is_canonical(const DepPath& p);

}  // namespace apt
