#include "apt/path.hpp"

#include <cctype>

#include "apt/errors.hpp"

namespace apt {

Edge inverse_edge(const Edge& e) {
  return Edge{e.relation, e.direction == Direction::Forward ? Direction::Inverse
                                                            : Direction::Forward};
}

bool cancels(const Edge& a, const Edge& b) {
  return a.relation == b.relation && a.direction != b.direction;
}

namespace {

void validate_label(std::string_view label, std::string_view segment) {
  if (label.empty()) {
    throw ParseError("empty relation label in path segment '" + std::string(segment) + "'");
  }
  if (label.front() == '_') {
    throw ParseError("ambiguous leading '_' in path segment '" + std::string(segment) + "'");
  }
  for (char c : label) {
    if (c == '.' || c == ':' || std::isspace(static_cast<unsigned char>(c))) {
      throw ParseError("illegal character '" + std::string(1, c) + "' in path segment '" +
                       std::string(segment) + "'");
    }
  }
}

Edge parse_segment(std::string_view segment) {
  Edge e;
  std::string_view label = segment;
  if (!label.empty() && label.front() == '_') {
    e.direction = Direction::Inverse;
    label.remove_prefix(1);
  }
  validate_label(label, segment);
  e.relation = std::string(label);
  return e;
}

}  // namespace

void validate_relation(std::string_view relation) {
  validate_label(relation, relation);
}

DepPath parse_path(std::string_view text) {
  DepPath p;
  if (text.empty()) return p;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = text.find('.', start);
    std::string_view segment =
        dot == std::string_view::npos ? text.substr(start) : text.substr(start, dot - start);
    if (segment.empty()) {
      throw ParseError("empty segment in path '" + std::string(text) + "'");
    }
    p.edges.push_back(parse_segment(segment));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return p;
}

std::string to_string(const DepPath& p) {
  std::string out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i > 0) out.push_back('.');
    if (p.edges[i].direction == Direction::Inverse) out.push_back('_');
    out += p.edges[i].relation;
  }
  return out;
}

DepPath invert(const DepPath& p) {
  DepPath out;
  out.edges.reserve(p.edges.size());
  for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it) {
    out.edges.push_back(inverse_edge(*it));
  }
  return out;
}

DepPath reduce(const DepPath& p) {
  std::vector<Edge> out;
  out.reserve(p.edges.size());
  for (const Edge& e : p.edges) {
    if (!out.empty() && cancels(out.back(), e)) {
      out.pop_back();
    } else {
      out.push_back(e);
    }
  }
  return DepPath{std::move(out)};
}

DepPath concat_reduce(const DepPath& p, const DepPath& q) {
  DepPath joined;
  joined.edges.reserve(p.edges.size() + q.edges.size());
  joined.edges.insert(joined.edges.end(), p.edges.begin(), p.edges.end());
  joined.edges.insert(joined.edges.end(), q.edges.begin(), q.edges.end());
  return reduce(joined);
}

bool is_canonical(const DepPath& p) {
  for (std::size_t i = 1; i < p.edges.size(); ++i) {
    if (cancels(p.edges[i - 1], p.edges[i])) return false;
  }
  return true;
}

}  // namespace apt
