#include "apt/apt.hpp"

#include <charconv>
#include <cmath>

#include "apt/errors.hpp"

namespace apt {

std::string Lexeme::label() const {
  if (pos.empty()) return text;
  return text + "/" + pos;
}

Lexeme Lexeme::parse(std::string_view label) {
  if (label.empty()) throw ParseError("empty lexeme label");
  std::size_t slash = label.rfind('/');
  if (slash == std::string_view::npos || slash == 0 || slash + 1 == label.size()) {
    return Lexeme{std::string(label), ""};
  }
  return Lexeme{std::string(label.substr(0, slash)), std::string(label.substr(slash + 1))};
}

std::string Feature::str() const {
  return to_string(path) + ":" + lexeme.label();
}

std::string format_number(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view text) {
  double value = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ParseError("malformed number '" + std::string(text) + "'");
  }
  return value;
}

MergeOp parse_merge_op(std::string_view name) {
  if (name == "add") return MergeOp::Add;
  if (name == "min") return MergeOp::Min;
  if (name == "max") return MergeOp::Max;
  if (name == "mult") return MergeOp::Mult;
  throw ParseError("unknown merge operator '" + std::string(name) + "'");
}

std::string_view to_string(MergeOp op) {
  switch (op) {
    case MergeOp::Add: return "add";
    case MergeOp::Min: return "min";
    case MergeOp::Max: return "max";
    case MergeOp::Mult: return "mult";
  }
  return "?";
}

void Apt::add(const Feature& f, double count) {
  if (count == 0.0) return;
  auto [it, inserted] = entries_.try_emplace(f, count);
  if (!inserted) {
    it->second += count;
    if (it->second <= 0.0) entries_.erase(it);
  } else if (count <= 0.0) {
    entries_.erase(it);
  }
}

void Apt::add(DepPath path, Lexeme lexeme, double count) {
  add(Feature{std::move(path), std::move(lexeme)}, count);
}

double Apt::at(const Feature& f) const {
  auto it = entries_.find(f);
  return it == entries_.end() ? 0.0 : it->second;
}

double Apt::total() const {
  double sum = 0.0;
  for (const auto& [f, c] : entries_) sum += c;
  return sum;
}

double total_count(const Apt& a) { return a.total(); }

Apt offset(const Apt& a, const DepPath& p, std::size_t max_order, OffsetStats* stats) {
  Apt out;
  for (const auto& [f, c] : a.entries()) {
    DepPath shifted = concat_reduce(p, f.path);
    if (shifted.order() > max_order) {
      if (stats) {
        ++stats->dropped_entries;
        stats->dropped_mass += c;
      }
      continue;
    }
    out.add(Feature{std::move(shifted), f.lexeme}, c);
  }
  return out;
}

namespace {

double apply_op(MergeOp op, double x, double y) {
  switch (op) {
    case MergeOp::Add: return x + y;
    case MergeOp::Min: return std::min(x, y);
    case MergeOp::Max: return std::max(x, y);
    case MergeOp::Mult: return x * y;
  }
  return 0.0;
}

}  // namespace

Apt merge(const Apt& a, const Apt& b, MergeOp op) {
  Apt out;
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  const auto ea = a.entries().end();
  const auto eb = b.entries().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      out.add(ia->first, apply_op(op, ia->second, 0.0));
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      out.add(ib->first, apply_op(op, 0.0, ib->second));
      ++ib;
    } else {
      out.add(ia->first, apply_op(op, ia->second, ib->second));
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::string OffsetView::label() const {
  if (offset.empty()) return base.label();
  return base.label() + "^" + to_string(offset);
}

OffsetView parse_view_label(std::string_view label) {
  std::size_t caret = label.find('^');
  if (caret == std::string_view::npos) {
    return OffsetView{Lexeme::parse(label), DepPath{}};
  }
  Lexeme base = Lexeme::parse(label.substr(0, caret));
  DepPath path = parse_path(label.substr(caret + 1));
  return OffsetView{std::move(base), std::move(path)};
}

}  // namespace apt
