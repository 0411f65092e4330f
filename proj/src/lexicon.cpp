#include "apt/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <thread>

#include "apt/errors.hpp"
#include "apt/gzio.hpp"

namespace apt {

namespace {

constexpr std::string_view kHeaderMagic = "#apt-lexicon";
constexpr std::string_view kFormatVersion = "v1";

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string to_hex(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace

std::string BuildConfig::fingerprint() const {
  std::string repr = "v1|order=";
  repr += std::to_string(max_order == kUnlimitedOrder ? 0 : max_order);
  repr += "|key=";
  repr += key_source == KeySource::Lemma ? "lemma" : "form";
  repr += "|pos=";
  repr += key_pos ? '1' : '0';
  repr += "|lower=";
  repr += lowercase ? '1' : '0';
  repr += "|stop=";
  std::vector<std::string> stops = stoplist;
  std::sort(stops.begin(), stops.end());
  for (std::size_t i = 0; i < stops.size(); ++i) {
    if (i) repr += ',';
    repr += stops[i];
  }
  return to_hex(fnv1a(repr));
}

Lexeme make_lexeme(const Token& t, const BuildConfig& cfg) {
  std::string text = cfg.key_source == KeySource::Lemma ? t.lemma : t.form;
  if (text.empty() || text == "_") text = t.form;
  for (char& c : text) {
    unsigned char u = static_cast<unsigned char>(c);
    if (cfg.lowercase) c = static_cast<char>(std::tolower(u));
    if (std::isspace(u)) c = '_';
  }
  std::string pos;
  if (cfg.key_pos && t.upos != "_") pos = t.upos;
  return Lexeme{std::move(text), std::move(pos)};
}

std::vector<Cooccurrence> extract(const Sentence& s, const BuildConfig& cfg) {
  const int n = static_cast<int>(s.tokens.size());
  std::vector<Lexeme> keys(n + 1);
  for (const Token& t : s.tokens) keys[t.index] = make_lexeme(t, cfg);

  auto stopped = [&cfg](const std::string& rel) {
    return std::find(cfg.stoplist.begin(), cfg.stoplist.end(), rel) != cfg.stoplist.end();
  };

  // Undirected tree adjacency with the edge as seen from each endpoint:
  // ascending from a token uses the inverse of its own deprel, descending
  // into a child uses the child's deprel forward.
  struct Arc {
    int to;
    Edge edge;
  };
  std::vector<std::vector<Arc>> adj(n + 1);
  for (const Token& t : s.tokens) {
    if (t.head == 0 || stopped(t.deprel)) continue;
    adj[t.index].push_back({t.head, Edge{t.deprel, Direction::Inverse}});
    adj[t.head].push_back({t.index, Edge{t.deprel, Direction::Forward}});
  }

  std::vector<Cooccurrence> out;
  std::vector<char> visited(n + 1, 0);
  std::vector<std::pair<int, DepPath>> frontier;
  for (const Token& t : s.tokens) {
    const int start = t.index;
    out.push_back({keys[start], DepPath{}, keys[start]});
    if (cfg.max_order == 0) continue;

    std::fill(visited.begin(), visited.end(), 0);
    visited[start] = 1;
    frontier.clear();
    frontier.emplace_back(start, DepPath{});
    // BFS over the tree: the unique simple path to every reachable token.
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      auto [node, path] = frontier[head];
      for (const Arc& arc : adj[node]) {
        if (visited[arc.to]) continue;
        visited[arc.to] = 1;
        DepPath next = path;
        next.edges.push_back(arc.edge);
        out.push_back({keys[start], next, keys[arc.to]});
        if (next.order() < cfg.max_order) frontier.emplace_back(arc.to, std::move(next));
      }
    }
  }
  return out;
}

const Apt* Lexicon::find(const Lexeme& l) const {
  auto it = entries_.find(l);
  return it == entries_.end() ? nullptr : &it->second;
}

double Lexicon::lexeme_total(const Lexeme& l) const {
  const Apt* a = find(l);
  return a ? a->total() : 0.0;
}

double Lexicon::feature_total(const std::string& feature) const {
  auto it = feature_totals_.find(feature);
  return it == feature_totals_.end() ? 0.0 : it->second;
}

Lexicon::Lexicon(Entries entries, std::string fingerprint)
    : entries_(std::move(entries)), fingerprint_(std::move(fingerprint)) {
  for (const auto& [lex, apt] : entries_) {
    for (const auto& [f, c] : apt.entries()) {
      feature_totals_[f.str()] += c;
      grand_total_ += c;
    }
  }
}

bool Lexicon::marginals_consistent() const {
  std::unordered_map<std::string, double> features;
  double grand = 0.0;
  for (const auto& [lex, apt] : entries_) {
    for (const auto& [f, c] : apt.entries()) {
      features[f.str()] += c;
      grand += c;
    }
  }
  return grand == grand_total_ && features == feature_totals_;
}

namespace {

Lexicon::Entries build_shard(const std::vector<Sentence>& corpus, std::size_t begin,
                             std::size_t end, const BuildConfig& cfg) {
  Lexicon::Entries entries;
  for (std::size_t i = begin; i < end; ++i) {
    for (Cooccurrence& co : extract(corpus[i], cfg)) {
      entries[co.target].add(std::move(co.path), std::move(co.context), 1.0);
    }
  }
  return entries;
}

}  // namespace

Lexicon build(const std::vector<Sentence>& corpus, const BuildConfig& cfg, unsigned threads) {
  const std::size_t n = corpus.size();
  std::size_t shards = std::max(1u, threads);
  shards = std::min(shards, std::max<std::size_t>(1, n));

  std::vector<Lexicon::Entries> partial(shards);
  if (shards == 1) {
    partial[0] = build_shard(corpus, 0, n, cfg);
  } else {
    std::vector<std::thread> workers;
    const std::size_t step = (n + shards - 1) / shards;
    for (std::size_t s = 0; s < shards; ++s) {
      const std::size_t begin = s * step;
      const std::size_t end = std::min(n, begin + step);
      workers.emplace_back([&corpus, &cfg, &partial, s, begin, end] {
        partial[s] = build_shard(corpus, begin, end, cfg);
      });
    }
    for (auto& w : workers) w.join();
  }

  // Count addition is exact on integral doubles, so the merge order cannot
  // change the result.
  Lexicon::Entries merged = std::move(partial[0]);
  for (std::size_t s = 1; s < partial.size(); ++s) {
    for (auto& [lex, apt] : partial[s]) {
      Apt& target = merged[lex];
      for (const auto& [f, c] : apt.entries()) target.add(f, c);
    }
  }
  return Lexicon(std::move(merged), cfg.fingerprint());
}

std::string format_record(std::string_view label, const Apt& a) {
  std::vector<std::pair<std::string, double>> items;
  items.reserve(a.size());
  for (const auto& [f, c] : a.entries()) items.emplace_back(f.str(), c);
  std::sort(items.begin(), items.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::string line(label);
  line += '\t';
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) line += ' ';
    line += items[i].first;
    line += ':';
    line += format_number(items[i].second);
  }
  line += '\n';
  return line;
}

std::string serialize(const Lexicon& lex) {
  std::string out;
  out += kHeaderMagic;
  out += ' ';
  out += kFormatVersion;
  out += ' ';
  out += lex.fingerprint();
  out += '\n';

  std::vector<std::pair<std::string, const Apt*>> records;
  records.reserve(lex.entries().size());
  for (const auto& [l, a] : lex.entries()) {
    if (!a.empty()) records.emplace_back(l.label(), &a);
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [label, a] : records) out += format_record(label, *a);
  return out;
}

namespace {

void parse_record(std::string_view line, std::size_t line_no, Lexicon::Entries& entries) {
  std::size_t tab = line.find('\t');
  if (tab == std::string_view::npos || tab == 0) {
    throw LoadError("malformed record at line " + std::to_string(line_no) + ": missing label");
  }
  std::string_view label = line.substr(0, tab);
  Lexeme lexeme;
  try {
    lexeme = Lexeme::parse(label);
  } catch (const ParseError& e) {
    throw LoadError("malformed record '" + std::string(label) + "': " + e.what());
  }
  auto [it, inserted] = entries.try_emplace(lexeme);
  if (!inserted) {
    throw LoadError("duplicate record '" + std::string(label) + "'");
  }
  Apt& apt = it->second;

  std::string_view rest = line.substr(tab + 1);
  if (rest.empty()) {
    throw LoadError("malformed record '" + std::string(label) + "': empty feature list");
  }
  std::size_t start = 0;
  while (start <= rest.size()) {
    std::size_t space = rest.find(' ', start);
    std::string_view item =
        space == std::string_view::npos ? rest.substr(start) : rest.substr(start, space - start);
    std::size_t last_colon = item.rfind(':');
    std::size_t first_colon = item.find(':');
    if (last_colon == std::string_view::npos || first_colon == last_colon) {
      throw LoadError("malformed record '" + std::string(label) + "': bad item '" +
                      std::string(item) + "'");
    }
    try {
      DepPath path = parse_path(item.substr(0, first_colon));
      Lexeme context = Lexeme::parse(item.substr(first_colon + 1, last_colon - first_colon - 1));
      double count = parse_number(item.substr(last_colon + 1));
      if (count <= 0.0) throw ParseError("non-positive count");
      apt.add(std::move(path), std::move(context), count);
    } catch (const ParseError& e) {
      throw LoadError("malformed record '" + std::string(label) + "': bad item '" +
                      std::string(item) + "': " + e.what());
    }
    if (space == std::string_view::npos) break;
    start = space + 1;
  }
}

}  // namespace

Lexicon deserialize(std::string_view text) {
  std::size_t eol = text.find('\n');
  std::string_view header = eol == std::string_view::npos ? text : text.substr(0, eol);
  std::string expected_prefix = std::string(kHeaderMagic) + " " + std::string(kFormatVersion) + " ";
  if (header.substr(0, kHeaderMagic.size()) != kHeaderMagic) {
    throw LoadError("not a lexicon file: bad header");
  }
  if (header.substr(0, expected_prefix.size()) != expected_prefix) {
    throw LoadError("unsupported lexicon version in header '" + std::string(header) + "'");
  }
  std::string fingerprint(header.substr(expected_prefix.size()));
  if (fingerprint.size() != 16 ||
      fingerprint.find_first_not_of("0123456789abcdef") != std::string::npos) {
    throw LoadError("malformed fingerprint in header '" + std::string(header) + "'");
  }

  Lexicon::Entries entries;
  std::size_t line_no = 1;
  std::size_t pos = eol == std::string_view::npos ? text.size() : eol + 1;
  while (pos < text.size()) {
    ++line_no;
    std::size_t next = text.find('\n', pos);
    std::string_view line =
        next == std::string_view::npos ? text.substr(pos) : text.substr(pos, next - pos);
    if (!line.empty()) parse_record(line, line_no, entries);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return Lexicon(std::move(entries), std::move(fingerprint));
}

void save(const Lexicon& lex, const std::string& path) {
  write_file(path, gzip_compress(serialize(lex)));
}

Lexicon load(const std::string& path) {
  return deserialize(gzip_decompress(read_file(path)));
}

}  // namespace apt
