#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "apt/apt.hpp"
#include "apt/lexicon.hpp"

namespace apt {

enum class Weighting { Ppmi, Raw };

Weighting parse_weighting(std::string_view name);
std::string_view to_string(Weighting w);

// Sparse feature-string -> weight vector with a cached Euclidean norm.
// Weights are kept sorted by feature string; zeros are never stored.
class WeightedVector {
 public:
  using Weights = std::vector<std::pair<std::string, double>>;

  WeightedVector() = default;
  WeightedVector(std::string owner, Weights weights);

  const std::string& owner() const { return owner_; }
  const Weights& weights() const { return weights_; }
  double norm() const { return norm_; }
  bool empty() const { return weights_.empty(); }
  std::size_t size() const { return weights_.size(); }
  double at(std::string_view feature) const;

 private:
  std::string owner_;
  Weights weights_;
  double norm_ = 0.0;
};

// Raw-count view of an Apt in the typed feature-string space; lossless.
WeightedVector vectorize(const Apt& a, std::string owner_label);

// Positive PMI against the lexicon's count marginals:
//   w(f) = max(0, ln(c(owner,f) * N / (c(owner) * c(f))))
// with c(owner) the vector's own raw mass. Features unknown to the marginals
// contribute nothing. Throws DataError when the model is empty.
WeightedVector ppmi_weight(const WeightedVector& raw, const Lexicon& m);

// Same weighting applied in place over an Apt's structured keys, for callers
// that merge representations rather than score them.
Apt ppmi_weight_apt(const Apt& a, const Lexicon& m);

// Entry-wise scaling; non-positive results are dropped.
Apt scale(const Apt& a, double factor);

// Cosine similarity clamped to [0, 1]; 0 when either vector is empty.
double cosine(const WeightedVector& u, const WeightedVector& v);

std::vector<DepPath> default_offset_paths();

// Defines the retrieval space: which plain lexemes qualify (frequency floor
// on raw mass) and which offset views of them are materialised alongside.
struct CandidateSpec {
  std::vector<DepPath> offset_paths = default_offset_paths();
  double min_count = 10.0;
  Weighting weighting = Weighting::Ppmi;
  std::size_t max_order = 2;
};

struct Neighbour {
  std::string label;
  double score;

  friend bool operator==(const Neighbour&, const Neighbour&) = default;
};

// Descending score, ties broken lexicographically by label, length <= k.
using NeighbourList = std::vector<Neighbour>;

// Offset view (or plain lexeme, when the offset is empty) materialised as a
// weighted vector: counts offset under spec.max_order, then weighted per
// spec.weighting. Throws DataError when the base lexeme is unknown.
WeightedVector materialize(const Lexicon& m, const OffsetView& view, const CandidateSpec& spec);

// Raw count representation of a candidate label under spec.max_order.
Apt materialize_counts(const Lexicon& m, const OffsetView& view, const CandidateSpec& spec);

// The enumerated candidate space over a lexicon, with lazily cached vectors.
// Read-only once constructed; the cache is internally synchronised.
class CandidateSpace {
 public:
  CandidateSpace(const Lexicon& m, CandidateSpec spec);

  const std::vector<std::string>& labels() const { return labels_; }
  const CandidateSpec& spec() const { return spec_; }
  const Lexicon& lexicon() const { return *m_; }

  const WeightedVector& vector_for(const std::string& label) const;
  Apt counts_for(const std::string& label) const;

 private:
  const Lexicon* m_;
  CandidateSpec spec_;
  std::vector<std::string> labels_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string, std::unique_ptr<WeightedVector>> cache_;
};

// Exact top-k by cosine over the candidate space, excluding the query's own
// label. Errors: unknown base lexeme -> DataError. k = 0 -> empty list.
NeighbourList neighbours(const CandidateSpace& space, const OffsetView& query, std::size_t k);
NeighbourList neighbours(const Lexicon& m, std::string_view query_label, std::size_t k,
                         const CandidateSpec& spec);

}  // namespace apt
