#include <algorithm>
#include <set>

#include "xel/discovery.hpp"

namespace xel {

const char* symbol(Relation relation) {
  switch (relation) {
    case Relation::kCausal: return "->";
    case Relation::kReverseCausal: return "<-";
    case Relation::kParallel: return "||";
    case Relation::kUnrelated: return "#";
  }
  return "?";
}

Footprint::Footprint(std::vector<Label> alphabet, std::vector<Relation> matrix,
                     std::map<std::pair<Label, Label>, std::size_t> follows)
    : alphabet_(std::move(alphabet)),
      matrix_(std::move(matrix)),
      directly_follows_(std::move(follows)) {}

std::size_t Footprint::index_of(const Label& label) const {
  auto found = std::lower_bound(alphabet_.begin(), alphabet_.end(), label);
  if (found == alphabet_.end() || *found != label)
    throw NotFoundError("label", label);
  return static_cast<std::size_t>(found - alphabet_.begin());
}

Relation Footprint::relation(const Label& a, const Label& b) const {
  return relation(index_of(a), index_of(b));
}

Footprint footprint(const TraceLog& traces) {
  std::set<Label> labels;
  std::map<std::pair<Label, Label>, std::size_t> follows;
  for (const auto& trace : traces.traces) {
    labels.insert(trace.labels.begin(), trace.labels.end());
    for (std::size_t k = 1; k < trace.labels.size(); ++k)
      ++follows[{trace.labels[k - 1], trace.labels[k]}];
  }
  if (labels.empty())
    throw DiscoveryError("EMPTY_LOG", "trace log contains no events");

  std::vector<Label> alphabet(labels.begin(), labels.end());
  const std::size_t n = alphabet.size();
  std::vector<char> follows_matrix(n * n, 0);
  auto index = [&](const Label& label) {
    return static_cast<std::size_t>(
        std::lower_bound(alphabet.begin(), alphabet.end(), label) -
        alphabet.begin());
  };
  for (const auto& [pair, count] : follows)
    follows_matrix[index(pair.first) * n + index(pair.second)] = 1;

  std::vector<Relation> matrix(n * n, Relation::kUnrelated);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool ab = follows_matrix[a * n + b] != 0;
      bool ba = follows_matrix[b * n + a] != 0;
      matrix[a * n + b] = ab && ba   ? Relation::kParallel
                          : ab       ? Relation::kCausal
                          : ba       ? Relation::kReverseCausal
                                     : Relation::kUnrelated;
    }
  }
  return Footprint(std::move(alphabet), std::move(matrix), std::move(follows));
}

}  // namespace xel
