#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "xel/discovery.hpp"

namespace xel {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t index) { return Mask{1} << index; }

struct SetPair {
  Mask inputs;
  Mask outputs;
};

/// Enumerates the maximal (A, B) pairs of the alpha construction. A and B
/// are cliques of the # relation (every member also # itself) and every
/// a in A is causally followed by every b in B.
class PairSearch {
 public:
  explicit PairSearch(const Footprint& fp) : n_(fp.alphabet().size()) {
    successors_.assign(n_, 0);
    unrelated_.assign(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        Relation r = fp.relation(a, b);
        if (r == Relation::kCausal) successors_[a] |= bit(b);
        if (r == Relation::kUnrelated) unrelated_[a] |= bit(b);
      }
      if (unrelated_[a] & bit(a)) self_unrelated_ |= bit(a);
    }
  }

  std::vector<SetPair> maximal_pairs() {
    for (std::size_t a = 0; a < n_; ++a) {
      if (!(self_unrelated_ & bit(a)) || successors_[a] == 0) continue;
      grow_inputs(bit(a), successors_[a], unrelated_[a] & self_unrelated_, a);
    }
    std::vector<SetPair> maximal;
    for (const auto& candidate : candidates_) {
      bool dominated = std::any_of(
          candidates_.begin(), candidates_.end(), [&](const SetPair& other) {
            bool contains = (candidate.inputs & ~other.inputs) == 0 &&
                            (candidate.outputs & ~other.outputs) == 0;
            bool equal = candidate.inputs == other.inputs &&
                         candidate.outputs == other.outputs;
            return contains && !equal;
          });
      if (!dominated) maximal.push_back(candidate);
    }
    return maximal;
  }

 private:
  // `inputs` is a #-clique whose members share the successors `common`
  // (non-empty). `extendable` holds labels # to every member of `inputs`.
  void grow_inputs(Mask inputs, Mask common, Mask extendable,
                   std::size_t last) {
    Mask eligible = common & self_unrelated_;
    if (eligible != 0) output_cliques(inputs, 0, eligible, 0);
    for (std::size_t next = last + 1; next < n_; ++next) {
      if (!(extendable & bit(next))) continue;
      Mask shared = common & successors_[next];
      if (shared == 0) continue;
      grow_inputs(inputs | bit(next), shared,
                  extendable & unrelated_[next] & self_unrelated_, next);
    }
  }

  // Bron-Kerbosch with pivoting over the # graph restricted to the
  // candidate outputs; each maximal clique becomes a candidate B.
  void output_cliques(Mask inputs, Mask clique, Mask pending, Mask excluded) {
    if (pending == 0 && excluded == 0) {
      candidates_.push_back({inputs, clique});
      return;
    }
    Mask pivot_pool = pending | excluded;
    std::size_t pivot = static_cast<std::size_t>(std::countr_zero(pivot_pool));
    Mask branch = pending & ~neighbours(pivot);
    while (branch != 0) {
      std::size_t v = static_cast<std::size_t>(std::countr_zero(branch));
      branch &= branch - 1;
      Mask adj = neighbours(v);
      output_cliques(inputs, clique | bit(v), pending & adj, excluded & adj);
      pending &= ~bit(v);
      excluded |= bit(v);
    }
  }

  Mask neighbours(std::size_t v) const {
    return unrelated_[v] & self_unrelated_ & ~bit(v);
  }

  std::size_t n_;
  std::vector<Mask> successors_;
  std::vector<Mask> unrelated_;
  Mask self_unrelated_ = 0;
  std::vector<SetPair> candidates_;
};

std::vector<Label> labels_of(Mask mask, const std::vector<Label>& alphabet) {
  std::vector<Label> out;
  for (std::size_t k = 0; k < alphabet.size(); ++k)
    if (mask & bit(k)) out.push_back(alphabet[k]);
  return out;
}

std::string fresh_place_id(std::string base,
                           const std::vector<Label>& transitions) {
  while (std::binary_search(transitions.begin(), transitions.end(), base))
    base += '\'';
  return base;
}

std::string join_set(const std::vector<Label>& labels) {
  std::string out = "{";
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k > 0) out += ',';
    out += labels[k];
  }
  return out + "}";
}

}  // namespace

std::string Place::display() const {
  switch (kind) {
    case PlaceKind::kSource: return "i";
    case PlaceKind::kSink: return "o";
    case PlaceKind::kInner: break;
  }
  return "p(" + join_set(inputs) + "," + join_set(outputs) + ")";
}

const Place* PetriNet::find_place(const std::string& id) const {
  for (const auto& place : places)
    if (place.id == id) return &place;
  return nullptr;
}

bool PetriNet::has_transition(const Label& label) const {
  return std::binary_search(transitions.begin(), transitions.end(), label);
}

std::vector<std::string> PetriNet::preset(const Label& transition) const {
  std::vector<std::string> out;
  for (const auto& arc : arcs)
    if (arc.to == transition && find_place(arc.from) != nullptr)
      out.push_back(arc.from);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> PetriNet::postset(const Label& transition) const {
  std::vector<std::string> out;
  for (const auto& arc : arcs)
    if (arc.from == transition && find_place(arc.to) != nullptr)
      out.push_back(arc.to);
  std::sort(out.begin(), out.end());
  return out;
}

PetriNet alpha_miner(const TraceLog& traces, const AlphaOptions& options) {
  return alpha_miner(footprint(traces), traces, options);
}

PetriNet alpha_miner(const Footprint& fp, const TraceLog& traces,
                     const AlphaOptions& options) {
  const auto& alphabet = fp.alphabet();
  const std::size_t limit = std::min<std::size_t>(options.max_alphabet, 64);
  if (alphabet.size() > limit)
    throw DiscoveryError("ALPHABET_TOO_LARGE",
                         "alphabet of " + std::to_string(alphabet.size()) +
                             " labels exceeds the limit of " +
                             std::to_string(limit));

  PetriNet net;
  net.transitions = alphabet;

  std::set<Label> first;
  std::set<Label> last;
  for (const auto& trace : traces.traces) {
    if (trace.labels.empty()) continue;
    first.insert(trace.labels.front());
    last.insert(trace.labels.back());
  }

  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    if (fp.relation(a, a) == Relation::kParallel)
      net.warnings.push_back("length-one loop on '" + alphabet[a] +
                             "' is not handled by classic alpha");
  }

  std::vector<std::pair<std::vector<Label>, std::vector<Label>>> inner;
  for (const auto& pair : PairSearch(fp).maximal_pairs())
    inner.emplace_back(labels_of(pair.inputs, alphabet),
                       labels_of(pair.outputs, alphabet));
  std::sort(inner.begin(), inner.end());

  net.initial_place = fresh_place_id("i", net.transitions);
  net.final_place = fresh_place_id("o", net.transitions);
  net.places.push_back({net.initial_place, PlaceKind::kSource, {}, {}});
  for (std::size_t k = 0; k < inner.size(); ++k) {
    net.places.push_back(
        {fresh_place_id("p" + std::to_string(k + 1), net.transitions),
         PlaceKind::kInner, inner[k].first, inner[k].second});
  }
  net.places.push_back({net.final_place, PlaceKind::kSink, {}, {}});

  for (const auto& t : first) net.arcs.push_back({net.initial_place, t});
  for (const auto& place : net.places) {
    if (place.kind != PlaceKind::kInner) continue;
    for (const auto& a : place.inputs) net.arcs.push_back({a, place.id});
    for (const auto& b : place.outputs) net.arcs.push_back({place.id, b});
  }
  for (const auto& t : last) net.arcs.push_back({t, net.final_place});
  return net;
}

}  // namespace xel
