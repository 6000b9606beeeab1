#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xel/core.hpp"
#include "xel/error.hpp"
#include "xel/model.hpp"

namespace xel {

/// EMPTY_LOG, ALPHABET_TOO_LARGE.
class DiscoveryError : public Error {
 public:
  using Error::Error;
};

using Label = std::string;

struct LabelInfo {
  std::string display_name;
  std::string source_id;  ///< ActivityDef or StepDef id the label stands for
  bool operator==(const LabelInfo&) const = default;
};

struct Trace {
  std::string case_id;
  std::vector<Label> labels;
  bool operator==(const Trace&) const = default;
};

/// Per-case label sequences. Labels are meta-level ids, never instance ids.
struct TraceLog {
  Granularity granularity = Granularity::kActivity;
  std::vector<Trace> traces;
  std::map<Label, LabelInfo> label_index;

  /// Builds an anonymous trace log (cases `case-1`, `case-2`, ...) whose
  /// labels display as themselves.
  static TraceLog from_sequences(
      const std::vector<std::vector<Label>>& sequences);

  const Trace& trace_of(const std::string& case_id) const;  ///< NotFoundError
  std::string display_name(const Label& label) const;
};

TraceLog build_traces(const XelLog& log, Granularity granularity);

enum class Relation { kCausal, kReverseCausal, kParallel, kUnrelated };

const char* symbol(Relation relation);  ///< "->", "<-", "||", "#"

class Footprint {
 public:
  Footprint(std::vector<Label> alphabet, std::vector<Relation> matrix,
            std::map<std::pair<Label, Label>, std::size_t> directly_follows);

  /// Sorted, duplicate-free.
  const std::vector<Label>& alphabet() const { return alphabet_; }
  /// Directly-follows pairs with their occurrence counts.
  const std::map<std::pair<Label, Label>, std::size_t>& directly_follows()
      const {
    return directly_follows_;
  }

  Relation relation(std::size_t a, std::size_t b) const {
    return matrix_[a * alphabet_.size() + b];
  }
  /// Throws NotFoundError for labels outside the alphabet.
  Relation relation(const Label& a, const Label& b) const;
  std::size_t index_of(const Label& label) const;

  bool operator==(const Footprint&) const = default;

 private:
  std::vector<Label> alphabet_;
  std::vector<Relation> matrix_;  // row-major, alphabet_.size() squared
  std::map<std::pair<Label, Label>, std::size_t> directly_follows_;
};

/// Empty traces are ignored; throws DiscoveryError EMPTY_LOG when no
/// non-empty trace remains.
Footprint footprint(const TraceLog& traces);

enum class PlaceKind { kSource, kSink, kInner };

struct Place {
  std::string id;
  PlaceKind kind = PlaceKind::kInner;
  std::vector<Label> inputs;   ///< A of p(A,B), sorted
  std::vector<Label> outputs;  ///< B of p(A,B), sorted

  /// `i`, `o` or `p({a},{b,c})`.
  std::string display() const;
  bool operator==(const Place&) const = default;
};

struct Arc {
  std::string from;
  std::string to;
  auto operator<=>(const Arc&) const = default;
};

/// Workflow net produced by discovery. Node ids share one namespace: place ids
/// are chosen so they never collide with transition labels.
struct PetriNet {
  std::vector<Place> places;       ///< source first, inner sorted by (A,B), sink last
  std::vector<Label> transitions;  ///< sorted
  std::vector<Arc> arcs;
  std::string initial_place;
  std::string final_place;
  std::vector<std::string> warnings;

  bool operator==(const PetriNet&) const = default;

  const Place* find_place(const std::string& id) const;
  bool has_transition(const Label& label) const;
  /// Input / output place ids of a transition, sorted.
  std::vector<std::string> preset(const Label& transition) const;
  std::vector<std::string> postset(const Label& transition) const;
};

struct AlphaOptions {
  /// Hard ceiling is 64 (label sets are bitmasks).
  std::size_t max_alphabet = 64;
};

/// Classic alpha algorithm.
PetriNet alpha_miner(const TraceLog& traces, const AlphaOptions& options = {});
PetriNet alpha_miner(const Footprint& fp, const TraceLog& traces,
                     const AlphaOptions& options = {});

struct Dfg {
  std::map<Label, std::size_t> nodes;
  std::map<std::pair<Label, Label>, std::size_t> edges;
  std::map<Label, std::size_t> start_labels;
  std::map<Label, std::size_t> end_labels;

  bool operator==(const Dfg&) const = default;
};

Dfg dfg(const TraceLog& traces);

}  // namespace xel
