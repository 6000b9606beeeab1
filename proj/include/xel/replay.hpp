#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "xel/discovery.hpp"

namespace xel {

enum class DeviationKind { kNotEnabled, kUnknownLabel };

const char* to_string(DeviationKind kind);  ///< "NOT_ENABLED", "UNKNOWN_LABEL"

struct Deviation {
  std::size_t position = 0;  ///< index into the case's trace
  Label label;
  DeviationKind kind = DeviationKind::kNotEnabled;
  bool operator==(const Deviation&) const = default;
};

/// Path of one case through a net: what fired, which places received tokens
/// (arrival order) and where the trace departed from the model.
struct Route {
  std::string case_id;
  std::vector<Label> fired;
  std::vector<std::string> visited_places;
  std::vector<Deviation> deviations;
  bool complete = false;  ///< final marking is exactly one token on the sink

  bool operator==(const Route&) const = default;
};

/// Place id -> token count; places without tokens are absent.
using Marking = std::map<std::string, long>;

/// Token replay of an arbitrary label sequence. When `markings` is given it
/// receives the marking after the initial token and after every trace label.
Route replay_sequence(const PetriNet& net, const std::string& case_id,
                      const std::vector<Label>& labels,
                      std::vector<Marking>* markings = nullptr);

/// Throws NotFoundError for an unknown case.
Route replay_case(const PetriNet& net, const TraceLog& traces,
                  const std::string& case_id);

struct ReplaySummary {
  std::vector<Route> routes;  ///< in case order
  double fitting_fraction = 1.0;  ///< complete and deviation-free / total
};

ReplaySummary replay_all(const PetriNet& net, const TraceLog& traces);

}  // namespace xel
