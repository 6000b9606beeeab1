#include "xel/replay.hpp"

#include <unordered_map>

namespace xel {

const char* to_string(DeviationKind kind) {
  return kind == DeviationKind::kNotEnabled ? "NOT_ENABLED" : "UNKNOWN_LABEL";
}

namespace {

struct Connectivity {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};

std::unordered_map<Label, Connectivity> connectivity(const PetriNet& net) {
  std::unordered_map<Label, Connectivity> out;
  for (const auto& t : net.transitions)
    out.emplace(t, Connectivity{net.preset(t), net.postset(t)});
  return out;
}

Route replay_with(const PetriNet& net,
                  const std::unordered_map<Label, Connectivity>& wiring,
                  const std::string& case_id, const std::vector<Label>& labels,
                  std::vector<Marking>* markings) {
  Route route;
  route.case_id = case_id;
  Marking marking{{net.initial_place, 1}};
  route.visited_places.push_back(net.initial_place);
  if (markings) markings->push_back(marking);

  for (std::size_t position = 0; position < labels.size(); ++position) {
    const Label& label = labels[position];
    auto found = wiring.find(label);
    if (found == wiring.end()) {
      route.deviations.push_back(
          {position, label, DeviationKind::kUnknownLabel});
      if (markings) markings->push_back(marking);
      continue;
    }
    const Connectivity& io = found->second;

    bool enabled = true;
    for (const auto& place : io.inputs) {
      if (marking[place] < 1) {
        enabled = false;
        marking[place] = 1;  // force-fire: insert the missing token
      }
    }
    if (!enabled)
      route.deviations.push_back({position, label, DeviationKind::kNotEnabled});

    for (const auto& place : io.inputs)
      if (--marking[place] == 0) marking.erase(place);
    for (const auto& place : io.outputs) {
      ++marking[place];
      route.visited_places.push_back(place);
    }
    route.fired.push_back(label);
    if (markings) markings->push_back(marking);
  }

  route.complete = marking.size() == 1 && marking.begin()->first ==
                                              net.final_place &&
                   marking.begin()->second == 1;
  return route;
}

}  // namespace

Route replay_sequence(const PetriNet& net, const std::string& case_id,
                      const std::vector<Label>& labels,
                      std::vector<Marking>* markings) {
  return replay_with(net, connectivity(net), case_id, labels, markings);
}

Route replay_case(const PetriNet& net, const TraceLog& traces,
                  const std::string& case_id) {
  const Trace& trace = traces.trace_of(case_id);
  return replay_sequence(net, trace.case_id, trace.labels);
}

ReplaySummary replay_all(const PetriNet& net, const TraceLog& traces) {
  ReplaySummary summary;
  auto wiring = connectivity(net);
  std::size_t fitting = 0;
  for (const auto& trace : traces.traces) {
    summary.routes.push_back(
        replay_with(net, wiring, trace.case_id, trace.labels, nullptr));
    const Route& route = summary.routes.back();
    if (route.complete && route.deviations.empty()) ++fitting;
  }
  summary.fitting_fraction =
      summary.routes.empty()
          ? 1.0
          : static_cast<double>(fitting) /
                static_cast<double>(summary.routes.size());
  return summary;
}

}  // namespace xel
