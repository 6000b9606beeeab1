#include <algorithm>

#include "xel/discovery.hpp"

namespace xel {

TraceLog TraceLog::from_sequences(
    const std::vector<std::vector<Label>>& sequences) {
  TraceLog log;
  for (std::size_t k = 0; k < sequences.size(); ++k) {
    log.traces.push_back({"case-" + std::to_string(k + 1), sequences[k]});
    for (const auto& label : sequences[k])
      log.label_index.emplace(label, LabelInfo{label, label});
  }
  return log;
}

const Trace& TraceLog::trace_of(const std::string& case_id) const {
  for (const auto& trace : traces)
    if (trace.case_id == case_id) return trace;
  throw NotFoundError("case", case_id);
}

std::string TraceLog::display_name(const Label& label) const {
  auto found = label_index.find(label);
  return found == label_index.end() ? label : found->second.display_name;
}

TraceLog build_traces(const XelLog& log, Granularity granularity) {
  require_valid(log);
  TraceLog out;
  out.granularity = granularity;
  for (const auto& c : log.cases) {
    const ProcessDef& process = *find_process(log, c.process_ref);
    Trace trace{c.id, {}};
    for (std::size_t index : chronological_order(c.events)) {
      const Event& event = c.events[index];
      const ActivityDef& activity = *find_activity(process, event.activity_ref);
      if (granularity == Granularity::kActivity ||
          event.step_instances.empty()) {
        trace.labels.push_back(activity.id);
        out.label_index.emplace(activity.id,
                                LabelInfo{activity.name, activity.id});
        continue;
      }
      std::vector<const StepDef*> steps;
      for (const auto& instance : event.step_instances)
        steps.push_back(find_step(activity, instance.step_ref));
      std::stable_sort(steps.begin(), steps.end(),
                       [](const StepDef* a, const StepDef* b) {
                         return a->ordinal < b->ordinal;
                       });
      for (const StepDef* step : steps) {
        trace.labels.push_back(step->id);
        out.label_index.emplace(step->id, LabelInfo{step->name, step->id});
      }
    }
    out.traces.push_back(std::move(trace));
  }
  return out;
}

}  // namespace xel
