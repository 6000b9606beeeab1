#include "xel/model.hpp"

#include <algorithm>
#include <numeric>

namespace xel {

std::string_view to_string(Granularity granularity) {
  return granularity == Granularity::kActivity ? "activity" : "step";
}

std::optional<Granularity> parse_granularity(std::string_view text) {
  if (text == "activity") return Granularity::kActivity;
  if (text == "step") return Granularity::kStep;
  return std::nullopt;
}

LogCounts count_elements(const XelLog& log) {
  LogCounts counts;
  counts.processes = log.meta.processes.size();
  for (const auto& process : log.meta.processes) {
    counts.activities += process.activities.size();
    counts.object_classes += process.object_classes.size();
    for (const auto& activity : process.activities)
      counts.step_defs += activity.steps.size();
  }
  counts.cases = log.cases.size();
  for (const auto& c : log.cases) {
    counts.events += c.events.size();
    for (const auto& event : c.events)
      counts.step_instances += event.step_instances.size();
  }
  counts.objects = log.objects.size();
  return counts;
}

const ProcessDef* find_process(const XelLog& log, const std::string& id) {
  for (const auto& process : log.meta.processes)
    if (process.id == id) return &process;
  return nullptr;
}

const ActivityDef* find_activity(const ProcessDef& process,
                                 const std::string& id) {
  for (const auto& activity : process.activities)
    if (activity.id == id) return &activity;
  return nullptr;
}

const ActivityDef* find_activity(const XelLog& log, const std::string& id) {
  for (const auto& process : log.meta.processes)
    if (const auto* activity = find_activity(process, id)) return activity;
  return nullptr;
}

const StepDef* find_step(const ActivityDef& activity, const std::string& id) {
  for (const auto& step : activity.steps)
    if (step.id == id) return &step;
  return nullptr;
}

const ObjectClassDef* find_object_class(const XelLog& log,
                                        const std::string& id) {
  for (const auto& process : log.meta.processes)
    for (const auto& cls : process.object_classes)
      if (cls.id == id) return &cls;
  return nullptr;
}

const BusinessObject* find_object(const XelLog& log, const std::string& id) {
  for (const auto& object : log.objects)
    if (object.id == id) return &object;
  return nullptr;
}

const Case* find_case(const XelLog& log, const std::string& id) {
  for (const auto& c : log.cases)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<std::size_t> chronological_order(const std::vector<Event>& events) {
  std::vector<std::size_t> order(events.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return events[a].start < events[b].start;
                   });
  return order;
}

}  // namespace xel
