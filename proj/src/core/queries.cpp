#include <algorithm>

#include "xel/core.hpp"

namespace xel {

std::vector<ClassicRow> project_classic(const XelLog& log) {
  require_valid(log);
  std::vector<ClassicRow> rows;
  for (const auto& c : log.cases) {
    const ProcessDef& process = *find_process(log, c.process_ref);
    for (std::size_t index : chronological_order(c.events)) {
      const Event& event = c.events[index];
      rows.push_back({c.id, find_activity(process, event.activity_ref)->name,
                      event.start, event.end});
    }
  }
  return rows;
}

std::vector<StepDef> steps_of_activity(const XelLog& log,
                                       const std::string& activity_id) {
  const ActivityDef* activity = find_activity(log, activity_id);
  if (activity == nullptr) throw NotFoundError("activity", activity_id);
  std::vector<StepDef> steps = activity->steps;
  std::stable_sort(steps.begin(), steps.end(),
                   [](const StepDef& a, const StepDef& b) {
                     return a.ordinal < b.ordinal;
                   });
  return steps;
}

EventDetail detail_of_event(const XelLog& log, const std::string& event_id) {
  for (const auto& c : log.cases) {
    for (const auto& event : c.events) {
      if (event.id != event_id) continue;

      const ActivityDef* activity = find_activity(log, event.activity_ref);
      if (activity == nullptr)
        throw NotFoundError("activity", event.activity_ref);

      EventDetail detail;
      detail.case_id = c.id;
      detail.event_id = event.id;
      detail.start = event.start;
      detail.end = event.end;
      detail.activity = *activity;
      for (const auto& instance : event.step_instances) {
        const StepDef* step = find_step(*activity, instance.step_ref);
        if (step == nullptr) throw NotFoundError("step", instance.step_ref);
        StepDetail step_detail{instance, *step, {}};
        for (const auto& ref : instance.object_refs) {
          const BusinessObject* object = find_object(log, ref.object_id);
          if (object == nullptr)
            throw NotFoundError("business object", ref.object_id);
          const ObjectClassDef* cls = find_object_class(log, object->class_ref);
          if (cls == nullptr)
            throw NotFoundError("object class", object->class_ref);
          step_detail.objects.push_back({*object, *cls, ref.role});
        }
        detail.steps.push_back(std::move(step_detail));
      }
      std::stable_sort(detail.steps.begin(), detail.steps.end(),
                       [](const StepDetail& a, const StepDetail& b) {
                         return a.step.ordinal < b.step.ordinal;
                       });
      return detail;
    }
  }
  throw NotFoundError("event", event_id);
}

}  // namespace xel
