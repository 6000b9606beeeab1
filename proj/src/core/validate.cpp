#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "xel/core.hpp"

namespace xel {

namespace {

bool is_valid_id(const std::string& id) {
  if (id.empty()) return false;
  return std::none_of(id.begin(), id.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

class Checker {
 public:
  explicit Checker(const XelLog& log) : log_(log) {}

  ValidationReport run() {
    check_meta();
    check_objects();
    check_cases();
    for (const auto& object : log_.objects) {
      if (!referenced_objects_.contains(object.id))
        warn(codes::kUnreferencedObject, object.id,
             "business object '" + object.id +
                 "' is not referenced by any step instance");
    }
    return std::move(report_);
  }

 private:
  struct ActivityEntry {
    const ProcessDef* process;
    const ActivityDef* activity;
  };

  void error(const char* code, const std::string& element,
             std::string message) {
    report_.errors.push_back(
        {Severity::kError, code, element, std::move(message)});
  }

  void warn(const char* code, const std::string& element,
            std::string message) {
    report_.warnings.push_back(
        {Severity::kWarning, code, element, std::move(message)});
  }

  void check_id(const std::string& id, const char* kind) {
    if (!is_valid_id(id))
      error(codes::kInvalidId, id,
            std::string(kind) + " id '" + id +
                "' must be non-empty and contain no whitespace");
  }

  void check_unique(std::unordered_set<std::string>& seen,
                    const std::string& id, const char* kind) {
    check_id(id, kind);
    if (!seen.insert(id).second)
      error(codes::kDuplicateId, id,
            std::string(kind) + " id '" + id + "' is not unique");
  }

  void check_meta() {
    for (const auto& process : log_.meta.processes) {
      check_unique(meta_ids_, process.id, "process");
      if (process.activities.empty())
        warn(codes::kEmptyProcess, process.id,
             "process '" + process.id + "' defines no activities");
      for (const auto& activity : process.activities) {
        check_unique(meta_ids_, activity.id, "activity");
        activities_.emplace(activity.id, ActivityEntry{&process, &activity});
        check_steps(activity);
      }
      for (const auto& cls : process.object_classes) {
        check_unique(meta_ids_, cls.id, "object class");
        classes_.insert(cls.id);
      }
    }
  }

  void check_steps(const ActivityDef& activity) {
    std::vector<int> ordinals;
    for (const auto& step : activity.steps) {
      check_unique(meta_ids_, step.id, "step");
      step_owner_.emplace(step.id, activity.id);
      if (step.ordinal < 1) {
        error(codes::kStepOrdinalInvalid, step.id,
              "step '" + step.id + "' has ordinal " +
                  std::to_string(step.ordinal) + " (must be >= 1)");
      }
      ordinals.push_back(step.ordinal);
    }
    std::sort(ordinals.begin(), ordinals.end());
    for (std::size_t k = 0; k < ordinals.size(); ++k) {
      if (ordinals[k] != static_cast<int>(k) + 1) {
        error(codes::kStepOrdinalsNotContiguous, activity.id,
              "step ordinals of activity '" + activity.id +
                  "' must be unique and contiguous from 1");
        break;
      }
    }
  }

  void check_objects() {
    for (const auto& object : log_.objects) {
      check_unique(object_ids_, object.id, "business object");
      if (!classes_.contains(object.class_ref))
        error(codes::kDanglingClassRef, object.class_ref,
              "business object '" + object.id +
                  "' references unknown object class '" + object.class_ref +
                  "'");
    }
  }

  void check_cases() {
    std::unordered_set<std::string> case_ids;
    for (const auto& c : log_.cases) {
      check_unique(case_ids, c.id, "case");
      const ProcessDef* process = find_process(log_, c.process_ref);
      if (process == nullptr)
        error(codes::kDanglingProcessRef, c.process_ref,
              "case '" + c.id + "' references unknown process '" +
                  c.process_ref + "'");
      for (const auto& event : c.events) check_event(c, process, event);
    }
  }

  void check_event(const Case& c, const ProcessDef* process,
                   const Event& event) {
    check_unique(event_ids_, event.id, "event");
    if (event.start > event.end)
      error(codes::kEventIntervalInvalid, event.id,
            "event '" + event.id + "' starts after it ends");

    const ActivityDef* activity = nullptr;
    auto found = activities_.find(event.activity_ref);
    if (found == activities_.end()) {
      error(codes::kDanglingActivityRef, event.activity_ref,
            "event '" + event.id + "' references unknown activity '" +
                event.activity_ref + "'");
    } else if (process != nullptr && found->second.process != process) {
      error(codes::kActivityProcessMismatch, event.activity_ref,
            "event '" + event.id + "' of case '" + c.id +
                "' references activity '" + event.activity_ref +
                "' outside process '" + process->id + "'");
    } else {
      activity = found->second.activity;
    }

    std::unordered_set<std::string> used_steps;
    for (const auto& instance : event.step_instances) {
      check_unique(step_instance_ids_, instance.id, "step instance");
      auto owner = step_owner_.find(instance.step_ref);
      if (owner == step_owner_.end()) {
        error(codes::kDanglingStepRef, instance.step_ref,
              "step instance '" + instance.id + "' references unknown step '" +
                  instance.step_ref + "'");
      } else if (activity != nullptr && owner->second != activity->id) {
        error(codes::kStepActivityMismatch, instance.step_ref,
              "step instance '" + instance.id + "' references step '" +
                  instance.step_ref + "' of activity '" + owner->second +
                  "', not '" + activity->id + "'");
      }
      if (!used_steps.insert(instance.step_ref).second)
        error(codes::kDuplicateStepInstance, instance.id,
              "event '" + event.id + "' instantiates step '" +
                  instance.step_ref + "' more than once");
      if (instance.timestamp < event.start || instance.timestamp > event.end)
        warn(codes::kStepOutsideEventWindow, instance.id,
             "step instance '" + instance.id + "' at " +
                 format_timestamp(instance.timestamp) +
                 " lies outside event '" + event.id + "' [" +
                 format_timestamp(event.start) + ", " +
                 format_timestamp(event.end) + "]");
      for (const auto& ref : instance.object_refs) {
        if (!object_ids_.contains(ref.object_id))
          error(codes::kDanglingObjectRef, ref.object_id,
                "step instance '" + instance.id +
                    "' references unknown business object '" +
                    ref.object_id + "'");
        referenced_objects_.insert(ref.object_id);
      }
    }
  }

  const XelLog& log_;
  ValidationReport report_;
  std::unordered_set<std::string> meta_ids_;
  std::unordered_set<std::string> classes_;
  std::unordered_map<std::string, ActivityEntry> activities_;
  std::unordered_map<std::string, std::string> step_owner_;
  std::unordered_set<std::string> object_ids_;
  std::unordered_set<std::string> event_ids_;
  std::unordered_set<std::string> step_instance_ids_;
  std::unordered_set<std::string> referenced_objects_;
};

std::string summarize(const ValidationReport& report) {
  std::string message = std::to_string(report.errors.size()) +
                        " validation error(s)";
  if (!report.errors.empty()) message += ": " + report.errors.front().message;
  return message;
}

}  // namespace

ValidationReport validate(const XelLog& log) { return Checker(log).run(); }

ValidationFailed::ValidationFailed(ValidationReport report)
    : Error(report.errors.empty() ? std::string("VALIDATION_FAILED")
                                  : report.errors.front().code,
            summarize(report)),
      report_(std::move(report)) {}

void require_valid(const XelLog& log) {
  auto report = validate(log);
  if (!report.ok()) throw ValidationFailed(std::move(report));
}

}  // namespace xel
