#pragma once

#include <string>
#include <vector>

#include "xel/error.hpp"
#include "xel/model.hpp"

namespace xel {

enum class Severity { kError, kWarning };

/// One validation finding. `element` names the offending id (or the dangling
/// reference itself for DANGLING_* codes).
struct Finding {
  Severity severity = Severity::kError;
  std::string code;
  std::string element;
  std::string message;

  bool operator==(const Finding&) const = default;
};

struct ValidationReport {
  std::vector<Finding> errors;
  std::vector<Finding> warnings;

  bool ok() const { return errors.empty(); }
};

/// Error codes emitted by validate().
namespace codes {
inline constexpr const char* kInvalidId = "INVALID_ID";
inline constexpr const char* kDuplicateId = "DUPLICATE_ID";
inline constexpr const char* kStepOrdinalInvalid = "STEP_ORDINAL_INVALID";
inline constexpr const char* kStepOrdinalsNotContiguous =
    "STEP_ORDINALS_NOT_CONTIGUOUS";
inline constexpr const char* kDanglingProcessRef = "DANGLING_PROCESS_REF";
inline constexpr const char* kDanglingActivityRef = "DANGLING_ACTIVITY_REF";
inline constexpr const char* kActivityProcessMismatch =
    "ACTIVITY_PROCESS_MISMATCH";
inline constexpr const char* kEventIntervalInvalid = "EVENT_INTERVAL_INVALID";
inline constexpr const char* kDanglingStepRef = "DANGLING_STEP_REF";
inline constexpr const char* kStepActivityMismatch = "STEP_ACTIVITY_MISMATCH";
inline constexpr const char* kDuplicateStepInstance =
    "DUPLICATE_STEP_INSTANCE";
inline constexpr const char* kDanglingObjectRef = "DANGLING_OBJECT_REF";
inline constexpr const char* kDanglingClassRef = "DANGLING_CLASS_REF";
// warnings
inline constexpr const char* kEmptyProcess = "EMPTY_PROCESS";
inline constexpr const char* kStepOutsideEventWindow =
    "STEP_OUTSIDE_EVENT_WINDOW";
inline constexpr const char* kUnreferencedObject = "UNREFERENCED_OBJECT";
}  // namespace codes

/// Checks every structural invariant of the log. Never throws; problems are
/// reported as findings.
ValidationReport validate(const XelLog& log);

/// Raised when an operation requires a log without validation errors.
class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(ValidationReport report);

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Throws ValidationFailed if `validate(log)` reports any error.
void require_valid(const XelLog& log);

struct ClassicRow {
  std::string case_id;
  std::string activity_name;
  Timestamp start{};
  Timestamp end{};

  bool operator==(const ClassicRow&) const = default;
};

/// Flat single-case view: one row per event, cases in input order, events
/// by start time (ties in document order).
std::vector<ClassicRow> project_classic(const XelLog& log);

/// Step definitions of an activity sorted by ordinal.
std::vector<StepDef> steps_of_activity(const XelLog& log,
                                       const std::string& activity_id);

struct ResolvedObject {
  BusinessObject object;
  ObjectClassDef object_class;
  std::string role;
};

struct StepDetail {
  StepInstance instance;
  StepDef step;
  std::vector<ResolvedObject> objects;
};

struct EventDetail {
  std::string case_id;
  std::string event_id;
  Timestamp start{};
  Timestamp end{};
  ActivityDef activity;
  std::vector<StepDetail> steps;  ///< by step ordinal
};

EventDetail detail_of_event(const XelLog& log, const std::string& event_id);

}  // namespace xel
