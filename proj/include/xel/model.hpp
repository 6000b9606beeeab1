#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xel/timestamp.hpp"

namespace xel {

// Meta level: shared definitions, each stored once.

struct StepDef {
  std::string id;
  std::string name;
  int ordinal = 1;  ///< 1-based position within the owning activity

  bool operator==(const StepDef&) const = default;
};

struct ActivityDef {
  std::string id;
  std::string name;
  std::vector<StepDef> steps;  ///< document order; not necessarily by ordinal

  bool operator==(const ActivityDef&) const = default;
};

struct ObjectClassDef {
  std::string id;
  std::string name;

  bool operator==(const ObjectClassDef&) const = default;
};

struct ProcessDef {
  std::string id;
  std::string name;
  std::vector<ActivityDef> activities;
  std::vector<ObjectClassDef> object_classes;

  bool operator==(const ProcessDef&) const = default;
};

struct MetaModel {
  std::vector<ProcessDef> processes;

  bool operator==(const MetaModel&) const = default;
};

// Instance level: concrete occurrences referencing the meta level by id.

struct ObjectRef {
  std::string object_id;
  std::string role;  ///< free-form, e.g. "performer", "screen"

  bool operator==(const ObjectRef&) const = default;
};

struct StepInstance {
  std::string id;
  std::string step_ref;
  Timestamp timestamp{};
  std::vector<ObjectRef> object_refs;

  bool operator==(const StepInstance&) const = default;
};

struct Event {
  std::string id;
  std::string activity_ref;
  Timestamp start{};
  Timestamp end{};
  std::vector<StepInstance> step_instances;

  bool operator==(const Event&) const = default;
};

struct Case {
  std::string id;
  std::string process_ref;
  std::vector<Event> events;

  bool operator==(const Case&) const = default;
};

/// An active player in the process (user, screen, customer, ...). Lives in the
/// log-level pool and is only ever referenced from step instances.
struct BusinessObject {
  std::string id;
  std::string class_ref;
  std::map<std::string, std::string> attributes;

  bool operator==(const BusinessObject&) const = default;
};

struct XelLog {
  MetaModel meta;
  std::vector<Case> cases;
  std::vector<BusinessObject> objects;

  bool operator==(const XelLog&) const = default;
};

/// Level of detail at which a log is flattened or mined.
enum class Granularity { kActivity, kStep };

std::string_view to_string(Granularity granularity);
std::optional<Granularity> parse_granularity(std::string_view text);

struct LogCounts {
  std::size_t processes = 0;
  std::size_t activities = 0;
  std::size_t step_defs = 0;
  std::size_t object_classes = 0;
  std::size_t cases = 0;
  std::size_t events = 0;
  std::size_t step_instances = 0;
  std::size_t objects = 0;
};

LogCounts count_elements(const XelLog& log);

// Lookups. They return nullptr when the id is absent and are linear in the
// size of the searched collection.
const ProcessDef* find_process(const XelLog& log, const std::string& id);
const ActivityDef* find_activity(const XelLog& log, const std::string& id);
const ActivityDef* find_activity(const ProcessDef& process,
                                 const std::string& id);
const StepDef* find_step(const ActivityDef& activity, const std::string& id);
const ObjectClassDef* find_object_class(const XelLog& log,
                                        const std::string& id);
const BusinessObject* find_object(const XelLog& log, const std::string& id);
const Case* find_case(const XelLog& log, const std::string& id);

/// Indices of `events` sorted by start time, ties kept in document order.
std::vector<std::size_t> chronological_order(const std::vector<Event>& events);

}  // namespace xel
