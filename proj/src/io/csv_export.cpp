#include <algorithm>

#include "xel/io.hpp"

namespace xel {

namespace {

void append_field(std::string& out, std::string_view field) {
  bool quote = field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!quote) {
    out += field;
    return;
  }
  out += '"';
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

void append_row(std::string& out,
                std::initializer_list<std::string_view> fields) {
  bool first = true;
  for (auto field : fields) {
    if (!first) out += ',';
    append_field(out, field);
    first = false;
  }
  out += '\n';
}

}  // namespace

std::string export_csv(const XelLog& log, Granularity granularity) {
  require_valid(log);
  std::string out;
  if (granularity == Granularity::kActivity) {
    append_row(out, {"case_id", "activity", "start", "end"});
    for (const auto& row : project_classic(log))
      append_row(out, {row.case_id, row.activity_name,
                       format_timestamp(row.start), format_timestamp(row.end)});
    return out;
  }

  append_row(out, {"case_id", "activity", "step", "timestamp", "objects"});
  for (const auto& c : log.cases) {
    const ProcessDef& process = *find_process(log, c.process_ref);
    for (std::size_t index : chronological_order(c.events)) {
      const Event& event = c.events[index];
      const ActivityDef& activity = *find_activity(process, event.activity_ref);

      std::vector<std::pair<const StepInstance*, const StepDef*>> steps;
      for (const auto& instance : event.step_instances)
        steps.emplace_back(&instance, find_step(activity, instance.step_ref));
      std::stable_sort(steps.begin(), steps.end(),
                       [](const auto& a, const auto& b) {
                         return a.second->ordinal < b.second->ordinal;
                       });

      for (const auto& [instance, step] : steps) {
        std::string objects;
        for (const auto& ref : instance->object_refs) {
          if (!objects.empty()) objects += ';';
          objects += find_object(log, ref.object_id)->class_ref;
          objects += ':';
          objects += ref.object_id;
          objects += ':';
          objects += ref.role;
        }
        append_row(out, {c.id, activity.name, step->name,
                         format_timestamp(instance->timestamp), objects});
      }
    }
  }
  return out;
}

}  // namespace xel
