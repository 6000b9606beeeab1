#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "xel/io.hpp"
#include "xml_tree.hpp"

namespace xel {

namespace {

using detail::XmlElement;

bool is_attribute_element(const std::string& name) {
  return name == "string" || name == "date" || name == "int" ||
         name == "float" || name == "boolean" || name == "id";
}

// Value of a direct `<type key="..." value="..."/>` child, if any.
const std::string* xes_attribute(const XmlElement& parent,
                                 std::string_view key) {
  for (const auto& child : parent.children) {
    if (!is_attribute_element(child.name)) continue;
    const std::string* k = child.attribute("key");
    if (k != nullptr && *k == key) return child.attribute("value");
  }
  return nullptr;
}

std::string sanitize(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (unsigned char c : text) out += std::isspace(c) ? '_' : static_cast<char>(c);
  return out.empty() ? std::string("_") : out;
}

/// Hands out ids unique within one namespace, suffixing `~2`, `~3`, ... on
/// collision.
class IdAllocator {
 public:
  std::string allocate(const std::string& base) {
    std::string id = base;
    for (int n = 2; !used_.insert(id).second; ++n)
      id = base + "~" + std::to_string(n);
    return id;
  }

 private:
  std::unordered_set<std::string> used_;
};

}  // namespace

XelLog import_xes(std::string_view bytes) {
  XmlElement root = detail::parse_xml(bytes);
  if (root.name != "log")
    throw ImportError("XES_INVALID_ROOT",
                      "expected XES root element <log>, found <" + root.name +
                          ">");

  IdAllocator meta_ids;
  IdAllocator case_ids;
  IdAllocator object_ids;

  XelLog log;
  ProcessDef process;
  process.id = meta_ids.allocate("xes-process");
  const std::string* log_name = xes_attribute(root, "concept:name");
  process.name = log_name != nullptr ? *log_name : "XES process";

  std::unordered_map<std::string, std::size_t> activity_by_name;
  std::unordered_map<std::string, std::size_t> object_by_name;
  std::string resource_class;

  std::size_t trace_number = 0;
  for (const auto& trace : root.children) {
    if (trace.name != "trace") continue;
    ++trace_number;
    const std::string* trace_name = xes_attribute(trace, "concept:name");
    std::string label = trace_name != nullptr
                            ? *trace_name
                            : "trace-" + std::to_string(trace_number);

    Case c;
    c.id = case_ids.allocate(sanitize(label));
    c.process_ref = process.id;

    std::size_t event_number = 0;
    for (const auto& element : trace.children) {
      if (element.name != "event") continue;
      ++event_number;
      const std::string where = "event " + std::to_string(event_number) +
                                " of trace '" + label + "'";

      const std::string* name = xes_attribute(element, "concept:name");
      if (name == nullptr)
        throw ImportError("XES_MISSING_NAME", where + " has no concept:name");
      const std::string* time = xes_attribute(element, "time:timestamp");
      if (time == nullptr)
        throw ImportError("XES_MISSING_TIMESTAMP",
                          where + " has no time:timestamp");
      auto ts = parse_timestamp(*time);
      if (!ts)
        throw ImportError("XES_INVALID_TIMESTAMP",
                          where + " has an unparseable time:timestamp '" +
                              *time + "'");

      auto [found, inserted] =
          activity_by_name.emplace(*name, process.activities.size());
      if (inserted) {
        ActivityDef activity;
        activity.id = meta_ids.allocate(sanitize(*name));
        activity.name = *name;
        activity.steps.push_back(
            {meta_ids.allocate(activity.id + ".step"), *name, 1});
        process.activities.push_back(std::move(activity));
      }
      const ActivityDef& activity = process.activities[found->second];

      Event event;
      event.id = c.id + ".e" + std::to_string(event_number);
      event.activity_ref = activity.id;
      event.start = event.end = *ts;
      StepInstance step{event.id + ".s1", activity.steps.front().id, *ts, {}};

      if (const std::string* resource = xes_attribute(element, "org:resource")) {
        if (resource_class.empty()) {
          resource_class = meta_ids.allocate("Resource");
          process.object_classes.push_back({resource_class, "Resource"});
        }
        auto [obj, fresh] = object_by_name.emplace(*resource, log.objects.size());
        if (fresh) {
          log.objects.push_back({object_ids.allocate(sanitize(*resource)),
                                 resource_class,
                                 {{"name", *resource}}});
        }
        step.object_refs.push_back({log.objects[obj->second].id, "performer"});
      }
      event.step_instances.push_back(std::move(step));
      c.events.push_back(std::move(event));
    }
    log.cases.push_back(std::move(c));
  }

  log.meta.processes.push_back(std::move(process));
  require_valid(log);
  return log;
}

}  // namespace xel
