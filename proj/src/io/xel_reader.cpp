#include <algorithm>
#include <cctype>
#include <charconv>
#include <initializer_list>
#include <map>

#include "xel/io.hpp"
#include "xml_tree.hpp"

namespace xel {

namespace {

using detail::XmlElement;

bool is_blank(const std::string& text) {
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

class Reader {
 public:
  explicit Reader(const ParseOptions& options) : options_(options) {}

  XelLog read(const XmlElement& root) {
    const std::string path = "/" + root.name;
    if (root.name != "xel")
      throw SchemaError("INVALID_ROOT",
                        "expected root element <xel>, found <" + root.name +
                            ">",
                        path);
    check_attributes(root, path, {"version"});
    const std::string& version = required(root, "version", path);
    if (version != "1.0")
      throw SchemaError("UNSUPPORTED_VERSION",
                        "unsupported XEL version '" + version + "'", path);
    check_text(root, path);

    XelLog log;
    bool seen_meta = false;
    bool seen_instances = false;
    for_each_child(root, path, [&](const XmlElement& child,
                                   const std::string& child_path) {
      if (child.name == "meta") {
        once(seen_meta, child_path);
        read_meta(child, child_path, log.meta);
      } else if (child.name == "instances") {
        once(seen_instances, child_path);
        read_instances(child, child_path, log);
      } else {
        unknown_element(child_path);
      }
    });
    return log;
  }

  std::vector<Finding> take_warnings() { return std::move(warnings_); }

 private:
  template <class Fn>
  void for_each_child(const XmlElement& parent, const std::string& path,
                      Fn&& fn) {
    std::map<std::string, int> seen;
    for (const auto& child : parent.children) {
      int index = ++seen[child.name];
      fn(child, path + "/" + child.name + "[" + std::to_string(index) + "]");
    }
  }

  void once(bool& seen, const std::string& path) {
    if (seen)
      throw SchemaError("DUPLICATE_ELEMENT", "element may appear only once",
                        path);
    seen = true;
  }

  void unknown_element(const std::string& path) {
    if (!options_.lenient)
      throw SchemaError("UNKNOWN_ELEMENT", "unknown element", path);
    warnings_.push_back({Severity::kWarning, "UNKNOWN_ELEMENT", path,
                         "skipped unknown element " + path});
  }

  void check_attributes(const XmlElement& element, const std::string& path,
                        std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : element.attributes) {
      if (std::find(allowed.begin(), allowed.end(), key) != allowed.end())
        continue;
      if (!options_.lenient)
        throw SchemaError("UNKNOWN_ATTRIBUTE",
                          "unknown attribute '" + key + "'", path);
      warnings_.push_back({Severity::kWarning, "UNKNOWN_ATTRIBUTE", path,
                           "skipped unknown attribute '" + key + "' on " +
                               path});
    }
  }

  void check_text(const XmlElement& element, const std::string& path) {
    if (is_blank(element.text)) return;
    if (!options_.lenient)
      throw SchemaError("UNEXPECTED_TEXT", "unexpected character data", path);
    warnings_.push_back({Severity::kWarning, "UNEXPECTED_TEXT", path,
                         "skipped character data in " + path});
  }

  // Validates the attribute set and character data of a leaf-or-container
  // element in one go.
  void check_element(const XmlElement& element, const std::string& path,
                     std::initializer_list<std::string_view> allowed) {
    check_attributes(element, path, allowed);
    check_text(element, path);
  }

  const std::string& required(const XmlElement& element, const char* key,
                              const std::string& path) {
    const std::string* value = element.attribute(key);
    if (value == nullptr)
      throw SchemaError("MISSING_ATTRIBUTE",
                        std::string("missing required attribute '") + key +
                            "'",
                        path);
    return *value;
  }

  Timestamp timestamp(const XmlElement& element, const char* key,
                      const std::string& path) {
    const std::string& text = required(element, key, path);
    auto parsed = parse_timestamp(text);
    if (!parsed)
      throw SchemaError("INVALID_VALUE",
                        std::string("attribute '") + key +
                            "' is not an ISO-8601 timestamp: '" + text + "'",
                        path);
    return *parsed;
  }

  int ordinal(const XmlElement& element, const std::string& path) {
    const std::string& text = required(element, "ordinal", path);
    int value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                     value);
    if (ec != std::errc{} || end != text.data() + text.size())
      throw SchemaError("INVALID_VALUE",
                        "attribute 'ordinal' is not an integer: '" + text +
                            "'",
                        path);
    return value;
  }

  void read_meta(const XmlElement& meta, const std::string& path,
                 MetaModel& out) {
    check_element(meta, path, {});
    for_each_child(meta, path, [&](const XmlElement& child,
                                   const std::string& child_path) {
      if (child.name != "process") return unknown_element(child_path);
      check_element(child, child_path, {"id", "name"});
      ProcessDef process{required(child, "id", child_path),
                         required(child, "name", child_path),
                         {},
                         {}};
      for_each_child(child, child_path, [&](const XmlElement& item,
                                            const std::string& item_path) {
        if (item.name == "activity") {
          process.activities.push_back(read_activity(item, item_path));
        } else if (item.name == "objectClass") {
          check_element(item, item_path, {"id", "name"});
          process.object_classes.push_back(
              {required(item, "id", item_path),
               required(item, "name", item_path)});
        } else {
          unknown_element(item_path);
        }
      });
      out.processes.push_back(std::move(process));
    });
  }

  ActivityDef read_activity(const XmlElement& element,
                            const std::string& path) {
    check_element(element, path, {"id", "name"});
    ActivityDef activity{required(element, "id", path),
                         required(element, "name", path),
                         {}};
    for_each_child(element, path, [&](const XmlElement& child,
                                      const std::string& child_path) {
      if (child.name != "step") return unknown_element(child_path);
      check_element(child, child_path, {"id", "name", "ordinal"});
      activity.steps.push_back({required(child, "id", child_path),
                                required(child, "name", child_path),
                                ordinal(child, child_path)});
    });
    return activity;
  }

  void read_instances(const XmlElement& instances, const std::string& path,
                      XelLog& log) {
    check_element(instances, path, {});
    bool seen_objects = false;
    for_each_child(instances, path, [&](const XmlElement& child,
                                        const std::string& child_path) {
      if (child.name == "objects") {
        once(seen_objects, child_path);
        read_objects(child, child_path, log.objects);
      } else if (child.name == "case") {
        log.cases.push_back(read_case(child, child_path));
      } else {
        unknown_element(child_path);
      }
    });
  }

  void read_objects(const XmlElement& objects, const std::string& path,
                    std::vector<BusinessObject>& out) {
    check_element(objects, path, {});
    for_each_child(objects, path, [&](const XmlElement& child,
                                      const std::string& child_path) {
      if (child.name != "object") return unknown_element(child_path);
      check_element(child, child_path, {"id", "classRef"});
      BusinessObject object{required(child, "id", child_path),
                            required(child, "classRef", child_path),
                            {}};
      for_each_child(child, child_path, [&](const XmlElement& attr,
                                            const std::string& attr_path) {
        if (attr.name != "attr") return unknown_element(attr_path);
        check_element(attr, attr_path, {"key", "value"});
        const std::string& key = required(attr, "key", attr_path);
        if (!object.attributes.emplace(key, required(attr, "value", attr_path))
                 .second)
          throw SchemaError("DUPLICATE_ATTRIBUTE",
                            "attribute key '" + key + "' repeated",
                            attr_path);
      });
      out.push_back(std::move(object));
    });
  }

  Case read_case(const XmlElement& element, const std::string& path) {
    check_element(element, path, {"id", "processRef"});
    Case c{required(element, "id", path),
           required(element, "processRef", path),
           {}};
    for_each_child(element, path, [&](const XmlElement& child,
                                      const std::string& child_path) {
      if (child.name != "event") return unknown_element(child_path);
      c.events.push_back(read_event(child, child_path));
    });
    return c;
  }

  Event read_event(const XmlElement& element, const std::string& path) {
    check_element(element, path, {"id", "activityRef", "start", "end"});
    Event event{required(element, "id", path),
                required(element, "activityRef", path),
                timestamp(element, "start", path),
                timestamp(element, "end", path),
                {}};
    for_each_child(element, path, [&](const XmlElement& child,
                                      const std::string& child_path) {
      if (child.name != "stepInstance") return unknown_element(child_path);
      check_element(child, child_path, {"id", "stepRef", "timestamp"});
      StepInstance instance{required(child, "id", child_path),
                            required(child, "stepRef", child_path),
                            timestamp(child, "timestamp", child_path),
                            {}};
      for_each_child(child, child_path, [&](const XmlElement& ref,
                                            const std::string& ref_path) {
        if (ref.name != "objectRef") return unknown_element(ref_path);
        check_element(ref, ref_path, {"ref", "role"});
        instance.object_refs.push_back(
            {required(ref, "ref", ref_path), required(ref, "role", ref_path)});
      });
      event.step_instances.push_back(std::move(instance));
    });
    return event;
  }

  const ParseOptions& options_;
  std::vector<Finding> warnings_;
};

}  // namespace

ParsedLog parse_xel(std::string_view bytes, const ParseOptions& options) {
  detail::XmlElement root = detail::parse_xml(bytes);
  Reader reader(options);
  ParsedLog parsed{reader.read(root), reader.take_warnings()};
  auto report = validate(parsed.log);
  if (!report.ok()) throw ValidationFailed(std::move(report));
  parsed.warnings.insert(parsed.warnings.end(), report.warnings.begin(),
                         report.warnings.end());
  return parsed;
}

}  // namespace xel
