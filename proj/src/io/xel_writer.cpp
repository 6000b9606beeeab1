#include <fstream>
#include <sstream>

#include "xel/io.hpp"

namespace xel {

namespace {

void append_escaped(std::string& out, std::string_view text) {
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\t': out += "&#9;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20)
          throw Error("UNREPRESENTABLE_TEXT",
                      "control character U+" +
                          std::to_string(static_cast<int>(ch)) +
                          " cannot be written to XML 1.0");
        out += ch;
    }
  }
}

class Writer {
 public:
  std::string finish() { return std::move(out_); }

  void declaration() { out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"; }

  // Emits `<name a="..." ...` and leaves the tag open.
  void open_tag(int depth, std::string_view name,
                std::initializer_list<std::pair<std::string_view,
                                                std::string_view>> attributes) {
    out_.append(static_cast<std::size_t>(depth) * 2, ' ');
    out_ += '<';
    out_ += name;
    for (const auto& [key, value] : attributes) {
      out_ += ' ';
      out_ += key;
      out_ += "=\"";
      append_escaped(out_, value);
      out_ += '"';
    }
  }

  void end_open(bool has_children) { out_ += has_children ? ">\n" : "/>\n"; }

  void close_tag(int depth, std::string_view name) {
    out_.append(static_cast<std::size_t>(depth) * 2, ' ');
    out_ += "</";
    out_ += name;
    out_ += ">\n";
  }

 private:
  std::string out_;
};

void write_meta(Writer& w, const MetaModel& meta) {
  w.open_tag(1, "meta", {});
  w.end_open(!meta.processes.empty());
  if (meta.processes.empty()) return;
  for (const auto& process : meta.processes) {
    w.open_tag(2, "process", {{"id", process.id}, {"name", process.name}});
    bool has_children =
        !process.activities.empty() || !process.object_classes.empty();
    w.end_open(has_children);
    for (const auto& activity : process.activities) {
      w.open_tag(3, "activity", {{"id", activity.id}, {"name", activity.name}});
      w.end_open(!activity.steps.empty());
      for (const auto& step : activity.steps) {
        std::string ordinal = std::to_string(step.ordinal);
        w.open_tag(4, "step",
                   {{"id", step.id}, {"name", step.name}, {"ordinal", ordinal}});
        w.end_open(false);
      }
      if (!activity.steps.empty()) w.close_tag(3, "activity");
    }
    for (const auto& cls : process.object_classes) {
      w.open_tag(3, "objectClass", {{"id", cls.id}, {"name", cls.name}});
      w.end_open(false);
    }
    if (has_children) w.close_tag(2, "process");
  }
  w.close_tag(1, "meta");
}

void write_event(Writer& w, const Event& event) {
  std::string start = format_timestamp(event.start);
  std::string end = format_timestamp(event.end);
  w.open_tag(3, "event",
             {{"id", event.id},
              {"activityRef", event.activity_ref},
              {"start", start},
              {"end", end}});
  w.end_open(!event.step_instances.empty());
  for (const auto& instance : event.step_instances) {
    std::string ts = format_timestamp(instance.timestamp);
    w.open_tag(4, "stepInstance",
               {{"id", instance.id},
                {"stepRef", instance.step_ref},
                {"timestamp", ts}});
    w.end_open(!instance.object_refs.empty());
    for (const auto& ref : instance.object_refs) {
      w.open_tag(5, "objectRef", {{"ref", ref.object_id}, {"role", ref.role}});
      w.end_open(false);
    }
    if (!instance.object_refs.empty()) w.close_tag(4, "stepInstance");
  }
  if (!event.step_instances.empty()) w.close_tag(3, "event");
}

void write_instances(Writer& w, const XelLog& log) {
  bool has_children = !log.objects.empty() || !log.cases.empty();
  w.open_tag(1, "instances", {});
  w.end_open(has_children);
  if (!has_children) return;
  if (!log.objects.empty()) {
    w.open_tag(2, "objects", {});
    w.end_open(true);
    for (const auto& object : log.objects) {
      w.open_tag(3, "object",
                 {{"id", object.id}, {"classRef", object.class_ref}});
      w.end_open(!object.attributes.empty());
      for (const auto& [key, value] : object.attributes) {
        w.open_tag(4, "attr", {{"key", key}, {"value", value}});
        w.end_open(false);
      }
      if (!object.attributes.empty()) w.close_tag(3, "object");
    }
    w.close_tag(2, "objects");
  }
  for (const auto& c : log.cases) {
    w.open_tag(2, "case", {{"id", c.id}, {"processRef", c.process_ref}});
    w.end_open(!c.events.empty());
    for (const auto& event : c.events) write_event(w, event);
    if (!c.events.empty()) w.close_tag(2, "case");
  }
  w.close_tag(1, "instances");
}

}  // namespace

std::string write_xel(const XelLog& log) {
  require_valid(log);
  Writer w;
  w.declaration();
  w.open_tag(0, "xel", {{"version", "1.0"}});
  w.end_open(true);
  write_meta(w, log.meta);
  write_instances(w, log);
  w.close_tag(0, "xel");
  return w.finish();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IO_ERROR", "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("IO_ERROR", "cannot write '" + path.string() + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("IO_ERROR", "write failed for '" + path.string() + "'");
}

}  // namespace xel
