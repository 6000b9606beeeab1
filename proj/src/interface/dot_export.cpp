#include "xel/interface.hpp"

namespace xel {

namespace {

std::string dot_id(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': break;
      default: out += c;
    }
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const PetriNet& net, const TraceLog& traces) {
  std::string out;
  out += "digraph petri_net {\n";
  out += "  rankdir=LR;\n";
  out += "  node [fontname=\"Helvetica\", fontsize=10];\n";
  for (const auto& place : net.places) {
    out += "  " + dot_id(place.id) + " [shape=circle";
    switch (place.kind) {
      case PlaceKind::kSource:
        out += ", label=\"i\", style=filled, fillcolor=\"#a6d96a\"";
        break;
      case PlaceKind::kSink:
        out += ", label=\"o\", style=filled, fillcolor=\"#f46d43\"";
        break;
      case PlaceKind::kInner:
        out += ", label=\"\", tooltip=" + dot_id(place.display());
        break;
    }
    out += "];\n";
  }
  for (const auto& t : net.transitions)
    out += "  " + dot_id(t) + " [shape=box, label=" +
           dot_id(traces.display_name(t)) + "];\n";
  for (const auto& arc : net.arcs)
    out += "  " + dot_id(arc.from) + " -> " + dot_id(arc.to) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace xel
