#include "xel/interface.hpp"

namespace xel {

using nlohmann::json;

json steps_to_json(const std::vector<StepDef>& steps) {
  json out = json::array();
  for (const auto& step : steps)
    out.push_back({{"id", step.id}, {"name", step.name},
                   {"ordinal", step.ordinal}});
  return out;
}

json net_to_json(const PetriNet& net, const TraceLog& traces,
                 const XelLog* log) {
  json nodes = json::array();
  for (const auto& place : net.places)
    nodes.push_back(
        {{"id", place.id}, {"kind", "place"}, {"label", place.display()}});
  const bool with_steps =
      log != nullptr && traces.granularity == Granularity::kActivity;
  for (const auto& t : net.transitions) {
    json node = {{"id", t}, {"kind", "transition"},
                 {"label", traces.display_name(t)}};
    if (with_steps) {
      auto info = traces.label_index.find(t);
      const std::string& activity_id =
          info == traces.label_index.end() ? t : info->second.source_id;
      node["steps"] = steps_to_json(steps_of_activity(*log, activity_id));
    }
    nodes.push_back(std::move(node));
  }
  json arcs = json::array();
  for (const auto& arc : net.arcs)
    arcs.push_back({{"from", arc.from}, {"to", arc.to}});
  return {{"nodes", std::move(nodes)},
          {"arcs", std::move(arcs)},
          {"initial", net.initial_place},
          {"final", net.final_place}};
}

json route_to_json(const Route& route) {
  json deviations = json::array();
  for (const auto& d : route.deviations)
    deviations.push_back({{"position", d.position},
                          {"label", d.label},
                          {"kind", to_string(d.kind)}});
  return {{"caseId", route.case_id},
          {"fired", route.fired},
          {"visitedPlaces", route.visited_places},
          {"deviations", std::move(deviations)},
          {"complete", route.complete}};
}

json event_detail_to_json(const EventDetail& detail) {
  json steps = json::array();
  for (const auto& step : detail.steps) {
    json objects = json::array();
    for (const auto& resolved : step.objects) {
      objects.push_back({{"id", resolved.object.id},
                         {"classId", resolved.object_class.id},
                         {"className", resolved.object_class.name},
                         {"role", resolved.role},
                         {"attributes", resolved.object.attributes}});
    }
    steps.push_back({{"id", step.instance.id},
                     {"step",
                      {{"id", step.step.id},
                       {"name", step.step.name},
                       {"ordinal", step.step.ordinal}}},
                     {"timestamp", format_timestamp(step.instance.timestamp)},
                     {"objects", std::move(objects)}});
  }
  return {{"id", detail.event_id},
          {"caseId", detail.case_id},
          {"activity",
           {{"id", detail.activity.id}, {"name", detail.activity.name}}},
          {"start", format_timestamp(detail.start)},
          {"end", format_timestamp(detail.end)},
          {"steps", std::move(steps)}};
}

json report_to_json(const ValidationReport& report) {
  auto findings = [](const std::vector<Finding>& list) {
    json out = json::array();
    for (const auto& f : list)
      out.push_back(
          {{"code", f.code}, {"element", f.element}, {"message", f.message}});
    return out;
  };
  return {{"ok", report.ok()},
          {"errors", findings(report.errors)},
          {"warnings", findings(report.warnings)}};
}

MinedModel mine(const XelLog& log, Granularity granularity) {
  MinedModel model;
  model.traces = build_traces(log, granularity);
  model.net = alpha_miner(model.traces);
  model.net_json = net_to_json(model.net, model.traces, &log);
  return model;
}

}  // namespace xel
