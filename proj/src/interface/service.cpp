#include <string_view>

#include "xel/interface.hpp"

namespace xel {

using nlohmann::json;

namespace {

bool strip(std::string_view& text, std::string_view prefix,
           std::string_view suffix) {
  if (text.size() < prefix.size() + suffix.size() ||
      !text.starts_with(prefix) || !text.ends_with(suffix))
    return false;
  text.remove_prefix(prefix.size());
  text.remove_suffix(suffix.size());
  return !text.empty();
}

std::optional<Granularity> requested_granularity(const HttpRequest& request) {
  auto found = request.query.find("granularity");
  if (found == request.query.end()) return Granularity::kActivity;
  return parse_granularity(found->second);
}

HttpResponse bad_granularity(const HttpRequest& request) {
  return error_response(400, "BAD_REQUEST",
                        "granularity must be 'activity' or 'step', got '" +
                            request.query.at("granularity") + "'");
}

}  // namespace

HttpResponse error_response(int status, const std::string& code,
                            const std::string& message) {
  return {status, {{"code", code}, {"message", message}}};
}

LogService::LogService(XelLog log) : log_(std::move(log)) {
  require_valid(log_);
}

std::unique_ptr<LogService> LogService::load(const std::string& path) {
  return std::make_unique<LogService>(parse_xel(read_file(path)).log);
}

const MinedModel& LogService::model(Granularity granularity) const {
  Slot& slot = cache_[granularity == Granularity::kActivity ? 0 : 1];
  std::call_once(slot.once, [&] {
    {
      std::lock_guard lock(runs_mutex_);
      ++runs_;
    }
    slot.model = std::make_unique<MinedModel>(mine(log_, granularity));
  });
  return *slot.model;
}

int LogService::miner_runs() const {
  std::lock_guard lock(runs_mutex_);
  return runs_;
}

HttpResponse LogService::handle(const HttpRequest& request) const {
  if (request.method != "GET")
    return error_response(405, "METHOD_NOT_ALLOWED",
                          "only GET is supported");
  std::string_view path = request.path;
  std::string_view id = path;
  try {
    if (path == "/api/summary") return summary();
    if (path == "/api/model") return model_response(request);
    if (path == "/api/cases") return cases();
    if (strip(id = path, "/api/activities/", "/steps"))
      return {200, steps_to_json(steps_of_activity(log_, std::string(id)))};
    if (strip(id = path, "/api/events/", ""))
      return {200, event_detail_to_json(detail_of_event(log_, std::string(id)))};
    if (strip(id = path, "/api/cases/", "/route"))
      return route(std::string(id), request);
  } catch (const NotFoundError& e) {
    return error_response(404, e.code(), e.what());
  } catch (const Error& e) {
    return error_response(422, e.code(), e.what());
  }
  return error_response(404, "NOT_FOUND",
                        "no such endpoint: " + request.path);
}

HttpResponse LogService::summary() const {
  LogCounts counts = count_elements(log_);
  return {200,
          {{"processes", counts.processes},
           {"cases", counts.cases},
           {"events", counts.events},
           {"steps", counts.step_instances},
           {"objects", counts.objects}}};
}

HttpResponse LogService::model_response(const HttpRequest& request) const {
  auto granularity = requested_granularity(request);
  if (!granularity) return bad_granularity(request);
  return {200, model(*granularity).net_json};
}

HttpResponse LogService::cases() const {
  const ReplaySummary* replayed = nullptr;
  ReplaySummary summary;
  try {
    const MinedModel& mined = model(Granularity::kActivity);
    summary = replay_all(mined.net, mined.traces);
    replayed = &summary;
  } catch (const DiscoveryError&) {
    // nothing minable (e.g. no events); report cases without a verdict
  }
  json out = json::array();
  for (std::size_t k = 0; k < log_.cases.size(); ++k) {
    const Case& c = log_.cases[k];
    json entry = {{"caseId", c.id}, {"length", c.events.size()}};
    if (replayed != nullptr) {
      const Route& r = replayed->routes[k];
      entry["complete"] = r.complete && r.deviations.empty();
    }
    out.push_back(std::move(entry));
  }
  return {200, std::move(out)};
}

HttpResponse LogService::route(const std::string& case_id,
                               const HttpRequest& request) const {
  auto granularity = requested_granularity(request);
  if (!granularity) return bad_granularity(request);
  if (find_case(log_, case_id) == nullptr) throw NotFoundError("case", case_id);
  const MinedModel& mined = model(*granularity);
  return {200, route_to_json(replay_case(mined.net, mined.traces, case_id))};
}

}  // namespace xel
