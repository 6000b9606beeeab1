#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"
#include "xel/discovery.hpp"
#include "xel/io.hpp"
#include "xel/replay.hpp"

namespace xel {

// Wire forms consumed by the viewer and scripts.

/// NetJson. Transition nodes carry `steps` only at activity granularity and
/// only when `log` is supplied.
nlohmann::json net_to_json(const PetriNet& net, const TraceLog& traces,
                           const XelLog* log);
nlohmann::json route_to_json(const Route& route);
nlohmann::json steps_to_json(const std::vector<StepDef>& steps);
nlohmann::json event_detail_to_json(const EventDetail& detail);
nlohmann::json report_to_json(const ValidationReport& report);

/// Graphviz rendering: places as circles, transitions as boxes labelled with
/// display names, source and sink filled in distinct colours.
std::string export_dot(const PetriNet& net, const TraceLog& traces);

/// Everything mined for one granularity.
struct MinedModel {
  TraceLog traces;
  PetriNet net;
  nlohmann::json net_json;
};

MinedModel mine(const XelLog& log, Granularity granularity);

struct HttpRequest {
  std::string method = "GET";
  std::string path;
  std::map<std::string, std::string> query;
};

struct HttpResponse {
  int status = 200;
  nlohmann::json body;
};

/// Read-only query service over one loaded log. Mined models are computed at
/// most once per granularity and shared by all callers; `handle` may be called
/// from many threads.
class LogService {
 public:
  explicit LogService(XelLog log);

  /// Parses and validates `path`. Throws on any error-level finding.
  static std::unique_ptr<LogService> load(const std::string& path);

  const XelLog& log() const { return log_; }
  const MinedModel& model(Granularity granularity) const;
  HttpResponse handle(const HttpRequest& request) const;

  /// Number of miner runs performed so far (one per granularity at most).
  int miner_runs() const;

 private:
  HttpResponse summary() const;
  HttpResponse model_response(const HttpRequest& request) const;
  HttpResponse cases() const;
  HttpResponse route(const std::string& case_id,
                     const HttpRequest& request) const;

  struct Slot {
    std::once_flag once;
    std::unique_ptr<MinedModel> model;
  };

  XelLog log_;
  mutable std::array<Slot, 2> cache_;
  mutable std::mutex runs_mutex_;
  mutable int runs_ = 0;
};

HttpResponse error_response(int status, const std::string& code,
                            const std::string& message);

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;          ///< 0 picks a free port
  std::string ui_dir;       ///< static viewer assets, served at `/`
};

/// Blocking HTTP front end. `on_listening` receives the bound port once the
/// socket is ready. `stop_server()` from another thread ends the loop.
class HttpServer {
 public:
  HttpServer(const LogService& service, ServerOptions options);
  ~HttpServer();

  bool run(const std::function<void(int port)>& on_listening = {});
  /// Blocks until the accept loop of a successful run() is active.
  void wait_until_ready() const;
  void stop_server();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Command-line entry point. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace xel
