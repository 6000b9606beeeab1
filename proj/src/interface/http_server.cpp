#include "httplib.h"
#include "xel/interface.hpp"

namespace xel {

struct HttpServer::Impl {
  Impl(const LogService& s, ServerOptions o)
      : service(s), options(std::move(o)) {}

  const LogService& service;
  ServerOptions options;
  httplib::Server server;
};

namespace {

void reply(const HttpResponse& response, httplib::Response& res) {
  res.status = response.status;
  res.set_content(response.body.dump(), "application/json; charset=utf-8");
}

}  // namespace

HttpServer::HttpServer(const LogService& service, ServerOptions options)
    : impl_(std::make_unique<Impl>(service, std::move(options))) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    HttpRequest request;
    request.method = req.method;
    request.path = req.path;
    for (const auto& [key, value] : req.params) request.query.emplace(key, value);
    reply(impl_->service.handle(request), res);
  };
  const char* api = R"(/api/.*)";
  impl_->server.Get(api, handler);
  impl_->server.Post(api, handler);
  impl_->server.Put(api, handler);
  impl_->server.Delete(api, handler);
  impl_->server.Patch(api, handler);

  if (!impl_->options.ui_dir.empty() &&
      !impl_->server.set_mount_point("/", impl_->options.ui_dir))
    throw Error("IO_ERROR",
                "UI directory '" + impl_->options.ui_dir + "' does not exist");
}

HttpServer::~HttpServer() = default;

bool HttpServer::run(const std::function<void(int port)>& on_listening) {
  auto& server = impl_->server;
  int port = impl_->options.port;
  if (port == 0) {
    port = server.bind_to_any_port(impl_->options.host.c_str());
    if (port < 0) return false;
  } else if (!server.bind_to_port(impl_->options.host.c_str(), port)) {
    return false;
  }
  if (on_listening) on_listening(port);
  return server.listen_after_bind();
}

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

void HttpServer::stop_server() { impl_->server.stop(); }

}  // namespace xel
