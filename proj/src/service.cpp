#include "abacus/service.hpp"

#include "abacus/error.hpp"
#include "abacus/session.hpp"
#include "abacus/worksheet.hpp"

#include "httplib.h"

#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace abacus {

namespace {

constexpr std::size_t kMaxListedInscriptions = 100000;

std::size_t parse_count(const std::string& text, const char* what) {
  const Natural n = parse_natural(text);
  if (n > 10000) throw DomainError(ErrorCode::InvalidArgument, std::string(what) + " is too large");
  return n.convert_to<std::size_t>();
}

void send_json(httplib::Response& res, const json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, std::string_view code, const std::string& message) {
  send_json(res, {{"error", code}, {"message", message}}, status);
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) throw DomainError(ErrorCode::InvalidArgument, "request body must be a JSON object");
  json body = json::parse(req.body);
  if (!body.is_object()) throw DomainError(ErrorCode::InvalidArgument, "request body must be a JSON object");
  return body;
}

std::string require_param(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) throw DomainError(ErrorCode::InvalidArgument, std::string("missing query parameter ") + name);
  return req.get_param_value(name);
}

}  // namespace

ServiceConfig config_from_env(ServiceConfig base) {
  if (const char* port = std::getenv("ABACUS_PORT"); port && *port) base.port = std::stoi(port);
  if (const char* dir = std::getenv("ABACUS_DATA_DIR"); dir && *dir) base.data_dir = dir;
  if (const char* rods = std::getenv("ABACUS_RODS"); rods && *rods) base.rod_count = std::stoul(rods);
  return base;
}

struct Service::Impl {
  ServiceConfig config;
  SessionStore store;
  httplib::Server server;
  int bound_port = -1;

  explicit Impl(ServiceConfig c) : config(std::move(c)), store(config.data_dir) { routes(); }

  std::size_t rods_param(const httplib::Request& req) const {
    return req.has_param("rods") ? parse_count(req.get_param_value("rods"), "rods") : config.rod_count;
  }

  using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

  // Every handler runs inside one error boundary so clients always get
  // {error, message}.
  static httplib::Server::Handler guarded(Handler h) {
    return [h = std::move(h)](const httplib::Request& req, httplib::Response& res) {
      try {
        h(req, res);
      } catch (const DomainError& e) {
        send_error(res, e.code() == ErrorCode::NotFound ? 404 : 400, to_string(e.code()), e.what());
      } catch (const json::exception& e) {
        send_error(res, 400, "InvalidJson", e.what());
      } catch (const std::exception& e) {
        send_error(res, 500, "Internal", e.what());
      }
    };
  }

  void routes() {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
      if (res.body.empty()) send_error(res, res.status, "NotFound", "no route for " + req.method + " " + req.path);
    });

    server.Get("/health", guarded([](const httplib::Request&, httplib::Response& res) {
      send_json(res, {{"status", "ok"}});
    }));

    server.Post("/sessions", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const json body = req.body.empty() ? json::object() : parse_body(req);
      const std::string participant = body.value("participant", std::string("anonymous"));
      send_json(res, {{"id", store.create(participant)}}, 201);
    }));

    server.Post(R"(/sessions/([A-Za-z0-9_.-]+)/attempts)",
                guarded([this](const httplib::Request& req, httplib::Response& res) {
                  const std::string id = req.matches[1];
                  const json body = parse_body(req);
                  const Task task = task_from_json(body.at("task"), config.rod_count);
                  const Trace trace = body.at("trace").get<Trace>();
                  std::optional<std::string> answer;
                  if (body.contains("answer") && !body.at("answer").is_null()) {
                    const json& a = body.at("answer");
                    answer = a.is_string() ? a.get<std::string>() : a.dump();
                  }
                  std::optional<std::string> attempt_id;
                  if (body.contains("attempt_id")) attempt_id = body.at("attempt_id").get<std::string>();
                  const Evaluation e = store.add_attempt(id, attempt_id, task, trace, answer);
                  send_json(res, {{"correct", e.correct}, {"report", e.report}});
                }));

    server.Get(R"(/sessions/([A-Za-z0-9_.-]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
      send_json(res, store.get(req.matches[1]));
    }));

    server.Get("/abacus/economical", guarded([this](const httplib::Request& req, httplib::Response& res) {
      send_json(res, set_economical(parse_natural(require_param(req, "n")), rods_param(req)));
    }));

    server.Post("/abacus/normalize", guarded([](const httplib::Request& req, httplib::Response& res) {
      const json body = parse_body(req);
      send_json(res, normalize(body.at("config").get<AbacusConfig>()));
    }));

    server.Get("/abacus/inscriptions", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const Natural n = parse_natural(require_param(req, "n"));
      const std::size_t rods = rods_param(req);
      json out = json::array();
      for_each_inscription(n, rods, [&](const AbacusConfig& c) {
        if (out.size() == kMaxListedInscriptions) {
          throw DomainError(ErrorCode::InvalidArgument, "more than " + std::to_string(kMaxListedInscriptions) +
                                                            " inscriptions; use fewer rods");
        }
        out.push_back(c);
      });
      send_json(res, out);
    }));

    server.Get("/verbalize", guarded([](const httplib::Request& req, httplib::Response& res) {
      const Natural n = parse_natural(require_param(req, "n"));
      send_json(res, say(n, parse_language(require_param(req, "lang"))));
    }));

    server.Post("/classify", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const json body = parse_body(req);
      const Trace trace = body.at("trace").get<Trace>();
      const Natural target = body.at("target").get<Natural>();
      if (body.contains("config")) {
        send_json(res, classify(trace, target, body.at("config").get<AbacusConfig>()));
      } else {
        send_json(res, classify(trace, target, body.value("rod_count", config.rod_count)));
      }
    }));

    server.Post("/worksheets", guarded([](const httplib::Request& req, httplib::Response& res) {
      const json body = parse_body(req);
      const WorksheetSpec spec = body.at("spec").get<WorksheetSpec>();
      const WorksheetDocument doc = worksheet_generate(spec);
      send_json(res, {{"svg", doc.pages}, {"key", doc.key}, {"structures", doc.structures}});
    }));
  }
};

Service::Service(ServiceConfig config) : impl_(std::make_unique<Impl>(std::move(config))) {}

Service::~Service() { stop(); }

int Service::bind() {
  auto& i = *impl_;
  if (i.config.port == 0) {
    i.bound_port = i.server.bind_to_any_port(i.config.host);
  } else {
    i.bound_port = i.server.bind_to_port(i.config.host, i.config.port) ? i.config.port : -1;
  }
  if (i.bound_port < 0) {
    throw std::runtime_error("cannot bind " + i.config.host + ":" + std::to_string(i.config.port));
  }
  return i.bound_port;
}

void Service::run() {
  if (impl_->bound_port < 0) throw std::logic_error("Service::run before bind");
  impl_->server.listen_after_bind();
}

void Service::wait_until_ready() const { impl_->server.wait_until_ready(); }

void Service::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

const ServiceConfig& Service::config() const { return impl_->config; }

}  // namespace abacus
