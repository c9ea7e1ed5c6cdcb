#include "rubikmap/service.hpp"

#include "rubikmap/error.hpp"
#include "rubikmap/map_io.hpp"

namespace rubikmap {

namespace {

using nlohmann::json;

void send_json(httplib::Response &res, const json &body, int status = 200)
{
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response &res, ErrorCode code, const std::string &message)
{
  send_json(res, {{"error", {{"code", error_code_name(code)}, {"message", message}}}},
            http_status(code));
}

// Request body as an object; an empty body counts as {}.
json body_of(const httplib::Request &req)
{
  if (req.body.empty())
    return json::object();
  json doc = json::parse(req.body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw Error(ErrorCode::MalformedRequest, "request body must be a JSON object");
  return doc;
}

template <class T>
T field(const json &doc, const char *key, T fallback)
{
  auto it = doc.find(key);
  if (it == doc.end())
    return fallback;
  if constexpr (std::is_same_v<T, std::string>) {
    if (!it->is_string())
      throw Error(ErrorCode::MalformedRequest, std::string("'") + key + "' must be a string");
  } else if constexpr (std::is_unsigned_v<T>) {
    if (!it->is_number_unsigned())
      throw Error(ErrorCode::MalformedRequest,
                  std::string("'") + key + "' must be a non-negative integer");
  } else {
    if (!it->is_number_integer())
      throw Error(ErrorCode::MalformedRequest, std::string("'") + key + "' must be an integer");
  }
  return it->get<T>();
}

template <class Handler>
auto guarded(Handler handler)
{
  return [handler](const httplib::Request &req, httplib::Response &res) {
    try {
      handler(req, res);
    } catch (const Error &e) {
      send_error(res, e.code(), e.what());
    } catch (const std::exception &e) {
      res.status = 500;
      res.set_content(json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump(),
                      "application/json");
    }
  };
}

} // namespace

int http_status(ErrorCode code)
{
  switch (code) {
    case ErrorCode::UnknownSession:
    case ErrorCode::UnknownMap: return 404;
    case ErrorCode::UnknownFace: return 422;
    case ErrorCode::BudgetExceeded: return 503;
    default: return 400;
  }
}

void install_routes(httplib::Server &server, SessionStore &store)
{
  server.Get("/api/maps", guarded([&store](const httplib::Request &, httplib::Response &res) {
    send_json(res, {{"maps", store.map_names()}});
  }));

  server.Get(R"(/api/maps/([A-Za-z0-9_]+))",
             guarded([&store](const httplib::Request &req, httplib::Response &res) {
               send_json(res, model_to_json(*store.model(req.matches[1])));
             }));

  server.Post("/api/sessions", guarded([&store](const httplib::Request &req, httplib::Response &res) {
    json body = body_of(req);
    if (!body.contains("map"))
      throw Error(ErrorCode::MalformedRequest, "'map' is required");
    send_json(res, session_to_json(store.create(field<std::string>(body, "map", ""))), 201);
  }));

  server.Get(R"(/api/sessions/([A-Za-z0-9]+))",
             guarded([&store](const httplib::Request &req, httplib::Response &res) {
               send_json(res, session_to_json(store.get(req.matches[1])));
             }));

  server.Post(R"(/api/sessions/([A-Za-z0-9]+)/move)",
              guarded([&store](const httplib::Request &req, httplib::Response &res) {
                json body = body_of(req);
                if (!body.contains("face"))
                  throw Error(ErrorCode::MalformedRequest, "'face' is required");
                long long face = field<long long>(body, "face", 0);
                long long exponent = field<long long>(body, "exponent", 1);
                if (face < 1)
                  throw Error(ErrorCode::UnknownFace, "faces are numbered from 1");
                send_json(res, session_to_json(store.move(
                                   req.matches[1], static_cast<std::size_t>(face - 1), exponent)));
              }));

  server.Post(R"(/api/sessions/([A-Za-z0-9]+)/scramble)",
              guarded([&store](const httplib::Request &req, httplib::Response &res) {
                json body = body_of(req);
                auto seed = field<std::uint64_t>(body, "seed", 1);
                auto length = field<std::uint64_t>(body, "length", 25);
                if (length > 100000)
                  throw Error(ErrorCode::MalformedRequest, "'length' is at most 100000");
                send_json(res, session_to_json(store.scramble(req.matches[1], seed, length)));
              }));

  server.Post(R"(/api/sessions/([A-Za-z0-9]+)/reset)",
              guarded([&store](const httplib::Request &req, httplib::Response &res) {
                body_of(req);
                send_json(res, session_to_json(store.reset(req.matches[1])));
              }));

  server.Post(R"(/api/sessions/([A-Za-z0-9]+)/solve)",
              guarded([&store](const httplib::Request &req, httplib::Response &res) {
                body_of(req);
                Word w = store.solve(req.matches[1]);
                send_json(res, {{"word", w.to_string()}, {"length", w.length()}});
              }));
}

} // namespace rubikmap
