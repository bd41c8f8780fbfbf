#pragma once

#include "clustercat/quiver.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <memory>
#include <string>

namespace clustercat {

struct Request {
    std::string method;
    std::string path;
    std::map<std::string, std::string> query;
    std::string body;
};

struct Response {
    int status = 200;
    nlohmann::json body;
};

/// JSON endpoints over in-memory sessions. Each session pairs a seed with the
/// cluster-tilting object it categorifies (type A quivers only) and mutates
/// both together under a per-session lock. Static tables are computed once
/// per quiver and shared read-only.
///
///   GET  /quiver                    default quiver
///   POST /session                   body: quiver JSON (empty for the default)
///   GET  /session/{id}
///   POST /session/{id}/mutate       body: {"vertex": k}
///   GET  /session/{id}/export       {"quiver", "history"}
///   POST /session/import            same document, replayed into a new session
///   GET  /ar-quiver[?session=id]
///   GET  /cc-table[?session=id]
///   GET  /grassmannian?rep=<representation JSON>
///
/// Errors: 400 malformed input, 404 unknown session or path, 405 wrong
/// method, 409 NotDivisible / NotInTable. Error bodies are
/// {"error": {"code", "message"}}.
class Service {
public:
    /// `flip_b_sign` builds every cluster character table with a negated
    /// exchange matrix (fault injection; mutations then hit 409).
    explicit Service(Quiver default_quiver, bool flip_b_sign = false);
    ~Service();
    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    Response handle(const Request& request);
    Response handle(const std::string& method, const std::string& path, const std::string& body = "",
                    const std::map<std::string, std::string>& query = {});

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// HTTP front end for a Service.
class HttpServer {
public:
    explicit HttpServer(Service& service);
    ~HttpServer();

    /// Binds; port 0 picks a free port. Returns the bound port, or -1.
    int bind(const std::string& host, int port);
    /// Blocks until stop().
    bool listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace clustercat
