#include "clustercat/service.hpp"

#include "clustercat/charcat.hpp"
#include "clustercat/clusteralg.hpp"
#include "clustercat/errors.hpp"
#include "clustercat/io.hpp"

#include <httplib.h>

#include <atomic>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace clustercat {

using io::Json;

namespace {

// Per-quiver data computed once and never modified afterwards.
struct Statics {
    Quiver quiver;
    std::unique_ptr<TypeAContext> ctx;  // null unless the quiver is of type A
    std::optional<CCTable> table;
    Json ar_quiver;
    Json cc_table;
};

struct Session {
    std::mutex mutex;
    std::string id;
    std::shared_ptr<const Statics> statics;
    Seed seed;
    std::optional<CTObject> ct;
    std::vector<int> history;
};

struct HttpError {
    int status;
    std::string code;
    std::string message;
};

Response error_response(int status, const std::string& code, const std::string& message) {
    return {status, {{"error", {{"code", code}, {"message", message}}}}};
}

int status_for(ErrorCode code) {
    return code == ErrorCode::NotDivisible || code == ErrorCode::NotInTable ? 409 : 400;
}

std::vector<std::string> split_path(const std::string& path) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : path) {
        if (c == '/') {
            if (!cur.empty()) parts.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) parts.push_back(std::move(cur));
    return parts;
}

Json session_json(const Session& s) {
    Json out{{"id", s.id},
             {"history", s.history},
             {"depth", s.history.size()},
             {"initial_quiver", io::quiver_to_json(s.statics->quiver)},
             {"seed", io::seed_json(s.seed)},
             {"ct", nullptr},
             {"synchronized", nullptr}};
    if (s.ct) {
        const CCTable& table = *s.statics->table;
        out["ct"] = io::ct_object_json(*s.ct, table);
        bool same = s.ct->quiver.arrow_multiset() == s.seed.quiver.arrow_multiset();
        for (std::size_t i = 0; i < s.seed.cluster.size() && same; ++i) same = table.at(s.ct->summands[i]) == s.seed.cluster[i];
        out["synchronized"] = same;
    }
    return out;
}

Json parse_body(const std::string& body) {
    if (body.find_first_not_of(" \t\r\n") == std::string::npos) return Json::object();
    return io::parse_json(body);
}

int vertex_of(const Json& body) {
    auto it = body.find("vertex");
    if (!body.is_object() || it == body.end() || !it->is_number_integer()) {
        throw HttpError{400, "InvalidInput", "body must be {\"vertex\": <integer>}"};
    }
    return it->get<int>();
}

}  // namespace

struct Service::Impl {
    Quiver default_quiver;
    bool flip_b_sign = false;
    std::shared_mutex sessions_mutex;
    std::map<std::string, std::shared_ptr<Session>> sessions;
    std::atomic<unsigned long> next_id{1};
    std::mutex statics_mutex;
    std::map<std::string, std::shared_ptr<const Statics>> statics_cache;

    std::shared_ptr<const Statics> statics_for(const Quiver& q) {
        const std::string key = io::quiver_to_json(q).dump();
        std::lock_guard lock(statics_mutex);
        if (auto it = statics_cache.find(key); it != statics_cache.end()) return it->second;
        auto s = std::make_shared<Statics>();
        s->quiver = q;
        if (is_type_a(q)) {
            s->ctx = std::make_unique<TypeAContext>(q, flip_b_sign);
            s->table = cc_table(*s->ctx);
            s->ar_quiver = io::ar_quiver_json(s->ctx->ar());
            s->cc_table = io::cc_table_json(*s->ctx, *s->table);
        }
        statics_cache.emplace(key, s);
        return s;
    }

    std::shared_ptr<Session> find(const std::string& id) {
        std::shared_lock lock(sessions_mutex);
        auto it = sessions.find(id);
        if (it == sessions.end()) throw HttpError{404, "UnknownSession", "no session " + id};
        return it->second;
    }

    // Mutation of seed and CT object as one step: both are computed before
    // either is stored.
    static void mutate(Session& s, int vertex) {
        Seed seed = mutate_seed(s.seed, vertex);
        std::optional<CTObject> ct;
        if (s.ct) ct = ct_mutate(*s.ct, vertex, *s.statics->table);
        s.seed = std::move(seed);
        s.ct = std::move(ct);
        s.history.push_back(vertex);
    }

    std::shared_ptr<Session> create(const Quiver& q, const std::vector<int>& history) {
        auto s = std::make_shared<Session>();
        s->statics = statics_for(q);
        s->seed = initial_seed(q);
        if (s->statics->ctx) s->ct = initial_ct_object(*s->statics->ctx);
        for (int v : history) mutate(*s, v);
        s->id = "s" + std::to_string(next_id++);
        std::unique_lock lock(sessions_mutex);
        sessions.emplace(s->id, s);
        return s;
    }

    const Statics& statics_from_query(const std::map<std::string, std::string>& query, std::shared_ptr<const Statics>& hold) {
        if (auto it = query.find("session"); it != query.end()) {
            hold = find(it->second)->statics;
        } else {
            hold = statics_for(default_quiver);
        }
        if (!hold->ctx) throw HttpError{400, "NotTypeA", "the quiver is not of type A"};
        return *hold;
    }

    Response route(const Request& r) {
        const auto parts = split_path(r.path);
        auto method_is = [&](const char* m) {
            if (r.method != m) throw HttpError{405, "MethodNotAllowed", r.method + " " + r.path};
        };

        if (parts.size() == 1 && parts[0] == "quiver") {
            method_is("GET");
            return {200, {{"quiver", io::quiver_to_json(default_quiver)}, {"type_a", is_type_a(default_quiver)}}};
        }
        if (parts.size() == 1 && parts[0] == "ar-quiver") {
            method_is("GET");
            std::shared_ptr<const Statics> hold;
            return {200, statics_from_query(r.query, hold).ar_quiver};
        }
        if (parts.size() == 1 && parts[0] == "cc-table") {
            method_is("GET");
            std::shared_ptr<const Statics> hold;
            return {200, statics_from_query(r.query, hold).cc_table};
        }
        if (parts.size() == 1 && parts[0] == "grassmannian") {
            method_is("GET");
            auto it = r.query.find("rep");
            if (it == r.query.end()) throw HttpError{400, "InvalidInput", "missing query parameter rep"};
            return {200, io::grassmannian_json(io::rep_from_json(io::parse_json(it->second)))};
        }
        if (parts.size() == 1 && parts[0] == "session") {
            method_is("POST");
            const Json body = parse_body(r.body);
            const Quiver q = body.empty() ? default_quiver : io::quiver_from_json(body);
            auto s = create(q, {});
            std::lock_guard lock(s->mutex);
            return {201, session_json(*s)};
        }
        if (parts.size() == 2 && parts[0] == "session" && parts[1] == "import") {
            method_is("POST");
            const Json body = parse_body(r.body);
            if (!body.is_object() || !body.contains("quiver")) throw HttpError{400, "InvalidInput", "export document lacks quiver"};
            std::vector<int> history;
            if (auto it = body.find("history"); it != body.end()) {
                if (!it->is_array()) throw HttpError{400, "InvalidInput", "history must be an array"};
                for (const auto& v : *it) {
                    if (!v.is_number_integer()) throw HttpError{400, "InvalidInput", "history entries are vertices"};
                    history.push_back(v.get<int>());
                }
            }
            auto s = create(io::quiver_from_json(body["quiver"]), history);
            std::lock_guard lock(s->mutex);
            return {201, session_json(*s)};
        }
        if (parts.size() >= 2 && parts[0] == "session") {
            auto s = find(parts[1]);
            if (parts.size() == 2) {
                method_is("GET");
                std::lock_guard lock(s->mutex);
                return {200, session_json(*s)};
            }
            if (parts.size() == 3 && parts[2] == "export") {
                method_is("GET");
                std::lock_guard lock(s->mutex);
                return {200, {{"quiver", io::quiver_to_json(s->statics->quiver)}, {"history", s->history}}};
            }
            if (parts.size() == 3 && parts[2] == "mutate") {
                method_is("POST");
                const int vertex = vertex_of(parse_body(r.body));
                std::lock_guard lock(s->mutex);
                try {
                    mutate(*s, vertex);
                } catch (const Error& e) {
                    Response resp = error_response(status_for(e.code()), std::string(error_code_name(e.code())), e.what());
                    resp.body["session"] = session_json(*s);
                    return resp;
                }
                Json out = session_json(*s);
                const auto k = static_cast<std::size_t>(vertex - 1);
                out["mutated_vertex"] = vertex;
                out["new_variable"] = io::laurent_json(s->seed.cluster[k]);
                out["new_summand"] = s->ct ? Json(s->ct->summands[k].id()) : Json(nullptr);
                return {200, out};
            }
        }
        throw HttpError{404, "NotFound", r.path};
    }
};

Service::Service(Quiver default_quiver, bool flip_b_sign) : impl_(std::make_unique<Impl>()) {
    impl_->default_quiver = std::move(default_quiver);
    impl_->flip_b_sign = flip_b_sign;
}

Service::~Service() = default;

Response Service::handle(const Request& request) {
    try {
        return impl_->route(request);
    } catch (const HttpError& e) {
        return error_response(e.status, e.code, e.message);
    } catch (const Error& e) {
        return error_response(status_for(e.code()), std::string(error_code_name(e.code())), e.what());
    } catch (const std::exception& e) {
        return error_response(500, "Internal", e.what());
    }
}

Response Service::handle(const std::string& method, const std::string& path, const std::string& body,
                         const std::map<std::string, std::string>& query) {
    return handle(Request{method, path, query, body});
}

struct HttpServer::Impl {
    Service& service;
    httplib::Server server;

    explicit Impl(Service& s) : service(s) {
        auto adapt = [this](const httplib::Request& req, httplib::Response& res) {
            Request r{req.method, req.path, {}, req.body};
            for (const auto& [k, v] : req.params) r.query.emplace(k, v);
            const Response out = service.handle(r);
            res.status = out.status;
            res.set_content(out.body.dump(), "application/json");
        };
        server.Get(".*", adapt);
        server.Post(".*", adapt);
        server.Put(".*", adapt);
        server.Delete(".*", adapt);
    }
};

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>(service)) {}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace clustercat
