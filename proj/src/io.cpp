#include "clustercat/io.hpp"

#include "clustercat/errors.hpp"
#include "clustercat/fpoly.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace clustercat::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { fail(ErrorCode::ParseError, what); }

const Json& member(const Json& j, const char* key, const char* context) {
    if (!j.is_object()) malformed(std::string(context) + " must be an object");
    auto it = j.find(key);
    if (it == j.end()) malformed(std::string(context) + " lacks \"" + key + "\"");
    return *it;
}

int as_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) malformed(what + " must be an integer");
    return j.get<int>();
}

std::string as_string(const Json& j, const std::string& what) {
    if (!j.is_string()) malformed(what + " must be a string");
    return j.get<std::string>();
}

Json array_of(const std::vector<int>& v) { return Json(v); }

Json big_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

}  // namespace

Json quiver_to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (const auto& a : q.arrows()) arrows.push_back({{"id", a.id}, {"s", a.source}, {"t", a.target}});
    return {{"n", q.vertex_count()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const Json& j) {
    const int n = as_int(member(j, "n", "quiver"), "quiver.n");
    if (n < 0) malformed("quiver.n must be non-negative");
    std::vector<Arrow> arrows;
    if (auto it = j.find("arrows"); it != j.end()) {
        if (!it->is_array()) malformed("quiver.arrows must be an array");
        for (const auto& a : *it) {
            Arrow arrow;
            if (auto id = a.find("id"); a.is_object() && id != a.end()) arrow.id = as_string(*id, "arrow id");
            arrow.source = as_int(member(a, "s", "arrow"), "arrow.s");
            arrow.target = as_int(member(a, "t", "arrow"), "arrow.t");
            arrows.push_back(std::move(arrow));
        }
    }
    return Quiver(n, std::move(arrows));
}

Json rep_to_json(const Representation& v) {
    Json mats = Json::object();
    for (const auto& a : v.quiver().arrows()) {
        const IntMatrix& m = v.matrix(a.id);
        Json rows = Json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
            rows.push_back(row);
        }
        mats[a.id] = rows;
    }
    Json out{{"quiver", quiver_to_json(v.quiver())}, {"dims", array_of(v.dims())}, {"matrices", mats}};
    if (!v.relations().empty()) {
        Json rels = Json::array();
        for (const auto& r : v.relations()) rels.push_back({{"paths", r.paths}, {"coeffs", r.coeffs}});
        out["relations"] = rels;
    }
    return out;
}

Representation rep_from_json(const Json& j) {
    const Quiver q = quiver_from_json(member(j, "quiver", "representation"));
    const Json& dims_j = member(j, "dims", "representation");
    if (!dims_j.is_array()) malformed("dims must be an array");
    DimVec dims;
    for (const auto& d : dims_j) dims.push_back(as_int(d, "dims entry"));
    if (static_cast<int>(dims.size()) != q.vertex_count()) {
        fail(ErrorCode::ShapeMismatch, "dims has " + std::to_string(dims.size()) + " entries for " +
                                           std::to_string(q.vertex_count()) + " vertices");
    }
    for (int d : dims) {
        if (d < 0) fail(ErrorCode::BadDims, "negative dimension");
    }

    std::map<std::string, IntMatrix> mats;
    if (auto it = j.find("matrices"); it != j.end()) {
        if (!it->is_object()) malformed("matrices must be an object keyed by arrow id");
        for (const auto& [id, rows] : it->items()) {
            if (!rows.is_array()) malformed("matrix " + id + " must be an array of rows");
            const std::size_t r = rows.size();
            const std::size_t c = r == 0 ? 0 : rows[0].size();
            IntMatrix m(r, c);
            for (std::size_t i = 0; i < r; ++i) {
                if (!rows[i].is_array() || rows[i].size() != c) fail(ErrorCode::ShapeMismatch, "ragged matrix " + id);
                for (std::size_t k = 0; k < c; ++k) {
                    if (!rows[i][k].is_number_integer()) malformed("matrix " + id + " has a non-integer entry");
                    m(i, k) = rows[i][k].get<std::int64_t>();
                }
            }
            // An empty row list cannot carry a column count; take it from the quiver.
            if (r == 0) {
                const Arrow& a = q.arrow(id);
                m = IntMatrix(0, static_cast<std::size_t>(dims[static_cast<std::size_t>(a.source - 1)]));
            }
            mats.emplace(id, std::move(m));
        }
    }

    std::vector<Relation> rels;
    if (auto it = j.find("relations"); it != j.end() && !it->is_null()) {
        if (!it->is_array()) malformed("relations must be an array");
        for (const auto& r : *it) {
            Relation rel;
            for (const auto& p : member(r, "paths", "relation")) {
                std::vector<std::string> path;
                for (const auto& a : p) path.push_back(as_string(a, "path arrow"));
                rel.paths.push_back(std::move(path));
            }
            for (const auto& c : member(r, "coeffs", "relation")) {
                if (!c.is_number_integer()) malformed("relation coefficient must be an integer");
                rel.coeffs.push_back(c.get<std::int64_t>());
            }
            if (rel.paths.size() != rel.coeffs.size()) fail(ErrorCode::LengthMismatch, "relation paths vs coeffs");
            rels.push_back(std::move(rel));
        }
    }
    return Representation(q, std::move(dims), std::move(mats), std::move(rels));
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidInput, "cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

Quiver read_quiver(const std::filesystem::path& path) {
    const Json j = read_json_file(path);
    // A representation file also names its quiver.
    if (j.is_object() && j.contains("quiver") && !j.contains("n")) return quiver_from_json(j["quiver"]);
    return quiver_from_json(j);
}

Representation read_rep(const std::filesystem::path& path) { return rep_from_json(read_json_file(path)); }

Json laurent_json(const LaurentPoly& f) { return {{"canonical", f.to_string()}, {"fraction", f.to_fraction_string()}}; }

Json ar_quiver_json(const ARQuiver& ar) {
    const auto& vs = ar.vertices();
    Json vertices = Json::array();
    for (const auto& m : vs) {
        const auto t = ar.tau_of(m);
        vertices.push_back({{"interval", m.to_string()},
                            {"composition_series", ar.composition_series(m)},
                            {"dims", array_of(m.dims(ar.rank()))},
                            {"projective", ar.is_projective(m)},
                            {"injective", ar.is_injective(m)},
                            {"tau", t ? Json(t->to_string()) : Json(nullptr)}});
    }
    Json arrows = Json::array();
    for (const auto& [from, to] : ar.arrows()) arrows.push_back({{"from", vs[from].to_string()}, {"to", vs[to].to_string()}});
    Json meshes = Json::array();
    for (const auto& m : vs) {
        if (ar.is_projective(m)) continue;
        const ARSequence s = ar_sequence(ar, m);
        Json middle = Json::array();
        for (const auto& y : s.middle) middle.push_back(y.to_string());
        meshes.push_back({{"tau_x", s.tau_x.to_string()}, {"middle", middle}, {"x", s.x.to_string()}});
    }
    return {{"quiver", quiver_to_json(ar.quiver())}, {"vertices", vertices}, {"arrows", arrows}, {"meshes", meshes}};
}

Json cc_table_json(const TypeAContext& ctx, const CCTable& table) {
    Json entries = Json::array();
    for (const auto& x : table.objects()) {
        Json e{{"object", x.id()}, {"index", object_index(ctx, x)}, {"cc", laurent_json(table.at(x))}};
        if (x.is_module()) {
            e["composition_series"] = ctx.ar().composition_series(x.interval());
            e["fpoly"] = ctx.f_polynomial_of(x.interval()).poly.to_string();
        }
        entries.push_back(std::move(e));
    }
    return {{"quiver", quiver_to_json(ctx.quiver())}, {"entries", entries}};
}

Json seed_json(const Seed& s) {
    Json cluster = Json::array();
    for (const auto& u : s.cluster) cluster.push_back(laurent_json(u));
    return {{"quiver", quiver_to_json(s.quiver)}, {"cluster", cluster}, {"canonical", s.canonical()}};
}

Json ct_object_json(const CTObject& r, const CCTable& table) {
    Json summands = Json::array();
    for (const auto& x : r.summands) summands.push_back({{"object", x.id()}, {"cc", laurent_json(table.at(x))}});
    return {{"quiver", quiver_to_json(r.quiver)}, {"summands", summands}, {"canonical", r.canonical()}};
}

Json grassmannian_json(const Representation& v) {
    Json table = Json::array();
    for (const auto& [e, chi] : grass_table(v)) table.push_back({{"e", array_of(e)}, {"chi", big_json(chi)}});
    return {{"dims", array_of(v.dims())}, {"table", table}, {"fpoly", f_polynomial(v).poly.to_string()}};
}

}  // namespace clustercat::io
