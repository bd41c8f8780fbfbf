#include "clustercat/charcat.hpp"
#include "clustercat/clusteralg.hpp"
#include "clustercat/errors.hpp"
#include "clustercat/fpoly.hpp"
#include "clustercat/grass.hpp"
#include "clustercat/io.hpp"
#include "clustercat/samples.hpp"
#include "clustercat/service.hpp"
#include "clustercat/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace clustercat;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct Globals {
    std::string quiver_file;
    std::string rep_file;
    bool json = false;
    int max_depth = 12;
};

Quiver load_quiver(const Globals& g) {
    return g.quiver_file.empty() ? samples::linear_a(4) : io::read_quiver(g.quiver_file);
}

Representation load_rep(const Globals& g) {
    if (g.rep_file.empty()) fail(ErrorCode::InvalidInput, "--rep FILE is required");
    return io::read_rep(g.rep_file);
}

std::vector<int> parse_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            fail(ErrorCode::ParseError, "expected comma-separated integers, got \"" + text + "\"");
        }
    }
    return out;
}

std::string vec_string(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_fpoly(const Globals& g) {
    const FPolynomial f = f_polynomial(load_rep(g));
    if (g.json) {
        print({{"fpoly", f.poly.to_string()}, {"dims", f.dim}});
    } else {
        std::cout << f.poly.to_string() << "\n";
    }
    return kOk;
}

int cmd_grassmannian(const Globals& g, const std::string& e_text) {
    const Representation v = load_rep(g);
    if (!e_text.empty()) {
        const DimVec e = parse_list(e_text);
        const UniPolyQ n = counting_polynomial(v, e);
        const BigInt chi = euler_char(v, e);
        if (g.json) {
            print({{"e", e}, {"chi", chi.str()}, {"counting_polynomial", n.to_string()}});
        } else {
            std::cout << vec_string(e) << "  chi = " << chi << "  N(q) = " << n.to_string() << "\n";
        }
        return kOk;
    }
    if (g.json) {
        print(io::grassmannian_json(v));
    } else {
        for (const auto& [e, chi] : grass_table(v)) std::cout << vec_string(e) << "  " << chi << "\n";
    }
    return kOk;
}

int cmd_cc(const Globals& g, const std::string& object) {
    const TypeAContext ctx(load_quiver(g));
    const IndecObject x = IndecObject::parse(object);
    if (x.is_module() && x.interval().b > ctx.rank()) fail(ErrorCode::BadInterval, object + " for rank " + std::to_string(ctx.rank()));
    if (x.is_shifted_projective() && x.vertex() > ctx.rank()) fail(ErrorCode::VertexOutOfRange, object);
    const LaurentPoly value = cc(ctx, x);
    if (g.json) {
        print({{"object", x.id()}, {"index", object_index(ctx, x)}, {"cc", io::laurent_json(value)}});
    } else {
        std::cout << value.to_string() << "\n";
    }
    return kOk;
}

int cmd_cc_table(const Globals& g) {
    const TypeAContext ctx(load_quiver(g));
    const CCTable table = cc_table(ctx);
    if (g.json) {
        print(io::cc_table_json(ctx, table));
        return kOk;
    }
    for (const auto& x : table.objects()) {
        std::cout << x.id() << "  " << vec_string(object_index(ctx, x)) << "  " << table.at(x).to_string() << "\n";
    }
    return kOk;
}

int cmd_index(const Globals& g, const std::string& object) {
    const TypeAContext ctx(load_quiver(g));
    std::vector<IndecObject> objects;
    if (object.empty()) {
        objects = cluster_indecomposables(ctx.quiver());
    } else {
        objects.push_back(IndecObject::parse(object));
    }
    Json out = Json::array();
    for (const auto& x : objects) {
        const IndexVec ind = object_index(ctx, x);
        if (g.json) {
            out.push_back({{"object", x.id()}, {"index", ind}});
        } else {
            std::cout << (object.empty() ? x.id() + "  " : "") << vec_string(ind) << "\n";
        }
    }
    if (g.json) print(object.empty() ? out : out[0]);
    return kOk;
}

int cmd_ar_quiver(const Globals& g) {
    const ARQuiver ar = knit(load_quiver(g));
    if (g.json) {
        print(io::ar_quiver_json(ar));
        return kOk;
    }
    std::cout << "vertices\n";
    for (const auto& m : ar.vertices()) {
        const auto t = ar.tau_of(m);
        std::cout << "  " << m.to_string() << "  " << ar.composition_series(m) << "  tau = " << (t ? t->to_string() : "0")
                  << (ar.is_projective(m) ? "  projective" : "") << (ar.is_injective(m) ? "  injective" : "") << "\n";
    }
    std::cout << "arrows\n";
    for (const auto& [from, to] : ar.arrows()) {
        std::cout << "  " << ar.vertices()[from].to_string() << " -> " << ar.vertices()[to].to_string() << "\n";
    }
    std::cout << "meshes\n";
    for (const auto& m : ar.vertices()) {
        if (ar.is_projective(m)) continue;
        const ARSequence s = ar_sequence(ar, m);
        std::string middle;
        for (const auto& y : s.middle) middle += (middle.empty() ? "" : " + ") + y.to_string();
        std::cout << "  0 -> " << s.tau_x.to_string() << " -> " << middle << " -> " << s.x.to_string() << " -> 0\n";
    }
    return kOk;
}

void print_seed(const Seed& s) {
    for (std::size_t i = 0; i < s.cluster.size(); ++i) {
        std::cout << "x'" << i + 1 << " = " << s.cluster[i].to_fraction_string() << "    [" << s.cluster[i].to_string() << "]\n";
    }
    std::cout << "quiver:";
    if (s.quiver.arrows().empty()) std::cout << " no arrows";
    for (const auto& a : s.quiver.arrows()) std::cout << " " << a.source << "->" << a.target;
    std::cout << "\n";
}

int cmd_mutate(const Globals& g, const std::string& seq) {
    Seed s = initial_seed(load_quiver(g));
    const std::vector<int> steps = seq.empty() ? std::vector<int>{} : parse_list(seq);
    for (int i : steps) s = mutate_seed(s, i);
    if (g.json) {
        Json out = io::seed_json(s);
        out["sequence"] = steps;
        print(out);
    } else {
        print_seed(s);
    }
    return kOk;
}

void print_enumeration(const SeedEnumeration& e, bool json, bool complete) {
    if (json) {
        Json vars = Json::array();
        for (const auto& u : e.variables) vars.push_back(u.to_string());
        print({{"complete", complete}, {"depth", e.depth}, {"seeds", e.seeds.size()}, {"variable_count", e.variables.size()},
               {"variables", vars}});
        return;
    }
    std::cout << "seeds: " << e.seeds.size() << "\n";
    std::cout << "variables: " << e.variables.size() << "\n";
    std::cout << "depth: " << e.depth << (complete ? "" : " (incomplete)") << "\n";
    for (const auto& u : e.variables) std::cout << u.to_string() << "\n";
}

int cmd_enumerate(const Globals& g) {
    try {
        print_enumeration(enumerate_seeds(load_quiver(g), g.max_depth), g.json, true);
        return kOk;
    } catch (const DepthExceededError& e) {
        print_enumeration(e.partial(), g.json, false);
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}

int cmd_verify(const Globals& g, const std::string& suite, const std::string& fault) {
    VerifyOptions options;
    if (fault == "flip-b") {
        options.flip_b_sign = true;
    } else if (!fault.empty()) {
        fail(ErrorCode::InvalidInput, "unknown fault \"" + fault + "\" (flip-b)");
    }
    const VerifyReport report = run_verify(suite, options);
    if (g.json) {
        print(report.to_json());
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.passed ? "PASS" : "FAIL") << "  [" << c.criterion << "] " << c.suite << ": " << c.name << "  -  "
                      << c.detail << "\n";
        }
        std::cout << (report.passed() ? "all checks passed" : "verification FAILED") << "\n";
    }
    return report.passed() ? kOk : kVerifyFailed;
}

int cmd_serve(const Globals& g, const std::string& host, int port) {
    Service service(load_quiver(g));
    HttpServer server(service);
    const int bound = server.bind(host, port);
    if (bound < 0) fail(ErrorCode::InvalidInput, "cannot bind " + host + ":" + std::to_string(port));
    std::cerr << "listening on http://" << host << ":" << bound << "\n";
    return server.listen() ? kOk : kInputError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cluster algebras and cluster characters of quiver representations"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--quiver", g.quiver_file, "quiver JSON file (default: linear A4)");
    app.add_option("--rep", g.rep_file, "representation JSON file");
    app.add_flag("--json", g.json, "emit JSON");
    app.add_option("--max-depth", g.max_depth, "BFS depth bound for enumerate")->check(CLI::NonNegativeNumber);

    std::string e_text, object, seq, suite = "all", fault, host = "127.0.0.1";
    int port = 8080;
    auto* fpoly = app.add_subcommand("fpoly", "F-polynomial of --rep");
    auto* grass = app.add_subcommand("grassmannian", "Euler characteristics of quiver Grassmannians of --rep");
    grass->add_option("--e", e_text, "single dimension vector, e.g. 1,2");
    auto* ccmd = app.add_subcommand("cc", "cluster character of one object");
    ccmd->add_option("--object", object, "\"[a,b]\" or \"T<i>\"")->required();
    auto* table = app.add_subcommand("cc-table", "every indecomposable with its index and CC");
    auto* index = app.add_subcommand("index", "index of one object, or of all");
    index->add_option("--object", object, "\"[a,b]\" or \"T<i>\"");
    auto* ar = app.add_subcommand("ar-quiver", "Auslander-Reiten quiver by knitting");
    auto* mutate = app.add_subcommand("mutate", "seed after a mutation sequence");
    mutate->add_option("--seq", seq, "comma-separated vertices, e.g. 1,2,1");
    auto* enumerate = app.add_subcommand("enumerate", "all seeds by breadth-first search");
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite, "fpoly, grass, char, algebra or all")
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--inject-fault", fault, "flip-b: negate the exchange matrix");
    auto* serve = app.add_subcommand("serve", "JSON service over HTTP");
    serve->add_option("--port", port, "0 picks a free port")->check(CLI::Range(0, 65535));
    serve->add_option("--host", host);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*fpoly) return cmd_fpoly(g);
        if (*grass) return cmd_grassmannian(g, e_text);
        if (*ccmd) return cmd_cc(g, object);
        if (*table) return cmd_cc_table(g);
        if (*index) return cmd_index(g, object);
        if (*ar) return cmd_ar_quiver(g);
        if (*mutate) return cmd_mutate(g, seq);
        if (*enumerate) return cmd_enumerate(g);
        if (*verify) return cmd_verify(g, suite, fault);
        if (*serve) return cmd_serve(g, host, port);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
