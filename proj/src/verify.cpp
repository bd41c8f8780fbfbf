#include "clustercat/verify.hpp"

#include "clustercat/charcat.hpp"
#include "clustercat/clusteralg.hpp"
#include "clustercat/errors.hpp"
#include "clustercat/fpoly.hpp"
#include "clustercat/grass.hpp"
#include "clustercat/samples.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <set>
#include <sstream>

namespace clustercat {

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::string join(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

// Lazily built contexts, tables and enumerations shared by the checks of one run.
class Workspace {
public:
    explicit Workspace(VerifyOptions options) : options_(options) {}

    const TypeAContext& context(int n) {
        auto& slot = contexts_[n];
        if (!slot) slot = std::make_unique<TypeAContext>(samples::linear_a(n), options_.flip_b_sign);
        return *slot;
    }

    const CCTable& table(int n) {
        auto it = tables_.find(n);
        if (it == tables_.end()) it = tables_.emplace(n, cc_table(context(n))).first;
        return it->second;
    }

    const std::vector<CTObject>& ct_objects(int n) {
        auto it = cts_.find(n);
        if (it == cts_.end()) it = cts_.emplace(n, ct_enumerate(context(n), table(n))).first;
        return it->second;
    }

    const SeedEnumeration& seeds(int n) {
        auto it = seeds_.find(n);
        if (it == seeds_.end()) it = seeds_.emplace(n, enumerate_seeds(samples::linear_a(n))).first;
        return it->second;
    }

private:
    VerifyOptions options_;
    std::map<int, std::unique_ptr<TypeAContext>> contexts_;
    std::map<int, CCTable> tables_;
    std::map<int, std::vector<CTObject>> cts_;
    std::map<int, SeedEnumeration> seeds_;
};

using CheckFn = std::function<std::string(Workspace&)>;

struct Check {
    int criterion;
    std::string suite;
    std::string name;
    CheckFn run;
};

IntPolyY Y(const char* s, std::size_t n) { return IntPolyY::parse(s, n); }
LaurentPoly X(const char* s, std::size_t n) { return LaurentPoly::parse(s, n); }

void expect_f(const Representation& v, const IntPolyY& expected, const std::string& label) {
    const IntPolyY got = f_polynomial(v).poly;
    expect(got == expected, label + ": F = " + got.to_string() + ", expected " + expected.to_string());
}

Representation sum_of(const Quiver& q, const std::vector<Interval>& parts) {
    Representation out = Representation::zero(q.opposite());
    for (const auto& p : parts) out = direct_sum(out, interval_module(q, p.a, p.b));
    return out;
}

std::string check_kronecker_table(Workspace&) {
    const std::map<DimVec, int> golden{{{0, 0}, 1}, {{0, 1}, 2}, {{0, 2}, 1}, {{1, 0}, 0}, {{1, 1}, 1},
                                       {{1, 2}, 2}, {{2, 0}, 0}, {{2, 1}, 0}, {{2, 2}, 1}};
    const auto table = grass_table(samples::kronecker_v());
    expect(table.size() == golden.size(), "table has " + std::to_string(table.size()) + " rows");
    for (const auto& [e, chi] : table) {
        auto it = golden.find(e);
        expect(it != golden.end(), "unexpected e = " + join(e));
        expect(chi == it->second, "chi at e = " + join(e) + " is " + chi.str() + ", expected " + std::to_string(it->second));
    }
    return "9 dimension vectors, nonzero values 1,2,1,1,2,1";
}

std::string check_golden_fpolys(Workspace&) {
    expect_f(samples::kronecker_v(), Y("1 + 2*y2 + y2^2 + y1*y2 + 2*y1*y2^2 + y1^2*y2^2", 2), "Kronecker V");
    expect_f(samples::loop_block(1), Y("1 + y", 1), "loop V1");
    expect_f(samples::loop_block(2), Y("1 + y + y^2", 1), "loop V2");
    expect_f(samples::kronecker_line(true), Y("1 + y2 + y1*y2", 2), "Kronecker (0,1)");
    expect_f(samples::kronecker_line(false), Y("1 + y2 + y1*y2", 2), "Kronecker (1,0)");
    expect(!(samples::kronecker_line(true) == samples::kronecker_line(false)), "the two Kronecker reps coincide");
    expect_f(samples::two_cycle_rep(), Y("1 + y1 + y1*y2 + y1^2*y2", 2), "2-cycle");
    return "Kronecker, loop, two line reps, 2-cycle";
}

std::string check_binomials(Workspace&) {
    const char* golden[] = {"1", "1 + y", "1 + 2*y + y^2", "1 + 3*y + 3*y^2 + y^3", "1 + 4*y + 6*y^2 + 4*y^3 + y^4",
                            "1 + 5*y + 10*y^2 + 10*y^3 + 5*y^4 + y^5"};
    for (int d = 0; d <= 5; ++d) expect_f(samples::vector_space(d), Y(golden[d], 1), "k^" + std::to_string(d));
    return "d = 0..5";
}

std::string check_direct_sum_grid(Workspace&) {
    std::vector<std::vector<Representation>> families(5);
    families[0] = {samples::loop_block(1), samples::loop_block(2)};
    families[1] = {samples::kronecker_v(), samples::kronecker_line(true), samples::kronecker_line(false)};
    families[2] = {samples::two_cycle_rep()};
    for (int d = 0; d <= 5; ++d) families[3].push_back(samples::vector_space(d));
    const Quiver a4 = samples::linear_a(4);
    for (int a = 1; a <= 4; ++a) {
        for (int b = a; b <= 4; ++b) families[4].push_back(interval_module(a4, a, b));
    }
    int pairs = 0;
    for (const auto& family : families) {
        for (std::size_t i = 0; i < family.size(); ++i) {
            for (std::size_t j = 0; j < family.size(); ++j) {
                expect(check_product(family[i], family[j]), "F_V F_W != F_{V+W} for pair " + std::to_string(i) + "," +
                                                                std::to_string(j) + " on " +
                                                                std::to_string(family[i].quiver().vertex_count()) +
                                                                " vertices");
                ++pairs;
            }
        }
    }
    return std::to_string(pairs) + " ordered pairs";
}

std::string check_ar_fpoly(Workspace&) {
    expect(check_ar_identity(samples::loop_block(1), samples::loop_block(2), samples::loop_block(1)), "loop sequence");
    int meshes = 0;
    for (int n : {4, 5}) {
        const Quiver q = samples::linear_a(n);
        const ARQuiver ar = knit(q);
        for (const auto& x : ar.vertices()) {
            if (ar.is_projective(x)) continue;
            const ARSequence s = ar_sequence(ar, x);
            expect(check_ar_identity(interval_module(q, s.tau_x.a, s.tau_x.b), sum_of(q, s.middle),
                                     interval_module(q, x.a, x.b)),
                   "mesh ending at " + x.to_string() + " on A" + std::to_string(n));
            ++meshes;
        }
    }
    expect(meshes == 6 + 10, "knitted " + std::to_string(meshes) + " meshes");
    return "loop + " + std::to_string(meshes) + " meshes of A4, A5";
}

std::string check_index_pins(Workspace& w) {
    const TypeAContext& ctx = w.context(4);
    auto pin = [&](const IndecObject& x, const IndexVec& expected) {
        const auto got = object_index(ctx, x);
        expect(got == expected, "ind " + x.id() + " = " + join(got) + ", expected " + join(expected));
    };
    pin(IndecObject::module({2, 2}), {0, -1, 1, 0});
    pin(IndecObject::module({1, 3}), {-1, 0, 0, 1});
    pin(IndecObject::module({1, 1}), {-1, 1, 0, 0});
    for (int i = 1; i <= 4; ++i) {
        IndexVec e(4, 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        pin(IndecObject::shifted_projective(i), e);
    }
    return "S2, 3/2/1, S1, T1..T4";
}

std::string check_cc_pins(Workspace& w) {
    const TypeAContext& ctx = w.context(4);
    const LaurentPoly expected = lp_exact_div(X("x1*x2 + x1*x4 + x3*x4 + x2*x3*x4", 4), X("x1*x2*x3", 4));
    const LaurentPoly got = cc(ctx, IndecObject::module({1, 3}));
    expect(got == expected, "CC(3/2/1) = " + got.to_string() + ", expected " + expected.to_string());
    for (int i = 1; i <= 4; ++i) {
        expect(cc(ctx, IndecObject::shifted_projective(i)) == LaurentPoly::variable(4, static_cast<std::size_t>(i)),
               "CC(T" + std::to_string(i) + ")");
    }
    expect(cc_zero(ctx) == X("1", 4), "CC(0)");
    return "CC(3/2/1) = " + got.to_fraction_string();
}

std::string check_iota(Workspace& w) {
    int objects = 0;
    for (int n = 1; n <= 5; ++n) {
        const TypeAContext& ctx = w.context(n);
        for (int a = 1; a <= n; ++a) {
            for (int b = a; b <= n; ++b) {
                const auto x = IndecObject::module({a, b});
                const auto lhs = object_index(ctx, x);
                const auto sx = object_index(ctx, sigma(ctx.ar(), x));
                const auto rhs = iota(x.interval().dims(n), ctx.b());
                for (int i = 0; i < n; ++i) {
                    expect(lhs[i] + sx[i] == rhs[i], "A" + std::to_string(n) + " " + x.id() + ": " + join(lhs) + " + " +
                                                         join(sx) + " != " + join(rhs));
                }
                ++objects;
            }
        }
    }
    return std::to_string(objects) + " intervals";
}

std::string check_ar_multiplication(Workspace& w) {
    std::size_t meshes = 0;
    for (int n = 1; n <= 5; ++n) {
        const auto checks = verify_ar_multiplication(w.context(n));
        expect(checks.size() == static_cast<std::size_t>(n * (n - 1) / 2), "mesh count on A" + std::to_string(n));
        meshes += checks.size();
    }
    return std::to_string(meshes) + " meshes";
}

std::string check_categorification(Workspace& w) {
    std::ostringstream detail;
    for (int n = 1; n <= 5; ++n) {
        const CCTable& table = w.table(n);
        std::set<std::string> category;
        for (const auto& x : table.objects()) category.insert(table.at(x).to_string());
        const SeedEnumeration& e = w.seeds(n);
        std::set<std::string> algebra;
        for (const auto& u : e.variables) algebra.insert(u.to_string());
        const auto expected = static_cast<std::size_t>(n * (n + 3) / 2);
        const std::string an = "A" + std::to_string(n);
        expect(category.size() == expected, an + ": " + std::to_string(category.size()) + " CC values");
        expect(category == algebra, an + ": CC values differ from the cluster variables");
        const auto& cts = w.ct_objects(n);
        expect(cts.size() == e.seeds.size(), an + ": " + std::to_string(cts.size()) + " CT objects vs " +
                                                 std::to_string(e.seeds.size()) + " seeds");
        detail << (n > 1 ? ", " : "") << an << " " << expected << "/" << cts.size();
    }
    return detail.str();
}

std::string check_exchange(Workspace& w) {
    const TypeAContext& ctx = w.context(4);
    const CCTable& table = w.table(4);
    int checks = 0;
    for (const auto& r : w.ct_objects(4)) {
        for (int i = 1; i <= 4; ++i) {
            std::string why;
            expect(verify_exchange(ctx, r, i, table, &why), why);
            ++checks;
        }
    }
    expect(checks == 42 * 4, std::to_string(checks) + " exchange checks");
    return "42 x 4 exchanges";
}

std::string check_laurent(Workspace& w) {
    try {
        for (int n = 1; n <= 5; ++n) w.seeds(n);
        for (int n = 1; n <= 4; ++n) w.ct_objects(n);
    } catch (const Error& e) {
        expect(e.code() != ErrorCode::NotDivisible, e.what());
        throw;
    }
    try {
        enumerate_seeds(samples::kronecker(), 8);
        throw Failure("Kronecker BFS terminated");
    } catch (const DepthExceededError& e) {
        return "Kronecker to depth 8: " + std::to_string(e.partial().variables.size()) + " variables, all exact";
    } catch (const Error& e) {
        expect(e.code() != ErrorCode::NotDivisible, e.what());
        throw;
    }
}

std::string check_index_injective(Workspace& w) {
    const TypeAContext& ctx = w.context(4);
    std::set<IndexVec> seen;
    for (const auto& x : cluster_indecomposables(ctx.quiver())) {
        expect(seen.insert(object_index(ctx, x)).second, "repeated index at " + x.id());
    }
    expect(seen.size() == 14, std::to_string(seen.size()) + " indices");
    return "14 distinct";
}

const std::vector<Check>& registry() {
    static const std::vector<Check> checks{
        {1, "grass", "Kronecker Grassmannian table", check_kronecker_table},
        {2, "fpoly", "golden F-polynomials", check_golden_fpolys},
        {2, "fpoly", "binomial F-polynomials", check_binomials},
        {3, "fpoly", "direct-sum identity", check_direct_sum_grid},
        {4, "fpoly", "almost-split identity", check_ar_fpoly},
        {5, "char", "index pins", check_index_pins},
        {6, "char", "CC pins", check_cc_pins},
        {7, "char", "iota consistency", check_iota},
        {8, "char", "AR multiplication", check_ar_multiplication},
        {9, "algebra", "categorification", check_categorification},
        {10, "char", "exchange identity", check_exchange},
        {11, "algebra", "Laurent phenomenon", check_laurent},
        {12, "char", "index injectivity", check_index_injective},
    };
    return checks;
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : checks) {
        list.push_back({{"criterion", c.criterion},
                        {"suite", c.suite},
                        {"name", c.name},
                        {"passed", c.passed},
                        {"detail", c.detail},
                        {"seconds", c.seconds}});
    }
    return {{"suite", suite},
            {"passed", passed()},
            {"fault_injection", options.flip_b_sign ? nlohmann::json("flip-b") : nlohmann::json(nullptr)},
            {"checks", list}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"fpoly", "grass", "char", "algebra", "all"};
    return names;
}

std::string criterion_title(int k) {
    static const char* titles[] = {"",
                                   "Kronecker Grassmannian table",
                                   "F-polynomial golden set",
                                   "direct-sum identity",
                                   "almost-split identity for F",
                                   "index pins",
                                   "cluster character pins",
                                   "iota consistency",
                                   "AR multiplication",
                                   "categorification of A_n, n <= 5",
                                   "exchange identity on A4",
                                   "Laurent phenomenon",
                                   "index injectivity on A4"};
    if (k < 1 || k > 12) fail(ErrorCode::InvalidInput, "criterion " + std::to_string(k));
    return titles[k];
}

VerifyReport run_verify(const std::string& suite, const VerifyOptions& options) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        fail(ErrorCode::InvalidInput, "unknown suite \"" + suite + "\" (fpoly, grass, char, algebra, all)");
    }
    VerifyReport report{suite, options, {}};
    Workspace workspace(options);
    for (const auto& check : registry()) {
        if (suite != "all" && check.suite != suite) continue;
        CheckResult result{check.criterion, check.suite, check.name, false, "", 0};
        const auto start = std::chrono::steady_clock::now();
        try {
            result.detail = check.run(workspace);
            result.passed = true;
        } catch (const std::exception& e) {
            result.detail = e.what();
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.checks.push_back(std::move(result));
    }
    return report;
}

}  // namespace clustercat
