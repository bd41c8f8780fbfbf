#include "clustercat/errors.hpp"
#include "clustercat/fpoly.hpp"
#include "clustercat/io.hpp"
#include "clustercat/samples.hpp"

#include <doctest.h>

#include <functional>

using namespace clustercat;
using io::Json;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidInput;
}

std::filesystem::path data(const char* name) { return std::filesystem::path(CLUSTERCAT_DATA_DIR) / name; }

}  // namespace

TEST_CASE("quiver JSON") {
    const Quiver q = io::quiver_from_json(Json::parse(R"({"n": 3, "arrows": [{"s": 1, "t": 2}, {"id": "b", "s": 3, "t": 2}]})"));
    CHECK(q.vertex_count() == 3);
    CHECK(q.arrows()[0].id == "a1");
    CHECK(q.arrows()[1].id == "b");
    CHECK(io::quiver_from_json(io::quiver_to_json(q)) == q);
    CHECK(io::quiver_to_json(samples::linear_a(2)) == Json::parse(R"({"n": 2, "arrows": [{"id": "a1", "s": 1, "t": 2}]})"));
    CHECK(io::quiver_from_json(Json::parse(R"({"n": 1})"))== Quiver(1, {}));

    CHECK(code_of([] { io::quiver_from_json(Json::parse(R"({"arrows": []})")); }) == ErrorCode::ParseError);
    CHECK(code_of([] { io::quiver_from_json(Json::parse(R"({"n": "4"})")); }) == ErrorCode::ParseError);
    CHECK(code_of([] { io::quiver_from_json(Json::parse(R"({"n": 2, "arrows": [{"s": 1}]})")); }) == ErrorCode::ParseError);
    CHECK(code_of([] { io::quiver_from_json(Json::parse(R"({"n": 2, "arrows": [{"s": 1, "t": 3}]})")); }) ==
          ErrorCode::VertexOutOfRange);
    CHECK(code_of([] { io::parse_json("{\"n\": "); }) == ErrorCode::ParseError);
}

TEST_CASE("representation JSON") {
    const Representation v = samples::kronecker_v();
    const Json j = io::rep_to_json(v);
    CHECK(j["matrices"]["b"] == Json::parse("[[1,1],[0,1]]"));
    CHECK(io::rep_from_json(j) == v);
    CHECK(io::rep_from_json(io::rep_to_json(samples::two_cycle_rep())) == samples::two_cycle_rep());

    // Row count follows the target: a 1 -> 2 arrow with dims (3, 0) has a 0 x 3 matrix.
    const Representation z =
        io::rep_from_json(Json::parse(R"({"quiver": {"n": 2, "arrows": [{"id": "a", "s": 1, "t": 2}]}, "dims": [3, 0],
                                           "matrices": {"a": []}})"));
    CHECK(z.matrix("a").rows() == 0);
    CHECK(z.matrix("a").cols() == 3);

    const char* kq = R"({"n": 2, "arrows": [{"id": "a", "s": 1, "t": 2}]})";
    auto rep = [&](const std::string& rest) { return Json::parse(std::string(R"({"quiver": )") + kq + "," + rest + "}"); };
    CHECK(code_of([&] { io::rep_from_json(rep(R"("dims": [1], "matrices": {})")); }) == ErrorCode::ShapeMismatch);
    CHECK(code_of([&] { io::rep_from_json(rep(R"("dims": [2, 1], "matrices": {"a": [[1, 0], [0]]})")); }) ==
          ErrorCode::ShapeMismatch);
    CHECK(code_of([&] { io::rep_from_json(rep(R"("dims": [2, 1], "matrices": {"a": [[1, 0], [0, 1]]})")); }) ==
          ErrorCode::ShapeMismatch);
    CHECK(code_of([&] { io::rep_from_json(rep(R"("dims": [1, 1], "matrices": {"a": [[0.5]]})")); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { io::rep_from_json(rep(R"("dims": [-1, 1], "matrices": {})")); }) == ErrorCode::BadDims);
    CHECK(code_of([&] { io::rep_from_json(rep(R"("matrices": {})")); }) == ErrorCode::ParseError);
}

TEST_CASE("sample files") {
    const Representation loop2 = io::read_rep(data("loop_v2.json"));
    CHECK(loop2 == samples::loop_block(2));
    REQUIRE(loop2.relations().size() == 1);
    CHECK(check_relations(loop2, loop2.relations()));
    CHECK(io::rep_to_json(loop2)["relations"][0]["paths"] == Json::parse(R"([["l", "l"]])"));

    CHECK(io::read_rep(data("kronecker_v.json")) == samples::kronecker_v());
    CHECK(io::read_rep(data("kronecker_line.json")) == samples::kronecker_line(true));
    CHECK(io::read_rep(data("two_cycle.json")) == samples::two_cycle_rep());
    CHECK(io::read_quiver(data("a4.json")) == samples::linear_a(4));
    CHECK(io::read_quiver(data("kronecker.json")) == samples::kronecker());
    CHECK(io::read_quiver(data("kronecker_v.json")) == samples::kronecker());
    CHECK(is_type_a(io::read_quiver(data("a4_alternating.json"))));
    CHECK(code_of([] { io::read_quiver(data("missing.json")); }) == ErrorCode::InvalidInput);
}

TEST_CASE("result documents") {
    CHECK(io::laurent_json(LaurentPoly::parse("x1*x2^-1 + x2^-1*x3", 4)) ==
          Json{{"canonical", "x1*x2^-1 + x2^-1*x3"}, {"fraction", "(x1 + x3)/x2"}});

    const TypeAContext ctx(samples::linear_a(4));
    const Json table = io::cc_table_json(ctx, cc_table(ctx));
    REQUIRE(table["entries"].size() == 14);
    const Json& e13 = table["entries"][2];
    CHECK(e13["object"] == "[1,3]");
    CHECK(e13["composition_series"] == "3/2/1");
    CHECK(e13["index"] == Json::parse("[-1, 0, 0, 1]"));
    CHECK(e13["cc"]["canonical"] == LaurentPoly::parse("x3^-1 + x2^-1*x3^-1*x4 + x1^-1*x2^-1*x4 + x1^-1*x4", 4).to_string());
    CHECK(table["entries"][13]["object"] == "T4");
    CHECK(table["entries"][13]["cc"]["canonical"] == "x4");

    const Json ar = io::ar_quiver_json(ctx.ar());
    CHECK(ar["vertices"].size() == 10);
    CHECK(ar["meshes"].size() == 6);
    CHECK(ar["arrows"].size() == 12);
    CHECK(ar["vertices"][0]["tau"].is_null());

    const Json g = io::grassmannian_json(samples::kronecker_v());
    REQUIRE(g["table"].size() == 9);
    CHECK(g["table"][1] == Json{{"e", {0, 1}}, {"chi", 2}});
    CHECK(g["fpoly"] == f_polynomial(samples::kronecker_v()).poly.to_string());
}
