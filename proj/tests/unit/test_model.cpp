#include "lcmid/errors.hpp"
#include "lcmid/families.hpp"
#include "lcmid/model.hpp"
#include "lcmid/model_io.hpp"

#include "doctest.h"

#include <numeric>

using namespace lcmid;

namespace {

ModelSpec cycle4() { return build({Family::cycle, 4, {1}, {3}, {}, {}, {}}); }

}  // namespace

TEST_CASE("parse the four-compartment cycle") {
    const ModelSpec m = parse_model_json(R"({"n": 4, "edges": [[4,1],[1,2],[2,3],[3,4]], "in": [1], "out": [3]})");
    CHECK(m == cycle4());
    CHECK(m.leaks.empty());
    CHECK(m.parameter_count() == 4);
}

TEST_CASE("canonical JSON round trip") {
    const ModelSpec m = build({Family::wing, 5, {1}, {1}, {3}, {}, {}});
    const std::string text = model_to_string(m);
    CHECK(parse_model_json(text) == m);
    CHECK(text.rfind("{\n  \"n\": 5,", 0) == 0);
    CHECK(text.back() == '\n');
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_model_json("{\n  \"n\": 3,\n  \"edges\": [[1, 2],, ]\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() > 0);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("schema errors") {
    CHECK_THROWS_AS(parse_model_json(R"({"n": 3, "edges": [], "out": [1], "extra": 1})"), ParseError);
    CHECK_THROWS_AS(parse_model_json(R"({"n": 3, "edges": []})"), ParseError);
    CHECK_THROWS_AS(parse_model_json(R"({"n": 3, "edges": [[1]], "out": [1]})"), ParseError);
    CHECK_THROWS_AS(parse_model_json(R"({"n": 3, "edges": [[1, "2"]], "out": [1]})"), ParseError);
    CHECK_THROWS_AS(parse_model_json("[1, 2]"), ParseError);
    CHECK_THROWS_AS(load_model_file("/nonexistent/model.json"), ParseError);
}

TEST_CASE("validation reports every violated invariant") {
    ModelSpec m;
    m.n = 3;
    m.edges = {{1, 1}, {1, 2}, {1, 2}, {2, 5}};
    m.inputs = {4};
    const auto errors = validation_errors(m);
    CHECK(errors.size() == 5);  // self-loop, duplicate, endpoint, input range, no output
    CHECK_THROWS_AS(validate(m), ValidationError);
    CHECK_THROWS_AS(parse_model_json(R"({"n": 2, "edges": [[1,2],[2,1]], "out": []})"), ValidationError);
    CHECK_THROWS_AS(parse_model_json(R"({"n": 2, "edges": [[1,2],[2,1]], "out": [1,1]})"), ValidationError);
}

TEST_CASE("compartmental matrix of the four-compartment cycle") {
    const ModelSpec m = cycle4();
    const ParameterSpace p(m);
    const auto a = compartmental_matrix(m, p);
    CHECK(a(0, 0) == -p.k(2, 1));
    CHECK(a(1, 1) == -p.k(3, 2));
    CHECK(a(2, 2) == -p.k(4, 3));
    CHECK(a(3, 3) == -p.k(1, 4));
    CHECK(a(1, 0) == p.k(2, 1));
    CHECK(a(0, 3) == p.k(1, 4));
    CHECK(a(0, 1).is_zero());
}

TEST_CASE("columns sum to zero without leaks and to -k_{0,j} with them") {
    for (Family f : {Family::cycle, Family::fin, Family::wing, Family::catenary, Family::mammillary}) {
        for (int leak = 0; leak <= 4; ++leak) {
            FamilySpec spec{f, 4, {1}, {1}, {}, {}, {}};
            if (leak) spec.leaks = {leak};
            const ModelSpec m = build(spec);
            const ParameterSpace p(m);
            const auto a = compartmental_matrix(m, p);
            for (int j = 1; j <= 4; ++j) {
                MultiPoly sum = MultiPoly::zero(p.space());
                for (int i = 1; i <= 4; ++i) sum += a(i - 1, j - 1);
                CHECK(sum == (j == leak ? -p.leak(j) : MultiPoly::zero(p.space())));
            }
        }
    }
}

TEST_CASE("parameter order: edges by (from, to), then leaks") {
    const ModelSpec m = build({Family::cycle, 3, {1}, {1}, {3, 1}, {}, {}});
    const ParameterSpace p(m);
    std::vector<std::string> names;
    for (const auto& id : p.ids()) names.push_back(id.name());
    CHECK(names == std::vector<std::string>{"k_{2,1}", "k_{3,2}", "k_{1,3}", "k_{0,1}", "k_{0,3}"});
    CHECK_THROWS_AS(p.index_of(VarId::edge(1, 3)), StructuralError);
    CHECK_FALSE(p.find(VarId::leak(2)).has_value());
}

TEST_CASE("strong connectivity") {
    CHECK(is_strongly_connected(cycle4()));
    ModelSpec chain;
    chain.n = 3;
    chain.edges = {{1, 2}, {2, 3}};
    chain.outputs = {3};
    CHECK_FALSE(is_strongly_connected(chain));
    const std::vector<int> both{1, 2};
    CHECK_FALSE(induced_strongly_connected(cycle4(), both));
}

TEST_CASE("inductive orderings") {
    for (int n = 3; n <= 8; ++n) {
        const ModelSpec fin = build({Family::fin, n, {1}, {1}, {}, {}, {}});
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 1);
        CHECK(is_inductive_ordering(fin, order));

        const ModelSpec wing = build({Family::wing, n, {1}, {1}, {}, {}, {}});
        std::vector<int> wing_order{1};
        for (int i = n; i >= 2; --i) wing_order.push_back(i);
        CHECK(is_inductive_ordering(wing, wing_order));
        CHECK(is_inductively_strongly_connected(wing));

        CHECK(is_strongly_connected(build({Family::cycle, n, {1}, {1}, {}, {}, {}})));
        CHECK_FALSE(is_inductively_strongly_connected(build({Family::cycle, n, {1}, {1}, {}, {}, {}})));
    }
    CHECK(is_inductively_strongly_connected(build({Family::catenary, 6, {1}, {1}, {}, {}, {}})));
    const std::vector<int> bad{2, 1, 3};
    CHECK_FALSE(is_inductive_ordering(build({Family::fin, 3, {1}, {1}, {}, {}, {}}), bad));
    CHECK_THROWS_AS(find_inductive_ordering(build({Family::cycle, 13, {1}, {1}, {}, {}, {}})), LimitExceeded);
}

TEST_CASE("model hash depends only on the canonical model") {
    ModelSpec a = cycle4();
    ModelSpec b = a;
    std::reverse(b.edges.begin(), b.edges.end());
    CHECK(model_hash(a) == model_hash(b));
    b.leaks = {2};
    CHECK(model_hash(a) != model_hash(b));
}
