#include "lcmid/errors.hpp"
#include "lcmid/families.hpp"
#include "lcmid/ioeq.hpp"

#include "doctest.h"
#include "../support/oracles.hpp"
#include "../support/random_model.hpp"

using namespace lcmid;

namespace {

ModelSpec cycle(int n, std::vector<int> in, std::vector<int> out, std::vector<int> leaks = {}) {
    return build({Family::cycle, n, std::move(in), std::move(out), std::move(leaks), {}, {}});
}

/// Every coefficient slot of the pipeline, dropped ones included, agrees
/// with the interpolation oracle at `point`; slots the pipeline never
/// produced must be zero there.
void check_against_oracle(const ModelSpec& m, const std::vector<Rational>& point) {
    const ParameterSpace p(m);
    const CoefficientMap map = coefficient_map(m, p);
    auto expected = oracle::coefficients(m, point);
    for (const auto& e : map.entries) {
        const auto it = expected.find(e.label.to_string());
        REQUIRE_MESSAGE(it != expected.end(), e.label.to_string());
        CHECK_MESSAGE(e.poly.evaluate(point) == it->second, e.label.to_string());
        expected.erase(it);
    }
    for (const auto& d : map.dropped) {
        const auto it = expected.find(d.label.to_string());
        REQUIRE(it != expected.end());
        CHECK(d.value == it->second);
        expected.erase(it);
    }
    for (const auto& [label, value] : expected) CHECK_MESSAGE(value == 0, label);
}

}  // namespace

TEST_CASE("char matrix diagonal of the four-compartment cycle") {
    const ModelSpec m = cycle(4, {1}, {3});
    const ParameterSpace p(m);
    const auto c = char_matrix(m, p);
    CHECK(c(0, 0) == SPoly::shifted_s(p.k(2, 1)));
    CHECK(c(3, 3) == SPoly::shifted_s(p.k(1, 4)));
    CHECK(c(1, 0) == SPoly::constant(-p.k(2, 1)));
}

TEST_CASE("io-equation of the four-compartment cycle") {
    const ModelSpec m = cycle(4, {1}, {3});
    const ParameterSpace p(m);
    const IOEquation eq = io_equation(m, p, 3);
    const auto k21 = p.k(2, 1), k32 = p.k(3, 2), k43 = p.k(4, 3), k14 = p.k(1, 4);
    const auto one = MultiPoly::constant(p.space(), Rational(1));
    CHECK(eq.lhs.coefficient(4) == one);
    CHECK(eq.lhs.coefficient(3) == k14 + k21 + k32 + k43);
    CHECK(eq.lhs.coefficient(2) == k14 * k21 + k14 * k32 + k14 * k43 + k21 * k32 + k21 * k43 + k32 * k43);
    CHECK(eq.lhs.coefficient(1) == k14 * k21 * k32 + k14 * k21 * k43 + k14 * k32 * k43 + k21 * k32 * k43);
    CHECK(eq.lhs.coefficient(0).is_zero());
    REQUIRE(eq.rhs.size() == 1);
    CHECK(eq.rhs.at(1) == SPoly(p.space(), {k14 * k21 * k32, k21 * k32}));
}

TEST_CASE("golden coefficient map of the four-compartment cycle") {
    const ModelSpec m = cycle(4, {1}, {3});
    const ParameterSpace p(m);
    const CoefficientMap map = coefficient_map(m, p);
    const auto k21 = p.k(2, 1), k32 = p.k(3, 2), k43 = p.k(4, 3), k14 = p.k(1, 4);
    REQUIRE(map.size() == 5);
    CHECK(map[0] == k14 + k21 + k32 + k43);
    CHECK(map[1] == k14 * k21 + k14 * k32 + k14 * k43 + k21 * k32 + k21 * k43 + k32 * k43);
    CHECK(map[2] == k14 * k21 * k32 + k14 * k21 * k43 + k14 * k32 * k43 + k21 * k32 * k43);
    CHECK(map[3] == k21 * k32);
    CHECK(map[4] == k14 * k21 * k32);
    CHECK(map.entries[3].label.to_string() == "y3 rhs u1 s^1");
    REQUIRE(map.dropped.size() == 1);
    CHECK(map.dropped[0].label.to_string() == "y3 lhs s^0");
    CHECK(map.dropped[0].reason == DropReason::zero);
}

TEST_CASE("cycle determinant is prod (s + k) - prod k") {
    for (int n = 3; n <= 7; ++n) {
        const ModelSpec m = cycle(n, {1}, {1});
        const ParameterSpace p(m);
        SPoly expected = SPoly::constant(MultiPoly::constant(p.space(), Rational(1)));
        MultiPoly prod = MultiPoly::constant(p.space(), Rational(1));
        for (int i = 1; i <= n; ++i) {
            const auto k = p.edge(i, cyclic_successor(i, n));
            expected = expected * SPoly::shifted_s(k);
            prod *= k;
        }
        expected = expected - SPoly::constant(prod);
        CHECK(det_spoly(char_matrix(m, p)) == expected);
    }
}

TEST_CASE("rhs for output p on a cycle is kappa times the tail product") {
    for (int n = 3; n <= 6; ++n) {
        for (int out = 2; out <= n; ++out) {
            const ModelSpec m = cycle(n, {1}, {out});
            const ParameterSpace p(m);
            SPoly expected = SPoly::constant(MultiPoly::constant(p.space(), Rational(1)));
            for (int i = 2; i <= out; ++i) expected = expected * SPoly::constant(p.edge(i - 1, i));
            for (int i = out + 1; i <= n; ++i) expected = expected * SPoly::shifted_s(p.edge(i, cyclic_successor(i, n)));
            CHECK(io_equation(m, p, out).rhs.at(1) == expected);
        }
    }
}

TEST_CASE("no-leak models have zero lhs constant term") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        ModelSpec m = testing_support::random_model(rng, 2 + t % 4);
        m.leaks.clear();
        const ParameterSpace p(m);
        CHECK(io_equations(m, p).front().lhs.coefficient(0).is_zero());
    }
}

TEST_CASE("multi-input signs and single-compartment models") {
    const ModelSpec m = cycle(3, {1, 2, 3}, {2, 3}, {1});
    const ParameterSpace p(m);
    const auto eqs = io_equations(m, p);
    REQUIRE(eqs.size() == 2);
    CHECK(eqs[0].rhs.size() == 3);
    CHECK(eqs[0].lhs == eqs[1].lhs);
    std::mt19937_64 rng(6);
    for (int t = 0; t < 5; ++t) check_against_oracle(m, oracle::random_point(rng, p.size(), 1, 30));

    ModelSpec single;
    single.n = 1;
    single.inputs = {1};
    single.outputs = {1};
    single.leaks = {1};
    const ParameterSpace ps(single);
    const auto eq = io_equation(single, ps, 1);
    CHECK(eq.lhs == SPoly::shifted_s(ps.leak(1)));
    CHECK(eq.rhs.at(1) == SPoly::constant(MultiPoly::constant(ps.space(), Rational(1))));
}

TEST_CASE("usage errors") {
    const ModelSpec m = cycle(4, {1}, {3});
    const ParameterSpace p(m);
    CHECK_THROWS_AS(io_equation(m, p, 2), UsageError);
    ModelSpec no_input = m;
    no_input.inputs.clear();
    CHECK_THROWS_AS(io_equations(no_input, ParameterSpace(no_input)), UsageError);
}

TEST_CASE("canonical label order") {
    const CoefficientLabel a{1, Side::lhs, 0, 2}, b{1, Side::lhs, 0, 1}, c{1, Side::rhs, 1, 3}, d{1, Side::rhs, 2, 3},
        e{2, Side::lhs, 0, 3};
    CHECK(canonical_before(a, b));
    CHECK(canonical_before(b, c));
    CHECK(canonical_before(c, d));
    CHECK(canonical_before(d, e));
    CHECK_FALSE(canonical_before(b, a));
}

TEST_CASE("property: pipeline agrees with the interpolation oracle on random models") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        const ModelSpec m = testing_support::random_model(rng, 2 + t % 4);
        const ParameterSpace p(m);
        for (int k = 0; k < 4; ++k) check_against_oracle(m, oracle::random_point(rng, p.size(), -40, 40));
    }
}
