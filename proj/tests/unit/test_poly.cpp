#include "lcmid/errors.hpp"
#include "lcmid/matrix.hpp"
#include "lcmid/poly.hpp"
#include "lcmid/spoly.hpp"

#include "doctest.h"
#include "../support/oracles.hpp"
#include "../support/random_poly.hpp"

using namespace lcmid;
using testing_support::random_poly;

namespace {

SpacePtr xyz() { return VariableSpace::make({"x", "y", "z"}); }

constexpr int kCases = 250;

}  // namespace

TEST_CASE("rationals parse and print canonically") {
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("10")) == "10");
    CHECK(to_string(make_rational(0, 5)) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("terms are kept in descending grlex order") {
    auto s = xyz();
    auto x = MultiPoly::variable(s, 0), y = MultiPoly::variable(s, 1), z = MultiPoly::variable(s, 2);
    MultiPoly p = z + y * y + x * z + MultiPoly::constant(s, Rational(3)) + x;
    CHECK(p.to_string() == "x*z + y^2 + x + z + 3");
    MultiPoly q = Rational(-1, 2) * x * x * y + y;
    CHECK(q.to_string() == "-1/2*x^2*y + y");
    CHECK(MultiPoly::zero(s).to_string() == "0");
    CHECK(grlex_compare(Monomial::variable(0) * Monomial::variable(2), Monomial::variable(1, 2)) > 0);
    CHECK(grlex_compare(Monomial::variable(0), Monomial::variable(1)) > 0);
}

TEST_CASE("cancellation leaves no zero terms") {
    auto s = xyz();
    auto x = MultiPoly::variable(s, 0), y = MultiPoly::variable(s, 1);
    MultiPoly p = (x + y) * (x - y) - x * x + y * y;
    CHECK(p.is_zero());
    CHECK(p == MultiPoly::zero(s));
    CHECK((x * Rational(0)).is_zero());
}

TEST_CASE("derivative of e_2 on three variables is e_1 on the other two") {
    auto s = xyz();
    std::vector<MultiPoly> vars{MultiPoly::variable(s, 0), MultiPoly::variable(s, 1), MultiPoly::variable(s, 2)};
    const MultiPoly e2 = elementary_symmetric(s, vars, 2);
    CHECK(e2.partial_derivative(0) == vars[1] + vars[2]);
}

TEST_CASE("e_3 on four rate constants") {
    auto s = VariableSpace::make({"k_{2,1}", "k_{3,2}", "k_{4,3}", "k_{1,4}"});
    std::vector<MultiPoly> k;
    for (std::size_t i = 0; i < 4; ++i) k.push_back(MultiPoly::variable(s, i));
    const MultiPoly e3 = elementary_symmetric(s, k, 3);
    CHECK(e3 == k[3] * k[0] * k[1] + k[3] * k[0] * k[2] + k[3] * k[1] * k[2] + k[0] * k[1] * k[2]);
    CHECK(elementary_symmetric(s, k, 0) == MultiPoly::constant(s, Rational(1)));
    CHECK(elementary_symmetric(s, k, 5).is_zero());
    CHECK_THROWS_AS(elementary_symmetric(s, k, -1), StructuralError);
    auto all = elementary_symmetric_all(s, k);
    REQUIRE(all.size() == 5);
    CHECK(all[3] == e3);
}

TEST_CASE("evaluation checks its point") {
    auto s = xyz();
    MultiPoly p = MultiPoly::variable(s, 0) * MultiPoly::variable(s, 2) + MultiPoly::constant(s, Rational(1));
    std::vector<Rational> pt{Rational(2), Rational(100), Rational(3)};
    CHECK(p.evaluate(pt) == 7);
    CHECK(p.evaluate(std::map<std::size_t, Rational>{{0, Rational(2)}, {2, Rational(3)}}) == 7);
    CHECK_THROWS_AS(p.evaluate(std::map<std::size_t, Rational>{{0, Rational(2)}}), StructuralError);
    std::vector<Rational> short_pt{Rational(1)};
    CHECK_THROWS(p.evaluate(short_pt));
}

TEST_CASE("mixing variable spaces is an error") {
    auto a = MultiPoly::variable(xyz(), 0);
    auto b = MultiPoly::variable(VariableSpace::make({"u", "v"}), 0);
    CHECK_THROWS_AS(a + b, StructuralError);
    CHECK_THROWS_AS(a * b, StructuralError);
}

TEST_CASE("vandermonde check for n = 1..6") {
    for (int n = 1; n <= 6; ++n) CHECK_MESSAGE(vandermonde_check(n), "n = " << n);
}

TEST_CASE("Jacobian column of e_m is e_{m-1} without that variable") {
    const int n = 5;
    auto s = VariableSpace::indexed(n);
    std::vector<MultiPoly> x;
    for (int i = 0; i < n; ++i) x.push_back(MultiPoly::variable(s, i));
    for (int m = 1; m <= n; ++m) {
        const MultiPoly em = elementary_symmetric(s, x, m);
        for (int i = 0; i < n; ++i) {
            std::vector<MultiPoly> rest = x;
            rest.erase(rest.begin() + i);
            CHECK(em.partial_derivative(i) == elementary_symmetric(s, rest, m - 1));
        }
    }
}

TEST_CASE("laplace determinant matches Gaussian elimination") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + t % 7;
        Matrix<Rational> m(n, n, Rational(0));
        oracle::Grid g(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                // Sparse-ish so zero skipping is exercised.
                Rational v = (rng() % 3 == 0) ? Rational(0) : oracle::random_rational(rng);
                m(i, j) = v;
                g[i][j] = v;
            }
        CHECK(laplace_determinant(m, Rational(1)) == oracle::gauss_det(g));
    }
}

TEST_CASE("SPoly arithmetic and evaluation") {
    auto s = xyz();
    auto x = MultiPoly::variable(s, 0);
    SPoly a = SPoly::shifted_s(x);  // s + x
    SPoly b = a * a - SPoly::constant(x * x);
    CHECK(b.degree() == 2);
    CHECK(b.coefficient(1) == Rational(2) * x);
    CHECK(b.coefficient(0).is_zero());
    std::vector<Rational> pt{Rational(3), Rational(0), Rational(0)};
    CHECK(b.evaluate(pt, Rational(2)) == 16);
    CHECK(a.to_string() == "s + x");
    CHECK(SPoly(s).degree() == -1);
}

TEST_CASE("property: ring axioms") {
    std::mt19937_64 rng(1);
    auto s = xyz();
    for (int t = 0; t < kCases; ++t) {
        auto a = random_poly(rng, s), b = random_poly(rng, s), c = random_poly(rng, s);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MultiPoly::zero(s));
        CHECK(a * MultiPoly::constant(s, Rational(1)) == a);
        CHECK(a + MultiPoly::zero(s) == a);
    }
}

TEST_CASE("property: product rule") {
    std::mt19937_64 rng(2);
    auto s = xyz();
    for (int t = 0; t < kCases; ++t) {
        auto a = random_poly(rng, s), b = random_poly(rng, s);
        const std::size_t v = t % 3;
        CHECK((a * b).partial_derivative(v) == a.partial_derivative(v) * b + a * b.partial_derivative(v));
    }
}

TEST_CASE("property: elementary symmetric recurrence and brute force") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < kCases; ++t) {
        const int k = 1 + t % 6;
        auto s = VariableSpace::indexed(k);
        std::vector<MultiPoly> x;
        for (int i = 0; i < k; ++i) x.push_back(MultiPoly::variable(s, i));
        const int m = static_cast<int>(rng() % (k + 2));
        // e_m(x_1..x_k) = e_m(x_1..x_{k-1}) + x_k e_{m-1}(x_1..x_{k-1})
        std::vector<MultiPoly> head(x.begin(), x.end() - 1);
        MultiPoly rhs = elementary_symmetric(s, head, m);
        if (m >= 1) rhs += x.back() * elementary_symmetric(s, head, m - 1);
        const MultiPoly em = elementary_symmetric(s, x, m);
        CHECK(em == rhs);
        const auto pt = oracle::random_point(rng, k, -9, 9);
        CHECK(em.evaluate(pt) == oracle::elementary_symmetric(pt, m));
    }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
    std::mt19937_64 rng(4);
    auto s = xyz();
    for (int t = 0; t < kCases; ++t) {
        auto a = random_poly(rng, s), b = random_poly(rng, s);
        std::vector<Rational> pt{oracle::random_rational(rng), oracle::random_rational(rng), oracle::random_rational(rng)};
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((-a).evaluate(pt) == -a.evaluate(pt));
    }
}
