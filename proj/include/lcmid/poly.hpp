#pragma once

// Sparse multivariate polynomials over Q.
//
// A MultiPoly lives in a VariableSpace (an ordered list of variable names).
// Terms are kept in descending graded-lexicographic order with variable 0
// ranked highest; zero coefficients are never stored, so structural equality
// is polynomial equality.

#include "lcmid/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lcmid {

class VariableSpace {
public:
    explicit VariableSpace(std::vector<std::string> names);

    static std::shared_ptr<const VariableSpace> make(std::vector<std::string> names);
    /// x1, x2, ..., xn (or prefix1..prefixn).
    static std::shared_ptr<const VariableSpace> indexed(std::size_t count, const std::string& prefix = "x");

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t index) const;
    const std::vector<std::string>& names() const noexcept { return names_; }

    friend bool operator==(const VariableSpace&, const VariableSpace&) = default;

private:
    std::vector<std::string> names_;
};

using SpacePtr = std::shared_ptr<const VariableSpace>;

/// Same pointer, or equal variable lists.
bool same_space(const SpacePtr& a, const SpacePtr& b);

struct VarPower {
    std::uint32_t var;
    std::uint32_t exp;
    friend bool operator==(const VarPower&, const VarPower&) = default;
};

/// Power product stored sparsely as (variable, exponent) pairs sorted by variable.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(std::uint32_t var, std::uint32_t exp = 1);

    std::uint32_t degree() const noexcept { return degree_; }
    std::uint32_t exponent(std::uint32_t var) const noexcept;
    const std::vector<VarPower>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<VarPower> factors_;
    std::uint32_t degree_ = 0;
};

/// Graded lex: higher total degree first, ties broken lexicographically on
/// the dense exponent vector (variable 0 most significant).
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

struct Term {
    Monomial monomial;
    Rational coefficient;
};

class MultiPoly {
public:
    explicit MultiPoly(SpacePtr space);

    static MultiPoly zero(SpacePtr space) { return MultiPoly(std::move(space)); }
    static MultiPoly constant(SpacePtr space, const Rational& value);
    static MultiPoly variable(SpacePtr space, std::size_t index);
    /// Build from arbitrary terms; like monomials are merged and zeros dropped.
    static MultiPoly from_terms(SpacePtr space, std::vector<Term> terms);

    const SpacePtr& space() const noexcept { return space_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Coefficient of the monomial 1.
    Rational constant_term() const;
    Rational coefficient(const Monomial& monomial) const;
    std::uint32_t total_degree() const noexcept;
    /// Sorted indices of variables that occur.
    std::vector<std::size_t> variables() const;

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);
    MultiPoly& operator*=(const Rational& scalar);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
    MultiPoly operator-() const;

    /// Equal spaces and equal term lists.
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// point[i] is the value of variable i; point.size() must equal space()->size().
    Rational evaluate(std::span<const Rational> point) const;
    /// Sparse assignment; every variable that occurs must be assigned.
    Rational evaluate(const std::map<std::size_t, Rational>& point) const;

    MultiPoly partial_derivative(std::size_t var) const;

    /// Canonical text: terms in descending grlex order, e.g. "k_{2,1}^2*k_{3,2} - 1/2*k_{1,4} + 3".
    std::string to_string() const;

private:
    void check_space(const MultiPoly& other) const;

    SpacePtr space_;
    std::vector<Term> terms_;  // descending grlex
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly partial_derivative(const MultiPoly& p, std::size_t var);
Rational evaluate(const MultiPoly& p, const std::map<std::size_t, Rational>& point);

/// m-th elementary symmetric polynomial of `values` (which may be arbitrary
/// polynomials, not only variables). e_0 = 1; m > |values| gives 0; m < 0 throws.
MultiPoly elementary_symmetric(const SpacePtr& space, std::span<const MultiPoly> values, int m);

/// e_0, ..., e_{|values|} in one pass.
std::vector<MultiPoly> elementary_symmetric_all(const SpacePtr& space, std::span<const MultiPoly> values);

/// Determinant of the Jacobian of (e_1, ..., e_n) in x_1..x_n equals
/// +/- prod_{i<j} (x_i - x_j).
bool vandermonde_check(int n);

}  // namespace lcmid
