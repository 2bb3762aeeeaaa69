#pragma once

#include "lcmid/poly.hpp"

#include <span>
#include <string>
#include <vector>

namespace lcmid {

/// Polynomial in the operator s = d/dt whose coefficients are MultiPolys.
/// coefficients()[k] multiplies s^k; the highest stored coefficient is
/// nonzero and the zero SPoly stores nothing.
class SPoly {
public:
    explicit SPoly(SpacePtr space);
    SPoly(SpacePtr space, std::vector<MultiPoly> coefficients);

    static SPoly constant(const MultiPoly& c);
    /// s + c
    static SPoly shifted_s(const MultiPoly& c);

    const SpacePtr& space() const noexcept { return space_; }
    const std::vector<MultiPoly>& coefficients() const noexcept { return coeffs_; }
    /// -1 for the zero SPoly.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    MultiPoly coefficient(int power) const;

    SPoly& operator+=(const SPoly& other);
    SPoly& operator-=(const SPoly& other);
    friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
    friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
    friend SPoly operator*(const SPoly& a, const SPoly& b);
    SPoly operator-() const;
    friend bool operator==(const SPoly& a, const SPoly& b);

    /// Value with parameters specialised to `point` and s to `s`.
    Rational evaluate(std::span<const Rational> point, const Rational& s) const;

    /// "s^2 + (k_{2,1} + k_{3,2})*s + k_{2,1}*k_{3,2}"
    std::string to_string() const;

private:
    void trim();

    SpacePtr space_;
    std::vector<MultiPoly> coeffs_;
};

inline bool is_zero(const SPoly& p) { return p.is_zero(); }

}  // namespace lcmid
