#pragma once

#include "lcmid/model.hpp"
#include "lcmid/spoly.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace lcmid {

/// sI - A, the operator matrix of the input-output equations.
Matrix<SPoly> char_matrix(const ModelSpec& model, const ParameterSpace& params);

/// Exact determinant by memoised Laplace expansion.
SPoly det_spoly(const Matrix<SPoly>& m);

/// det(sI - A) y_i = sum_{j in In} (-1)^{i+j} det((sI - A)_{ji}) u_j
struct IOEquation {
    int output;
    SPoly lhs;
    std::map<int, SPoly> rhs;  // input compartment -> operator on u_j, sign included
};

/// Throws UsageError when i is not an output or the model has no inputs.
IOEquation io_equation(const ModelSpec& model, const ParameterSpace& params, int output);

/// One equation per output, ascending; det(sI - A) is computed once.
std::vector<IOEquation> io_equations(const ModelSpec& model, const ParameterSpace& params);

enum class Side { lhs, rhs };

/// Which slot of which equation a coefficient came from.
struct CoefficientLabel {
    int output;
    Side side;
    int input;  // 0 on the lhs
    int power;  // of s

    /// "y3 lhs s^2", "y3 rhs u1 s^0"
    std::string to_string() const;
    friend bool operator==(const CoefficientLabel&, const CoefficientLabel&) = default;
};

/// Position of a label in the canonical coefficient order: outputs ascending;
/// lhs by descending power, then rhs by input ascending and descending power.
bool canonical_before(const CoefficientLabel& a, const CoefficientLabel& b);

struct CoefficientEntry {
    CoefficientLabel label;
    MultiPoly poly;
};

enum class DropReason { zero, constant };

struct DroppedCoefficient {
    CoefficientLabel label;
    DropReason reason;
    Rational value;
};

/// The non-monic coefficients of all io-equations. Coefficients that are
/// constant polynomials (zero, or a monic leading 1 of an rhs minor) carry
/// no parameter information and are recorded in `dropped` instead.
struct CoefficientMap {
    std::vector<CoefficientEntry> entries;
    std::vector<DroppedCoefficient> dropped;

    std::size_t size() const noexcept { return entries.size(); }
    const MultiPoly& operator[](std::size_t i) const { return entries[i].poly; }
};

CoefficientMap coefficient_map(const std::vector<IOEquation>& equations);
CoefficientMap coefficient_map(const ModelSpec& model, const ParameterSpace& params);

std::string to_string(const IOEquation& eq);

}  // namespace lcmid
