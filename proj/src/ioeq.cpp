#include "lcmid/ioeq.hpp"

#include "lcmid/errors.hpp"

#include <algorithm>

namespace lcmid {

Matrix<SPoly> char_matrix(const ModelSpec& model, const ParameterSpace& params) {
    const Matrix<MultiPoly> a = compartmental_matrix(model, params);
    const auto n = a.rows();
    Matrix<SPoly> m(n, n, SPoly(params.space()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = (i == j) ? SPoly::shifted_s(-a(i, j)) : SPoly::constant(-a(i, j));
        }
    }
    return m;
}

SPoly det_spoly(const Matrix<SPoly>& m) {
    if (m.rows() != m.cols()) throw StructuralError("determinant of a non-square matrix");
    if (m.rows() == 0) throw StructuralError("determinant of an empty SPoly matrix has no variable space");
    const SpacePtr& space = m(0, 0).space();
    return laplace_determinant(m, SPoly::constant(MultiPoly::constant(space, Rational(1))));
}

namespace {

void require_inputs(const ModelSpec& model) {
    if (model.inputs.empty()) {
        throw UsageError("io-equations need at least one input; the model has none");
    }
}

SPoly rhs_operator(const Matrix<SPoly>& m, int input, int output) {
    // (-1)^{i+j} has the same parity for 1-based and 0-based indices.
    SPoly minor = det_spoly(m.without(static_cast<std::size_t>(input - 1), static_cast<std::size_t>(output - 1)));
    return ((input + output) % 2 == 0) ? minor : -minor;
}

IOEquation build_equation(const ModelSpec& model, const Matrix<SPoly>& m, const SPoly& lhs, int output) {
    IOEquation eq{output, lhs, {}};
    if (model.n == 1) {
        // The 0x0 minor has determinant 1.
        eq.rhs.emplace(model.inputs.front(), SPoly::constant(MultiPoly::constant(lhs.space(), Rational(1))));
        return eq;
    }
    for (int j : model.inputs) eq.rhs.emplace(j, rhs_operator(m, j, output));
    return eq;
}

}  // namespace

IOEquation io_equation(const ModelSpec& spec, const ParameterSpace& params, int output) {
    const ModelSpec model = canonicalize(spec);
    validate(model);
    if (!model.is_output(output)) {
        throw UsageError("compartment " + std::to_string(output) + " is not an output");
    }
    require_inputs(model);
    const Matrix<SPoly> m = char_matrix(model, params);
    return build_equation(model, m, det_spoly(m), output);
}

std::vector<IOEquation> io_equations(const ModelSpec& spec, const ParameterSpace& params) {
    const ModelSpec model = canonicalize(spec);
    validate(model);
    require_inputs(model);
    const Matrix<SPoly> m = char_matrix(model, params);
    const SPoly lhs = det_spoly(m);
    std::vector<IOEquation> out;
    for (int i : model.outputs) out.push_back(build_equation(model, m, lhs, i));
    return out;
}

std::string CoefficientLabel::to_string() const {
    std::string text = "y" + std::to_string(output) + (side == Side::lhs ? " lhs" : " rhs");
    if (side == Side::rhs) text += " u" + std::to_string(input);
    return text + " s^" + std::to_string(power);
}

bool canonical_before(const CoefficientLabel& a, const CoefficientLabel& b) {
    if (a.output != b.output) return a.output < b.output;
    if (a.side != b.side) return a.side == Side::lhs;
    if (a.input != b.input) return a.input < b.input;
    return a.power > b.power;
}

CoefficientMap coefficient_map(const std::vector<IOEquation>& equations) {
    CoefficientMap map;
    auto take = [&map](const CoefficientLabel& label, const MultiPoly& c) {
        if (c.is_zero()) {
            map.dropped.push_back({label, DropReason::zero, Rational(0)});
        } else if (c.is_constant()) {
            map.dropped.push_back({label, DropReason::constant, c.constant_term()});
        } else {
            map.entries.push_back({label, c});
        }
    };
    for (const auto& eq : equations) {
        // The s^n coefficient of det(sI - A) is 1 by construction and is not a coefficient.
        for (int k = eq.lhs.degree() - 1; k >= 0; --k) take({eq.output, Side::lhs, 0, k}, eq.lhs.coefficient(k));
        for (const auto& [input, op] : eq.rhs) {
            for (int k = op.degree(); k >= 0; --k) take({eq.output, Side::rhs, input, k}, op.coefficient(k));
        }
    }
    return map;
}

CoefficientMap coefficient_map(const ModelSpec& model, const ParameterSpace& params) {
    return coefficient_map(io_equations(model, params));
}

std::string to_string(const IOEquation& eq) {
    std::string text = "(" + eq.lhs.to_string() + ") y" + std::to_string(eq.output) + " =";
    bool first = true;
    for (const auto& [input, op] : eq.rhs) {
        text += first ? " " : " + ";
        first = false;
        text += "(" + op.to_string() + ") u" + std::to_string(input);
    }
    return text;
}

}  // namespace lcmid
