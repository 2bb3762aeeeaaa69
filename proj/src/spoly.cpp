#include "lcmid/spoly.hpp"

#include "lcmid/errors.hpp"

namespace lcmid {

SPoly::SPoly(SpacePtr space) : space_(std::move(space)) {
    if (!space_) throw StructuralError("SPoly without a variable space");
}

SPoly::SPoly(SpacePtr space, std::vector<MultiPoly> coefficients) : SPoly(std::move(space)) {
    for (const auto& c : coefficients) {
        if (!same_space(c.space(), space_)) throw StructuralError("SPoly coefficient over a different space");
    }
    coeffs_ = std::move(coefficients);
    trim();
}

SPoly SPoly::constant(const MultiPoly& c) { return SPoly(c.space(), {c}); }

SPoly SPoly::shifted_s(const MultiPoly& c) {
    return SPoly(c.space(), {c, MultiPoly::constant(c.space(), Rational(1))});
}

void SPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

MultiPoly SPoly::coefficient(int power) const {
    if (power < 0 || power > degree()) return MultiPoly::zero(space_);
    return coeffs_[static_cast<std::size_t>(power)];
}

SPoly& SPoly::operator+=(const SPoly& other) {
    if (!same_space(space_, other.space_)) throw StructuralError("SPolys over different variable spaces");
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), MultiPoly::zero(space_));
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

SPoly& SPoly::operator-=(const SPoly& other) { return *this += -other; }

SPoly SPoly::operator-() const {
    SPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

SPoly operator*(const SPoly& a, const SPoly& b) {
    if (!same_space(a.space_, b.space_)) throw StructuralError("SPolys over different variable spaces");
    SPoly out(a.space_);
    if (a.is_zero() || b.is_zero()) return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, MultiPoly::zero(a.space_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    out.trim();
    return out;
}

bool operator==(const SPoly& a, const SPoly& b) {
    return same_space(a.space_, b.space_) && a.coeffs_ == b.coeffs_;
}

Rational SPoly::evaluate(std::span<const Rational> point, const Rational& s) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= s;
        acc += it->evaluate(point);
    }
    return acc;
}

std::string SPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string text;
    for (int k = degree(); k >= 0; --k) {
        const MultiPoly& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        std::string power = k == 0 ? "" : (k == 1 ? "s" : "s^" + std::to_string(k));
        std::string term;
        if (power.empty()) {
            term = c.to_string();
        } else if (c == MultiPoly::constant(space_, Rational(1))) {
            term = power;
        } else if (c.term_count() == 1) {
            term = c.to_string() + "*" + power;
        } else {
            term = "(" + c.to_string() + ")*" + power;
        }
        if (!text.empty()) text += " + ";
        text += term;
    }
    return text;
}

}  // namespace lcmid
