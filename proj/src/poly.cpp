#include "lcmid/poly.hpp"

#include "lcmid/errors.hpp"
#include "lcmid/matrix.hpp"

#include <algorithm>

namespace lcmid {

// ---------------------------------------------------------------- spaces

VariableSpace::VariableSpace(std::vector<std::string> names) : names_(std::move(names)) {}

std::shared_ptr<const VariableSpace> VariableSpace::make(std::vector<std::string> names) {
    return std::make_shared<const VariableSpace>(std::move(names));
}

std::shared_ptr<const VariableSpace> VariableSpace::indexed(std::size_t count, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
    return make(std::move(names));
}

const std::string& VariableSpace::name(std::size_t index) const {
    if (index >= names_.size()) {
        throw StructuralError("variable index " + std::to_string(index) + " outside space of size " +
                              std::to_string(names_.size()));
    }
    return names_[index];
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

// ---------------------------------------------------------------- monomials

Monomial Monomial::variable(std::uint32_t var, std::uint32_t exp) {
    Monomial m;
    if (exp > 0) {
        m.factors_.push_back({var, exp});
        m.degree_ = exp;
    }
    return m;
}

std::uint32_t Monomial::exponent(std::uint32_t var) const noexcept {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                               [](const VarPower& f, std::uint32_t v) { return f.var < v; });
    return (it != factors_.end() && it->var == var) ? it->exp : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->var < b->var)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->var < a->var) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.push_back({a->var, a->exp + b->exp});
            ++a;
            ++b;
        }
    }
    out.degree_ = degree_ + other.degree_;
    return out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].var != fb[i].var) {
            // The monomial carrying the lower-indexed variable has a positive
            // exponent where the other has zero.
            return fa[i].var < fb[i].var ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (fa[i].exp != fb[i].exp) return fa[i].exp <=> fb[i].exp;
    }
    if (i < fa.size()) return std::strong_ordering::greater;
    if (i < fb.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- polynomials

namespace {

// Sort descending and merge equal monomials, dropping zero sums.
void normalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return grlex_compare(x.monomial, y.monomial) > 0; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Rational sum = std::move(terms[i].coefficient);
        while (j < terms.size() && terms[j].monomial == terms[i].monomial) {
            sum += terms[j].coefficient;
            ++j;
        }
        if (sgn(sum) != 0) {
            if (out != i) terms[out].monomial = std::move(terms[i].monomial);
            terms[out].coefficient = std::move(sum);
            ++out;
        }
        i = j;
    }
    terms.resize(out, Term{});
}

Rational power(const Rational& base, std::uint32_t exp) {
    Rational result(1);
    for (std::uint32_t i = 0; i < exp; ++i) result *= base;
    return result;
}

}  // namespace

MultiPoly::MultiPoly(SpacePtr space) : space_(std::move(space)) {
    if (!space_) {
        throw StructuralError("polynomial without a variable space");
    }
}

MultiPoly MultiPoly::constant(SpacePtr space, const Rational& value) {
    MultiPoly p(std::move(space));
    if (sgn(value) != 0) p.terms_.push_back({Monomial{}, value});
    return p;
}

MultiPoly MultiPoly::variable(SpacePtr space, std::size_t index) {
    MultiPoly p(std::move(space));
    p.space_->name(index);  // range check
    p.terms_.push_back({Monomial::variable(static_cast<std::uint32_t>(index)), Rational(1)});
    return p;
}

MultiPoly MultiPoly::from_terms(SpacePtr space, std::vector<Term> terms) {
    MultiPoly p(std::move(space));
    for (const auto& t : terms) {
        if (!t.monomial.factors().empty() && t.monomial.factors().back().var >= p.space_->size()) {
            throw StructuralError("monomial references a variable outside the space");
        }
    }
    normalize(terms);
    p.terms_ = std::move(terms);
    return p;
}

bool MultiPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational MultiPoly::constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
    return Rational(0);
}

Rational MultiPoly::coefficient(const Monomial& monomial) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), monomial, [](const Term& t, const Monomial& m) {
        return grlex_compare(t.monomial, m) > 0;
    });
    if (it != terms_.end() && it->monomial == monomial) return it->coefficient;
    return Rational(0);
}

std::uint32_t MultiPoly::total_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::vector<std::size_t> MultiPoly::variables() const {
    std::vector<std::size_t> vars;
    for (const auto& t : terms_)
        for (const auto& f : t.monomial.factors()) vars.push_back(f.var);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

void MultiPoly::check_space(const MultiPoly& other) const {
    if (!same_space(space_, other.space_)) {
        throw StructuralError("polynomials over different variable spaces");
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    check_space(other);
    if (other.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() && b != other.terms_.end()) {
        auto order = grlex_compare(a->monomial, b->monomial);
        if (order > 0) {
            merged.push_back(std::move(*a++));
        } else if (order < 0) {
            merged.push_back(*b++);
        } else {
            Rational sum = a->coefficient + b->coefficient;
            if (sgn(sum) != 0) merged.push_back({std::move(a->monomial), std::move(sum)});
            ++a;
            ++b;
        }
    }
    for (; a != terms_.end(); ++a) merged.push_back(std::move(*a));
    for (; b != other.terms_.end(); ++b) merged.push_back(*b);
    terms_ = std::move(merged);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    return *this += -other;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_space(b);
    MultiPoly out(a.space_);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    if (b.terms_.size() == 1 && b.terms_.front().monomial.is_one()) return a * b.terms_.front().coefficient;
    if (a.terms_.size() == 1 && a.terms_.front().monomial.is_one()) return b * a.terms_.front().coefficient;
    std::vector<Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) products.push_back({x.monomial * y.monomial, x.coefficient * y.coefficient});
    normalize(products);
    out.terms_ = std::move(products);
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
    *this = *this * other;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
    if (sgn(scalar) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coefficient *= scalar;
    return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!same_space(a.space_, b.space_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coefficient != b.terms_[i].coefficient)
            return false;
    }
    return true;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != space_->size()) {
        throw StructuralError("evaluation point has " + std::to_string(point.size()) + " coordinates, space has " +
                              std::to_string(space_->size()));
    }
    Rational total(0);
    Rational product;
    for (const auto& t : terms_) {
        product = t.coefficient;
        for (const auto& f : t.monomial.factors()) {
            if (f.exp == 1) {
                product *= point[f.var];
            } else {
                product *= power(point[f.var], f.exp);
            }
        }
        total += product;
    }
    return total;
}

Rational MultiPoly::evaluate(const std::map<std::size_t, Rational>& point) const {
    Rational total(0);
    for (const auto& t : terms_) {
        Rational product = t.coefficient;
        for (const auto& f : t.monomial.factors()) {
            auto it = point.find(f.var);
            if (it == point.end()) {
                throw StructuralError("no value assigned to variable " + space_->name(f.var));
            }
            product *= power(it->second, f.exp);
        }
        total += product;
    }
    return total;
}

MultiPoly MultiPoly::partial_derivative(std::size_t var) const {
    space_->name(var);  // range check
    const auto v = static_cast<std::uint32_t>(var);
    std::vector<Term> out;
    for (const auto& t : terms_) {
        const std::uint32_t e = t.monomial.exponent(v);
        if (e == 0) continue;
        Monomial reduced;
        for (const auto& f : t.monomial.factors()) {
            reduced = reduced * Monomial::variable(f.var, f.var == v ? f.exp - 1 : f.exp);
        }
        out.push_back({std::move(reduced), t.coefficient * e});
    }
    // Dividing every monomial by the same variable keeps the relative order.
    MultiPoly p(space_);
    p.terms_ = std::move(out);
    return p;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string text;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coefficient;
        const bool negative = sgn(c) < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) text += "-";
        } else {
            text += negative ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (const auto& f : t.monomial.factors()) {
            if (!mono.empty()) mono += "*";
            mono += space_->name(f.var);
            if (f.exp > 1) mono += "^" + std::to_string(f.exp);
        }
        if (mono.empty()) {
            text += lcmid::to_string(c);
        } else if (c == 1) {
            text += mono;
        } else {
            text += lcmid::to_string(c) + "*" + mono;
        }
    }
    return text;
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
MultiPoly partial_derivative(const MultiPoly& p, std::size_t var) { return p.partial_derivative(var); }
Rational evaluate(const MultiPoly& p, const std::map<std::size_t, Rational>& point) { return p.evaluate(point); }

// ---------------------------------------------------------------- symmetric polynomials

std::vector<MultiPoly> elementary_symmetric_all(const SpacePtr& space, std::span<const MultiPoly> values) {
    std::vector<MultiPoly> e;
    e.reserve(values.size() + 1);
    e.push_back(MultiPoly::constant(space, Rational(1)));
    // Multiply out prod (1 + v t) one factor at a time; e[k] is the t^k coefficient.
    for (const auto& v : values) {
        e.push_back(MultiPoly::zero(space));
        for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += v * e[k - 1];
    }
    return e;
}

MultiPoly elementary_symmetric(const SpacePtr& space, std::span<const MultiPoly> values, int m) {
    if (m < 0) {
        throw StructuralError("elementary symmetric polynomial of negative degree");
    }
    const auto order = static_cast<std::size_t>(m);
    if (order > values.size()) return MultiPoly::zero(space);
    std::vector<MultiPoly> e(order + 1, MultiPoly::zero(space));
    e[0] = MultiPoly::constant(space, Rational(1));
    std::size_t seen = 0;
    for (const auto& v : values) {
        ++seen;
        for (std::size_t k = std::min(seen, order); k >= 1; --k) e[k] += v * e[k - 1];
    }
    return e[order];
}

bool vandermonde_check(int n) {
    if (n < 1) {
        throw StructuralError("vandermonde_check needs n >= 1");
    }
    const auto count = static_cast<std::size_t>(n);
    auto space = VariableSpace::indexed(count);
    std::vector<MultiPoly> xs;
    for (std::size_t i = 0; i < count; ++i) xs.push_back(MultiPoly::variable(space, i));
    auto e = elementary_symmetric_all(space, xs);

    Matrix<MultiPoly> jac(count, count, MultiPoly::zero(space));
    for (std::size_t m = 0; m < count; ++m)
        for (std::size_t i = 0; i < count; ++i) jac(m, i) = e[m + 1].partial_derivative(i);
    const MultiPoly det = laplace_determinant(jac, MultiPoly::constant(space, Rational(1)));

    MultiPoly vandermonde = MultiPoly::constant(space, Rational(1));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) vandermonde *= xs[i] - xs[j];
    return det == vandermonde || det == -vandermonde;
}

}  // namespace lcmid
