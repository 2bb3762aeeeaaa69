#include "lcmid/families.hpp"

#include "lcmid/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lcmid {

std::string to_string(Family f) {
    switch (f) {
        case Family::catenary: return "catenary";
        case Family::cycle: return "cycle";
        case Family::mammillary: return "mammillary";
        case Family::fin: return "fin";
        case Family::wing: return "wing";
        case Family::cycle_plus_edges: return "cycle-plus-edges";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::catenary, Family::cycle, Family::mammillary, Family::fin, Family::wing,
                     Family::cycle_plus_edges}) {
        if (name == to_string(f)) return f;
    }
    throw UsageError("unknown model family '" + std::string(name) +
                     "' (expected catenary, cycle, mammillary, fin, wing, cycle-plus-edges)");
}

int cyclic_successor(int i, int n) { return i % n + 1; }

namespace {

void check_added_edges(const std::vector<int>& xs, int lo, int hi, const char* what) {
    std::set<int> seen;
    for (int x : xs) {
        if (x < lo || x > hi) {
            throw UsageError(std::string(what) + " edge index " + std::to_string(x) + " outside " +
                             std::to_string(lo) + ".." + std::to_string(hi));
        }
        if (!seen.insert(x).second) {
            throw UsageError(std::string(what) + " edge index " + std::to_string(x) + " listed twice");
        }
    }
}

void add_cycle(ModelSpec& m) {
    for (int i = 1; i <= m.n; ++i) m.edges.push_back({i, cyclic_successor(i, m.n)});
}

}  // namespace

ModelSpec build(const FamilySpec& f) {
    const int min_n = (f.kind == Family::catenary || f.kind == Family::mammillary) ? 1 : 3;
    if (f.n < min_n) {
        throw UsageError(to_string(f.kind) + " models need n >= " + std::to_string(min_n));
    }
    const bool takes_edges = f.kind == Family::cycle || f.kind == Family::cycle_plus_edges;
    if (!takes_edges && (!f.incoming.empty() || !f.outgoing.empty())) {
        throw UsageError("incoming/outgoing edges can only be added to a cycle");
    }
    check_added_edges(f.incoming, 2, f.n - 1, "incoming");
    check_added_edges(f.outgoing, 3, f.n, "outgoing");

    ModelSpec m;
    m.n = f.n;
    switch (f.kind) {
        case Family::catenary:
            for (int i = 1; i < f.n; ++i) {
                m.edges.push_back({i, i + 1});
                m.edges.push_back({i + 1, i});
            }
            break;
        case Family::mammillary:
            for (int i = 2; i <= f.n; ++i) {
                m.edges.push_back({1, i});
                m.edges.push_back({i, 1});
            }
            break;
        case Family::cycle:
        case Family::cycle_plus_edges:
            add_cycle(m);
            for (int i : f.incoming) m.edges.push_back({i, 1});
            for (int j : f.outgoing) m.edges.push_back({1, j});
            break;
        case Family::fin:
            add_cycle(m);
            for (int i = 2; i <= f.n - 1; ++i) m.edges.push_back({i, 1});
            break;
        case Family::wing:
            add_cycle(m);
            for (int j = 3; j <= f.n; ++j) m.edges.push_back({1, j});
            break;
    }
    m.inputs = f.inputs;
    m.outputs = f.outputs;
    m.leaks = f.leaks;
    validate(m);
    return canonicalize(std::move(m));
}

namespace {

struct Builder {
    ParameterSpace params;
    SpacePtr space;
    int output;
    CoefficientMap map;

    Builder(const ModelSpec& model, int out) : params(model), space(params.space()), output(out) {}

    MultiPoly one() const { return MultiPoly::constant(space, Rational(1)); }
    MultiPoly zero() const { return MultiPoly::zero(space); }
    MultiPoly k(int i, int j) const { return params.k(i, j); }

    void lhs(int power, MultiPoly p) { map.entries.push_back({{output, Side::lhs, 0, power}, std::move(p)}); }
    void rhs(int power, MultiPoly p) { map.entries.push_back({{output, Side::rhs, 1, power}, std::move(p)}); }

    std::vector<MultiPoly> esym(const std::vector<MultiPoly>& values) const {
        return elementary_symmetric_all(space, values);
    }
};

// e_m with e_m = 0 beyond the set size.
const MultiPoly& at(const std::vector<MultiPoly>& e, int m, const MultiPoly& zero) {
    return (m >= 0 && static_cast<std::size_t>(m) < e.size()) ? e[static_cast<std::size_t>(m)] : zero;
}

CoefficientMap cycle_closed_form(int n, int p, const std::vector<int>& leaks) {
    if (n < 3) throw UsageError("cycle closed forms need n >= 3");
    if (p < 1 || p > n) throw UsageError("output compartment outside 1..n");
    FamilySpec f{Family::cycle, n, {1}, {p}, leaks, {}, {}};
    Builder b(build(f), p);
    const std::set<int> leaky(leaks.begin(), leaks.end());

    // Diagonal entry of sI - A in column l, minus s: k_{l+1,l} (+ k_{0,l}).
    auto outflow = [&](int l) {
        MultiPoly x = b.k(cyclic_successor(l, n), l);
        if (leaky.count(l)) x += b.k(0, l);
        return x;
    };
    std::vector<MultiPoly> all, tail;
    for (int l = 1; l <= n; ++l) all.push_back(outflow(l));
    for (int l = p + 1; l <= n; ++l) tail.push_back(outflow(l));
    const auto e = b.esym(all);
    const auto e_star = b.esym(tail);

    MultiPoly kappa = b.one();
    for (int i = 2; i <= p; ++i) kappa *= b.k(i, i - 1);

    for (int m = 1; m <= n - 1; ++m) b.lhs(n - m, e[static_cast<std::size_t>(m)]);
    if (!leaks.empty()) {
        MultiPoly cycle_product = b.one();
        for (int i = 1; i <= n; ++i) cycle_product *= b.k(cyclic_successor(i, n), i);
        b.lhs(0, e[static_cast<std::size_t>(n)] - cycle_product);
    }
    for (int m = 0; m <= n - p; ++m) b.rhs(n - p - m, e_star[static_cast<std::size_t>(m)] * kappa);
    return std::move(b.map);
}

}  // namespace

CoefficientMap cycle_coeff_map_noleak(int n, int p) {
    if (p == 1) {
        throw UsageError("the no-leak cycle closed form assumes the output is not in compartment 1");
    }
    return cycle_closed_form(n, p, {});
}

CoefficientMap cycle_coeff_map_leaks(int n, int p, const std::vector<int>& leaks) {
    if (leaks.empty()) {
        throw UsageError("cycle_coeff_map_leaks needs at least one leak; use cycle_coeff_map_noleak");
    }
    return cycle_closed_form(n, p, leaks);
}

CoefficientMap fin_coeff_map(int n) {
    if (n < 3) throw UsageError("Fin closed form needs n >= 3");
    Builder b(build({Family::fin, n, {1}, {1}, {}, {}, {}}), 1);
    const MultiPoly zero = b.zero();

    // upper[l] = e^{[l]}: elementary symmetric polynomials on
    // {k_{1,j} + k_{j+1,j} : l <= j <= n-1} u {k_{1,n}}, for 2 <= l <= n.
    std::map<int, std::vector<MultiPoly>> upper;
    for (int l = 2; l <= n; ++l) {
        std::vector<MultiPoly> set;
        for (int j = l; j <= n - 1; ++j) set.push_back(b.k(1, j) + b.k(j + 1, j));
        set.push_back(b.k(1, n));
        upper[l] = b.esym(set);
    }
    auto P = [&](int l) {
        MultiPoly x = b.k(1, l);
        for (int i = 2; i <= l; ++i) x *= b.k(i, i - 1);
        return x;
    };
    const auto& e2 = upper[2];
    const MultiPoly k21 = b.k(2, 1);

    for (int m = 1; m <= n - 1; ++m) b.rhs(n - 1 - m, e2[static_cast<std::size_t>(m)]);
    b.lhs(n - 1, e2[1] + k21);
    for (int l = 2; l <= n - 1; ++l) {
        MultiPoly phi = at(e2, l, zero) + k21 * at(e2, l - 1, zero);
        for (int i = 2; i <= l; ++i) phi -= P(i) * at(upper[i + 1], l - i, zero);
        b.lhs(n - l, phi);
    }
    return std::move(b.map);
}

CoefficientMap wing_coeff_map(int n) {
    if (n < 3) throw UsageError("Wing closed form needs n >= 3");
    Builder b(build({Family::wing, n, {1}, {1}, {}, {}, {}}), 1);
    const MultiPoly zero = b.zero();

    std::vector<MultiPoly> e_prime_set;
    for (int i = 2; i <= n - 1; ++i) e_prime_set.push_back(b.k(i + 1, i));
    e_prime_set.push_back(b.k(1, n));
    const auto e_prime = b.esym(e_prime_set);

    // h[j] = elementary symmetric polynomials on {k_{3,2}, ..., k_{j,j-1}}; h[2] = {1}.
    std::map<int, std::vector<MultiPoly>> h;
    for (int j = 2; j <= n; ++j) {
        std::vector<MultiPoly> set;
        for (int i = 3; i <= j; ++i) set.push_back(b.k(i, i - 1));
        h[j] = b.esym(set);
    }
    auto Q = [&](int j) {
        MultiPoly x = b.k(1, n) * b.k(j, 1);
        for (int i = j; i <= n - 1; ++i) x *= b.k(i + 1, i);
        return x;
    };
    MultiPoly K = b.zero();
    for (int j = 2; j <= n; ++j) K += b.k(j, 1);

    for (int m = 1; m <= n - 1; ++m) b.rhs(n - 1 - m, e_prime[static_cast<std::size_t>(m)]);
    for (int j = 1; j <= n - 1; ++j) {
        MultiPoly psi = at(e_prime, j, zero) + at(e_prime, j - 1, zero) * K;
        for (int i = n - j + 2; i <= n; ++i) psi -= Q(i) * at(h[i], i - n + j - 2, zero);
        b.lhs(n - j, psi);
    }
    return std::move(b.map);
}

std::optional<CoefficientMap> closed_form(const FamilySpec& f) {
    const bool in1 = f.inputs == std::vector<int>{1};
    const bool single_out = f.outputs.size() == 1;
    switch (f.kind) {
        case Family::cycle:
            if (!f.incoming.empty() || !f.outgoing.empty() || !in1 || !single_out) return std::nullopt;
            if (!f.leaks.empty()) return cycle_coeff_map_leaks(f.n, f.outputs.front(), f.leaks);
            if (f.outputs.front() != 1) return cycle_coeff_map_noleak(f.n, f.outputs.front());
            return std::nullopt;
        case Family::fin:
            if (in1 && f.outputs == std::vector<int>{1} && f.leaks.empty()) return fin_coeff_map(f.n);
            return std::nullopt;
        case Family::wing:
            if (in1 && f.outputs == std::vector<int>{1} && f.leaks.empty()) return wing_coeff_map(f.n);
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

std::optional<std::string> compare_coefficient_maps(const CoefficientMap& closed, const CoefficientMap& pipeline) {
    auto find_entry = [&](const CoefficientLabel& l) -> const CoefficientEntry* {
        for (const auto& e : pipeline.entries)
            if (e.label == l) return &e;
        return nullptr;
    };
    auto find_dropped = [&](const CoefficientLabel& l) -> const DroppedCoefficient* {
        for (const auto& d : pipeline.dropped)
            if (d.label == l) return &d;
        return nullptr;
    };
    std::size_t matched = 0;
    for (const auto& c : closed.entries) {
        if (c.poly.is_constant()) {
            const auto* d = find_dropped(c.label);
            if (!d || d->value != c.poly.constant_term()) {
                return "constant closed-form entry at " + c.label.to_string() + " (" + c.poly.to_string() +
                       ") is not a dropped constant slot of the pipeline map";
            }
            continue;
        }
        const auto* e = find_entry(c.label);
        if (!e) return "pipeline map has no coefficient at " + c.label.to_string();
        if (!(e->poly == c.poly)) {
            return "mismatch at " + c.label.to_string() + ": closed form " + c.poly.to_string() + " vs pipeline " +
                   e->poly.to_string();
        }
        ++matched;
    }
    if (matched != pipeline.size()) {
        return "pipeline map has " + std::to_string(pipeline.size()) + " coefficients, closed form matches " +
               std::to_string(matched);
    }
    return std::nullopt;
}

bool verify_closed_form(const FamilySpec& f) {
    auto closed = closed_form(f);
    if (!closed) throw UsageError("no closed-form coefficient map for this " + to_string(f.kind) + " placement");
    const ModelSpec model = build(f);
    return !compare_coefficient_maps(*closed, coefficient_map(model, ParameterSpace(model))).has_value();
}

}  // namespace lcmid
