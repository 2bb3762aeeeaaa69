#include "lcmid/ident.hpp"

#include "lcmid/errors.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace lcmid {

Matrix<MultiPoly> jacobian(const CoefficientMap& map, const ParameterSpace& params) {
    Matrix<MultiPoly> jac(map.size(), params.size(), MultiPoly::zero(params.space()));
    for (std::size_t r = 0; r < map.size(); ++r) {
        const MultiPoly& c = map[r];
        if (!same_space(c.space(), params.space())) {
            throw StructuralError("coefficient " + map.entries[r].label.to_string() +
                                  " uses variables outside the parameter space");
        }
        for (std::size_t v = 0; v < params.size(); ++v) jac(r, v) = c.partial_derivative(v);
    }
    return jac;
}

std::size_t exact_rank(const Matrix<Rational>& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    // Scale each row to integers; row scaling does not change rank.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer lcm = 1;
        for (std::size_t c = 0; c < cols; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (lcm / m(r, c).get_den());
    }
    std::size_t rank = 0;
    Integer previous = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const Integer& p = a[rank][c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = p * a[r][j] - a[r][c] * a[rank][j];
                mpz_divexact(a[r][j].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
            }
            a[r][c] = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

Matrix<Rational> evaluate(const Matrix<MultiPoly>& m, std::span<const Rational> point) {
    return m.map([&](const MultiPoly& p) { return p.evaluate(point); });
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint32_t salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), salt};
    return std::mt19937_64(seq);
}

std::vector<Rational> draw_point(std::mt19937_64& rng, std::size_t dim, std::uint64_t bound) {
    std::vector<Rational> point;
    point.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        // 1..bound, same sequence on every platform.
        const std::uint64_t v = 1 + rng() % bound;
        point.emplace_back(Integer(std::to_string(v)));
    }
    return point;
}

}  // namespace

std::uint64_t derive_stream_seed(std::uint64_t seed, const ModelSpec& model) {
    return splitmix64(seed ^ splitmix64(model_hash(model)));
}

GenericRank generic_rank(const Matrix<MultiPoly>& jac, int trials, std::uint64_t seed, std::uint64_t bound) {
    if (trials < 1) throw UsageError("generic_rank needs at least one trial");
    if (bound < 1) throw UsageError("sampling bound must be positive");
    GenericRank result;
    result.bound_used = bound;
    if (jac.rows() == 0 || jac.cols() == 0) {
        result.trial_ranks.assign(static_cast<std::size_t>(trials), 0);
        return result;
    }
    const std::size_t dim = jac(0, 0).space()->size();
    bool have_witness = false;
    auto run = [&](std::mt19937_64& rng, std::uint64_t b) {
        for (int t = 0; t < trials; ++t) {
            auto point = draw_point(rng, dim, b);
            const std::size_t r = exact_rank(evaluate(jac, point));
            result.trial_ranks.push_back(r);
            if (!have_witness || r > result.rank) {
                result.rank = r;
                result.witness = std::move(point);
                have_witness = true;
            }
        }
    };
    auto base = make_stream(seed, 0);
    run(base, bound);
    const auto [lo, hi] = std::minmax_element(result.trial_ranks.begin(), result.trial_ranks.end());
    if (*lo != *hi) {
        result.rebalanced = true;
        result.bound_used = bound * 10;
        auto wider = make_stream(seed, 1);
        run(wider, result.bound_used);
    }
    return result;
}

std::string to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::parameter_count: return "parameter-count";
        case CertificateKind::column_dependence: return "column-dependence";
        case CertificateKind::identical_columns: return "identical-columns";
    }
    return "unknown";
}

std::vector<StructuralCertificate> structural_certificates(const ModelSpec& model, const ParameterSpace& params,
                                                           const CoefficientMap& map, const Matrix<MultiPoly>& jac) {
    std::vector<StructuralCertificate> certs;
    const std::size_t required = params.size();
    if (required > map.size()) {
        certs.push_back({CertificateKind::parameter_count,
                         std::to_string(required) + " parameters but only " + std::to_string(map.size()) +
                             " coefficients, so rank <= " + std::to_string(map.size()) + " < " +
                             std::to_string(required),
                         {},
                         std::nullopt});
    }

    struct Pair {
        int leak;
        std::size_t edge_col;
        std::size_t leak_col;
    };
    std::map<std::size_t, std::vector<Pair>> by_row;  // single supporting row -> pairs
    const ModelSpec canon = canonicalize(model);
    for (int l : canon.leaks) {
        const std::size_t leak_col = params.index_of(VarId::leak(l));
        for (const auto& e : canon.edges) {
            if (e.from != l) continue;
            const std::size_t edge_col = params.index_of(VarId::edge(e.from, e.to));
            std::vector<std::size_t> support;
            for (std::size_t r = 0; r < jac.rows(); ++r) {
                if (!(jac(r, edge_col) == jac(r, leak_col))) support.push_back(r);
            }
            if (support.empty()) {
                certs.push_back({CertificateKind::identical_columns,
                                 "columns " + params.ids()[edge_col].name() + " and " + params.ids()[leak_col].name() +
                                     " are identical",
                                 {params.ids()[edge_col].name(), params.ids()[leak_col].name()},
                                 std::nullopt});
            } else if (support.size() == 1) {
                by_row[support.front()].push_back({l, edge_col, leak_col});
            }
        }
    }
    for (const auto& [row, pairs] : by_row) {
        // One certificate per row suffices: the first two pairs from distinct leaks.
        for (std::size_t a = 0; a < pairs.size(); ++a) {
            auto b = std::find_if(pairs.begin() + static_cast<std::ptrdiff_t>(a) + 1, pairs.end(),
                                  [&](const Pair& p) { return p.leak != pairs[a].leak; });
            if (b == pairs.end()) continue;
            const auto& ids = params.ids();
            std::vector<std::string> cols{ids[pairs[a].edge_col].name(), ids[pairs[a].leak_col].name(),
                                          ids[b->edge_col].name(), ids[b->leak_col].name()};
            certs.push_back({CertificateKind::column_dependence,
                             "C(" + cols[0] + ") - C(" + cols[1] + ") and C(" + cols[2] + ") - C(" + cols[3] +
                                 ") are both zero outside row " + map.entries[row].label.to_string(),
                             cols,
                             map.entries[row].label});
            break;
        }
    }
    return certs;
}

namespace {

void check_hypotheses(const ModelSpec& model) {
    validate(model);
    if (model.inputs.empty()) {
        throw HypothesisError("the rank criterion needs at least one input; the model has none");
    }
    if (!is_strongly_connected(model)) {
        throw HypothesisError("the rank criterion needs a strongly connected model");
    }
}

}  // namespace

Analysis analyze(const ModelSpec& spec, int trials, std::uint64_t seed) {
    if (trials < 1) throw UsageError("trials must be at least 1");
    const ModelSpec model = canonicalize(spec);
    check_hypotheses(model);

    ParameterSpace params(model);
    auto equations = io_equations(model, params);
    auto coefficients = coefficient_map(equations);
    const Matrix<MultiPoly> jac = jacobian(coefficients, params);

    Verdict v;
    v.required_rank = params.size();
    v.num_coefficients = coefficients.size();
    v.trials = trials;
    v.seed = seed;
    v.certificates = structural_certificates(model, params, coefficients, jac);

    const bool counted_out = std::any_of(v.certificates.begin(), v.certificates.end(), [](const auto& c) {
        return c.kind == CertificateKind::parameter_count;
    });
    if (counted_out) {
        v.identifiable = false;
        v.certified = true;
    } else {
        const GenericRank g = generic_rank(jac, trials, derive_stream_seed(seed, model));
        v.generic_rank = g.rank;
        v.sampling_bound = g.bound_used;
        for (std::size_t i = 0; i < g.witness.size(); ++i) v.witness_point.emplace_back(params.ids()[i].name(), g.witness[i]);
        v.identifiable = g.rank == v.required_rank;
        if (v.identifiable && !v.certificates.empty()) {
            throw std::logic_error("full-rank witness contradicts a structural dependence certificate");
        }
        v.certified = v.identifiable || !v.certificates.empty();
    }
    return Analysis{model, std::move(params), std::move(equations), std::move(coefficients), std::move(v)};
}

Verdict decide(const ModelSpec& model, int trials, std::uint64_t seed) { return analyze(model, trials, seed).verdict; }

}  // namespace lcmid
