#pragma once

// Generic local identifiability via the rank of the coefficient map's Jacobian.
//
// The Jacobian is built symbolically and its rank is measured exactly at
// random integer points. One full-rank point proves full generic rank;
// a deficit at every sampled point is only Monte Carlo evidence unless a
// structural certificate (parameter counting, dependent columns) backs it.

#include "lcmid/ioeq.hpp"
#include "lcmid/model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcmid {

inline constexpr int kDefaultTrials = 5;
inline constexpr std::uint64_t kDefaultSamplingBound = 10'000;

/// entry (r, v) = d c[r] / d p[v]. Throws StructuralError when a coefficient
/// lives in a different variable space than `params`.
Matrix<MultiPoly> jacobian(const CoefficientMap& map, const ParameterSpace& params);

/// Rank over Q by fraction-free (Bareiss) elimination after clearing denominators row-wise.
std::size_t exact_rank(const Matrix<Rational>& m);

Matrix<Rational> evaluate(const Matrix<MultiPoly>& m, std::span<const Rational> point);

struct GenericRank {
    std::size_t rank = 0;
    std::vector<Rational> witness;         // a point achieving `rank`
    std::vector<std::size_t> trial_ranks;  // one per evaluated point, in draw order
    std::uint64_t bound_used = 0;          // largest coordinate bound that was sampled
    bool rebalanced = false;
};

/// Draws `trials` points with coordinates uniform in [1, bound] from a
/// generator seeded by `seed`, and returns the maximum exact rank. If the
/// trials disagree, `trials` more points are drawn at bound * 10 from a
/// second derived stream. Non-decreasing in `trials` for a fixed seed.
GenericRank generic_rank(const Matrix<MultiPoly>& jac, int trials, std::uint64_t seed,
                         std::uint64_t bound = kDefaultSamplingBound);

enum class CertificateKind {
    parameter_count,     // |E| + |Leak| > m, so rank < |E| + |Leak|
    column_dependence,   // two leak/edge column differences share one supporting row
    identical_columns,   // a leak column equals an outgoing-edge column
};

std::string to_string(CertificateKind kind);

/// A machine-checked reason the Jacobian cannot have full column rank.
struct StructuralCertificate {
    CertificateKind kind;
    std::string detail;
    std::vector<std::string> columns;  // parameter names involved
    std::optional<CoefficientLabel> row;
};

/// Checks the counting bound and, for every pair of leaks l1 != l2 with
/// edges l1 -> t1 and l2 -> t2, whether the column differences
/// C(k_{t1,l1}) - C(k_{0,l1}) and C(k_{t2,l2}) - C(k_{0,l2}) are both
/// supported on the same single row (symbolically). Such a pair makes
/// those four columns linearly dependent.
std::vector<StructuralCertificate> structural_certificates(const ModelSpec& model, const ParameterSpace& params,
                                                           const CoefficientMap& map, const Matrix<MultiPoly>& jac);

struct Verdict {
    bool identifiable = false;
    /// True for a full-rank witness or a structural certificate; false for a
    /// sampled rank deficit with no proof behind it.
    bool certified = false;
    std::optional<std::size_t> generic_rank;  // empty when sampling was skipped
    std::size_t required_rank = 0;
    std::size_t num_coefficients = 0;
    int trials = kDefaultTrials;
    std::uint64_t seed = 0;
    std::uint64_t sampling_bound = kDefaultSamplingBound;
    std::vector<std::pair<std::string, Rational>> witness_point;
    std::vector<StructuralCertificate> certificates;
};

struct Analysis {
    ModelSpec model;
    ParameterSpace params;
    std::vector<IOEquation> equations;
    CoefficientMap coefficients;
    Verdict verdict;
};

/// Full pipeline. Requires a valid, strongly connected model with at least
/// one input (HypothesisError otherwise).
Analysis analyze(const ModelSpec& model, int trials = kDefaultTrials, std::uint64_t seed = 0);

Verdict decide(const ModelSpec& model, int trials = kDefaultTrials, std::uint64_t seed = 0);

/// Seed of the sampling stream for (seed, model).
std::uint64_t derive_stream_seed(std::uint64_t seed, const ModelSpec& model);

}  // namespace lcmid
