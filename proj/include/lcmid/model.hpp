#pragma once

// Linear compartmental models (G, In, Out, Leak).
//
// Compartments are numbered 1..n in every public interface; matrices are
// addressed 0-based internally (compartment i sits in row/column i-1).

#include "lcmid/matrix.hpp"
#include "lcmid/poly.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lcmid {

/// Directed edge from -> to, carrying the rate constant k_{to,from}.
struct Edge {
    int from;
    int to;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct ModelSpec {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<int> inputs;
    std::vector<int> outputs;
    std::vector<int> leaks;

    friend bool operator==(const ModelSpec&, const ModelSpec&) = default;

    std::size_t parameter_count() const noexcept { return edges.size() + leaks.size(); }
    bool has_edge(int from, int to) const;
    bool is_input(int i) const;
    bool is_output(int i) const;
    bool is_leak(int i) const;
};

/// One message per violated invariant; empty when the model is valid.
std::vector<std::string> validation_errors(const ModelSpec& model);

/// Throws ValidationError listing every violated invariant.
void validate(const ModelSpec& model);

/// Sorted edges (ascending (from, to)) and sorted index sets.
ModelSpec canonicalize(ModelSpec model);

/// Deterministic 64-bit hash of the canonical model.
std::uint64_t model_hash(const ModelSpec& model);

enum class VarKind { edge, leak };

/// A rate constant: edge(from -> to) is k_{to,from}; leak(j) is k_{0,j}.
struct VarId {
    VarKind kind;
    int from;
    int to;  // 0 for leaks

    static VarId edge(int from, int to) { return {VarKind::edge, from, to}; }
    static VarId leak(int compartment) { return {VarKind::leak, compartment, 0}; }

    std::string name() const;
    friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// The model's parameters in canonical order: edges ascending by (from, to),
/// then leaks ascending. Owns the VariableSpace that every polynomial of
/// the model's analysis lives in.
class ParameterSpace {
public:
    explicit ParameterSpace(const ModelSpec& model);

    std::size_t size() const noexcept { return ids_.size(); }
    const std::vector<VarId>& ids() const noexcept { return ids_; }
    const SpacePtr& space() const noexcept { return space_; }

    std::optional<std::size_t> find(const VarId& id) const;
    /// Throws StructuralError when the model has no such parameter.
    std::size_t index_of(const VarId& id) const;

    /// k_{to,from} as a polynomial.
    MultiPoly edge(int from, int to) const;
    /// k_{0,j} as a polynomial.
    MultiPoly leak(int compartment) const;
    /// k_{ij} in the usual notation: leak out of j when i == 0, else edge j -> i.
    MultiPoly k(int i, int j) const;

private:
    std::vector<VarId> ids_;
    SpacePtr space_;
};

/// A_{ii} = -k_{0i}[i in Leak] - sum_{i->p} k_{pi};  A_{ij} = k_{ij} for an edge j -> i.
Matrix<MultiPoly> compartmental_matrix(const ModelSpec& model, const ParameterSpace& params);

bool is_strongly_connected(const ModelSpec& model);

/// Whether the subgraph induced by `vertices` (1-based) is strongly connected.
bool induced_strongly_connected(const ModelSpec& model, std::span<const int> vertices);

/// True iff `ordering` starts at 1, is a permutation of 1..n, and every
/// prefix induces a strongly connected subgraph.
bool is_inductive_ordering(const ModelSpec& model, std::span<const int> ordering);

inline constexpr int kDefaultInductiveLimit = 12;

/// Grows a prefix from {1} one vertex at a time with backtracking; dead
/// prefix sets are remembered so each vertex subset is explored once.
/// Exponential in the worst case, so models with n > limit are refused
/// with LimitExceeded.
std::optional<std::vector<int>> find_inductive_ordering(const ModelSpec& model, int limit = kDefaultInductiveLimit);

bool is_inductively_strongly_connected(const ModelSpec& model, int limit = kDefaultInductiveLimit);

}  // namespace lcmid
