#include "lcmid/model.hpp"

#include "lcmid/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_set>

namespace lcmid {

namespace {

bool contains(const std::vector<int>& xs, int x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

void check_index_set(const std::vector<int>& xs, int n, const char* what, std::vector<std::string>& errors) {
    std::set<int> seen;
    for (int x : xs) {
        if (x < 1 || x > n) {
            errors.push_back(std::string(what) + " compartment " + std::to_string(x) + " outside 1.." +
                             std::to_string(n));
        }
        if (!seen.insert(x).second) {
            errors.push_back(std::string(what) + " compartment " + std::to_string(x) + " listed twice");
        }
    }
}

// Vertices reachable from `start` inside `allowed` (0-based), following
// edges forwards or backwards.
std::vector<bool> reach(const ModelSpec& model, int start, const std::vector<bool>& allowed, bool reverse) {
    const auto n = static_cast<std::size_t>(model.n);
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : model.edges) {
        int a = e.from - 1, b = e.to - 1;
        if (reverse) std::swap(a, b);
        if (allowed[a] && allowed[b]) adj[a].push_back(b);
    }
    std::vector<bool> seen(n, false);
    std::queue<int> todo;
    seen[start] = true;
    todo.push(start);
    while (!todo.empty()) {
        int v = todo.front();
        todo.pop();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                todo.push(w);
            }
        }
    }
    return seen;
}

std::uint64_t fnv1a(std::uint64_t h, std::int64_t value) {
    for (int i = 0; i < 8; ++i) {
        h ^= static_cast<std::uint64_t>(value >> (8 * i)) & 0xffu;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace

bool ModelSpec::has_edge(int from, int to) const {
    return std::find(edges.begin(), edges.end(), Edge{from, to}) != edges.end();
}
bool ModelSpec::is_input(int i) const { return contains(inputs, i); }
bool ModelSpec::is_output(int i) const { return contains(outputs, i); }
bool ModelSpec::is_leak(int i) const { return contains(leaks, i); }

std::vector<std::string> validation_errors(const ModelSpec& model) {
    std::vector<std::string> errors;
    if (model.n < 1) {
        errors.push_back("model needs at least one compartment (n = " + std::to_string(model.n) + ")");
        return errors;
    }
    if (model.n > 62) {
        errors.push_back("at most 62 compartments are supported (n = " + std::to_string(model.n) + ")");
    }
    std::set<Edge> seen;
    for (const auto& e : model.edges) {
        const std::string label = "edge " + std::to_string(e.from) + "->" + std::to_string(e.to);
        if (e.from < 1 || e.from > model.n || e.to < 1 || e.to > model.n) {
            errors.push_back(label + " has an endpoint outside 1.." + std::to_string(model.n));
        }
        if (e.from == e.to) {
            errors.push_back(label + " is a self-loop");
        }
        if (!seen.insert(e).second) {
            errors.push_back(label + " listed twice");
        }
    }
    check_index_set(model.inputs, model.n, "input", errors);
    check_index_set(model.outputs, model.n, "output", errors);
    check_index_set(model.leaks, model.n, "leak", errors);
    if (model.outputs.empty()) {
        errors.push_back("model has no output (Out must be nonempty)");
    }
    return errors;
}

void validate(const ModelSpec& model) {
    auto errors = validation_errors(model);
    if (errors.empty()) return;
    std::string message = "invalid model:";
    for (const auto& e : errors) message += "\n  - " + e;
    throw ValidationError(message);
}

ModelSpec canonicalize(ModelSpec model) {
    std::sort(model.edges.begin(), model.edges.end());
    std::sort(model.inputs.begin(), model.inputs.end());
    std::sort(model.outputs.begin(), model.outputs.end());
    std::sort(model.leaks.begin(), model.leaks.end());
    return model;
}

std::uint64_t model_hash(const ModelSpec& spec) {
    const ModelSpec model = canonicalize(spec);
    std::uint64_t h = 0xcbf29ce484222325ull;
    h = fnv1a(h, model.n);
    auto put = [&](const std::vector<int>& xs, std::int64_t tag) {
        h = fnv1a(h, tag);
        h = fnv1a(h, static_cast<std::int64_t>(xs.size()));
        for (int x : xs) h = fnv1a(h, x);
    };
    h = fnv1a(h, static_cast<std::int64_t>(model.edges.size()));
    for (const auto& e : model.edges) {
        h = fnv1a(h, e.from);
        h = fnv1a(h, e.to);
    }
    put(model.inputs, -1);
    put(model.outputs, -2);
    put(model.leaks, -3);
    return h;
}

std::string VarId::name() const {
    if (kind == VarKind::leak) return "k_{0," + std::to_string(from) + "}";
    return "k_{" + std::to_string(to) + "," + std::to_string(from) + "}";
}

ParameterSpace::ParameterSpace(const ModelSpec& spec) {
    const ModelSpec model = canonicalize(spec);
    std::vector<std::string> names;
    for (const auto& e : model.edges) ids_.push_back(VarId::edge(e.from, e.to));
    for (int j : model.leaks) ids_.push_back(VarId::leak(j));
    for (const auto& id : ids_) names.push_back(id.name());
    space_ = VariableSpace::make(std::move(names));
}

std::optional<std::size_t> ParameterSpace::find(const VarId& id) const {
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t ParameterSpace::index_of(const VarId& id) const {
    if (auto idx = find(id)) return *idx;
    throw StructuralError("model has no parameter " + id.name());
}

MultiPoly ParameterSpace::edge(int from, int to) const {
    return MultiPoly::variable(space_, index_of(VarId::edge(from, to)));
}

MultiPoly ParameterSpace::leak(int compartment) const {
    return MultiPoly::variable(space_, index_of(VarId::leak(compartment)));
}

MultiPoly ParameterSpace::k(int i, int j) const { return i == 0 ? leak(j) : edge(j, i); }

Matrix<MultiPoly> compartmental_matrix(const ModelSpec& model, const ParameterSpace& params) {
    validate(model);
    const auto n = static_cast<std::size_t>(model.n);
    Matrix<MultiPoly> a(n, n, MultiPoly::zero(params.space()));
    for (const auto& e : model.edges) {
        const MultiPoly rate = params.edge(e.from, e.to);
        a(e.to - 1, e.from - 1) += rate;
        a(e.from - 1, e.from - 1) -= rate;
    }
    for (int j : model.leaks) a(j - 1, j - 1) -= params.leak(j);
    return a;
}

bool induced_strongly_connected(const ModelSpec& model, std::span<const int> vertices) {
    if (vertices.empty()) return true;
    std::vector<bool> allowed(static_cast<std::size_t>(model.n), false);
    for (int v : vertices) allowed[v - 1] = true;
    const int root = vertices.front() - 1;
    auto fwd = reach(model, root, allowed, false);
    auto bwd = reach(model, root, allowed, true);
    for (int v : vertices) {
        if (!fwd[v - 1] || !bwd[v - 1]) return false;
    }
    return true;
}

bool is_strongly_connected(const ModelSpec& model) {
    validate(model);
    std::vector<int> all(static_cast<std::size_t>(model.n));
    for (int i = 0; i < model.n; ++i) all[i] = i + 1;
    return induced_strongly_connected(model, all);
}

bool is_inductive_ordering(const ModelSpec& model, std::span<const int> ordering) {
    validate(model);
    if (ordering.size() != static_cast<std::size_t>(model.n) || ordering.front() != 1) return false;
    std::vector<int> sorted(ordering.begin(), ordering.end());
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < model.n; ++i)
        if (sorted[i] != i + 1) return false;
    for (std::size_t k = 1; k <= ordering.size(); ++k) {
        if (!induced_strongly_connected(model, ordering.first(k))) return false;
    }
    return true;
}

std::optional<std::vector<int>> find_inductive_ordering(const ModelSpec& model, int limit) {
    validate(model);
    if (model.n > limit) {
        throw LimitExceeded("inductive strong connectivity search limited to n <= " + std::to_string(limit) +
                            " (n = " + std::to_string(model.n) + ")");
    }
    std::vector<int> prefix{1};
    std::unordered_set<std::uint64_t> dead;
    auto mask_of = [](const std::vector<int>& xs) {
        std::uint64_t m = 0;
        for (int x : xs) m |= std::uint64_t{1} << (x - 1);
        return m;
    };
    // Whether any ordering extends the prefix does not depend on the order
    // of the prefix itself, so failures are cached by vertex set.
    auto extend = [&](auto&& self) -> bool {
        if (prefix.size() == static_cast<std::size_t>(model.n)) return true;
        const std::uint64_t mask = mask_of(prefix);
        if (dead.count(mask)) return false;
        for (int v = 2; v <= model.n; ++v) {
            if (mask & (std::uint64_t{1} << (v - 1))) continue;
            prefix.push_back(v);
            if (induced_strongly_connected(model, prefix) && self(self)) return true;
            prefix.pop_back();
        }
        dead.insert(mask);
        return false;
    };
    if (extend(extend)) return prefix;
    return std::nullopt;
}

bool is_inductively_strongly_connected(const ModelSpec& model, int limit) {
    return find_inductive_ordering(model, limit).has_value();
}

}  // namespace lcmid
