#pragma once

// Catenary, cycle, mammillary, Fin and Wing models, and the closed-form
// coefficient maps known for cycle, Fin and Wing models.

#include "lcmid/ioeq.hpp"
#include "lcmid/model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcmid {

enum class Family { catenary, cycle, mammillary, fin, wing, cycle_plus_edges };

std::string to_string(Family f);
/// Accepts "catenary", "cycle", "mammillary", "fin", "wing", "cycle-plus-edges".
Family parse_family(std::string_view name);

struct FamilySpec {
    Family kind = Family::cycle;
    int n = 3;
    std::vector<int> inputs{1};
    std::vector<int> outputs{1};
    std::vector<int> leaks;
    /// Sources i of added incoming edges i -> 1, each in 2..n-1.
    std::vector<int> incoming;
    /// Targets j of added outgoing edges 1 -> j, each in 3..n.
    std::vector<int> outgoing;
};

/// Validated model. Incoming/outgoing edges may be added to a cycle of any
/// kind except catenary and mammillary (fin/wing already contain all of
/// one kind, so adding them there is a no-op duplicate and rejected).
ModelSpec build(const FamilySpec& f);

/// i + 1 with n + 1 := 1.
int cyclic_successor(int i, int n);

/// Closed form for the cycle with In = {1}, Out = {p}, p != 1, no leaks:
/// (e_1..e_{n-1}, kappa, e*_1 kappa, ..., e*_{n-p} kappa). Entries carry the
/// pipeline label of the slot they fill.
CoefficientMap cycle_coeff_map_noleak(int n, int p);

/// Closed form for the cycle with In = {1}, Out = {p}, Leak != {}:
/// (e_1..e_{n-1}, e_n - prod k_{i+1,i}, kappa, e*_1 kappa, ..., e*_{n-p} kappa),
/// with k_{l+1,l} + k_{0,l} in place of k_{l+1,l} for leaky l. At p = 1
/// kappa is the constant 1 and is kept as an entry.
CoefficientMap cycle_coeff_map_leaks(int n, int p, const std::vector<int>& leaks);

/// Closed form for Fin_n with In = Out = {1}, no leaks.
CoefficientMap fin_coeff_map(int n);

/// Closed form for Wing_n with In = Out = {1}, no leaks. The lhs
/// coefficient of s^{n-j} is psi_j for j = 1..n-1.
CoefficientMap wing_coeff_map(int n);

/// The closed form that applies to `f`, if any.
std::optional<CoefficientMap> closed_form(const FamilySpec& f);

/// Empty when `closed` and `pipeline` agree slot by slot. Closed-form
/// entries that are constants must correspond to slots the pipeline
/// dropped; order is matched by label, not position.
std::optional<std::string> compare_coefficient_maps(const CoefficientMap& closed, const CoefficientMap& pipeline);

/// closed_form(f) agrees with coefficient_map(build(f)). Throws UsageError
/// when no closed form applies.
bool verify_closed_form(const FamilySpec& f);

}  // namespace lcmid
