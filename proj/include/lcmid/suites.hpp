#pragma once

// Parametrized sweeps that turn theorem statements into expected verdicts.

#include "lcmid/families.hpp"
#include "lcmid/ident.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcmid {

enum class Expectation { identifiable, unidentifiable, holds, informational };

std::string to_string(Expectation e);

struct SuiteOptions {
    std::optional<int> max_n;  // suite default when unset
    int trials = kDefaultTrials;
    std::uint64_t seed = 0;
    int jobs = 1;
};

/// One instance of a sweep. Model instances carry `family`; the rest
/// (closed forms, Vandermonde) carry `check`.
struct SuiteCase {
    std::string description;
    Expectation expected = Expectation::identifiable;
    std::optional<FamilySpec> family;
    /// A certificate of this kind must accompany an unidentifiable verdict.
    std::optional<CertificateKind> required_certificate;
    std::function<std::optional<std::string>()> check;  // empty optional = holds
};

struct CaseResult {
    std::string description;
    Expectation expected;
    std::string outcome;
    bool pass = false;
};

struct SuiteReport {
    std::string name;
    std::string claim;
    bool informational = false;
    int max_n = 0;
    SuiteOptions options;
    std::vector<CaseResult> cases;

    std::size_t failures() const;
    /// Deterministic for fixed options, regardless of `jobs`.
    std::string to_text() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Throws UsageError for unknown names.
std::vector<SuiteCase> suite_cases(std::string_view name, const SuiteOptions& options);
int suite_default_max_n(std::string_view name);

CaseResult run_case(const SuiteCase& c, const SuiteOptions& options);
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

std::string describe(const FamilySpec& f);

}  // namespace lcmid
