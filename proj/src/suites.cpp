#include "lcmid/suites.hpp"

#include "lcmid/errors.hpp"
#include "lcmid/poly.hpp"
#include "lcmid/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace lcmid {

std::string to_string(Expectation e) {
    switch (e) {
        case Expectation::identifiable: return "identifiable";
        case Expectation::unidentifiable: return "unidentifiable";
        case Expectation::holds: return "holds";
        case Expectation::informational: return "informational";
    }
    return "unknown";
}

namespace {

std::string set_text(const std::vector<int>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "}";
}

/// Subsets of {lo..hi}, by size then lexicographically.
std::vector<std::vector<int>> subsets(int lo, int hi) {
    std::vector<std::vector<int>> out;
    const int k = std::max(0, hi - lo + 1);
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> s;
        for (int b = 0; b < k; ++b) {
            if (mask & (1u << b)) s.push_back(lo + b);
        }
        out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

/// Leak = {} followed by every single leak.
std::vector<std::vector<int>> at_most_one_leak(int n) {
    std::vector<std::vector<int>> out{{}};
    for (int l = 1; l <= n; ++l) out.push_back({l});
    return out;
}

FamilySpec spec(Family kind, int n, std::vector<int> in, std::vector<int> out, std::vector<int> leaks) {
    FamilySpec f;
    f.kind = kind;
    f.n = n;
    f.inputs = std::move(in);
    f.outputs = std::move(out);
    f.leaks = std::move(leaks);
    return f;
}

SuiteCase model_case(FamilySpec f, Expectation e, std::optional<CertificateKind> cert = std::nullopt) {
    SuiteCase c;
    c.description = describe(f);
    c.expected = e;
    c.family = std::move(f);
    c.required_certificate = cert;
    return c;
}

SuiteCase check_case(std::string description, std::function<std::optional<std::string>()> check) {
    SuiteCase c;
    c.description = std::move(description);
    c.expected = Expectation::holds;
    c.check = std::move(check);
    return c;
}

struct SuiteInfo {
    const char* name;
    const char* claim;
    int default_max_n;
    std::vector<SuiteCase> (*generate)(int max_n);
};

std::vector<SuiteCase> big_cycle(int max_n) {
    std::vector<SuiteCase> out;
    for (int n = 3; n <= max_n; ++n)
        for (int in = 1; in <= n; ++in)
            for (int o = 1; o <= n; ++o)
                for (auto& leak : at_most_one_leak(n))
                    out.push_back(model_case(spec(Family::cycle, n, {in}, {o}, leak), Expectation::identifiable));
    return out;
}

std::vector<SuiteCase> leak_converse(int max_n) {
    std::vector<SuiteCase> out;
    for (int n = 3; n <= max_n; ++n) {
        for (auto& leak : subsets(1, n)) {
            if (leak.size() <= 1) {
                out.push_back(model_case(spec(Family::cycle, n, {1}, {1}, leak), Expectation::identifiable));
            } else {
                out.push_back(model_case(spec(Family::cycle, n, {1}, {1}, leak), Expectation::unidentifiable,
                                         CertificateKind::column_dependence));
            }
        }
    }
    return out;
}

std::vector<SuiteCase> leak_position(int max_n) {
    std::vector<SuiteCase> out;
    for (int n = 3; n <= max_n; ++n) {
        for (int p = 1; p <= n; ++p) {
            for (auto& leak : subsets(1, n)) {
                if (std::count_if(leak.begin(), leak.end(), [p](int l) { return l >= p; }) < 2) continue;
                out.push_back(model_case(spec(Family::cycle, n, {1}, {p}, leak), Expectation::unidentifiable,
                                         CertificateKind::column_dependence));
            }
        }
    }
    return out;
}

std::vector<SuiteCase> too_many_leaks(int max_n) {
    std::vector<SuiteCase> out;
    for (int n = 3; n <= max_n; ++n) {
        for (int p = 1; p <= n; ++p) {
            for (auto& leak : subsets(1, n)) {
                if (static_cast<int>(leak.size()) < n - p + 2) continue;
                out.push_back(model_case(spec(Family::cycle, n, {1}, {p}, leak), Expectation::unidentifiable,
                                         CertificateKind::parameter_count));
            }
        }
    }
    return out;
}

std::vector<SuiteCase> adjacent_in_out(int max_n) {
    std::vector<SuiteCase> out;
    for (int n = 3; n <= max_n; ++n) {
        for (int in = 1; in <= n; ++in) {
            const int o = in == 1 ? n : in - 1;
            for (auto& leak : subsets(1, n)) {
                const auto e = leak.size() <= 1 ? Expectation::identifiable : Expectation::unidentifiable;
                out.push_back(model_case(spec(Family::cycle, n, {in}, {o}, leak), e));
            }
        }
    }
    return out;
}

std::vector<SuiteCase> fin_wing(int max_n) {
    std::vector<SuiteCase> out;
    for (Family kind : {Family::fin, Family::wing})
        for (int n = 3; n <= max_n; ++n)
            for (auto& leak : at_most_one_leak(n))
                out.push_back(model_case(spec(kind, n, {1}, {1}, leak), Expectation::identifiable));
    return out;
}

std::vector<SuiteCase> add_edges(int max_n) {
    std::vector<SuiteCase> out;
    for (int n = 3; n <= max_n; ++n) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> additions;
        for (int i = 2; i <= n - 1; ++i) additions.push_back({{i}, {}});
        for (int j = 3; j <= n; ++j) additions.push_back({{}, {j}});
        for (int j = 3; j <= n; ++j)
            for (int l = j + 1; l <= n; ++l) additions.push_back({{}, {j, l}});
        for (auto& [inc, outg] : additions) {
            for (auto& leak : at_most_one_leak(n)) {
                FamilySpec f = spec(Family::cycle_plus_edges, n, {1}, {1}, leak);
                f.incoming = inc;
                f.outgoing = outg;
                out.push_back(model_case(f, Expectation::identifiable));
            }
        }
    }
    return out;
}

std::vector<SuiteCase> leak_removal(int max_n) {
    std::vector<SuiteCase> out;
    for (Family kind : {Family::catenary, Family::cycle, Family::mammillary})
        for (int n = 3; n <= max_n; ++n)
            for (auto& leak : at_most_one_leak(n))
                out.push_back(model_case(spec(kind, n, {1}, {1}, leak), Expectation::identifiable));
    return out;
}

SuiteCase closed_form_case(FamilySpec f) {
    std::string d = describe(f);
    return check_case("closed form " + d, [f]() -> std::optional<std::string> {
        const ModelSpec m = build(f);
        ParameterSpace params(m);
        return compare_coefficient_maps(*closed_form(f), coefficient_map(m, params));
    });
}

std::vector<SuiteCase> closed_forms(int max_n) {
    std::vector<SuiteCase> out;
    for (int n = 3; n <= std::min(max_n, 8); ++n)
        for (int p = 2; p <= n; ++p) out.push_back(closed_form_case(spec(Family::cycle, n, {1}, {p}, {})));
    for (int n = 3; n <= std::min(max_n, 7); ++n)
        for (int p = 1; p <= n; ++p)
            for (auto& leak : subsets(1, n))
                if (!leak.empty()) out.push_back(closed_form_case(spec(Family::cycle, n, {1}, {p}, leak)));
    for (Family kind : {Family::fin, Family::wing})
        for (int n = 3; n <= std::min(max_n, 7); ++n) out.push_back(closed_form_case(spec(kind, n, {1}, {1}, {})));
    return out;
}

std::vector<SuiteCase> vandermonde(int max_n) {
    std::vector<SuiteCase> out;
    for (int n = 1; n <= max_n; ++n) {
        out.push_back(check_case("vandermonde n=" + std::to_string(n), [n]() -> std::optional<std::string> {
            if (vandermonde_check(n)) return std::nullopt;
            return "Jacobian determinant differs from the Vandermonde product";
        }));
    }
    return out;
}

std::vector<SuiteCase> conjecture_sweep(int max_n) {
    std::vector<SuiteCase> out;
    for (int n = 3; n <= max_n; ++n) {
        for (auto& inc : subsets(2, n - 1)) {
            if (inc.empty()) continue;
            FamilySpec f = spec(Family::cycle_plus_edges, n, {1}, {1}, {});
            f.incoming = inc;
            out.push_back(model_case(f, Expectation::informational));
        }
        for (auto& outg : subsets(3, n)) {
            if (outg.empty()) continue;
            FamilySpec f = spec(Family::cycle_plus_edges, n, {1}, {1}, {});
            f.outgoing = outg;
            out.push_back(model_case(f, Expectation::informational));
        }
    }
    return out;
}

const std::vector<SuiteInfo>& registry() {
    static const std::vector<SuiteInfo> suites{
        {"big-cycle", "cycle models with at most one leak are identifiable", 7, big_cycle},
        {"leak-converse", "a cycle with In = Out = {1} is identifiable iff |Leak| <= 1", 6, leak_converse},
        {"leak-position", "two leaks at or beyond the output make a cycle unidentifiable", 6, leak_position},
        {"too-many-leaks", "|Leak| >= n - p + 2 leaves fewer coefficients than parameters", 6, too_many_leaks},
        {"adjacent-in-out", "a cycle with output just before the input is identifiable iff |Leak| <= 1", 6,
         adjacent_in_out},
        {"fin-wing", "Fin and Wing models with In = Out = {1} and at most one leak are identifiable", 7, fin_wing},
        {"add-edges", "one incoming or one or two outgoing edges keep a cycle identifiable", 6, add_edges},
        {"leak-removal", "catenary, cycle and mammillary models with at most one leak are identifiable", 6,
         leak_removal},
        {"closed-forms", "closed-form coefficient maps equal the determinant pipeline", 8, closed_forms},
        {"vandermonde", "the Jacobian of e_1..e_n is the Vandermonde determinant", 6, vandermonde},
        {"conjecture-sweep", "cycles with any incoming or any outgoing edges added (conjectured identifiable)", 6,
         conjecture_sweep},
    };
    return suites;
}

const SuiteInfo& lookup(std::string_view name) {
    for (const auto& s : registry()) {
        if (name == s.name) return s;
    }
    std::string names;
    for (const auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
    throw UsageError("unknown suite '" + std::string(name) + "' (expected one of " + names + ")");
}

std::string verdict_outcome(const Verdict& v) {
    std::string s = verdict_summary(v) + " rank " +
                    (v.generic_rank ? std::to_string(*v.generic_rank) : std::string("-")) + "/" +
                    std::to_string(v.required_rank) + " m=" + std::to_string(v.num_coefficients);
    for (const auto& c : v.certificates) s += " [" + to_string(c.kind) + "]";
    return s;
}

}  // namespace

std::string describe(const FamilySpec& f) {
    std::string s = to_string(f.kind) + " n=" + std::to_string(f.n) + " in=" + set_text(f.inputs) +
                    " out=" + set_text(f.outputs) + " leak=" + set_text(f.leaks);
    if (!f.incoming.empty()) s += " incoming=" + set_text(f.incoming);
    if (!f.outgoing.empty()) s += " outgoing=" + set_text(f.outgoing);
    return s;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : registry()) v.emplace_back(s.name);
        return v;
    }();
    return names;
}

bool is_suite(std::string_view name) {
    return std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

int suite_default_max_n(std::string_view name) { return lookup(name).default_max_n; }

std::vector<SuiteCase> suite_cases(std::string_view name, const SuiteOptions& options) {
    const SuiteInfo& info = lookup(name);
    return info.generate(options.max_n.value_or(info.default_max_n));
}

CaseResult run_case(const SuiteCase& c, const SuiteOptions& options) {
    CaseResult r{c.description, c.expected, "", false};
    try {
        if (c.check) {
            const auto mismatch = c.check();
            r.pass = !mismatch;
            r.outcome = mismatch ? "mismatch: " + *mismatch : "holds";
            return r;
        }
        const Verdict v = decide(build(*c.family), options.trials, options.seed);
        r.outcome = verdict_outcome(v);
        switch (c.expected) {
            case Expectation::identifiable: r.pass = v.identifiable; break;
            case Expectation::unidentifiable:
                r.pass = !v.identifiable;
                if (c.required_certificate) {
                    r.pass = r.pass && std::any_of(v.certificates.begin(), v.certificates.end(), [&](const auto& cert) {
                                 return cert.kind == *c.required_certificate;
                             });
                }
                break;
            case Expectation::holds:
            case Expectation::informational: r.pass = true; break;
        }
    } catch (const std::exception& e) {
        r.outcome = std::string("error: ") + e.what();
        r.pass = false;
    }
    return r;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
    if (options.trials < 1) throw UsageError("trials must be at least 1");
    if (options.jobs < 1) throw UsageError("jobs must be at least 1");
    const SuiteInfo& info = lookup(name);
    SuiteReport report;
    report.name = info.name;
    report.claim = info.claim;
    report.max_n = options.max_n.value_or(info.default_max_n);
    report.options = options;
    const auto cases = info.generate(report.max_n);
    report.informational = !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const SuiteCase& c) {
        return c.expected == Expectation::informational;
    });
    report.cases.resize(cases.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) report.cases[i] = run_case(cases[i], options);
    };
    const auto jobs = std::min<std::size_t>(static_cast<std::size_t>(options.jobs), std::max<std::size_t>(1, cases.size()));
    std::vector<std::thread> threads;
    for (std::size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    return report;
}

std::size_t SuiteReport::failures() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
}

std::string SuiteReport::to_text() const {
    std::ostringstream os;
    os << "suite " << name << ": " << claim << "\n";
    // --jobs is not echoed.
    os << "options: max-n " << max_n << ", trials " << options.trials << ", seed " << options.seed << "\n";
    for (const auto& c : cases) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.description << "  expected " << to_string(c.expected)
           << "  got " << c.outcome << "\n";
    }
    os << "summary: " << cases.size() << " cases, " << cases.size() - failures() << " passed, " << failures()
       << " failed";
    if (informational) {
        const auto yes = std::count_if(cases.begin(), cases.end(),
                                       [](const CaseResult& c) { return c.outcome.rfind("identifiable", 0) == 0; });
        os << " (informational: " << yes << " identifiable, " << static_cast<long>(cases.size()) - yes << " not)";
    }
    os << "\n";
    return os.str();
}

}  // namespace lcmid
