#include "lcmid/errors.hpp"
#include "lcmid/model_io.hpp"
#include "lcmid/report.hpp"
#include "lcmid/suites.hpp"

#include "doctest.h"

using namespace lcmid;

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 11);
    CHECK(is_suite("big-cycle"));
    CHECK_FALSE(is_suite("small-cycle"));
    CHECK_THROWS_AS(run_suite("small-cycle", {}), UsageError);
    CHECK(suite_default_max_n("big-cycle") == 7);
}

TEST_CASE("small sweeps pass") {
    SuiteOptions opts;
    opts.max_n = 4;
    for (const auto& name : suite_names()) {
        const SuiteReport r = run_suite(name, opts);
        CHECK_MESSAGE(r.failures() == 0, r.to_text());
        CHECK_FALSE(r.cases.empty());
    }
}

TEST_CASE("case counts") {
    SuiteOptions opts;
    opts.max_n = 3;
    // 3 inputs x 3 outputs x (no leak + 3 single leaks)
    CHECK(suite_cases("big-cycle", opts).size() == 36);
    CHECK(suite_cases("vandermonde", opts).size() == 3);
    // n = 3: one incoming subset, one outgoing subset
    CHECK(suite_cases("conjecture-sweep", opts).size() == 2);
}

TEST_CASE("reports do not depend on the number of jobs") {
    SuiteOptions one, four;
    one.max_n = four.max_n = 5;
    four.jobs = 4;
    for (const char* name : {"leak-position", "closed-forms"}) {
        CHECK(run_suite(name, one).to_text() == run_suite(name, four).to_text());
    }
}

TEST_CASE("a wrong expectation is reported as a failure") {
    SuiteCase c;
    c.description = "cycle n=3 leak={1,2} expected identifiable";
    c.expected = Expectation::identifiable;
    c.family = FamilySpec{Family::cycle, 3, {1}, {1}, {1, 2}, {}, {}};
    const CaseResult r = run_case(c, {});
    CHECK_FALSE(r.pass);
    CHECK(r.outcome.rfind("unidentifiable", 0) == 0);

    SuiteCase broken;
    broken.description = "bad model";
    broken.family = FamilySpec{Family::cycle, 2, {1}, {1}, {}, {}, {}};
    const CaseResult e = run_case(broken, {});
    CHECK_FALSE(e.pass);
    CHECK(e.outcome.rfind("error:", 0) == 0);
}

TEST_CASE("informational suites never fail on verdicts") {
    SuiteOptions opts;
    opts.max_n = 4;
    const SuiteReport r = run_suite("conjecture-sweep", opts);
    CHECK(r.informational);
    CHECK(r.to_text().find("informational:") != std::string::npos);
}

TEST_CASE("JSON report echoes provenance and is byte-stable") {
    const ModelSpec m = build({Family::cycle, 4, {1}, {3}, {}, {}, {}});
    const auto a = analysis_to_json(analyze(m, 3, 9));
    CHECK(a["verdict"]["trials"] == 3);
    CHECK(a["verdict"]["seed"] == 9);
    CHECK(a["verdict"]["sampling_bound"] == 10000);
    CHECK(a["coefficient_map"]["m"] == 5);
    CHECK(a["verdict"]["generic_rank"] == 4);
    CHECK_FALSE(a.contains("timing"));
    CHECK(a.dump() == analysis_to_json(analyze(m, 3, 9)).dump());
    CHECK(analysis_to_json(analyze(m), 0.5).contains("timing"));

    const auto counted = analysis_to_json(analyze(build({Family::cycle, 3, {1}, {3}, {1, 2, 3}, {}, {}})));
    CHECK(counted["verdict"]["generic_rank"].is_null());
    CHECK(counted["verdict"]["structural_certificates"][0]["kind"] == "parameter-count");
}

TEST_CASE("text report") {
    const ModelSpec m = build({Family::cycle, 3, {1}, {1}, {1, 2}, {}, {}});
    const std::string text = analysis_to_text(analyze(m));
    CHECK(text.find("verdict: unidentifiable (certified)") != std::string::npos);
    CHECK(text.find("certificate column-dependence") != std::string::npos);
    CHECK(text.find("trials 5, seed 0") != std::string::npos);
}
