#include "lcmid/families.hpp"
#include "lcmid/ident.hpp"
#include "lcmid/model_io.hpp"
#include "lcmid/poly.hpp"
#include "lcmid/report.hpp"
#include "lcmid/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

lcmid::FamilySpec family_spec(const std::string& kind, int n, std::vector<int> in, std::vector<int> out,
                              std::vector<int> leak, std::vector<int> incoming, std::vector<int> outgoing) {
    lcmid::FamilySpec f;
    f.kind = lcmid::parse_family(kind);
    f.n = n;
    f.inputs = std::move(in);
    f.outputs = std::move(out);
    f.leaks = std::move(leak);
    f.incoming = std::move(incoming);
    f.outgoing = std::move(outgoing);
    return f;
}

}  // namespace

PYBIND11_MODULE(_lcmid, m) {
    m.doc() = "Identifiability of linear compartmental models (JSON in, JSON out)";

    m.def(
        "canonical_model",
        [](const std::string& model_json) { return lcmid::model_to_string(lcmid::parse_model_json(model_json)); },
        py::arg("model_json"));

    m.def(
        "analyze",
        [](const std::string& model_json, int trials, std::uint64_t seed) {
            const auto model = lcmid::parse_model_json(model_json);
            py::gil_scoped_release release;
            return lcmid::analysis_to_json(lcmid::analyze(model, trials, seed)).dump();
        },
        py::arg("model_json"), py::arg("trials") = lcmid::kDefaultTrials, py::arg("seed") = 0);

    m.def(
        "analyze_text",
        [](const std::string& model_json, int trials, std::uint64_t seed) {
            const auto model = lcmid::parse_model_json(model_json);
            py::gil_scoped_release release;
            return lcmid::analysis_to_text(lcmid::analyze(model, trials, seed));
        },
        py::arg("model_json"), py::arg("trials") = lcmid::kDefaultTrials, py::arg("seed") = 0);

    m.def(
        "family",
        [](const std::string& kind, int n, std::vector<int> in, std::vector<int> out, std::vector<int> leak,
           std::vector<int> incoming, std::vector<int> outgoing) {
            return lcmid::model_to_string(lcmid::build(family_spec(kind, n, in, out, leak, incoming, outgoing)));
        },
        py::arg("kind"), py::arg("n"), py::arg("inputs") = std::vector<int>{1},
        py::arg("outputs") = std::vector<int>{1}, py::arg("leaks") = std::vector<int>{},
        py::arg("incoming") = std::vector<int>{}, py::arg("outgoing") = std::vector<int>{});

    m.def(
        "verify_closed_form",
        [](const std::string& kind, int n, std::vector<int> in, std::vector<int> out, std::vector<int> leak) {
            return lcmid::verify_closed_form(family_spec(kind, n, in, out, leak, {}, {}));
        },
        py::arg("kind"), py::arg("n"), py::arg("inputs") = std::vector<int>{1},
        py::arg("outputs") = std::vector<int>{1}, py::arg("leaks") = std::vector<int>{});

    m.def("vandermonde_check", &lcmid::vandermonde_check, py::arg("n"));

    m.def("suite_names", &lcmid::suite_names);

    m.def(
        "run_suite",
        [](const std::string& name, std::optional<int> max_n, int trials, std::uint64_t seed, int jobs) {
            lcmid::SuiteOptions opts;
            opts.max_n = max_n;
            opts.trials = trials;
            opts.seed = seed;
            opts.jobs = jobs;
            std::pair<std::string, std::size_t> result;
            {
                py::gil_scoped_release release;
                const auto report = lcmid::run_suite(name, opts);
                result = {report.to_text(), report.failures()};
            }
            return result;
        },
        py::arg("name"), py::arg("max_n") = std::nullopt, py::arg("trials") = lcmid::kDefaultTrials,
        py::arg("seed") = 0, py::arg("jobs") = 1);
}
