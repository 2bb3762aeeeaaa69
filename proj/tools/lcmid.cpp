#include "lcmid/errors.hpp"
#include "lcmid/families.hpp"
#include "lcmid/ident.hpp"
#include "lcmid/model_io.hpp"
#include "lcmid/report.hpp"
#include "lcmid/suites.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

constexpr int kExitIdentifiable = 0;
constexpr int kExitUnidentifiable = 1;
constexpr int kExitError = 2;

struct AnalyzeFlags {
    int trials = lcmid::kDefaultTrials;
    std::uint64_t seed = 0;
    std::string format = "json";
    bool timing = false;
};

void add_analyze_flags(CLI::App* cmd, AnalyzeFlags& f) {
    cmd->add_option("--trials", f.trials, "random evaluation points")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "base seed for the sampling stream");
    cmd->add_option("--format", f.format, "report format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--timing", f.timing, "include wall-clock time (reports are then not byte-stable)");
}

int report(const lcmid::ModelSpec& model, const AnalyzeFlags& f) {
    const auto start = std::chrono::steady_clock::now();
    const lcmid::Analysis a = lcmid::analyze(model, f.trials, f.seed);
    std::optional<double> seconds;
    if (f.timing) seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (f.format == "json") {
        std::cout << lcmid::analysis_to_json(a, seconds).dump(2) << "\n";
    } else {
        std::cout << lcmid::analysis_to_text(a, seconds);
    }
    return a.verdict.identifiable ? kExitIdentifiable : kExitUnidentifiable;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Identifiability of linear compartmental models"};
    app.require_subcommand(1);

    AnalyzeFlags analyze_flags;
    std::string path;
    auto* analyze = app.add_subcommand("analyze", "analyze a model JSON file");
    analyze->add_option("file", path, "model file")->required();
    add_analyze_flags(analyze, analyze_flags);

    AnalyzeFlags family_flags;
    std::string kind;
    lcmid::FamilySpec fam;
    std::string emit;
    bool run_analysis = false;
    auto* family = app.add_subcommand("family", "generate a model from a family");
    family->add_option("kind", kind, "catenary, cycle, mammillary, fin, wing, cycle-plus-edges")->required();
    family->add_option("--n", fam.n, "number of compartments")->required();
    family->add_option("--in", fam.inputs, "input compartments")->delimiter(',');
    family->add_option("--out", fam.outputs, "output compartments")->delimiter(',');
    family->add_option("--leak", fam.leaks, "leak compartments")->delimiter(',');
    family->add_option("--add-incoming", fam.incoming, "sources i of added edges i -> 1")->delimiter(',');
    family->add_option("--add-outgoing", fam.outgoing, "targets j of added edges 1 -> j")->delimiter(',');
    family->add_option("--emit", emit, "write the model JSON here");
    family->add_flag("--analyze", run_analysis, "analyze the generated model");
    add_analyze_flags(family, family_flags);

    std::string suite_name;
    lcmid::SuiteOptions suite_opts;
    int max_n = 0;
    auto* suite = app.add_subcommand("suite", "run a theorem sweep");
    suite->add_option("name", suite_name, "suite name")->required();
    suite->add_option("--max-n", max_n, "largest n in the sweep")->check(CLI::PositiveNumber);
    suite->add_option("--jobs", suite_opts.jobs, "concurrent instances")->check(CLI::PositiveNumber);
    suite->add_option("--trials", suite_opts.trials, "random evaluation points")->check(CLI::PositiveNumber);
    suite->add_option("--seed", suite_opts.seed, "base seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*analyze) return report(lcmid::load_model_file(path), analyze_flags);
        if (*family) {
            fam.kind = lcmid::parse_family(kind);
            const lcmid::ModelSpec model = lcmid::build(fam);
            if (!emit.empty()) {
                std::ofstream out(emit);
                if (!out) throw lcmid::UsageError("cannot write " + emit);
                out << lcmid::model_to_string(model);
            }
            if (run_analysis) return report(model, family_flags);
            if (emit.empty()) std::cout << lcmid::model_to_string(model);
            return 0;
        }
        if (*suite) {
            if (max_n > 0) suite_opts.max_n = max_n;
            const lcmid::SuiteReport r = lcmid::run_suite(suite_name, suite_opts);
            std::cout << r.to_text();
            return r.failures() == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
