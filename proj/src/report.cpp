#include "lcmid/report.hpp"

#include <cstdio>
#include <sstream>

namespace lcmid {

namespace {

std::string reason_name(DropReason r) { return r == DropReason::zero ? "zero" : "constant"; }

std::string join(const std::vector<int>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "}";
}

std::string seconds_text(double seconds) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", seconds);
    return buf;
}

}  // namespace

std::string verdict_summary(const Verdict& v) {
    std::string s = v.identifiable ? "identifiable" : "unidentifiable";
    if (v.identifiable) return s + " (certified)";
    return s + (v.certified ? " (certified)" : " (Monte Carlo)");
}

ordered_json coefficient_map_to_json(const CoefficientMap& map) {
    ordered_json out;
    out["m"] = map.size();
    ordered_json entries = ordered_json::array();
    for (const auto& e : map.entries) entries.push_back({{"label", e.label.to_string()}, {"poly", e.poly.to_string()}});
    out["entries"] = entries;
    ordered_json dropped = ordered_json::array();
    for (const auto& d : map.dropped)
        dropped.push_back({{"label", d.label.to_string()}, {"reason", reason_name(d.reason)}, {"value", to_string(d.value)}});
    out["dropped"] = dropped;
    return out;
}

ordered_json verdict_to_json(const Verdict& v) {
    ordered_json out;
    out["identifiable"] = v.identifiable;
    out["certified"] = v.certified;
    out["generic_rank"] = v.generic_rank ? ordered_json(*v.generic_rank) : ordered_json(nullptr);
    out["required_rank"] = v.required_rank;
    out["num_coefficients"] = v.num_coefficients;
    out["trials"] = v.trials;
    out["seed"] = v.seed;
    out["sampling_bound"] = v.sampling_bound;
    ordered_json witness = ordered_json::object();
    for (const auto& [name, value] : v.witness_point) witness[name] = to_string(value);
    out["witness_point"] = witness;
    ordered_json certs = ordered_json::array();
    for (const auto& c : v.certificates) {
        ordered_json cj;
        cj["kind"] = to_string(c.kind);
        cj["detail"] = c.detail;
        cj["columns"] = c.columns;
        cj["row"] = c.row ? ordered_json(c.row->to_string()) : ordered_json(nullptr);
        certs.push_back(cj);
    }
    out["structural_certificates"] = certs;
    return out;
}

ordered_json analysis_to_json(const Analysis& a, std::optional<double> seconds) {
    ordered_json out;
    out["model"] = model_to_json(a.model);
    ordered_json eqs = ordered_json::array();
    for (const auto& eq : a.equations) {
        ordered_json ej;
        ej["output"] = eq.output;
        ej["lhs"] = eq.lhs.to_string();
        ordered_json rhs = ordered_json::object();
        for (const auto& [input, op] : eq.rhs) rhs[std::to_string(input)] = op.to_string();
        ej["rhs"] = rhs;
        eqs.push_back(ej);
    }
    out["io_equations"] = eqs;
    out["coefficient_map"] = coefficient_map_to_json(a.coefficients);
    out["verdict"] = verdict_to_json(a.verdict);
    if (seconds) out["timing"] = {{"seconds", *seconds}};
    return out;
}

std::string analysis_to_text(const Analysis& a, std::optional<double> seconds) {
    std::ostringstream os;
    const ModelSpec& m = a.model;
    os << "model: n=" << m.n << " edges=[";
    for (std::size_t i = 0; i < m.edges.size(); ++i) os << (i ? ", " : "") << m.edges[i].from << "->" << m.edges[i].to;
    os << "] in=" << join(m.inputs) << " out=" << join(m.outputs) << " leak=" << join(m.leaks) << "\n";
    os << "io-equations:\n";
    for (const auto& eq : a.equations) os << "  " << to_string(eq) << "\n";
    os << "coefficient map (m = " << a.coefficients.size() << "):\n";
    for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
        const auto& e = a.coefficients.entries[i];
        os << "  [" << i + 1 << "] " << e.label.to_string() << ": " << e.poly.to_string() << "\n";
    }
    for (const auto& d : a.coefficients.dropped) {
        os << "  dropped " << d.label.to_string() << " (" << reason_name(d.reason) << " " << to_string(d.value) << ")\n";
    }
    const Verdict& v = a.verdict;
    os << "verdict: " << verdict_summary(v) << "\n";
    os << "  generic rank " << (v.generic_rank ? std::to_string(*v.generic_rank) : std::string("not sampled"))
       << " / required " << v.required_rank << " (m = " << v.num_coefficients << ")\n";
    os << "  trials " << v.trials << ", seed " << v.seed << ", sampling bound " << v.sampling_bound << "\n";
    if (!v.witness_point.empty()) {
        os << "  witness:";
        for (const auto& [name, value] : v.witness_point) os << " " << name << "=" << to_string(value);
        os << "\n";
    }
    for (const auto& c : v.certificates) os << "  certificate " << to_string(c.kind) << ": " << c.detail << "\n";
    if (seconds) os << "timing: " << seconds_text(*seconds) << " s\n";
    return os.str();
}

}  // namespace lcmid
