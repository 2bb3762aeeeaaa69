#include "lcmid/model_io.hpp"

#include "lcmid/errors.hpp"

#include <fstream>
#include <sstream>

namespace lcmid {

namespace {

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

int as_index(const nlohmann::json& value, const std::string& where) {
    if (!value.is_number_integer()) {
        throw ParseError(where + ": expected an integer, got " + value.dump());
    }
    return value.get<int>();
}

std::vector<int> index_list(const nlohmann::json& doc, const char* key) {
    std::vector<int> out;
    if (!doc.contains(key)) return out;
    const auto& arr = doc.at(key);
    if (!arr.is_array()) {
        throw ParseError(std::string("\"") + key + "\": expected an array, got " + arr.dump());
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
        out.push_back(as_index(arr[i], std::string("\"") + key + "\"[" + std::to_string(i) + "]"));
    }
    return out;
}

}  // namespace

ModelSpec parse_model_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        // byte is 1-based and points just past the offending character.
        const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + e.what(),
                         line, column);
    }
    if (!doc.is_object()) {
        throw ParseError("model file must contain a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "n" && key != "edges" && key != "in" && key != "out" && key != "leak") {
            throw ParseError("unknown key \"" + key + "\" (allowed: n, edges, in, out, leak)");
        }
    }
    for (const char* required : {"n", "edges", "out"}) {
        if (!doc.contains(required)) {
            throw ParseError(std::string("missing required key \"") + required + "\"");
        }
    }

    ModelSpec model;
    model.n = as_index(doc.at("n"), "\"n\"");
    const auto& edges = doc.at("edges");
    if (!edges.is_array()) {
        throw ParseError("\"edges\": expected an array of [from, to] pairs");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "\"edges\"[" + std::to_string(i) + "]";
        if (!edges[i].is_array() || edges[i].size() != 2) {
            throw ParseError(where + ": expected [from, to], got " + edges[i].dump());
        }
        model.edges.push_back({as_index(edges[i][0], where), as_index(edges[i][1], where)});
    }
    model.inputs = index_list(doc, "in");
    model.outputs = index_list(doc, "out");
    model.leaks = index_list(doc, "leak");
    validate(model);
    return canonicalize(std::move(model));
}

ModelSpec load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open model file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_model_json(buffer.str());
}

ordered_json model_to_json(const ModelSpec& spec) {
    const ModelSpec model = canonicalize(spec);
    ordered_json out;
    out["n"] = model.n;
    ordered_json edges = ordered_json::array();
    for (const auto& e : model.edges) edges.push_back({e.from, e.to});
    out["edges"] = edges;
    out["in"] = model.inputs;
    out["out"] = model.outputs;
    out["leak"] = model.leaks;
    return out;
}

std::string model_to_string(const ModelSpec& model) { return model_to_json(model).dump(2) + "\n"; }

}  // namespace lcmid
