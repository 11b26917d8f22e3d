#include "treepack/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

std::string at_line(int line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

Graph parse_gr(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c") continue;
        if (first == "p") {
            if (n >= 0) throw InputError(at_line(lineno) + "duplicate header");
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "tw" || n < 0 || m < 0)
                throw InputError(at_line(lineno) + "malformed header, expected 'p tw n m'");
            continue;
        }
        if (n < 0) throw InputError(at_line(lineno) + "edge before header");
        long long u = 0, v = 0;
        std::string extra;
        try {
            u = std::stoll(first);
        } catch (const std::exception&) {
            throw InputError(at_line(lineno) + "expected vertex id, got '" + first + "'");
        }
        if (!(ls >> v) || (ls >> extra))
            throw InputError(at_line(lineno) + "malformed edge line");
        if (u < 1 || v < 1 || u > n || v > n) throw InputError(at_line(lineno) + "vertex id out of range");
        if (u == v) throw InputError(at_line(lineno) + "self-loop");
        edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    if (n < 0) throw InputError("missing 'p tw' header");
    if (static_cast<long long>(edges.size()) != m)
        throw InputError("header announces " + std::to_string(m) + " edges but file has " +
                         std::to_string(edges.size()));
    return make_graph(n, edges);
}

std::string emit_gr(const Graph& g) {
    std::ostringstream out;
    out << "p tw " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.num_vertices();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (g.has_labels()) j["labels"] = g.labels();
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
        return make_graph(n, edges, std::move(labels));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("graph JSON: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

}  // namespace treepack
