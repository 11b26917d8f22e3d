#include "treepack/instances.hpp"

#include <json.hpp>

#include "treepack/errors.hpp"
#include "treepack/graph_io.hpp"

namespace treepack {

Graph Csp2Instance::primal_graph() const {
    std::vector<Edge> edges;
    for (const auto& con : constraints)
        if (con.i != con.j) edges.emplace_back(con.i, con.j);
    return make_graph(n, edges);
}

void Csp2Instance::check() const {
    if (n < 0 || B < 1) throw InputError("CSP needs n >= 0 and B >= 1");
    for (const auto& con : constraints) {
        if (con.i < 0 || con.j < 0 || con.i >= n || con.j >= n) throw InputError("CSP constraint references unknown variable");
        if (con.i == con.j) throw InputError("CSP constraints must involve two distinct variables");
        for (auto [a, b] : con.allowed)
            if (a < 1 || b < 1 || a > B || b > B) throw InputError("CSP allowed pair outside 1..B");
    }
    if (!pathdec.bags.empty()) {
        auto v = validate(pathdec, primal_graph());
        if (!v.ok) throw InputError("CSP path decomposition invalid: " + v.message);
    }
}

std::string Csp2Instance::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["B"] = B;
    j["constraints"] = nlohmann::json::array();
    for (const auto& con : constraints) {
        nlohmann::json cj;
        cj["i"] = con.i;
        cj["j"] = con.j;
        cj["allowed"] = nlohmann::json::array();
        for (auto [a, b] : con.allowed) cj["allowed"].push_back({a, b});
        j["constraints"].push_back(cj);
    }
    if (!pathdec.bags.empty()) j["pathdec"] = pathdec.bags;
    return j.dump();
}

Csp2Instance Csp2Instance::from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        Csp2Instance inst;
        inst.n = j.at("n").get<int>();
        inst.B = j.at("B").get<int>();
        for (const auto& cj : j.at("constraints")) {
            Constraint con;
            con.i = cj.at("i").get<int>();
            con.j = cj.at("j").get<int>();
            for (const auto& p : cj.at("allowed")) con.allowed.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
            inst.constraints.push_back(std::move(con));
        }
        if (j.contains("pathdec"))
            inst.pathdec = path_decomposition(inst.n, j["pathdec"].get<std::vector<std::vector<int>>>());
        inst.check();
        return inst;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("CSP JSON: ") + e.what());
    }
}

std::string PermIsetInstance::to_json() const {
    nlohmann::json j;
    j["k"] = k;
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : graph.edges()) j["edges"].push_back({{u / k, u % k}, {v / k, v % k}});
    return j.dump();
}

PermIsetInstance PermIsetInstance::from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        PermIsetInstance inst;
        inst.k = j.at("k").get<int>();
        if (inst.k < 1) throw InputError("permutation independent set needs k >= 1");
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            int r1 = e.at(0).at(0), c1 = e.at(0).at(1), r2 = e.at(1).at(0), c2 = e.at(1).at(1);
            for (int x : {r1, c1, r2, c2})
                if (x < 0 || x >= inst.k) throw InputError("cell coordinate out of range");
            edges.emplace_back(cell(inst.k, r1, c1), cell(inst.k, r2, c2));
        }
        inst.graph = make_graph(inst.k * inst.k, edges);
        return inst;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("permutation instance JSON: ") + e.what());
    }
}

}  // namespace treepack
