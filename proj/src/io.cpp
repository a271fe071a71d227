#include "io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tf {

using nlohmann::json;

std::string graph_to_json(const Graph& g) {
    json j;
    j["name"] = g.name;
    j["n"] = g.n;
    json es = json::array();
    for (auto [u, v] : g.edges) es.push_back({u, v});
    j["edges"] = es;
    return j.dump(2) + "\n";
}

Graph graph_from_json(const std::string& text) {
    json j = json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: edge must be a pair");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::string name = j.value("name", "");
    return Graph(n, std::move(es), name);
}

std::string coloring_to_json(const EdgeColoring& c, int kappa) {
    json j;
    j["kappa"] = kappa;
    j["colors"] = c;
    return j.dump(2) + "\n";
}

EdgeColoring coloring_from_json(const std::string& text, int* kappa) {
    json j = json::parse(text);
    if (kappa) *kappa = j.at("kappa").get<int>();
    return j.at("colors").get<EdgeColoring>();
}

std::string verdict_to_json(const EgcVerdict& v, int kappa) {
    json j;
    switch (v.status) {
        case EgcStatus::Colored: j["status"] = "colored"; break;
        case EgcStatus::Impossible: j["status"] = "impossible"; break;
        case EgcStatus::Timeout: j["status"] = "timeout"; break;
    }
    if (v.status == EgcStatus::Colored) {
        j["coloring"] = {{"kappa", kappa}, {"colors", v.coloring}};
    } else {
        j["coloring"] = nullptr;
    }
    j["certificate"] = v.certificate;
    j["nodes"] = v.nodes;
    j["millis"] = v.millis;
    return j.dump(2) + "\n";
}

std::string graph_to_dot(const Graph& g, const EdgeColoring& c) {
    static const char* kDotColors[6] = {"gray", "red", "blue", "green",
                                        "goldenrod", "black"};
    std::ostringstream os;
    os << "graph \"" << (g.name.empty() ? "G" : g.name) << "\" {\n";
    os << "  node [shape=circle];\n";
    for (size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        os << "  " << u << " -- " << v;
        if (i < c.size() && c[i] >= 1 && c[i] <= 5)
            os << " [color=" << kDotColors[c[i]] << "]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    if (path == "-" || path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace tf
