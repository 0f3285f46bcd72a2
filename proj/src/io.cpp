#include "vanish/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vanish {

json hypergraph_to_json(const Hypergraph& H) {
    json j;
    j["k"] = H.uniformity();
    j["n"] = H.vertex_count();
    j["edges"] = H.edges();
    if (H.has_labels()) j["labels"] = H.labels();
    return j;
}

Hypergraph hypergraph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("hypergraph json needs k, n and edges");
    int k = j.at("k").get<int>();
    int n = j.at("n").get<int>();
    EdgeList edges = j.at("edges").get<EdgeList>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Hypergraph::from_edges(k, n, std::move(edges), std::move(labels));
}

std::string hypergraph_to_text(const Hypergraph& H) {
    std::ostringstream out;
    out << H.uniformity() << ' ' << H.vertex_count() << '\n';
    for (const Edge& e : H.edges()) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

Hypergraph hypergraph_from_text(std::istream& in) {
    int k = 0, n = 0;
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty hypergraph text");
    {
        std::istringstream head(line);
        if (!(head >> k >> n)) throw std::invalid_argument("bad header line: " + line);
    }
    EdgeList edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        Edge e;
        int v;
        while (ls >> v) e.push_back(v);
        if (e.empty()) continue;  // blank lines are fine
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_edges(k, n, std::move(edges));
}

json ordering_to_json(const Ordering& sigma) { return json(sigma.by_rank()); }

Ordering ordering_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("ordering json must be an array");
    return Ordering::from_rank_sequence(j.get<std::vector<Vertex>>());
}

json conflict_to_json(const Conflict& c) {
    json j;
    j["S"] = c.S;
    j["e"] = c.e;
    j["e2"] = c.e2;
    j["positions"] = c.positions;
    j["positions2"] = c.positions2;
    return j;
}

json design_to_json(const Design& D) {
    json j;
    j["N"] = D.N;
    j["k_minus_1"] = D.block_size;
    j["blocks"] = D.blocks;
    return j;
}

Design design_from_json(const json& j) {
    Design D;
    D.N = j.at("N").get<int>();
    D.block_size = j.at("k_minus_1").get<int>();
    D.blocks = j.at("blocks").get<EdgeList>();
    D.validate();
    return D;
}

json geograph_to_json(const GeoGraph& g) {
    json j;
    j["n"] = g.n;
    j["q"] = g.q;
    j["r"] = g.r;
    j["X"] = g.X;
    return j;
}

GeoGraph geograph_from_json(const json& j) {
    return GeoGraph::with_choices(j.at("n").get<int>(), j.at("r").get<int>(),
                                  j.at("X").get<std::vector<int>>());
}

Hypergraph load_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
        json j;
        in >> j;
        return hypergraph_from_json(j);
    }
    return hypergraph_from_text(in);
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace vanish
