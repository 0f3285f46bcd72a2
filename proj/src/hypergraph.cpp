#include "vanish/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace vanish {

Hypergraph Hypergraph::from_edges(int k, int n, EdgeList edges,
                                  std::vector<std::string> labels) {
    if (k < 1) throw std::invalid_argument("uniformity must be at least 1");
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (!edges.empty() && n < k)
        throw std::invalid_argument("nonempty edge set requires n >= k");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("label vector must have one entry per vertex");
    for (auto& e : edges) {
        if (static_cast<int>(e.size()) != k)
            throw std::invalid_argument("edge arity differs from uniformity");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("edge contains a repeated vertex");
        if (e.front() < 0 || e.back() >= n)
            throw std::invalid_argument("edge contains an out-of-range vertex id");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    Hypergraph H;
    H.k_ = k;
    H.n_ = n;
    H.edges_ = std::move(edges);
    H.labels_ = std::move(labels);
    return H;
}

bool Hypergraph::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

long long Hypergraph::degree(const std::vector<Vertex>& S) const {
    long long d = 0;
    for (const auto& e : edges_)
        if (std::includes(e.begin(), e.end(), S.begin(), S.end())) ++d;
    return d;
}

EdgeList Hypergraph::link_edges(const std::vector<Vertex>& S) const {
    EdgeList out;
    Edge rest;
    for (const auto& e : edges_) {
        if (!std::includes(e.begin(), e.end(), S.begin(), S.end())) continue;
        rest.clear();
        std::set_difference(e.begin(), e.end(), S.begin(), S.end(),
                            std::back_inserter(rest));
        out.push_back(rest);
    }
    return out;
}

std::vector<Vertex> Hypergraph::vertices() const {
    std::vector<Vertex> v(static_cast<size_t>(n_));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

Hypergraph link(const Hypergraph& H, const std::vector<Vertex>& S) {
    if (static_cast<int>(S.size()) >= H.uniformity())
        throw std::invalid_argument("link: |S| must be smaller than the uniformity");
    for (Vertex v : S)
        if (v < 0 || v >= H.vertex_count())
            throw std::domain_error("link: S contains an out-of-range vertex id");

    std::vector<Vertex> sorted_s(S);
    std::sort(sorted_s.begin(), sorted_s.end());

    // Dense relabeling of V(H) \ S; labels remember the original identity.
    std::vector<int> remap(static_cast<size_t>(H.vertex_count()), -1);
    std::vector<std::string> labels;
    int next = 0;
    for (Vertex v = 0; v < H.vertex_count(); ++v) {
        if (std::binary_search(sorted_s.begin(), sorted_s.end(), v)) continue;
        remap[static_cast<size_t>(v)] = next++;
        labels.push_back(H.has_labels() ? H.label(v) : std::to_string(v));
    }

    EdgeList out;
    for (auto e : H.link_edges(sorted_s)) {
        for (auto& v : e) v = remap[static_cast<size_t>(v)];
        out.push_back(std::move(e));
    }
    int k_out = H.uniformity() - static_cast<int>(S.size());
    return Hypergraph::from_edges(k_out, next, std::move(out), std::move(labels));
}

long long min_degree(const Hypergraph& H, int ell) {
    if (ell < 1 || ell >= H.uniformity())
        throw std::invalid_argument("min_degree: require 1 <= ell < k");
    if (H.vertex_count() < ell) return 0;
    if (H.edge_count() == 0) return 0;

    // Count degrees of covered ell-sets in one pass over the edges; any
    // uncovered ell-set makes the minimum zero.
    std::map<std::vector<Vertex>, long long> deg;
    for (const auto& e : H.edges())
        for_each_subset_of(e, ell, [&](const std::vector<Vertex>& S) { ++deg[S]; });
    if (static_cast<long long>(deg.size()) < binomial(H.vertex_count(), ell))
        return 0;
    long long best = -1;
    for (const auto& [s, d] : deg)
        if (best < 0 || d < best) best = d;
    return best;
}

namespace {

bool color_backtrack(const Hypergraph& H, const std::vector<int>& order,
                     size_t pos, std::vector<int>& color,
                     const std::vector<std::vector<int>>& incident,
                     long long& budget) {
    if (pos == order.size()) return true;
    if (--budget < 0) throw budget_error("strong_coloring: node budget exhausted");
    int v = order[pos];
    int t = H.uniformity();
    for (int c = 0; c < t; ++c) {
        bool ok = true;
        for (int ei : incident[static_cast<size_t>(v)]) {
            const Edge& e = H.edges()[static_cast<size_t>(ei)];
            for (Vertex u : e) {
                if (u != v && color[static_cast<size_t>(u)] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (!ok) continue;
        color[static_cast<size_t>(v)] = c;
        if (color_backtrack(H, order, pos + 1, color, incident, budget)) return true;
        color[static_cast<size_t>(v)] = -1;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> strong_coloring(const Hypergraph& H,
                                                long long node_budget) {
    if (H.vertex_count() > 64)
        throw std::invalid_argument("strong_coloring: hard cap of 64 vertices");
    size_t n = static_cast<size_t>(H.vertex_count());
    std::vector<std::vector<int>> incident(n);
    for (size_t ei = 0; ei < H.edges().size(); ++ei)
        for (Vertex v : H.edges()[ei]) incident[static_cast<size_t>(v)].push_back(static_cast<int>(ei));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return incident[static_cast<size_t>(a)].size() > incident[static_cast<size_t>(b)].size();
    });

    std::vector<int> color(n, -1);
    if (color_backtrack(H, order, 0, color, incident, node_budget))
        return color;
    return std::nullopt;
}

Hypergraph complete(int n, int k) {
    EdgeList edges;
    for_each_combination(n, k, [&](const std::vector<int>& e) { edges.push_back(e); });
    return Hypergraph::from_edges(k, n, std::move(edges));
}

Hypergraph tight_cycle(int r, int k) {
    if (k < 2 || r < k)
        throw std::invalid_argument("tight_cycle: require r >= k >= 2");
    std::set<Edge> edges;
    for (int i = 0; i < r; ++i) {
        Edge e;
        for (int j = 0; j < k; ++j) e.push_back((i + j) % r);
        std::sort(e.begin(), e.end());
        edges.insert(std::move(e));
    }
    // r == k collapses every window onto the same edge; keep the deduplicated
    // one-edge graph rather than failing mid-pipeline.
    return Hypergraph::from_edges(k, r, EdgeList(edges.begin(), edges.end()));
}

Hypergraph expansion(const Hypergraph& F, int k) {
    int ell = F.uniformity();
    if (k < ell) throw std::invalid_argument("expansion: require k >= uniformity(F)");
    int n = F.vertex_count();
    EdgeList edges;
    int fresh = n;
    for (auto e : F.edges()) {
        for (int t = 0; t < k - ell; ++t) e.push_back(fresh++);
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_edges(k, fresh, std::move(edges));
}

Hypergraph blowup(const Hypergraph& F, int t) {
    if (t < 1) throw std::invalid_argument("blowup: require t >= 1");
    int k = F.uniformity();
    int n = F.vertex_count() * t;
    EdgeList edges;
    std::vector<int> choice(static_cast<size_t>(k), 0);
    for (const auto& e : F.edges()) {
        // all t^k choices of class representatives
        std::fill(choice.begin(), choice.end(), 0);
        while (true) {
            Edge out;
            for (int i = 0; i < k; ++i) out.push_back(e[static_cast<size_t>(i)] * t + choice[static_cast<size_t>(i)]);
            edges.push_back(std::move(out));
            int i = k - 1;
            while (i >= 0 && choice[static_cast<size_t>(i)] == t - 1) choice[static_cast<size_t>(i--)] = 0;
            if (i < 0) break;
            ++choice[static_cast<size_t>(i)];
        }
    }
    std::vector<std::string> labels;
    for (int v = 0; v < F.vertex_count(); ++v)
        for (int c = 0; c < t; ++c) labels.push_back(std::to_string(v));
    return Hypergraph::from_edges(k, n, std::move(edges), std::move(labels));
}

Hypergraph tensor_product(const std::vector<Hypergraph>& factors, const Budget& budget) {
    if (factors.empty()) throw std::invalid_argument("tensor_product: empty factor list");
    int k = factors.front().uniformity();
    for (const auto& F : factors)
        if (F.uniformity() != k)
            throw std::invalid_argument("tensor_product: mixed uniformities");

    long long n = 1;
    for (const auto& F : factors) {
        n *= F.vertex_count();
        if (n > budget.max_vertices)
            throw budget_error("tensor_product: vertex budget exceeded");
    }
    long long tests = binomial(n, k);
    if (tests > budget.max_edge_tests)
        throw budget_error("tensor_product: edge-test budget exceeded");

    size_t s = factors.size();
    // coordinates of vertex id v: mixed-radix, last factor fastest
    auto coords = [&](long long v) {
        std::vector<int> c(s);
        for (size_t i = s; i-- > 0;) {
            int sz = factors[i].vertex_count();
            c[i] = static_cast<int>(v % sz);
            v /= sz;
        }
        return c;
    };

    std::vector<std::vector<int>> coord_cache(static_cast<size_t>(n));
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (long long v = 0; v < n; ++v) {
        coord_cache[static_cast<size_t>(v)] = coords(v);
        std::string lab;
        for (size_t i = 0; i < s; ++i) {
            if (i) lab += ',';
            lab += std::to_string(coord_cache[static_cast<size_t>(v)][i]);
        }
        labels[static_cast<size_t>(v)] = lab;
    }

    EdgeList edges;
    Edge proj(static_cast<size_t>(k));
    for_each_combination(static_cast<int>(n), k, [&](const std::vector<int>& cand) {
        for (size_t i = 0; i < s; ++i) {
            for (int j = 0; j < k; ++j)
                proj[static_cast<size_t>(j)] = coord_cache[static_cast<size_t>(cand[static_cast<size_t>(j)])][i];
            std::sort(proj.begin(), proj.end());
            if (std::adjacent_find(proj.begin(), proj.end()) != proj.end()) return;
            if (!factors[i].has_edge(proj)) return;
        }
        edges.push_back(cand);
    });
    return Hypergraph::from_edges(k, static_cast<int>(n), std::move(edges), std::move(labels));
}

Hypergraph apex(const Hypergraph& F) {
    int v = F.vertex_count();
    EdgeList edges;
    for (auto e : F.edges()) {
        e.push_back(v);
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_edges(F.uniformity() + 1, v + 1, std::move(edges));
}

Hypergraph induced(const Hypergraph& H, const std::vector<Vertex>& S) {
    std::vector<Vertex> sorted_s(S);
    std::sort(sorted_s.begin(), sorted_s.end());
    for (Vertex v : sorted_s)
        if (v < 0 || v >= H.vertex_count())
            throw std::domain_error("induced: S contains an out-of-range vertex id");

    std::vector<int> remap(static_cast<size_t>(H.vertex_count()), -1);
    std::vector<std::string> labels;
    for (size_t i = 0; i < sorted_s.size(); ++i) {
        Vertex v = sorted_s[i];
        remap[static_cast<size_t>(v)] = static_cast<int>(i);
        labels.push_back(H.has_labels() ? H.label(v) : std::to_string(v));
    }
    EdgeList edges;
    for (auto e : H.edges()) {
        bool inside = std::all_of(e.begin(), e.end(), [&](Vertex v) {
            return remap[static_cast<size_t>(v)] >= 0;
        });
        if (!inside) continue;
        for (auto& v : e) v = remap[static_cast<size_t>(v)];
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_edges(H.uniformity(), static_cast<int>(sorted_s.size()),
                                  std::move(edges), std::move(labels));
}

}  // namespace vanish
