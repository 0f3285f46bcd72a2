#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vanish/util.hpp"

namespace vanish {

using Vertex = int;
using Edge = std::vector<Vertex>;  // strictly increasing vertex ids
using EdgeList = std::vector<Edge>;

/// k-uniform hypergraph on vertices 0..n-1. Edges are stored canonically
/// sorted (each edge increasing, edge list lexicographic, no duplicates).
/// Vertex identity is the dense integer range; labels are side metadata only
/// (tuple coordinates for tensor products, original ids for links/induced).
class Hypergraph {
public:
    Hypergraph() = default;

    // Validates and canonicalizes: sorts edges, rejects duplicates,
    // out-of-range ids and wrong-arity edges.
    static Hypergraph from_edges(int k, int n, EdgeList edges,
                                 std::vector<std::string> labels = {});

    int uniformity() const { return k_; }
    int vertex_count() const { return n_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    const EdgeList& edges() const { return edges_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(Vertex v) const { return labels_.at(static_cast<size_t>(v)); }

    bool has_edge(const Edge& e) const;  // e must be sorted

    // Number of edges containing S (any |S| < k, S sorted).
    long long degree(const std::vector<Vertex>& S) const;

    // Edges containing S, with S stripped, in original ids.
    EdgeList link_edges(const std::vector<Vertex>& S) const;

    std::vector<Vertex> vertices() const;

private:
    int k_ = 1;
    int n_ = 0;
    EdgeList edges_;
    std::vector<std::string> labels_;
};

// --- queries ---------------------------------------------------------------

// The link L_H(S): a (k-|S|)-graph on dense ids 0..n-|S|-1; labels carry the
// original vertex ids (or original labels when H is labeled).
Hypergraph link(const Hypergraph& H, const std::vector<Vertex>& S);

// Exact minimum over all C(n,ell) subsets, including uncovered ones.
long long min_degree(const Hypergraph& H, int ell);

// Strong t-partiteness of a t-graph: a t-coloring making every edge rainbow.
// Backtracking over vertices in descending-degree order; n capped at 64.
std::optional<std::vector<int>> strong_coloring(const Hypergraph& H,
                                                long long node_budget = 50'000'000);
inline bool is_strongly_partite(const Hypergraph& H, long long node_budget = 50'000'000) {
    return strong_coloring(H, node_budget).has_value();
}

// --- constructors ----------------------------------------------------------

Hypergraph complete(int n, int k);
Hypergraph tight_cycle(int r, int k);

// k-expansion: enlarge each edge of the ell-graph F with k-ell fresh private
// vertices; fresh vertices appear in exactly one edge.
Hypergraph expansion(const Hypergraph& F, int k);

// t-blowup: classes of size t, edges become complete k-partite k-graphs.
// Vertex (v,c) gets id v*t+c and label "v".
Hypergraph blowup(const Hypergraph& F, int t);

// Tensor product: vertices are coordinate tuples (labels "c0,c1,..."); a k-set
// is an edge iff every coordinate projection is an edge of the corresponding
// factor (in particular all k coordinates must be distinct in every factor).
Hypergraph tensor_product(const std::vector<Hypergraph>& factors,
                          const Budget& budget = {});

// Apex: new top vertex id |V(F)| joined into every edge of the (k-1)-graph F.
Hypergraph apex(const Hypergraph& F);

// Induced subhypergraph on S; ids relabeled densely, labels keep original ids.
Hypergraph induced(const Hypergraph& H, const std::vector<Vertex>& S);

}  // namespace vanish
