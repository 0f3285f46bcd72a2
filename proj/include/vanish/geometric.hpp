#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vanish/hypergraph.hpp"
#include "vanish/ordering.hpp"

namespace vanish {

/// Circular geometric random graph on n = q*r + 1 vertices a_0..a_{n-1}.
/// Each vertex i picks an arc index X_i in {0..r-1}; a_i a_j is an edge iff
/// each endpoint lies in the other's chosen arc.
struct GeoGraph {
    int n = 0, q = 0, r = 0;
    std::vector<int> X;

    static GeoGraph generate(int n, int r, std::uint64_t seed);
    // Test hook with explicit arc choices.
    static GeoGraph with_choices(int n, int r, std::vector<int> X);

    // Is a_target in S_{i,j} = {a_{i+t} : j*q+1 <= t <= (j+1)*q} (mod n)?
    bool in_arc(int target, int i, int j) const;
    bool has_edge(int i, int j) const;

    long long edge_count() const;
    double density() const;

    // Edges of the induced subgraph on A (original ids, sorted).
    EdgeList edges_within(const std::vector<int>& A) const;
};

// Rotation of the circular order of the given index set starting immediately
// after a maximum circular gap; ties broken by the least starting index.
Ordering cyclic_ordering(const std::vector<int>& indices, int n);

/// (2,1^{k-2})-type k-graph H(n,r): part A of size n plus k-2 parts B_i of
/// size n; vertex b_{i,j} carries an independent GeoGraph copy, and a k-set
/// a a' b_{1,j1}...b_{k-2,j_{k-2}} is an edge iff aa' lies in every carried
/// graph. Edges are never materialized globally; membership is on demand.
struct TwoOneGraph {
    int n = 0, q = 0, r = 0, k = 0;
    std::uint64_t seed = 0;
    std::vector<GeoGraph> graphs;  // index (i-1)*n + j for part i, slot j

    static TwoOneGraph generate(int n, int r, int k, std::uint64_t seed);

    int vertex_count() const { return n * (k - 1); }
    // ids: A = 0..n-1; b_{i,j} = i*n + j for part i in 1..k-2, slot j in 0..n-1
    int b_vertex(int part, int slot) const { return part * n + slot; }
    int part_of(int v) const { return v / n; }   // 0 = A
    int slot_of(int v) const { return v % n; }

    const GeoGraph& graph_of(int part, int slot) const {
        return graphs[static_cast<size_t>((part - 1) * n + slot)];
    }

    bool pair_in_graph(int a1, int a2, int part, int slot) const {
        return graph_of(part, slot).has_edge(a1, a2);
    }
    // |{slot : a1 a2 in G_{part,slot}}|
    long long pair_count(int a1, int a2, int part) const;

    bool is_edge(const Edge& e) const;  // sorted k-set of vertex ids
    long long codegree(int u, int v) const;  // exact 2-degree of any pair

    // Edges of the induced subhypergraph on S (original ids).
    EdgeList edges_within(const std::vector<int>& S) const;
};

// sigma_c(A') (+) ascending orderings of the B-subsets, in part order.
Ordering cluster_ordering(const TwoOneGraph& H, const std::vector<int>& a_subset,
                          const std::vector<std::vector<int>>& b_subsets);

struct CodegreeStats {
    std::string pair_type;  // "AA", "AB", "BB"
    long long samples = 0;
    long long min = 0;
    double mean = 0.0;
    double threshold = 0.0;  // epsilon * n^(k-2)
};

// Per-type codegree statistics over sampled (or, for small n, all) pairs
// drawn from AxA, AxB and BxB across distinct parts. Same-part BxB pairs are
// outside C1-C3 and deliberately excluded.
std::vector<CodegreeStats> codegree_report(const TwoOneGraph& H, int sample_pairs,
                                           bool exact_all, std::uint64_t seed);

double codegree_epsilon(int k, int r);  // 1/(6 r^3)^(k-2)

}  // namespace vanish
