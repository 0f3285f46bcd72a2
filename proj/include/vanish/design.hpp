#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "vanish/geometric.hpp"
#include "vanish/hypergraph.hpp"
#include "vanish/ordering.hpp"
#include "vanish/vanishing.hpp"

namespace vanish {

/// Pair-covering block system: every 2-subset of the ground set lies in
/// exactly one block.
struct Design {
    int N = 0;
    int block_size = 0;  // k-1 in the gluing pipeline
    EdgeList blocks;     // sorted blocks of sorted vertex ids

    // Throws with the offending pair when coverage is not exactly one.
    void validate() const;
    long long blocks_per_vertex() const { return (N - 1) / (block_size - 1); }
};

// Steiner triple system via the classical Bose (N = 3 mod 6) and Skolem
// (N = 1 mod 6) constructions.
Design steiner_triple_system(int N);

// All pairs of [N] as blocks; the trivial 2-design that lets the pipeline run
// at uniformity k = 3.
Design complete_design(int N);

Design make_design(int N, int block_size, EdgeList blocks);  // validates

// phi(J) in J for every block, surjective onto 0..N-1; maximum bipartite
// matching on the incidence graph, unmatched blocks extended by min J.
// Throws when no saturating matching exists.
std::vector<int> hall_surjection(const Design& D);

/// Union over blocks J of sparsified copies H'_J of H(n,r): block J hosts a
/// TwoOneGraph whose A part is V_phi(J) and whose B parts are the remaining
/// parts of J in increasing order. An edge survives iff its A-pair is mapped
/// to J by the keyed sparsification hash.
struct GluedGraph {
    Design design;
    std::vector<int> phi;  // per block
    int n = 0, r = 0, k = 0;
    std::uint64_t seed = 0;
    std::vector<TwoOneGraph> block_graphs;     // one per block
    std::vector<std::vector<int>> parts_of_E;  // E_i = blocks with phi = i
    std::map<std::vector<int>, int> block_lookup;      // sorted part set -> block
    std::map<std::pair<int, int>, int> pair_block;     // part pair -> block

    long long vertex_count() const { return static_cast<long long>(design.N) * n; }
    int part_of(int v) const { return v / n; }
    int offset_of(int v) const { return v % n; }
    int global_vertex(int part, int offset) const { return part * n + offset; }

    // Owning block of an intra-part pair (u, v in the same part), uniform over
    // E_i via a keyed hash; never stored.
    int sparsify(int u, int v) const;

    int block_index_of_parts(const std::vector<int>& parts) const;  // -1 if none

    bool is_edge(const Edge& e) const;

    // Exact 2-degree d_H(uv).
    long long pair_degree(int u, int v) const;

    // Vertices of the link of v within the sparsified block copy H'_J.
    std::set<int> link_vertices_in_block(int v, int block) const;

    // Edges of the induced subhypergraph on S (global ids).
    EdgeList edges_within(const std::vector<int>& S) const;

    // Local TwoOneGraph vertex id of global v inside a block; -1 when the part
    // of v does not belong to the block.
    int local_id(int v, int block) const;
};

GluedGraph glue(const Design& D, const std::vector<int>& phi, int n, int r, int k,
                std::uint64_t seed);

// Links of v inside two distinct block copies must be vertex-disjoint.
bool packing_check(const GluedGraph& G, int v, int block_a, int block_b);

struct D1Report {
    long long pairs = 0;
    long long min_degree = 0;
    double mean_degree = 0.0;
    double threshold = 0.0;  // gamma |V|^(k-2)
    bool exact = false;
    // per proof case: same part / cross with apex in the pair / apex elsewhere
    long long same_part_pairs = 0, cross_apex_pairs = 0, cross_far_pairs = 0;
};

D1Report d1_report(const GluedGraph& G, int sample_pairs, std::uint64_t seed,
                   long long exact_vertex_cap = 2000);

struct D2Result {
    int trials = 0;
    int failures = 0;
    std::vector<Conflict> certificates;
    bool pass() const { return failures == 0; }
};

// Samples vertex subsets of size <= m, orders them by the sum of per-part
// cyclic orderings and checks 2-vanishing of the induced subhypergraph.
D2Result d2_check(const GluedGraph& G, int m, int trials, std::uint64_t seed);

}  // namespace vanish
