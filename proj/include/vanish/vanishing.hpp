#pragma once

#include <map>
#include <optional>

#include "vanish/hypergraph.hpp"
#include "vanish/ordering.hpp"

namespace vanish {

/// Set of positions occupied by an ell-set inside a k-edge; sorted, 1-based.
using PositionSet = std::vector<int>;
/// Gap counts before/between the sorted elements of the ell-set.
using IndexVector = std::vector<int>;

PositionSet position_set(const std::vector<Vertex>& S, const Ordering& sigma,
                         const Edge& e);
IndexVector index_vector(const std::vector<Vertex>& S, const Ordering& sigma,
                         const Edge& e);

// Bijective interconversion for fixed k: i_1 = a_1 + 1, i_j = sum(a) + j.
PositionSet to_position_set(const IndexVector& iv);
IndexVector to_index_vector(const PositionSet& ps);

/// Conflict certificate: an ell-set sitting at two different position sets.
struct Conflict {
    std::vector<Vertex> S;
    Edge e, e2;
    PositionSet positions, positions2;
};

struct VanishingCheck {
    bool vanishing = false;
    // Position set per covered ell-set when vanishing; uncovered sets take the
    // lexicographically least position set {1,...,ell}.
    std::map<std::vector<Vertex>, PositionSet> coloring;
    std::optional<Conflict> conflict;
};

// Core checker over an arbitrary edge system with any integer ids; only the
// relative sigma-order of vertices within edges matters. Certificates are
// minimal in (S lexicographic, then edge lexicographic) order.
VanishingCheck check_vanishing(const EdgeList& edges, int k,
                               const Ordering& sigma, int ell);

VanishingCheck is_vanishing_order(const Hypergraph& F, const Ordering& sigma, int ell);

// Right-hand side of the link recursion: sigma restricted to every link of an
// (ell-j)-set must be a j-vanishing order of that link.
bool link_recursive_check(const Hypergraph& F, const Ordering& sigma, int ell, int j);

// For H with a certified ell-vanishing order, min_degree(H, ell) is at most
// C(n-ell-1, k-ell-1). Verifies the certificate, then returns the comparison.
bool vanishing_degree_bound_check(const Hypergraph& H, const Ordering& certified,
                                  int ell);

// --- exact search ----------------------------------------------------------

enum class SearchStatus { Found, Nonexistent, Inconclusive };

struct SearchBudget {
    int max_vertices = 12;
    long long max_nodes = 50'000'000;
};

struct SearchResult {
    SearchStatus status = SearchStatus::Inconclusive;
    std::optional<Ordering> order;
    long long nodes = 0;
    bool exhausted() const { return status == SearchStatus::Nonexistent; }
};

// Backtracking over which vertex takes the next rank, pruning with position
// conflicts among fully placed edges and a symmetry rule fixing the relative
// order of swap-equivalent vertices.
SearchResult find_vanishing_order(const Hypergraph& F, int ell,
                                  const SearchBudget& budget = {});

}  // namespace vanish
