#pragma once

#include "vanish/hypergraph.hpp"
#include "vanish/vanishing.hpp"

namespace vanish {

/// Labeled enumeration of all m-vertex k-graphs with minimum ell-degree at
/// least B = C(m-ell-1, k-ell-1) + 1.
struct FamilySpec {
    int m = 0, k = 0, ell = 0;
    long long B = 0;
    std::vector<Hypergraph> members;
    long long size() const { return static_cast<long long>(members.size()); }
};

// Enumerates all 2^C(m,k) edge subsets through the degree filter; feasible
// only while C(m,k) <= 24.
FamilySpec enumerate_family(int m, int k, int ell, const Budget& budget = {});

// Tensor product of the whole member list; labels carry coordinate tuples.
Hypergraph build_extremal_product(const FamilySpec& spec, const Budget& budget = {});

// Coordinatewise distinctness of two labeled product vertices.
bool disjoint(const Hypergraph& product, Vertex u, Vertex v);

// ell pairwise-disjoint product vertices lie in a common edge iff pairwise
// disjoint; the biconditional over an explicit edge scan.
bool disjointness_characterization_holds(const Hypergraph& product, int ell,
                                         long long max_checks = 1'000'000);

struct NoOrderCertificate {
    SearchResult result;
    bool certified() const { return result.status == SearchStatus::Nonexistent; }
    bool inconclusive() const { return result.status == SearchStatus::Inconclusive; }
};

// Runs the exact search on the product and reports the exhaustion status.
NoOrderCertificate verify_no_vanishing_order(const FamilySpec& spec,
                                             const SearchBudget& budget = {});

}  // namespace vanish
