#pragma once

#include <unordered_map>
#include <vector>

#include "vanish/hypergraph.hpp"

namespace vanish {

/// A bijection from a finite vertex set to 1..|set|, stored as the vertex
/// sequence in rank order. Ranks are 1-based as in the usual convention.
class Ordering {
public:
    Ordering() = default;

    // The sequence lists vertices by increasing rank.
    static Ordering from_rank_sequence(std::vector<Vertex> by_rank);

    // The increasing ordering of a set (zero inversions).
    static Ordering increasing(std::vector<Vertex> domain);

    int size() const { return static_cast<int>(by_rank_.size()); }
    const std::vector<Vertex>& by_rank() const { return by_rank_; }
    bool contains(Vertex v) const { return rank_.count(v) > 0; }
    int rank(Vertex v) const;

    // Restriction to T: keeps relative order, ranks renumbered 1..|T|.
    Ordering restrict(const std::vector<Vertex>& T) const;

    bool operator==(const Ordering& other) const { return by_rank_ == other.by_rank_; }

private:
    std::vector<Vertex> by_rank_;
    std::unordered_map<Vertex, int> rank_;
};

// sigma1 (+) sigma2: disjoint domains, second block shifted past the first.
Ordering sum(const Ordering& a, const Ordering& b);
Ordering sum(const std::vector<Ordering>& parts);

// Inversion count tau(sigma): pairs i<j of domain elements with
// sigma(i) > sigma(j).
long long inversions(const Ordering& sigma);

}  // namespace vanish
