#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "vanish/hypergraph.hpp"
#include "vanish/vanishing.hpp"

namespace vanish {

// Induced color of R inside the c-colored set S: tau(sigma_R (+) sigma_{S\R})
// + c mod m. R must be a subset of S.
int induced_color(const std::vector<int>& S, const std::vector<int>& R, int c, int m);

// Two-step chains through all (r+1)-supersets T of R inside S hit exactly
// s-r distinct colors, consecutive in Z/mZ. Checked exhaustively for the
// canonical set [s] and for randomized non-contiguous s-sets.
bool verify_induced_color_lemma(int s, int r, int m, std::uint64_t seed = 0,
                                int random_sets = 5);

/// Random k-graph whose natural order is (ell+1)-vanishing by construction:
/// a k-set is an edge iff every (ell+1)-subset's lazily hashed position set
/// matches the subset's actual positions.
struct H1Instance {
    int n = 0, k = 0, ell = 0;
    std::uint64_t seed = 0;
    Hypergraph graph;

    // Position set assigned to an (ell+1)-subset of 0..n-1 (sorted).
    PositionSet phi(const std::vector<int>& subset) const;
};

H1Instance generate_h1(int n, int k, int ell, std::uint64_t seed,
                       const Budget& budget = {});

/// Random k-graph built from cyclic colors of ell-sets (m = k-ell+1): a k-set
/// T is an edge iff some c in Z/mZ induces phi(R) on every ell-subset R.
struct H2Instance {
    int n = 0, k = 0, ell = 0, m = 0;
    std::uint64_t seed = 0;
    Hypergraph graph;

    int phi(const std::vector<int>& subset) const;  // color of an ell-set
    // Rainbow witness for the (k-ell+1)-partiteness of L(S), S an (ell-1)-set:
    // the color of S induced from phi(S u {v}).
    int chi(const std::vector<int>& S, int v) const;
};

H2Instance generate_h2(int n, int k, int ell, std::uint64_t seed,
                       const Budget& budget = {});

// Every edge of every (ell-1)-set link takes k-ell+1 distinct chi values.
bool h2_links_rainbow(const H2Instance& inst);

struct DegreeExpectationReport {
    std::string kind;  // "h1" or "h2"
    int n = 0, k = 0, ell = 0, seeds = 0;
    double expected = 0.0;        // closed-form E[d(S)]
    double empirical_mean = 0.0;  // mean over seeds of the mean ell-degree
    double std_error = 0.0;       // of the empirical mean
    double relative_error = 0.0;
    bool within(double sigmas) const {
        return std::abs(empirical_mean - expected) <= sigmas * std_error;
    }
};

DegreeExpectationReport degree_expectation_report(const std::string& kind, int n,
                                                  int k, int ell, int seeds,
                                                  std::uint64_t master_seed);

double h1_edge_probability(int k, int ell);  // C(k,ell+1)^(-C(k,ell+1))
double h2_edge_probability(int k, int ell);  // (k-ell+1)^(1-C(k,ell))

}  // namespace vanish
