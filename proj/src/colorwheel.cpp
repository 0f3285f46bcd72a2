#include "vanish/colorwheel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "vanish/ordering.hpp"
#include "vanish/rng.hpp"

namespace vanish {

int induced_color(const std::vector<int>& S, const std::vector<int>& R, int c, int m) {
    if (m < 1) throw std::invalid_argument("induced_color: require m >= 1");
    std::vector<int> sorted_s(S), sorted_r(R), rest;
    std::sort(sorted_s.begin(), sorted_s.end());
    std::sort(sorted_r.begin(), sorted_r.end());
    if (!std::includes(sorted_s.begin(), sorted_s.end(), sorted_r.begin(), sorted_r.end()))
        throw std::domain_error("induced_color: R must be a subset of S");
    std::set_difference(sorted_s.begin(), sorted_s.end(), sorted_r.begin(),
                        sorted_r.end(), std::back_inserter(rest));
    Ordering merged = sum(Ordering::increasing(sorted_r), Ordering::increasing(rest));
    long long tau = inversions(merged);
    return static_cast<int>(((tau + c) % m + m) % m);
}

namespace {

bool lemma_holds_for_set(const std::vector<int>& S, int r, int m) {
    int s = static_cast<int>(S.size());
    bool ok = true;
    for_each_subset_of(S, r, [&](const std::vector<int>& R) {
        if (!ok) return;
        for (int c = 0; c < m && ok; ++c) {
            std::set<int> colors;
            for (int j : S) {
                if (std::find(R.begin(), R.end(), j) != R.end()) continue;
                std::vector<int> T(R);
                T.push_back(j);
                std::sort(T.begin(), T.end());
                colors.insert(induced_color(T, R, induced_color(S, T, c, m), m));
            }
            if (static_cast<int>(colors.size()) != s - r) {
                ok = false;
                break;
            }
            // the s-r colors must be consecutive in Z/mZ
            if (m > s - r) {
                int runs = 0;
                for (int a = 0; a < m; ++a)
                    if (colors.count(a) && !colors.count((a + m - 1) % m)) ++runs;
                if (runs != 1) ok = false;
            }
        }
    });
    return ok;
}

}  // namespace

bool verify_induced_color_lemma(int s, int r, int m, std::uint64_t seed,
                                int random_sets) {
    if (!(s > r && r >= 1)) throw std::invalid_argument("require s > r >= 1");
    if (m < s - r) throw std::invalid_argument("require m >= s - r");
    std::vector<int> canonical(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) canonical[static_cast<size_t>(i)] = i + 1;
    if (!lemma_holds_for_set(canonical, r, m)) return false;
    Rng rng(derive_seed(seed, "induced-color-lemma"));
    for (int t = 0; t < random_sets; ++t) {
        std::vector<int> S = rng.sample_distinct(10 * s, s);
        if (!lemma_holds_for_set(S, r, m)) return false;
    }
    return true;
}

// --- H1 ---------------------------------------------------------------------

namespace {

std::vector<PositionSet> all_position_sets(int k, int size) {
    std::vector<PositionSet> out;
    for_each_combination(k, size, [&](const std::vector<int>& idx) {
        PositionSet ps;
        for (int i : idx) ps.push_back(i + 1);
        out.push_back(std::move(ps));
    });
    return out;
}

}  // namespace

PositionSet H1Instance::phi(const std::vector<int>& subset) const {
    std::vector<PositionSet> table = all_position_sets(k, ell + 1);
    std::uint64_t h = subset_hash(derive_seed(seed, "h1-phi"), subset);
    return table[static_cast<size_t>(map_below(h, table.size()))];
}

H1Instance generate_h1(int n, int k, int ell, std::uint64_t seed, const Budget& budget) {
    if (!(1 <= ell && ell <= k - 1))
        throw std::invalid_argument("generate_h1: require 1 <= ell <= k-1");
    if (n >= k && binomial(n, k) > budget.max_edge_tests)
        throw budget_error("generate_h1: candidate budget exceeded");
    H1Instance inst;
    inst.n = n;
    inst.k = k;
    inst.ell = ell;
    inst.seed = seed;

    auto table = all_position_sets(k, ell + 1);
    std::uint64_t key = derive_seed(seed, "h1-phi");
    EdgeList edges;
    if (n >= k) {
        std::vector<int> sub(static_cast<size_t>(ell + 1));
        for_each_combination(n, k, [&](const std::vector<int>& cand) {
            bool ok = true;
            for_each_combination(k, ell + 1, [&](const std::vector<int>& pos) {
                if (!ok) return;
                for (size_t i = 0; i < pos.size(); ++i) sub[i] = cand[static_cast<size_t>(pos[i])];
                std::uint64_t h = subset_hash(key, sub);
                const PositionSet& assigned = table[static_cast<size_t>(map_below(h, table.size()))];
                for (size_t i = 0; i < pos.size(); ++i)
                    if (assigned[i] != pos[i] + 1) { ok = false; return; }
            });
            if (ok) edges.push_back(cand);
        });
    }
    inst.graph = Hypergraph::from_edges(k, n, std::move(edges));
    return inst;
}

// --- H2 ---------------------------------------------------------------------

int H2Instance::phi(const std::vector<int>& subset) const {
    std::uint64_t h = subset_hash(derive_seed(seed, "h2-phi"), subset);
    return static_cast<int>(map_below(h, static_cast<std::uint64_t>(m)));
}

int H2Instance::chi(const std::vector<int>& S, int v) const {
    std::vector<int> t(S);
    t.push_back(v);
    std::sort(t.begin(), t.end());
    // The color of S induced from the ell-set S u {v}. The raw value
    // phi(S u {v}) is not rainbow on link edges (the per-vertex translation
    // tau(sigma_S (+) sigma_{v}) varies with v); composing with it is what
    // makes the two-step chain argument close.
    return induced_color(t, S, phi(t), m);
}

H2Instance generate_h2(int n, int k, int ell, std::uint64_t seed, const Budget& budget) {
    if (!(2 <= ell && ell <= k - 1))
        throw std::invalid_argument("generate_h2: require 2 <= ell <= k-1");
    if (n >= k && binomial(n, k) > budget.max_edge_tests)
        throw budget_error("generate_h2: candidate budget exceeded");
    H2Instance inst;
    inst.n = n;
    inst.k = k;
    inst.ell = ell;
    inst.m = k - ell + 1;
    inst.seed = seed;

    EdgeList edges;
    if (n >= k) {
        for_each_combination(n, k, [&](const std::vector<int>& cand) {
            // T is an edge iff all residues phi(R) - tau_R agree over ell-sets R
            int needed = -1;
            bool ok = true;
            for_each_subset_of(cand, ell, [&](const std::vector<int>& R) {
                if (!ok) return;
                int shift = induced_color(cand, R, 0, inst.m);  // tau_R mod m
                int c = ((inst.phi(R) - shift) % inst.m + inst.m) % inst.m;
                if (needed < 0) needed = c;
                else if (needed != c) ok = false;
            });
            if (ok) edges.push_back(cand);
        });
    }
    inst.graph = Hypergraph::from_edges(k, n, std::move(edges));
    return inst;
}

bool h2_links_rainbow(const H2Instance& inst) {
    const Hypergraph& H = inst.graph;
    bool ok = true;
    for_each_combination(inst.n, inst.ell - 1, [&](const std::vector<int>& S) {
        if (!ok) return;
        for (const auto& le : H.link_edges(S)) {
            std::set<int> colors;
            for (int v : le) colors.insert(inst.chi(S, v));
            if (static_cast<int>(colors.size()) != inst.m) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

// --- degree expectations ----------------------------------------------------

double h1_edge_probability(int k, int ell) {
    double b = static_cast<double>(binomial(k, ell + 1));
    return std::pow(b, -b);
}

double h2_edge_probability(int k, int ell) {
    return std::pow(k - ell + 1, 1.0 - static_cast<double>(binomial(k, ell)));
}

DegreeExpectationReport degree_expectation_report(const std::string& kind, int n,
                                                  int k, int ell, int seeds,
                                                  std::uint64_t master_seed) {
    if (kind != "h1" && kind != "h2")
        throw std::invalid_argument("degree_expectation_report: kind must be h1 or h2");
    DegreeExpectationReport rep;
    rep.kind = kind;
    rep.n = n;
    rep.k = k;
    rep.ell = ell;
    rep.seeds = seeds;
    double p = kind == "h1" ? h1_edge_probability(k, ell) : h2_edge_probability(k, ell);
    rep.expected = p * static_cast<double>(binomial(n - ell, k - ell));

    std::vector<double> means;
    for (int t = 0; t < seeds; ++t) {
        std::uint64_t s = derive_seed(master_seed, "degree-expectation", static_cast<std::uint64_t>(t));
        long long edge_count = kind == "h1" ? generate_h1(n, k, ell, s).graph.edge_count()
                                            : generate_h2(n, k, ell, s).graph.edge_count();
        // mean ell-degree over all C(n, ell) subsets
        double mean = static_cast<double>(edge_count) *
                      static_cast<double>(binomial(k, ell)) /
                      static_cast<double>(binomial(n, ell));
        means.push_back(mean);
    }
    double total = 0;
    for (double v : means) total += v;
    rep.empirical_mean = total / static_cast<double>(seeds);
    double var = 0;
    for (double v : means) var += (v - rep.empirical_mean) * (v - rep.empirical_mean);
    var /= std::max(1, seeds - 1);
    rep.std_error = std::sqrt(var / static_cast<double>(seeds));
    rep.relative_error = rep.expected == 0.0
                             ? 0.0
                             : std::abs(rep.empirical_mean - rep.expected) / rep.expected;
    return rep;
}

}  // namespace vanish
