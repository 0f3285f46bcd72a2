#include "vanish/vanishing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace vanish {

namespace {

// Edge sorted by sigma-rank; |S| positions 1..k occupied by S.
PositionSet positions_in(const std::vector<Vertex>& S, const Ordering& sigma,
                         const Edge& e) {
    std::vector<Vertex> by_sigma(e);
    std::sort(by_sigma.begin(), by_sigma.end(),
              [&](Vertex a, Vertex b) { return sigma.rank(a) < sigma.rank(b); });
    PositionSet ps;
    for (int i = 0; i < static_cast<int>(by_sigma.size()); ++i)
        if (std::find(S.begin(), S.end(), by_sigma[static_cast<size_t>(i)]) != S.end())
            ps.push_back(i + 1);
    if (ps.size() != S.size())
        throw std::domain_error("position_set: S is not a subset of e");
    return ps;
}

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ULL;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b9;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

}  // namespace

PositionSet position_set(const std::vector<Vertex>& S, const Ordering& sigma,
                         const Edge& e) {
    return positions_in(S, sigma, e);
}

IndexVector index_vector(const std::vector<Vertex>& S, const Ordering& sigma,
                         const Edge& e) {
    return to_index_vector(positions_in(S, sigma, e));
}

PositionSet to_position_set(const IndexVector& iv) {
    PositionSet ps;
    int acc = 0;
    for (size_t j = 0; j < iv.size(); ++j) {
        acc += iv[j];
        ps.push_back(acc + static_cast<int>(j) + 1);
    }
    return ps;
}

IndexVector to_index_vector(const PositionSet& ps) {
    IndexVector iv;
    int prev = 0;
    for (size_t j = 0; j < ps.size(); ++j) {
        iv.push_back(ps[j] - prev - 1);
        prev = ps[j];
    }
    return iv;
}

VanishingCheck check_vanishing(const EdgeList& edges, int k,
                               const Ordering& sigma, int ell) {
    if (ell < 1 || ell > k)
        throw std::invalid_argument("check_vanishing: require 1 <= ell <= k");

    VanishingCheck result;
    // Fast pass: group by ell-set, remember the first position set seen.
    std::unordered_map<std::vector<Vertex>, PositionSet, VecHash> seen;
    bool conflict_found = false;
    for (const auto& e : edges) {
        bool done = false;
        for_each_subset_of(e, ell, [&](const std::vector<Vertex>& S) {
            if (done) return;
            PositionSet ps = positions_in(S, sigma, e);
            auto [it, inserted] = seen.emplace(S, ps);
            if (!inserted && it->second != ps) {
                conflict_found = true;
                done = true;
            }
        });
        if (conflict_found) break;
    }

    if (!conflict_found) {
        result.vanishing = true;
        for (auto& [s, ps] : seen) result.coloring.emplace(s, ps);
        return result;
    }

    // Deterministic minimal certificate: least conflicted S in lex order, then
    // the lex-least witnessing edge pair.
    EdgeList sorted_edges(edges);
    std::sort(sorted_edges.begin(), sorted_edges.end());
    std::map<std::vector<Vertex>, std::vector<const Edge*>> by_set;
    for (const auto& e : sorted_edges)
        for_each_subset_of(e, ell, [&](const std::vector<Vertex>& S) {
            by_set[S].push_back(&e);
        });
    for (const auto& [S, es] : by_set) {
        PositionSet first = positions_in(S, sigma, *es.front());
        for (size_t i = 1; i < es.size(); ++i) {
            PositionSet ps = positions_in(S, sigma, *es[i]);
            if (ps != first) {
                result.conflict = Conflict{S, *es.front(), *es[i], first, ps};
                return result;
            }
        }
    }
    throw std::logic_error("check_vanishing: conflict vanished on second pass");
}

VanishingCheck is_vanishing_order(const Hypergraph& F, const Ordering& sigma, int ell) {
    if (ell < 1 || ell > F.uniformity())
        throw std::invalid_argument("is_vanishing_order: require 1 <= ell <= k");
    if (sigma.size() != F.vertex_count())
        throw std::invalid_argument("is_vanishing_order: sigma must order V(F)");
    return check_vanishing(F.edges(), F.uniformity(), sigma, ell);
}

bool link_recursive_check(const Hypergraph& F, const Ordering& sigma, int ell, int j) {
    if (!(1 <= j && j < ell && ell <= F.uniformity()))
        throw std::invalid_argument("link_recursive_check: require 1 <= j < ell <= k");
    int link_k = F.uniformity() - (ell - j);
    bool ok = true;
    for_each_combination(F.vertex_count(), ell - j, [&](const std::vector<int>& S) {
        if (!ok) return;
        EdgeList le = F.link_edges(S);
        if (le.size() <= 1) return;
        // Only the relative sigma-order within link edges matters, so the
        // unrestricted ordering stands in for its restriction.
        if (!check_vanishing(le, link_k, sigma, j).vanishing) ok = false;
    });
    return ok;
}

bool vanishing_degree_bound_check(const Hypergraph& H, const Ordering& certified,
                                  int ell) {
    if (!is_vanishing_order(H, certified, ell).vanishing)
        throw std::invalid_argument(
            "vanishing_degree_bound_check: the supplied order is not ell-vanishing");
    long long bound = binomial(H.vertex_count() - ell - 1, H.uniformity() - ell - 1);
    return min_degree(H, ell) <= bound;
}

namespace {

struct Searcher {
    const Hypergraph& F;
    int ell;
    long long budget;
    long long nodes = 0;
    bool budget_hit = false;

    int n, k;
    std::vector<std::vector<int>> incident;    // vertex -> edge indices
    std::vector<int> placed_count;             // per edge
    std::vector<int> by_rank;                  // partial order, ranks 1..depth
    std::vector<int> rank_of;                  // -1 when unplaced
    std::vector<int> class_of;                 // symmetry class per vertex
    std::unordered_map<std::vector<int>, PositionSet, VecHash> constraint;

    explicit Searcher(const Hypergraph& f, int l, long long b)
        : F(f), ell(l), budget(b), n(f.vertex_count()), k(f.uniformity()) {
        incident.resize(static_cast<size_t>(n));
        for (size_t ei = 0; ei < F.edges().size(); ++ei)
            for (Vertex v : F.edges()[ei])
                incident[static_cast<size_t>(v)].push_back(static_cast<int>(ei));
        placed_count.assign(F.edges().size(), 0);
        rank_of.assign(static_cast<size_t>(n), -1);
        build_classes();
    }

    // v and w are interchangeable when the transposition (v w) maps the edge
    // set to itself; classes require that with every current member.
    bool swap_is_automorphism(int v, int w) const {
        for (const auto& e : F.edges()) {
            Edge img(e);
            for (auto& x : img) {
                if (x == v) x = w;
                else if (x == w) x = v;
            }
            std::sort(img.begin(), img.end());
            if (!F.has_edge(img)) return false;
        }
        return true;
    }

    void build_classes() {
        class_of.assign(static_cast<size_t>(n), -1);
        std::vector<std::vector<int>> classes;
        for (int v = 0; v < n; ++v) {
            bool joined = false;
            for (size_t c = 0; c < classes.size() && !joined; ++c) {
                bool all = true;
                for (int w : classes[c])
                    if (!swap_is_automorphism(v, w)) { all = false; break; }
                if (all) {
                    classes[c].push_back(v);
                    class_of[static_cast<size_t>(v)] = static_cast<int>(c);
                    joined = true;
                }
            }
            if (!joined) {
                class_of[static_cast<size_t>(v)] = static_cast<int>(classes.size());
                classes.push_back({v});
            }
        }
    }

    bool place(int v) {
        rank_of[static_cast<size_t>(v)] = static_cast<int>(by_rank.size()) + 1;
        by_rank.push_back(v);
        // Count first, then check: a conflict below must leave every
        // placed_count balanced for the unconditional decrement in unplace().
        for (int ei : incident[static_cast<size_t>(v)]) ++placed_count[static_cast<size_t>(ei)];
        std::vector<std::vector<int>> added;
        for (int ei : incident[static_cast<size_t>(v)]) {
            if (placed_count[static_cast<size_t>(ei)] != k) continue;
            const Edge& e = F.edges()[static_cast<size_t>(ei)];
            Edge by_sigma(e);
            std::sort(by_sigma.begin(), by_sigma.end(), [&](int a, int b) {
                return rank_of[static_cast<size_t>(a)] < rank_of[static_cast<size_t>(b)];
            });
            bool conflict = false;
            for_each_combination(k, ell, [&](const std::vector<int>& pos) {
                if (conflict) return;
                std::vector<int> S;
                for (int p : pos) S.push_back(by_sigma[static_cast<size_t>(p)]);
                std::sort(S.begin(), S.end());
                PositionSet ps;
                for (int p : pos) ps.push_back(p + 1);
                auto [it, inserted] = constraint.emplace(S, ps);
                if (inserted) added.push_back(S);
                else if (it->second != ps) conflict = true;
            });
            if (conflict) {
                for (const auto& key : added) constraint.erase(key);
                unplace(v);
                return false;
            }
        }
        added_stack.push_back(std::move(added));
        return true;
    }

    std::vector<std::vector<std::vector<int>>> added_stack;

    void unplace(int v) {
        for (int ei : incident[static_cast<size_t>(v)]) --placed_count[static_cast<size_t>(ei)];
        rank_of[static_cast<size_t>(v)] = -1;
        by_rank.pop_back();
    }

    void pop_constraints(int v) {
        for (const auto& key : added_stack.back()) constraint.erase(key);
        added_stack.pop_back();
        unplace(v);
    }

    bool search() {
        if (static_cast<int>(by_rank.size()) == n) return true;
        if (++nodes > budget) { budget_hit = true; return false; }
        for (int v = 0; v < n; ++v) {
            if (rank_of[static_cast<size_t>(v)] >= 0) continue;
            // symmetry rule: within a class, smaller ids are placed first
            bool skip = false;
            for (int w = 0; w < v; ++w)
                if (rank_of[static_cast<size_t>(w)] < 0 &&
                    class_of[static_cast<size_t>(w)] == class_of[static_cast<size_t>(v)]) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            if (!place(v)) continue;
            if (search()) return true;
            if (budget_hit) { pop_constraints(v); return false; }
            pop_constraints(v);
        }
        return false;
    }
};

}  // namespace

SearchResult find_vanishing_order(const Hypergraph& F, int ell,
                                  const SearchBudget& budget) {
    if (budget.max_vertices < 1 || budget.max_nodes < 1)
        throw std::invalid_argument("find_vanishing_order: bad budget");
    SearchResult result;
    if (F.vertex_count() > budget.max_vertices) {
        result.status = SearchStatus::Inconclusive;
        return result;
    }
    Searcher s(F, ell, budget.max_nodes);
    bool found = s.search();
    result.nodes = s.nodes;
    if (found) {
        Ordering sigma = Ordering::from_rank_sequence(s.by_rank);
        if (!is_vanishing_order(F, sigma, ell).vanishing)
            throw std::logic_error("find_vanishing_order: search returned a bad order");
        result.status = SearchStatus::Found;
        result.order = std::move(sigma);
    } else if (s.budget_hit) {
        result.status = SearchStatus::Inconclusive;
    } else {
        result.status = SearchStatus::Nonexistent;
    }
    return result;
}

}  // namespace vanish
