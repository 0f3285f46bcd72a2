#include "vanish/geometric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vanish/rng.hpp"

namespace vanish {

static void check_geo_params(int n, int r) {
    if (r < 2) throw std::invalid_argument("GeoGraph: require r >= 2");
    if (n <= 1 || (n - 1) % r != 0)
        throw std::invalid_argument("GeoGraph: require n = q*r + 1 for a positive q");
}

GeoGraph GeoGraph::generate(int n, int r, std::uint64_t seed) {
    check_geo_params(n, r);
    GeoGraph g;
    g.n = n;
    g.r = r;
    g.q = (n - 1) / r;
    Rng rng(derive_seed(seed, "geo"));
    g.X.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) g.X[static_cast<size_t>(i)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(r)));
    return g;
}

GeoGraph GeoGraph::with_choices(int n, int r, std::vector<int> X) {
    check_geo_params(n, r);
    if (static_cast<int>(X.size()) != n)
        throw std::invalid_argument("GeoGraph: one arc choice per vertex required");
    for (int x : X)
        if (x < 0 || x >= r) throw std::invalid_argument("GeoGraph: arc choice out of range");
    GeoGraph g;
    g.n = n;
    g.r = r;
    g.q = (n - 1) / r;
    g.X = std::move(X);
    return g;
}

bool GeoGraph::in_arc(int target, int i, int j) const {
    int t = target - i;
    t %= n;
    if (t < 0) t += n;
    return j * q + 1 <= t && t <= (j + 1) * q;
}

bool GeoGraph::has_edge(int i, int j) const {
    if (i == j) return false;
    return in_arc(i, j, X[static_cast<size_t>(j)]) && in_arc(j, i, X[static_cast<size_t>(i)]);
}

long long GeoGraph::edge_count() const {
    long long c = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (has_edge(i, j)) ++c;
    return c;
}

double GeoGraph::density() const {
    return static_cast<double>(edge_count()) /
           static_cast<double>(binomial(n, 2));
}

EdgeList GeoGraph::edges_within(const std::vector<int>& A) const {
    EdgeList out;
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = i + 1; j < A.size(); ++j)
            if (has_edge(A[i], A[j])) out.push_back({std::min(A[i], A[j]), std::max(A[i], A[j])});
    return out;
}

Ordering cyclic_ordering(const std::vector<int>& indices, int n) {
    if (indices.empty()) throw std::invalid_argument("cyclic_ordering: empty set");
    std::vector<int> idx(indices);
    std::sort(idx.begin(), idx.end());
    size_t m = idx.size();
    // maximum circular gap, least starting index on ties
    size_t best = 0;
    int best_gap = -1;
    for (size_t t = 0; t < m; ++t) {
        int next = idx[(t + 1) % m];
        int gap = next - idx[t];
        if (gap <= 0) gap += n;
        if (gap > best_gap) {
            best_gap = gap;
            best = t;
        }
    }
    std::vector<int> by_rank;
    for (size_t j = 1; j <= m; ++j) by_rank.push_back(idx[(best + j) % m]);
    return Ordering::from_rank_sequence(std::move(by_rank));
}

TwoOneGraph TwoOneGraph::generate(int n, int r, int k, std::uint64_t seed) {
    if (k < 3) throw std::invalid_argument("TwoOneGraph: require k >= 3");
    check_geo_params(n, r);
    TwoOneGraph H;
    H.n = n;
    H.r = r;
    H.q = (n - 1) / r;
    H.k = k;
    H.seed = seed;
    H.graphs.reserve(static_cast<size_t>((k - 2) * n));
    for (int part = 1; part <= k - 2; ++part)
        for (int slot = 0; slot < n; ++slot)
            H.graphs.push_back(GeoGraph::generate(
                n, r, derive_seed(seed, "two-one", static_cast<std::uint64_t>((part - 1) * n + slot))));
    return H;
}

long long TwoOneGraph::pair_count(int a1, int a2, int part) const {
    long long c = 0;
    for (int slot = 0; slot < n; ++slot)
        if (graph_of(part, slot).has_edge(a1, a2)) ++c;
    return c;
}

bool TwoOneGraph::is_edge(const Edge& e) const {
    if (static_cast<int>(e.size()) != k) return false;
    std::vector<int> a;
    std::vector<int> b_slot(static_cast<size_t>(k - 1), -1);  // 1..k-2 used
    for (int v : e) {
        int p = part_of(v);
        if (p == 0) {
            a.push_back(v);
        } else {
            if (b_slot[static_cast<size_t>(p)] >= 0) return false;
            b_slot[static_cast<size_t>(p)] = slot_of(v);
        }
    }
    if (a.size() != 2) return false;
    for (int part = 1; part <= k - 2; ++part) {
        int slot = b_slot[static_cast<size_t>(part)];
        if (slot < 0) return false;
        if (!graph_of(part, slot).has_edge(a[0], a[1])) return false;
    }
    return true;
}

long long TwoOneGraph::codegree(int u, int v) const {
    if (u == v) throw std::invalid_argument("codegree: identical vertices");
    int pu = part_of(u), pv = part_of(v);
    if (pu > pv) { std::swap(u, v); std::swap(pu, pv); }

    if (pu == 0 && pv == 0) {
        long long d = 1;
        for (int part = 1; part <= k - 2; ++part) d *= pair_count(u, v, part);
        return d;
    }
    if (pu == 0) {
        // u in A, v = b_{pv, slot}: sum over the second A vertex
        int slot = slot_of(v);
        long long d = 0;
        for (int a2 = 0; a2 < n; ++a2) {
            if (a2 == u) continue;
            if (!graph_of(pv, slot).has_edge(u, a2)) continue;
            long long prod = 1;
            for (int part = 1; part <= k - 2 && prod > 0; ++part)
                if (part != pv) prod *= pair_count(u, a2, part);
            d += prod;
        }
        return d;
    }
    if (pu == pv) return 0;  // one vertex per B part in every edge
    // two B vertices from distinct parts: sum over A pairs in both graphs
    const GeoGraph& gu = graph_of(pu, slot_of(u));
    const GeoGraph& gv = graph_of(pv, slot_of(v));
    long long d = 0;
    for (int a1 = 0; a1 < n; ++a1)
        for (int a2 = a1 + 1; a2 < n; ++a2) {
            if (!gu.has_edge(a1, a2) || !gv.has_edge(a1, a2)) continue;
            long long prod = 1;
            for (int part = 1; part <= k - 2 && prod > 0; ++part)
                if (part != pu && part != pv) prod *= pair_count(a1, a2, part);
            d += prod;
        }
    return d;
}

EdgeList TwoOneGraph::edges_within(const std::vector<int>& S) const {
    std::vector<int> a;
    std::vector<std::vector<int>> b(static_cast<size_t>(k - 1));
    for (int v : S) {
        int p = part_of(v);
        if (p == 0) a.push_back(v);
        else b[static_cast<size_t>(p)].push_back(v);
    }
    EdgeList out;
    for (int part = 1; part <= k - 2; ++part)
        if (b[static_cast<size_t>(part)].empty()) return out;  // no completable edge

    // iterate A pairs x product of B choices
    std::vector<size_t> choice(static_cast<size_t>(k - 2), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j) {
            std::fill(choice.begin(), choice.end(), 0);
            while (true) {
                Edge e{a[i], a[j]};
                bool ok = true;
                for (int part = 1; part <= k - 2; ++part) {
                    int bv = b[static_cast<size_t>(part)][choice[static_cast<size_t>(part - 1)]];
                    e.push_back(bv);
                    if (!graph_of(part, slot_of(bv)).has_edge(a[i], a[j])) { ok = false; break; }
                }
                if (ok) {
                    std::sort(e.begin(), e.end());
                    out.push_back(std::move(e));
                }
                int t = k - 3;
                while (t >= 0 && choice[static_cast<size_t>(t)] + 1 == b[static_cast<size_t>(t + 1)].size())
                    choice[static_cast<size_t>(t--)] = 0;
                if (t < 0) break;
                ++choice[static_cast<size_t>(t)];
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

Ordering cluster_ordering(const TwoOneGraph& H, const std::vector<int>& a_subset,
                          const std::vector<std::vector<int>>& b_subsets) {
    if (2 * static_cast<int>(a_subset.size()) > H.r)
        throw std::invalid_argument("cluster_ordering: require |A'| <= r/2");
    std::vector<Ordering> parts;
    parts.push_back(cyclic_ordering(a_subset, H.n));
    for (const auto& bs : b_subsets)
        if (!bs.empty()) parts.push_back(Ordering::increasing(bs));
    return sum(parts);
}

double codegree_epsilon(int k, int r) {
    return std::pow(1.0 / (6.0 * r * r * r), k - 2);
}

std::vector<CodegreeStats> codegree_report(const TwoOneGraph& H, int sample_pairs,
                                           bool exact_all, std::uint64_t seed) {
    Rng rng(derive_seed(seed, "codegree-report"));
    double threshold = codegree_epsilon(H.k, H.r) * std::pow(H.n, H.k - 2);

    auto summarize = [&](const std::string& type,
                         const std::vector<std::pair<int, int>>& pairs) {
        CodegreeStats st;
        st.pair_type = type;
        st.samples = static_cast<long long>(pairs.size());
        st.threshold = threshold;
        long long mn = -1;
        double total = 0;
        for (auto [u, v] : pairs) {
            long long d = H.codegree(u, v);
            total += static_cast<double>(d);
            if (mn < 0 || d < mn) mn = d;
        }
        st.min = std::max(mn, 0LL);
        st.mean = pairs.empty() ? 0.0 : total / static_cast<double>(pairs.size());
        return st;
    };

    std::vector<std::pair<int, int>> aa, ab, bb;
    int n = H.n, k = H.k;
    if (exact_all) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) aa.emplace_back(i, j);
        for (int i = 0; i < n; ++i)
            for (int part = 1; part <= k - 2; ++part)
                for (int slot = 0; slot < n; ++slot) ab.emplace_back(i, H.b_vertex(part, slot));
        for (int p1 = 1; p1 <= k - 2; ++p1)
            for (int p2 = p1 + 1; p2 <= k - 2; ++p2)
                for (int s1 = 0; s1 < n; ++s1)
                    for (int s2 = 0; s2 < n; ++s2)
                        bb.emplace_back(H.b_vertex(p1, s1), H.b_vertex(p2, s2));
    } else {
        for (int t = 0; t < sample_pairs; ++t) {
            int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
            if (j >= i) ++j;
            aa.emplace_back(std::min(i, j), std::max(i, j));

            int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            int part = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k - 2)));
            int slot = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            ab.emplace_back(a, H.b_vertex(part, slot));

            if (k >= 5) {
                int p1 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k - 2)));
                int p2 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k - 3)));
                if (p2 >= p1) ++p2;
                bb.emplace_back(H.b_vertex(std::min(p1, p2), static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))),
                                H.b_vertex(std::max(p1, p2), static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))));
            } else if (k == 4) {
                bb.emplace_back(H.b_vertex(1, static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))),
                                H.b_vertex(2, static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))));
            }
        }
    }

    std::vector<CodegreeStats> out;
    out.push_back(summarize("AA", aa));
    out.push_back(summarize("AB", ab));
    if (!bb.empty()) out.push_back(summarize("BB", bb));
    return out;
}

}  // namespace vanish
