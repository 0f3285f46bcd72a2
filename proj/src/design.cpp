#include "vanish/design.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vanish/rng.hpp"

namespace vanish {

void Design::validate() const {
    if (N < block_size || block_size < 2)
        throw std::invalid_argument("design: bad parameters");
    std::vector<int> cover(static_cast<size_t>(N) * static_cast<size_t>(N), 0);
    for (const auto& b : blocks) {
        if (static_cast<int>(b.size()) != block_size)
            throw std::invalid_argument("design: block of wrong size");
        for (int v : b)
            if (v < 0 || v >= N)
                throw std::invalid_argument("design: vertex id out of range");
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j)
                ++cover[static_cast<size_t>(b[i]) * static_cast<size_t>(N) + static_cast<size_t>(b[j])];
    }
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            int c = cover[static_cast<size_t>(i) * static_cast<size_t>(N) + static_cast<size_t>(j)];
            if (c != 1)
                throw std::invalid_argument("design: pair {" + std::to_string(i) + "," +
                                            std::to_string(j) + "} covered " +
                                            std::to_string(c) + " times");
        }
}

Design make_design(int N, int block_size, EdgeList blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    Design D{N, block_size, std::move(blocks)};
    D.validate();
    return D;
}

Design complete_design(int N) {
    if (N < 2) throw std::invalid_argument("complete_design: require N >= 2");
    EdgeList blocks;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) blocks.push_back({i, j});
    return make_design(N, 2, std::move(blocks));
}

Design steiner_triple_system(int N) {
    if (N < 7 || (N % 6 != 1 && N % 6 != 3))
        throw std::invalid_argument(
            "steiner_triple_system: require N >= 7 with N = 1 or 3 (mod 6)");
    EdgeList blocks;
    if (N % 6 == 3) {
        // Bose: ground Z_{2t+1} x {0,1,2}, idempotent commutative quasigroup
        // x o y = (t+1)(x+y) mod (2t+1).
        int t = (N - 3) / 6;
        int g = 2 * t + 1;
        auto id = [&](int x, int i) { return i * g + x; };
        auto op = [&](int x, int y) { return static_cast<int>((static_cast<long long>(t + 1) * (x + y)) % g); };
        for (int x = 0; x < g; ++x) blocks.push_back({id(x, 0), id(x, 1), id(x, 2)});
        for (int x = 0; x < g; ++x)
            for (int y = x + 1; y < g; ++y)
                for (int i = 0; i < 3; ++i)
                    blocks.push_back({id(x, i), id(y, i), id(op(x, y), (i + 1) % 3)});
    } else {
        // Skolem: ground {inf} u (Z_{2t} x {1,2,3}) with a half-idempotent
        // commutative quasigroup on Z_{2t}.
        int t = (N - 1) / 6;
        int g = 2 * t;
        int inf = N - 1;
        auto id = [&](int x, int i) { return (i - 1) * g + x; };
        auto f = [&](int z) { return z % 2 == 0 ? z / 2 : t + (z - 1) / 2; };
        auto op = [&](int x, int y) { return f((x + y) % g); };
        for (int i = 0; i < t; ++i) blocks.push_back({id(i, 1), id(i, 2), id(i, 3)});
        for (int i = 0; i < t; ++i) {
            blocks.push_back({inf, id(t + i, 1), id(i, 2)});
            blocks.push_back({inf, id(t + i, 2), id(i, 3)});
            blocks.push_back({inf, id(t + i, 3), id(i, 1)});
        }
        for (int x = 0; x < g; ++x)
            for (int y = x + 1; y < g; ++y)
                for (int j = 1; j <= 3; ++j)
                    blocks.push_back({id(x, j), id(y, j), id(op(x, y), j % 3 + 1)});
    }
    return make_design(N, 3, std::move(blocks));
}

std::vector<int> hall_surjection(const Design& D) {
    int N = D.N;
    int B = static_cast<int>(D.blocks.size());
    if (B < N)
        throw std::runtime_error("hall_surjection: fewer blocks than vertices");

    std::vector<std::vector<int>> blocks_of(static_cast<size_t>(N));
    for (int b = 0; b < B; ++b)
        for (int v : D.blocks[static_cast<size_t>(b)]) blocks_of[static_cast<size_t>(v)].push_back(b);
    for (int v = 0; v < N; ++v)
        if (blocks_of[static_cast<size_t>(v)].empty())
            throw std::runtime_error("hall_surjection: vertex " + std::to_string(v) +
                                     " lies in no block");

    // Kuhn's augmenting-path matching, left = vertices, right = blocks.
    std::vector<int> block_match(static_cast<size_t>(B), -1);
    std::vector<char> visited(static_cast<size_t>(B), 0);
    auto augment = [&](auto&& self, int v) -> bool {
        for (int b : blocks_of[static_cast<size_t>(v)]) {
            if (visited[static_cast<size_t>(b)]) continue;
            visited[static_cast<size_t>(b)] = 1;
            if (block_match[static_cast<size_t>(b)] < 0 || self(self, block_match[static_cast<size_t>(b)])) {
                block_match[static_cast<size_t>(b)] = v;
                return true;
            }
        }
        return false;
    };
    for (int v = 0; v < N; ++v) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(augment, v))
            throw std::runtime_error(
                "hall_surjection: no matching saturating the vertex set");
    }

    std::vector<int> phi(static_cast<size_t>(B));
    for (int b = 0; b < B; ++b)
        phi[static_cast<size_t>(b)] =
            block_match[static_cast<size_t>(b)] >= 0 ? block_match[static_cast<size_t>(b)] : D.blocks[static_cast<size_t>(b)][0];
    return phi;
}

GluedGraph glue(const Design& D, const std::vector<int>& phi, int n, int r, int k,
                std::uint64_t seed) {
    D.validate();
    if (D.block_size != k - 1)
        throw std::invalid_argument("glue: design blocks must have size k-1");
    if (phi.size() != D.blocks.size())
        throw std::invalid_argument("glue: phi must assign every block");
    for (size_t b = 0; b < phi.size(); ++b) {
        const auto& blk = D.blocks[b];
        if (std::find(blk.begin(), blk.end(), phi[b]) == blk.end())
            throw std::invalid_argument("glue: phi(J) must lie in J");
    }

    GluedGraph G;
    G.design = D;
    G.phi = phi;
    G.n = n;
    G.r = r;
    G.k = k;
    G.seed = seed;
    G.parts_of_E.assign(static_cast<size_t>(D.N), {});
    for (size_t b = 0; b < phi.size(); ++b) G.parts_of_E[static_cast<size_t>(phi[b])].push_back(static_cast<int>(b));
    for (int i = 0; i < D.N; ++i)
        if (G.parts_of_E[static_cast<size_t>(i)].empty())
            throw std::invalid_argument("glue: phi is not surjective (empty E_" +
                                        std::to_string(i) + ")");
    for (size_t b = 0; b < D.blocks.size(); ++b) {
        G.block_lookup.emplace(D.blocks[b], static_cast<int>(b));
        const auto& blk = D.blocks[b];
        for (size_t i = 0; i < blk.size(); ++i)
            for (size_t j = i + 1; j < blk.size(); ++j)
                G.pair_block.emplace(std::make_pair(blk[i], blk[j]), static_cast<int>(b));
        G.block_graphs.push_back(
            TwoOneGraph::generate(n, r, k, derive_seed(seed, "glue-block", b)));
    }
    return G;
}

int GluedGraph::sparsify(int u, int v) const {
    int i = part_of(u);
    if (i != part_of(v) || u == v)
        throw std::invalid_argument("sparsify: expects a distinct intra-part pair");
    int o1 = offset_of(u), o2 = offset_of(v);
    if (o1 > o2) std::swap(o1, o2);
    std::vector<int> key{o1, o2};
    std::uint64_t h = subset_hash(derive_seed(seed, "sparsify", static_cast<std::uint64_t>(i)), key);
    const auto& Ei = parts_of_E[static_cast<size_t>(i)];
    return Ei[static_cast<size_t>(map_below(h, Ei.size()))];
}

int GluedGraph::block_index_of_parts(const std::vector<int>& parts) const {
    auto it = block_lookup.find(parts);
    return it == block_lookup.end() ? -1 : it->second;
}

int GluedGraph::local_id(int v, int block) const {
    const auto& blk = design.blocks[static_cast<size_t>(block)];
    int p = phi[static_cast<size_t>(block)];
    int t = part_of(v);
    if (t == p) return offset_of(v);
    int s = 0;
    for (int part : blk) {
        if (part == p) continue;
        ++s;
        if (part == t) return s * n + offset_of(v);
    }
    return -1;
}

bool GluedGraph::is_edge(const Edge& e) const {
    if (static_cast<int>(e.size()) != k) return false;
    // exactly one part doubled, the rest hit once
    std::vector<int> parts;
    int doubled = -1;
    int u = -1, v = -1;  // the intra-part pair
    for (size_t i = 0; i < e.size(); ++i) {
        int p = part_of(e[i]);
        if (!parts.empty() && parts.back() == p) {
            if (doubled >= 0) return false;  // a part hit three times or two doubles
            doubled = p;
            u = e[i - 1];
            v = e[i];
            continue;
        }
        parts.push_back(p);
    }
    if (doubled < 0) return false;
    auto it = block_lookup.find(parts);
    if (it == block_lookup.end()) return false;
    int b = it->second;
    if (phi[static_cast<size_t>(b)] != doubled) return false;
    if (sparsify(u, v) != b) return false;
    Edge local;
    for (int x : e) local.push_back(local_id(x, b));
    std::sort(local.begin(), local.end());
    return block_graphs[static_cast<size_t>(b)].is_edge(local);
}

long long GluedGraph::pair_degree(int u, int v) const {
    if (u == v) throw std::invalid_argument("pair_degree: identical vertices");
    int i = part_of(u), j = part_of(v);
    if (i == j) {
        int b = sparsify(u, v);
        const TwoOneGraph& H = block_graphs[static_cast<size_t>(b)];
        long long d = 1;
        for (int part = 1; part <= k - 2 && d > 0; ++part)
            d *= H.pair_count(offset_of(u), offset_of(v), part);
        return d;
    }
    if (i > j) { std::swap(u, v); std::swap(i, j); }
    auto it = pair_block.find({i, j});
    if (it == pair_block.end()) return 0;
    int b = it->second;
    const TwoOneGraph& H = block_graphs[static_cast<size_t>(b)];
    int p = phi[static_cast<size_t>(b)];
    if (p == i || p == j) {
        if (p == j) { std::swap(u, v); std::swap(i, j); }  // u is the apex-part vertex
        int lv = local_id(v, b);
        int s0 = lv / n;  // B part index of v
        int slot_v = lv % n;
        int ou = offset_of(u);
        long long d = 0;
        for (int w = 0; w < n; ++w) {
            if (w == ou) continue;
            if (sparsify(u, global_vertex(p, w)) != b) continue;
            if (!H.graph_of(s0, slot_v).has_edge(ou, w)) continue;
            long long prod = 1;
            for (int s = 1; s <= k - 2 && prod > 0; ++s)
                if (s != s0) prod *= H.pair_count(ou, w, s);
            d += prod;
        }
        return d;
    }
    // apex part elsewhere: both u, v sit in B parts
    int lu = local_id(u, b), lv = local_id(v, b);
    int su = lu / n, sv = lv / n;
    int slot_u = lu % n, slot_v = lv % n;
    long long d = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (!H.graph_of(su, slot_u).has_edge(x, y)) continue;
            if (!H.graph_of(sv, slot_v).has_edge(x, y)) continue;
            if (sparsify(global_vertex(p, x), global_vertex(p, y)) != b) continue;
            long long prod = 1;
            for (int s = 1; s <= k - 2 && prod > 0; ++s)
                if (s != su && s != sv) prod *= H.pair_count(x, y, s);
            d += prod;
        }
    return d;
}

std::set<int> GluedGraph::link_vertices_in_block(int v, int block) const {
    std::set<int> out;
    const auto& blk = design.blocks[static_cast<size_t>(block)];
    int p = phi[static_cast<size_t>(block)];
    int i = part_of(v);
    if (std::find(blk.begin(), blk.end(), i) == blk.end()) return out;
    const TwoOneGraph& H = block_graphs[static_cast<size_t>(block)];

    // global part id carried by local B part s (1..k-2)
    std::vector<int> part_id(static_cast<size_t>(k - 1), -1);
    {
        int s = 0;
        for (int part : blk)
            if (part != p) part_id[static_cast<size_t>(++s)] = part;
    }

    if (i == p) {
        int ov = offset_of(v);
        for (int w = 0; w < n; ++w) {
            if (w == ov) continue;
            if (sparsify(v, global_vertex(p, w)) != block) continue;
            std::vector<std::vector<int>> lists(static_cast<size_t>(k - 1));
            bool all = true;
            for (int s = 1; s <= k - 2 && all; ++s) {
                for (int slot = 0; slot < n; ++slot)
                    if (H.graph_of(s, slot).has_edge(ov, w)) lists[static_cast<size_t>(s)].push_back(slot);
                if (lists[static_cast<size_t>(s)].empty()) all = false;
            }
            if (!all) continue;
            out.insert(global_vertex(p, w));
            for (int s = 1; s <= k - 2; ++s)
                for (int slot : lists[static_cast<size_t>(s)])
                    out.insert(global_vertex(part_id[static_cast<size_t>(s)], slot));
        }
        return out;
    }

    int lv = local_id(v, block);
    int s0 = lv / n, slot_v = lv % n;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (!H.graph_of(s0, slot_v).has_edge(x, y)) continue;
            if (sparsify(global_vertex(p, x), global_vertex(p, y)) != block) continue;
            std::vector<std::vector<int>> lists(static_cast<size_t>(k - 1));
            bool all = true;
            for (int s = 1; s <= k - 2 && all; ++s) {
                if (s == s0) continue;
                for (int slot = 0; slot < n; ++slot)
                    if (H.graph_of(s, slot).has_edge(x, y)) lists[static_cast<size_t>(s)].push_back(slot);
                if (lists[static_cast<size_t>(s)].empty()) all = false;
            }
            if (!all) continue;
            out.insert(global_vertex(p, x));
            out.insert(global_vertex(p, y));
            for (int s = 1; s <= k - 2; ++s) {
                if (s == s0) continue;
                for (int slot : lists[static_cast<size_t>(s)])
                    out.insert(global_vertex(part_id[static_cast<size_t>(s)], slot));
            }
        }
    return out;
}

EdgeList GluedGraph::edges_within(const std::vector<int>& S) const {
    EdgeList out;
    for_each_subset_of(S, k, [&](const std::vector<int>& cand) {
        if (is_edge(cand)) out.push_back(cand);
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool packing_check(const GluedGraph& G, int v, int block_a, int block_b) {
    if (block_a == block_b)
        throw std::invalid_argument("packing_check: blocks must differ");
    auto la = G.link_vertices_in_block(v, block_a);
    auto lb = G.link_vertices_in_block(v, block_b);
    for (int x : la)
        if (lb.count(x)) return false;
    return true;
}

D1Report d1_report(const GluedGraph& G, int sample_pairs, std::uint64_t seed,
                   long long exact_vertex_cap) {
    D1Report rep;
    long long V = G.vertex_count();
    double eps = codegree_epsilon(G.k, G.r);
    double gamma = eps * eps / (32.0 * std::pow(G.design.N, G.k));
    rep.threshold = gamma * std::pow(static_cast<double>(V), G.k - 2);
    rep.exact = V <= exact_vertex_cap;

    std::vector<std::pair<int, int>> pairs;
    if (rep.exact) {
        for (int u = 0; u < V; ++u)
            for (int v = u + 1; v < V; ++v) pairs.emplace_back(u, v);
    } else {
        Rng rng(derive_seed(seed, "d1-report"));
        for (int t = 0; t < sample_pairs; ++t) {
            int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(V)));
            int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(V - 1)));
            if (v >= u) ++v;
            pairs.emplace_back(std::min(u, v), std::max(u, v));
        }
    }

    long long mn = -1;
    double total = 0;
    for (auto [u, v] : pairs) {
        int i = G.part_of(u), j = G.part_of(v);
        if (i == j) ++rep.same_part_pairs;
        else {
            auto it = G.pair_block.find({std::min(i, j), std::max(i, j)});
            int p = it == G.pair_block.end() ? -1 : G.phi[static_cast<size_t>(it->second)];
            if (p == i || p == j) ++rep.cross_apex_pairs;
            else ++rep.cross_far_pairs;
        }
        long long d = G.pair_degree(u, v);
        total += static_cast<double>(d);
        if (mn < 0 || d < mn) mn = d;
    }
    rep.pairs = static_cast<long long>(pairs.size());
    rep.min_degree = std::max(mn, 0LL);
    rep.mean_degree = pairs.empty() ? 0.0 : total / static_cast<double>(pairs.size());
    return rep;
}

D2Result d2_check(const GluedGraph& G, int m, int trials, std::uint64_t seed) {
    if (2 * m > G.r)
        throw std::invalid_argument("d2_check: require m <= r/2");
    D2Result res;
    Rng rng(derive_seed(seed, "d2-check"));
    long long V = G.vertex_count();
    int size = static_cast<int>(std::min<long long>(m, V));
    for (int t = 0; t < trials; ++t) {
        std::vector<int> S = rng.sample_distinct(static_cast<int>(V), size);
        // cluster-of-cyclic ordering: parts in index order, each part cyclic
        std::vector<int> by_rank;
        for (int part = 0; part < G.design.N; ++part) {
            std::vector<int> offsets;
            for (int v : S)
                if (G.part_of(v) == part) offsets.push_back(G.offset_of(v));
            if (offsets.empty()) continue;
            Ordering sigma_c = cyclic_ordering(offsets, G.n);
            for (int off : sigma_c.by_rank()) by_rank.push_back(G.global_vertex(part, off));
        }
        Ordering sigma = Ordering::from_rank_sequence(std::move(by_rank));
        EdgeList edges = G.edges_within(S);
        auto check = check_vanishing(edges, G.k, sigma, 2);
        ++res.trials;
        if (!check.vanishing) {
            ++res.failures;
            res.certificates.push_back(*check.conflict);
        }
    }
    return res;
}

}  // namespace vanish
