#include <doctest.h>

#include <algorithm>
#include <set>

#include "vanish/design.hpp"
#include "vanish/rng.hpp"

using namespace vanish;

TEST_CASE("steiner triple systems") {
    Design fano = steiner_triple_system(7);
    CHECK(fano.blocks.size() == 7);
    CHECK(fano.blocks_per_vertex() == 3);
    for (int v = 0; v < 7; ++v) {
        int count = 0;
        for (const auto& b : fano.blocks)
            if (std::find(b.begin(), b.end(), v) != b.end()) ++count;
        CHECK(count == 3);
    }

    CHECK(steiner_triple_system(9).blocks.size() == 12);
    CHECK(steiner_triple_system(13).blocks.size() == 26);
    CHECK(steiner_triple_system(15).blocks.size() == 35);
    CHECK(steiner_triple_system(19).blocks.size() == 57);

    CHECK_THROWS(steiner_triple_system(6));
    CHECK_THROWS(steiner_triple_system(11));
    CHECK_THROWS(steiner_triple_system(3));
}

TEST_CASE("design validation rejects bad inputs") {
    // duplicated pair coverage
    CHECK_THROWS(make_design(4, 2, {{0, 1}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    // missing pair
    CHECK_THROWS(make_design(4, 2, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    // out-of-range vertex
    CHECK_THROWS(make_design(3, 2, {{0, 1}, {0, 3}, {1, 2}}));
    CHECK_NOTHROW(complete_design(5).validate());
}

TEST_CASE("hall surjection") {
    Design fano = steiner_triple_system(7);
    std::vector<int> phi = hall_surjection(fano);
    REQUIRE(phi.size() == 7);
    std::set<int> image;
    for (size_t b = 0; b < phi.size(); ++b) {
        const auto& blk = fano.blocks[b];
        CHECK(std::find(blk.begin(), blk.end(), phi[b]) != blk.end());
        image.insert(phi[b]);
    }
    CHECK(image.size() == 7);  // surjective onto [7]

    Design k4 = complete_design(4);
    std::vector<int> phi4 = hall_surjection(k4);
    std::set<int> im4(phi4.begin(), phi4.end());
    CHECK(im4.size() == 4);

    // a vertex in no block is infeasible; make_design would reject such inputs,
    // so feed hall_surjection a raw struct
    Design bad;
    bad.N = 3;
    bad.block_size = 2;
    bad.blocks = {{0, 1}};
    CHECK_THROWS(hall_surjection(bad));
}

TEST_CASE("glue validation") {
    Design fano = steiner_triple_system(7);
    std::vector<int> phi = hall_surjection(fano);
    CHECK_THROWS(glue(fano, phi, 9, 4, 5, 1));  // block size != k-1

    // phi(J) outside J
    std::vector<int> bad = phi;
    bad[0] = (bad[0] + 1) % 7;
    bool ok = std::find(fano.blocks[0].begin(), fano.blocks[0].end(), bad[0]) !=
              fano.blocks[0].end();
    if (!ok) CHECK_THROWS(glue(fano, bad, 9, 4, 4, 1));

    // non-surjective phi: map every block to its min (7 blocks, image size < 7
    // for the Fano labeling used here would trip the E_i emptiness check); only
    // assert when the image really misses a vertex
    std::vector<int> mins;
    for (const auto& b : fano.blocks) mins.push_back(b[0]);
    std::set<int> image(mins.begin(), mins.end());
    if (image.size() < 7) CHECK_THROWS(glue(fano, mins, 9, 4, 4, 1));
}

TEST_CASE("glued graph membership and ownership") {
    Design fano = steiner_triple_system(7);
    std::vector<int> phi = hall_surjection(fano);
    GluedGraph G = glue(fano, phi, 9, 4, 4, 2024);
    CHECK(G.vertex_count() == 63);

    // every cross-part pair of parts appears in exactly one block
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) CHECK(G.pair_block.count({i, j}) == 1);

    // edges have the right part profile and belong to the sparsify-owner block
    Rng rng(5);
    long long found = 0;
    for (int t = 0; t < 20000 && found < 50; ++t) {
        std::vector<int> cand = rng.sample_distinct(63, 4);
        if (!G.is_edge(cand)) continue;
        ++found;
        std::vector<int> parts;
        int doubled = -1;
        for (int x : cand) {
            int p = G.part_of(x);
            if (!parts.empty() && parts.back() == p) doubled = p;
            else parts.push_back(p);
        }
        REQUIRE(doubled >= 0);
        // recover the intra-part pair
        std::vector<int> in_part;
        for (int x : cand)
            if (G.part_of(x) == doubled) in_part.push_back(x);
        REQUIRE(in_part.size() == 2);
        int b = G.block_index_of_parts(parts);
        REQUIRE(b >= 0);
        CHECK(G.phi[static_cast<size_t>(b)] == doubled);
        CHECK(G.sparsify(in_part[0], in_part[1]) == b);
    }
    CHECK(found > 0);

    // pair_degree agrees with a brute-force edge scan over completing pairs
    auto brute = [&](int u, int v) {
        long long d = 0;
        int V = static_cast<int>(G.vertex_count());
        for (int x = 0; x < V; ++x) {
            if (x == u || x == v) continue;
            for (int y = x + 1; y < V; ++y) {
                if (y == u || y == v) continue;
                Edge e{u, v, x, y};
                std::sort(e.begin(), e.end());
                if (G.is_edge(e)) ++d;
            }
        }
        return d;
    };
    // one pair per proof case
    CHECK(G.pair_degree(0, 1) == brute(0, 1));  // same part
    // cross pair with apex in the pair and one without: find representatives
    int apex_u = -1, apex_v = -1, far_u = -1, far_v = -1;
    for (int i = 0; i < 7 && (apex_u < 0 || far_u < 0); ++i)
        for (int j = i + 1; j < 7; ++j) {
            int b = G.pair_block.at({i, j});
            int p = G.phi[static_cast<size_t>(b)];
            if ((p == i || p == j) && apex_u < 0) {
                apex_u = G.global_vertex(i, 2);
                apex_v = G.global_vertex(j, 5);
            } else if (p != i && p != j && far_u < 0) {
                far_u = G.global_vertex(i, 1);
                far_v = G.global_vertex(j, 7);
            }
        }
    REQUIRE(apex_u >= 0);
    REQUIRE(far_u >= 0);
    CHECK(G.pair_degree(apex_u, apex_v) == brute(apex_u, apex_v));
    CHECK(G.pair_degree(far_u, far_v) == brute(far_u, far_v));
}

TEST_CASE("packing: links in distinct blocks are vertex-disjoint") {
    Design fano = steiner_triple_system(7);
    std::vector<int> phi = hall_surjection(fano);
    GluedGraph G = glue(fano, phi, 9, 4, 4, 99);
    Rng rng(321);
    for (int t = 0; t < 200; ++t) {
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(G.vertex_count())));
        int a = static_cast<int>(rng.below(7));
        int b = static_cast<int>(rng.below(6));
        if (b >= a) ++b;
        CHECK(packing_check(G, v, a, b));
    }
    CHECK_THROWS(packing_check(G, 0, 2, 2));
}

TEST_CASE("d1 report on a small exact instance") {
    Design fano = steiner_triple_system(7);
    std::vector<int> phi = hall_surjection(fano);
    GluedGraph G = glue(fano, phi, 9, 4, 4, 7);
    D1Report rep = d1_report(G, 0, 0);
    CHECK(rep.exact);
    CHECK(rep.pairs == binomial(63, 2));
    CHECK(rep.same_part_pairs == 7 * binomial(9, 2));
    CHECK(rep.same_part_pairs + rep.cross_apex_pairs + rep.cross_far_pairs == rep.pairs);
    CHECK(rep.min_degree >= 0);
    CHECK(rep.mean_degree >= static_cast<double>(rep.min_degree));
    CHECK(rep.threshold > 0.0);
}

TEST_CASE("d2 check") {
    Design fano = steiner_triple_system(7);
    std::vector<int> phi = hall_surjection(fano);
    GluedGraph G = glue(fano, phi, 41, 20, 4, 13);
    CHECK_THROWS(d2_check(G, 11, 1, 0));  // m > r/2

    D2Result vac = d2_check(G, 2, 10, 1);  // 2 vertices: no edges, vacuous pass
    CHECK(vac.pass());

    D2Result res = d2_check(G, 8, 25, 42);
    CHECK(res.trials == 25);
    CHECK(res.pass());
}
