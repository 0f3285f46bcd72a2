#include <doctest.h>

#include <algorithm>

#include "vanish/ordering.hpp"
#include "vanish/rng.hpp"

using namespace vanish;

TEST_CASE("construction and ranks") {
    Ordering s = Ordering::from_rank_sequence({5, 2, 9});
    CHECK(s.size() == 3);
    CHECK(s.rank(5) == 1);
    CHECK(s.rank(2) == 2);
    CHECK(s.rank(9) == 3);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(7));
    CHECK_THROWS(s.rank(7));
    CHECK_THROWS(Ordering::from_rank_sequence({1, 1}));
}

TEST_CASE("inversions") {
    CHECK(inversions(Ordering::increasing({3, 8, 11})) == 0);
    // ordering (2,1,3): rank(2)=1, rank(1)=2, rank(3)=3
    CHECK(inversions(Ordering::from_rank_sequence({2, 1, 3})) == 1);
    // full reversal of an s-set
    for (int s = 1; s <= 6; ++s) {
        std::vector<int> rev;
        for (int i = s; i >= 1; --i) rev.push_back(i);
        CHECK(inversions(Ordering::from_rank_sequence(rev)) == s * (s - 1) / 2);
    }
}

TEST_CASE("restriction keeps relative order") {
    Ordering s = Ordering::from_rank_sequence({4, 1, 3, 0, 2});
    Ordering r = s.restrict({0, 1, 2});
    CHECK(r.by_rank() == std::vector<Vertex>{1, 0, 2});
    CHECK(r.rank(1) == 1);
    CHECK(r.rank(0) == 2);
    CHECK(r.rank(2) == 3);
}

TEST_CASE("restriction coherence through a chain") {
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> base = rng.sample_distinct(30, 10);
        std::vector<int> perm = base;
        rng.shuffle(perm);
        Ordering sigma = Ordering::from_rank_sequence(perm);

        std::vector<int> U, T;
        for (int v : base)
            if (rng.below(2)) U.push_back(v);
        for (int v : U)
            if (rng.below(2)) T.push_back(v);
        Ordering direct = sigma.restrict(T);
        Ordering chained = sigma.restrict(U).restrict(T);
        CHECK(direct == chained);
    }
}

TEST_CASE("sum shifts the second block") {
    Ordering a = Ordering::from_rank_sequence({3, 1});
    Ordering b = Ordering::from_rank_sequence({7, 5, 6});
    Ordering s = sum(a, b);
    CHECK(s.by_rank() == std::vector<Vertex>{3, 1, 7, 5, 6});
    CHECK(s.rank(7) == 3);
    CHECK_THROWS(sum(a, Ordering::from_rank_sequence({1})));  // overlap
}

TEST_CASE("sum of many parts matches inductive pairing") {
    Ordering a = Ordering::from_rank_sequence({2, 0});
    Ordering b = Ordering::from_rank_sequence({5});
    Ordering c = Ordering::from_rank_sequence({9, 7, 8});
    Ordering all = sum({a, b, c});
    Ordering inductive = sum(sum(a, b), c);
    CHECK(all == inductive);
    CHECK(sum(std::vector<Ordering>{a}) == a);
}
