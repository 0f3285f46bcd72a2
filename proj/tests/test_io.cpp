#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "vanish/io.hpp"

using namespace vanish;

TEST_CASE("hypergraph json round trip") {
    Hypergraph H = tight_cycle(6, 3);
    json j = hypergraph_to_json(H);
    CHECK(j["k"] == 3);
    CHECK(j["n"] == 6);
    CHECK(j["edges"].size() == 6);
    Hypergraph back = hypergraph_from_json(j);
    CHECK(back.edges() == H.edges());

    // labels survive
    Hypergraph L = link(complete(4, 3), {0});
    Hypergraph back2 = hypergraph_from_json(hypergraph_to_json(L));
    CHECK(back2.label(0) == "1");
}

TEST_CASE("json reader rejects malformed input") {
    CHECK_THROWS(hypergraph_from_json(json::parse(R"({"k":3,"n":4})")));
    CHECK_THROWS(hypergraph_from_json(
        json::parse(R"({"k":3,"n":4,"edges":[[0,1,2],[2,1,0]]})")));  // dup
    CHECK_THROWS(hypergraph_from_json(
        json::parse(R"({"k":3,"n":4,"edges":[[0,1,5]]})")));  // out of range
    CHECK_THROWS(hypergraph_from_json(
        json::parse(R"({"k":3,"n":4,"edges":[[0,1]]})")));  // arity
}

TEST_CASE("hypergraph text round trip") {
    Hypergraph H = complete(4, 3);
    std::string text = hypergraph_to_text(H);
    std::istringstream in(text);
    Hypergraph back = hypergraph_from_text(in);
    CHECK(back.uniformity() == 3);
    CHECK(back.vertex_count() == 4);
    CHECK(back.edges() == H.edges());

    std::istringstream bad("3 4\n0 1 2\n0 2 1\n");
    CHECK_THROWS(hypergraph_from_text(bad));

    std::istringstream empty("");
    CHECK_THROWS(hypergraph_from_text(empty));
}

TEST_CASE("ordering and conflict serialization") {
    Ordering sigma = Ordering::from_rank_sequence({3, 0, 2});
    json j = ordering_to_json(sigma);
    CHECK(j == json::parse("[3,0,2]"));
    CHECK(ordering_from_json(j) == sigma);

    Conflict c;
    c.S = {0, 1};
    c.e = {0, 1, 2};
    c.e2 = {1, 2, 3};
    c.positions = {2, 3};
    c.positions2 = {1, 2};
    json cj = conflict_to_json(c);
    CHECK(cj["S"] == json::parse("[0,1]"));
    CHECK(cj["positions"] == json::parse("[2,3]"));
}

TEST_CASE("design round trip validates") {
    Design fano = steiner_triple_system(7);
    json j = design_to_json(fano);
    Design back = design_from_json(j);
    CHECK(back.blocks == fano.blocks);

    json broken = j;
    broken["blocks"][0][0] = broken["blocks"][0][1];  // duplicate vertex in block
    CHECK_THROWS(design_from_json(broken));
}

TEST_CASE("geo graph round trip") {
    GeoGraph g = GeoGraph::generate(9, 2, 12);
    GeoGraph back = geograph_from_json(geograph_to_json(g));
    CHECK(back.n == g.n);
    CHECK(back.q == g.q);
    CHECK(back.X == g.X);
    CHECK(back.edge_count() == g.edge_count());
}

TEST_CASE("file helpers") {
    std::string path = "io_test_tmp.json";
    Hypergraph H = tight_cycle(5, 3);
    save_json_file(path, hypergraph_to_json(H));
    Hypergraph back = load_hypergraph_file(path);
    CHECK(back.edges() == H.edges());

    std::string tpath = "io_test_tmp.txt";
    {
        std::ofstream out(tpath);
        out << hypergraph_to_text(H);
    }
    Hypergraph back2 = load_hypergraph_file(tpath);
    CHECK(back2.edges() == H.edges());

    CHECK_THROWS(load_hypergraph_file("does_not_exist.json"));
    std::remove(path.c_str());
    std::remove(tpath.c_str());
}
