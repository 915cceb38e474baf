#include "grk/errors.hpp"
#include "grk/io.hpp"
#include "grk/random.hpp"

#include <doctest.h>

using namespace grk;

namespace {

PosetPtr share(FinitePoset P) { return std::make_shared<const FinitePoset>(std::move(P)); }

}  // namespace

TEST_CASE("modules round trip") {
    Rng rng(71);
    for (std::uint32_t p : {2u, 3u, 65521u}) {
        auto G = share(grid_poset(3, 2, {-1, 4}));
        PModule m = random_fp_module(rng, G, 3, 2, p);
        CHECK(parse_module(write_module(m)) == m);
        auto R = share(random_poset(rng, 6, 0.4));
        PModule r = random_fp_module(rng, R, 3, 2, p);
        PModule back = parse_module(write_module(r));
        CHECK(back == r);
        CHECK(write_module(back) == write_module(r));
    }
}

TEST_CASE("module text details") {
    const char* text = R"(# a chain with a twist
grid 3 1 0 0
dims 0 1
dims 1 2   # trailing comment
dims 2 1
map 0 1
2 1
1
-1
map 1 2
1 2
1 1
)";
    PModule m = parse_module(text, 3);
    CHECK(m.field() == 3);
    CHECK(m.edge_map(0, 1)(1, 0) == 2);
    CHECK(m.hom(0, 2)(0, 0) == 0);
    PModule m5 = parse_module(std::string(text) + "field 5\n");
    CHECK(m5.field() == 5);
    CHECK(m5.edge_map(0, 1)(1, 0) == 4);
    // Missing maps are zero.
    PModule z = parse_module("poset 2\ncover 0 1\ndims 0 1\ndims 1 1\n");
    CHECK(z.edge_map(0, 1).is_zero());
}

TEST_CASE("module parse errors") {
    CHECK_THROWS_AS(parse_module(""), InputError);
    CHECK_THROWS_AS(parse_module("grid 2 1 0 0\nfield 4\n"), InputError);
    CHECK_THROWS_AS(parse_module("grid 2 1 0 0\ndims 0 1\nmap 0 1\n1 1\n1\n"), InputError);
    CHECK_THROWS_AS(parse_module("grid 2 1 0 0\ndims 0 1\ndims 1 1\nmap 1 0\n1 1\n1\n"), InputError);
    CHECK_THROWS_AS(parse_module("grid 2 1 0 0\ndims 0 x\n"), InputError);
    CHECK_THROWS_AS(parse_module("grid 2 1 0 0\nfrobnicate\n"), InputError);
    CHECK_THROWS_AS(parse_module("grid 2 2 0 0\ndims 0 1\ndims 1 1\ndims 2 1\ndims 3 1\n"
                                 "map 0 1\n1 1\n1\nmap 0 2\n1 1\n1\nmap 1 3\n1 1\n1\n"),
                    InputError);  // not functorial: the (2,3) map is zero
    CHECK_THROWS_AS(parse_module("poset 2\ncover 0 1\ncover 1 0\n"), InputError);
    CHECK_THROWS_AS(read_module_file("/nonexistent/module.txt"), InputError);
}

TEST_CASE("posets and paths round trip") {
    FinitePoset P = parse_poset("poset 4\ncover 0 1\ncover 0 2\ncover 1 3\ncover 2 3\n");
    CHECK(P.size() == 4);
    CHECK(P.leq(0, 3));
    CHECK(parse_poset("grid 2 3 1 1").grid()->origin == Point{1, 1});
    CHECK_THROWS_AS(parse_poset("grid 2 3 1 1 extra"), InputError);
    std::vector<Point> path{{0, 0}, {1, 0}, {1, -1}};
    CHECK(parse_path(write_path(path)) == path);
    CHECK_THROWS_AS(parse_path("path 2\n0 0\n"), InputError);
    CHECK_THROWS_AS(parse_path("line 1 0 0"), InputError);
}

TEST_CASE("tables and collections") {
    auto G = share(grid_poset(2, 2));
    Rng rng(72);
    PModule m = random_fp_module(rng, G, 3, 1, 2);
    GriTable t = gri(m, make_collection(*G, "int"));
    GriTable back = parse_gri_tsv(gri_tsv(t), G);
    CHECK(back.same_values(t));

    auto coll = parse_collection("0,1\n# comment\n\n3 1\n0\n", *G);
    REQUIRE(coll.size() == 3);
    CHECK(coll[0].members == std::vector<int>{0});
    CHECK(coll[2].members == std::vector<int>{1, 3});
    CHECK_THROWS_AS(parse_collection("1,2\n", *G), InputError);
    CHECK_THROWS_AS(parse_collection("0,9\n", *G), InputError);
    CHECK_THROWS_AS(parse_gri_tsv("0 1\n", G), InputError);
}

TEST_CASE("structured output") {
    auto G = share(grid_poset(2, 2));
    PModule k = interval_module(G, {1, 2, 3}, 2);
    GriTable t = gri(k, make_collection(*G, "int"), 1, "k.mod");
    auto j = gri_json(t);
    CHECK(j["kind"] == "gri");
    CHECK(j["module"] == "k.mod");
    CHECK(j["entries"].size() == t.collection.size());
    SignedDiagram d = gpd(t);
    auto dj = diagram_json(d);
    REQUIRE(dj["entries"].size() == 1);
    CHECK(dj["entries"][0]["members"] == std::vector<int>{1, 2, 3});
    CHECK(dj["entries"][0]["multiplicity"] == 1);
    CHECK(diagram_tsv(d) == "1,2,3\t1\n");
    std::string dot = diagram_dot(d, t.collection);
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("color=blue") != std::string::npos);

    ZigzagPath z = make_path({{0, 1}, {1, 1}, {1, 0}});
    Barcode b = zigzag_barcode(k, z);
    CHECK(barcode_tsv(b) == "0\t2\t1\n");
    CHECK(path_json(z)["points"].size() == 3);
    CHECK(barcode_json(b)[0]["end"] == 2);
}
