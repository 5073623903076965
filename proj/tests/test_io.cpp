#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubicc/io.hpp"

using namespace cubicc;

TEST_CASE("int list text form") {
    CHECK(parse_int_list("9,-1,2,1,-4,4,3,1,-2") ==
          std::vector<int>{9, -1, 2, 1, -4, 4, 3, 1, -2});
    CHECK(parse_int_list("").empty());
    CHECK(format_int_list({9, 0, 2}) == "9,0,2");
    CHECK(format_int_list({}) == "");
    CHECK_THROWS_AS(parse_int_list("1,x"), std::invalid_argument);

    // roundtrip over every coordinate of CC_4
    for (const Cubic& c : enumerate_cc(4).elements)
        CHECK(parse_int_list(format_int_list(c.c)) == c.c);
}

TEST_CASE("tid json") {
    const Tid t = make_tid({1, 0}, {0, 0});
    const json j = tid_to_json(t);
    CHECK(j["n"] == 2);
    CHECK(tid_from_json(j) == t);
    CHECK_THROWS_AS(tid_from_json(json{{"n", 3}, {"u", {1, 0}}, {"v", {0, 0}}}),
                    std::invalid_argument);
}

TEST_CASE("cubic json") {
    const Cubic c{{9, -1, 2, 1, -4, 4, 3, 1, -2}};
    const json j = cubic_to_json(c);
    CHECK(j["n"] == 10);
    CHECK(cubic_from_json(j) == c);
}

TEST_CASE("poset json keeps strict closed pairs") {
    const json j = json::parse(R"({"n": 3, "relations": [[2,1],[3,1]]})");
    const IntervalPoset p = poset_from_json(j);
    CHECK(p.less(2, 1));
    CHECK(p.less(3, 1));
    CHECK_FALSE(p.less(1, 1));
    CHECK(poset_to_json(p) == j);
    CHECK_THROWS_AS(poset_from_json(json::parse(R"({"n": 2, "relations": [[3,1]]})")),
                    std::invalid_argument);
}

TEST_CASE("tree json roundtrip over all shapes") {
    for (int n = 1; n <= 5; ++n) {
        for (const BinaryTree& t : all_trees(n)) {
            CHECK(tree_from_json(tree_to_json(t)) == t);
        }
    }
    const json leaf = tree_to_json(left_comb(1));
    CHECK(leaf["l"].is_null());
    CHECK(leaf["r"].is_null());
}

TEST_CASE("interval json") {
    const TamariInterval iv{left_comb(3), right_comb(3)};
    CHECK(interval_from_json(interval_to_json(iv)) == iv);
}

TEST_CASE("cell json") {
    const Cell cell = make_cell(Cubic{{0}});
    const json j = cell_to_json(cell);
    CHECK(j["cmin"] == json::array({0}));
    CHECK(j["cmax"] == json::array({1}));
    CHECK(j["gamma"] == json::array({1}));
}

TEST_CASE("realization document") {
    const RealizationDocument doc = build_realization(enumerate_cc(3));
    CHECK(doc.vertices.size() == 13);
    CHECK(doc.edges.size() == 18);
    int synchronized = 0, minimal = 0;
    for (const auto& v : doc.vertices) {
        if (v.synchronized) ++synchronized;
        if (v.minimal_cellular) ++minimal;
    }
    CHECK(synchronized == 6);
    CHECK(minimal == 6);

    const json j = realization_to_json(doc);
    CHECK(j["vertices"].size() == 13);
    CHECK(j["edges"].size() == 18);

    // deterministic output
    CHECK(realization_to_json(build_realization(enumerate_cc(3))) == j);
}

TEST_CASE("dot and csv exports") {
    const RealizationDocument doc = build_realization(enumerate_cc(2));
    const std::string dot = realization_to_dot(doc);
    CHECK(dot.find("digraph cc2") != std::string::npos);
    CHECK(dot.find("rank=same") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);

    const auto [vertices, edges] = realization_to_csv(doc);
    CHECK(vertices == "id,c1,synchronized,new,minimal_cellular\n"
                      "0,-1,1,0,1\n"
                      "1,0,0,1,1\n"
                      "2,1,1,0,0\n");
    CHECK(edges == "lower,upper\n0,1\n1,2\n");
}

TEST_CASE("hasse json") {
    const json j = hasse_to_json(enumerate_cc(2));
    CHECK(j["n"] == 2);
    CHECK(j["nodes"].size() == 3);
    CHECK(j["edges"] == json::array({json::array({0, 1}), json::array({1, 2})}));
}
