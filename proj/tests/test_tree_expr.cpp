#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <random>

#include "cox/coxeter.hpp"
#include "cox/tree_expr.hpp"

using namespace cox;

namespace {

TreeExpr random_expr(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 3 : 2);
    std::uniform_int_distribution<int> small(1, 9);
    switch (kind(rng)) {
    case 0: {
        const char fams[] = {'A', 'D', 'E'};
        std::uniform_int_distribution<int> f(0, 2);
        return TreeExpr{DiagramNode{fams[f(rng)], false, small(rng)}};
    }
    case 1: {
        std::uniform_int_distribution<int> f(0, 1);
        return TreeExpr{DiagramNode{f(rng) ? 'D' : 'E', true, small(rng)}};
    }
    case 2: {
        SalemSpec s;
        std::uniform_int_distribution<int> k(1, 4);
        int arms = k(rng);
        std::uniform_int_distribution<int> iial(0, arms);
        s.i = iial(rng);
        for (int j = 0; j < arms; ++j)
            s.arms.push_back(small(rng));
        return TreeExpr{SalemNode{std::move(s)}};
    }
    default: {
        JoinNode j;
        std::uniform_int_distribution<int> k(1, 3);
        int parts = k(rng);
        for (int c = 0; c < parts; ++c)
            j.parts.emplace_back(random_expr(rng, depth - 1), small(rng));
        return TreeExpr{std::move(j)};
    }
    }
}

} // namespace

TEST_CASE("parse atoms") {
    TreeExpr e = parse_tree_expr("S(0;1,2,6)");
    const auto* s = std::get_if<SalemNode>(&e.node);
    REQUIRE(s != nullptr);
    CHECK(s->spec.i == 0);
    CHECK(s->spec.arms == std::vector<int>{1, 2, 6});

    CHECK(parse_tree_expr("E10") == TreeExpr{DiagramNode{'E', false, 10}});
    CHECK(parse_tree_expr(" ~D 4 ") == TreeExpr{DiagramNode{'D', true, 4}});
    CHECK(parse_tree_expr("A3") == TreeExpr{DiagramNode{'A', false, 3}});
    CHECK(parse_tree_expr("file(graphs/t.edges)") == TreeExpr{FileNode{"graphs/t.edges"}});
}

TEST_CASE("parse joins") {
    TreeExpr e = parse_tree_expr("join(A3@1, A3@1, A1@1)");
    const auto* j = std::get_if<JoinNode>(&e.node);
    REQUIRE(j != nullptr);
    REQUIRE(j->parts.size() == 3);
    CHECK(j->parts[0].first == TreeExpr{DiagramNode{'A', false, 3}});
    CHECK(j->parts[0].second == 1);
    CHECK(j->parts[2].first == TreeExpr{DiagramNode{'A', false, 1}});

    // nested joins
    CHECK_NOTHROW(parse_tree_expr("join(join(A2@1,A2@1)@1, ~E6@3)"));
}

TEST_CASE("syntax errors carry a position") {
    try {
        parse_tree_expr("S(0; 1 2)");
        FAIL("expected a syntax error");
    } catch (const syntax_error& e) {
        CHECK(e.position == 7); // at the '2' where ',' or ')' was expected
        CHECK(std::string(e.what()).find("position 7") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_tree_expr(""), syntax_error);
    CHECK_THROWS_AS(parse_tree_expr("Q7"), syntax_error);
    CHECK_THROWS_AS(parse_tree_expr("A"), syntax_error);
    CHECK_THROWS_AS(parse_tree_expr("join(A3@1"), syntax_error);
    CHECK_THROWS_AS(parse_tree_expr("S(1;3,) "), syntax_error);
    CHECK_THROWS_AS(parse_tree_expr("A3 A4"), syntax_error);
    CHECK_THROWS_AS(parse_tree_expr("file()"), syntax_error);
    CHECK_THROWS_AS(parse_tree_expr("~A3"), syntax_error);
}

TEST_CASE("print/parse round trip") {
    CHECK(print_tree_expr(parse_tree_expr("join(A3@1, A3@1, A1@1)")) ==
          "join(A3@1,A3@1,A1@1)");
    std::mt19937_64 rng(61);
    for (int c = 0; c < 300; ++c) {
        TreeExpr e = random_expr(rng, 2);
        std::string printed = print_tree_expr(e);
        TreeExpr back = parse_tree_expr(printed);
        CHECK(back == e);
        CHECK(print_tree_expr(back) == printed);
    }
}

TEST_CASE("elaboration") {
    CHECK(elaborate(parse_tree_expr("E10")) == dynkin_E(10));
    CHECK(elaborate(parse_tree_expr("S(0;1,2,6)")) == salem_tree(SalemSpec{0, {1, 2, 6}}));
    CHECK(elaborate(parse_tree_expr("~D5")) == euclidean_D(5));
    // join(A1@1,A1@1,A1@1) is the 4-star with the center first
    Tree star = elaborate(parse_tree_expr("join(A1@1,A1@1,A1@1)"));
    CHECK(star == salem_tree(SalemSpec{0, {1, 1, 1}}));
    // range errors surface at elaboration
    CHECK_THROWS_AS(elaborate(parse_tree_expr("D3")), parameter_out_of_range);
    CHECK_THROWS_AS(elaborate(parse_tree_expr("S(1;2,1)")), invalid_spec);
}

TEST_CASE("parser survives arbitrary input") {
    std::mt19937_64 rng(99);
    const std::string alphabet = "ADES~()@,;123 joinfile";
    std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 24);
    for (int c = 0; c < 2000; ++c) {
        std::string s;
        int n = len(rng);
        for (int k = 0; k < n; ++k)
            s += alphabet[pick(rng)];
        try {
            TreeExpr e = parse_tree_expr(s);
            // whatever parses must round-trip
            CHECK(parse_tree_expr(print_tree_expr(e)) == e);
        } catch (const syntax_error&) {
            // fine: malformed input is rejected with a position
        }
    }
}

TEST_CASE("file atoms elaborate through the edge-list reader") {
    std::string file = "cox_expr_test.edges";
    {
        std::ofstream f(file);
        f << "1 2\n2 3\n";
    }
    Tree t = elaborate(parse_tree_expr("file(" + file + ")"));
    CHECK(t == path(3));
    // usable inside joins as well
    Tree j = elaborate(parse_tree_expr("join(file(" + file + ")@2, A1@1)"));
    CHECK(j.vertex_count() == 5);
    std::remove(file.c_str());
}
