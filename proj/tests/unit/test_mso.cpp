#include "oracles.hpp"
#include "support.hpp"

#include "succmso/mso.hpp"

#include <doctest.h>

#include <random>

using namespace succmso;
using namespace succmso::mso;

TEST_CASE("parsing the standard example sentences") {
    CHECK(same(parse("ex x. E(x,x)"), exists("x", edge("x", "x"))));
    CHECK(same(parse("ex x. E(x,x)"), sentences::loop()));
    const auto det = parse("all x. all y. all z. ((E(x,y) & E(x,z)) -> y=z)");
    CHECK(same(det, sentences::determinism()));
    CHECK(det->op == Op::kForallPoint);
    CHECK_CODE(parse("E(x,x)"), ErrorCode::kScopeError);
}

TEST_CASE("printing round trips") {
    for (const auto& [name, f] : sentences::battery()) {
        CAPTURE(name);
        CHECK(same(parse(print(f)), f));
    }
    for (const auto& f : {sentences::loop(), sentences::determinism(), sentences::nontrivial_cycle(), sentences::clique(),
                          sentences::clique_irreflexive(), sentences::loop_unique()})
        CHECK(same(parse(print(f)), f));
    const auto r = forall("a", forall("b", reach("a", "b")));
    CHECK(same(parse(print(r)), r));
}

TEST_CASE("syntax and scope errors") {
    CHECK_CODE(parse("ex x E(x,x)"), ErrorCode::kParseError);
    CHECK_CODE(parse("(ex x. E(x,x)"), ErrorCode::kParseError);
    CHECK_CODE(parse("ex x. E(x,x) junk"), ErrorCode::kParseError);
    CHECK_CODE(parse("ex x. (E(x,x) ^ E(x,x))"), ErrorCode::kParseError);
    CHECK_CODE(parse(""), ErrorCode::kParseError);
    CHECK_CODE(parse("ex x. ex x. E(x,x)"), ErrorCode::kScopeError);
    CHECK_CODE(parse("ex X. E(X,X)"), ErrorCode::kParseError);
    CHECK_CODE(parse("ex x. ex y. x in y"), ErrorCode::kParseError);
    CHECK_CODE(parse("ex x. x in X"), ErrorCode::kScopeError);
    CHECK_NOTHROW(parse("(ex x. E(x,x) & ex x. ~E(x,x))"));
    CHECK_NOTHROW(parse("((ex x. E(x,x)))"));
    CHECK(free_variables(parse_open("(E(x,y) & z in Z)", {"x", "y", "z", "Z"})) ==
          std::set<std::string>{"Z", "x", "y", "z"});
}

TEST_CASE("quantifier rank") {
    CHECK(rank(sentences::loop()) == 1);
    CHECK(rank(sentences::determinism()) == 3);
    CHECK(rank(sentences::nontrivial_cycle()) == 4);
    for (const auto& [name, f] : sentences::battery()) {
        CHECK(rank(negate(f)) == rank(f));
        CHECK(rank(f) <= 3);
    }
}

TEST_CASE("evaluation examples") {
    const std::vector<Edge> loop{{0, 0}};
    CHECK(eval(Digraph(1, loop), sentences::loop()));
    CHECK_FALSE(eval(testing::path(2), sentences::loop()));

    CHECK(eval(testing::cycle(3), sentences::nontrivial_cycle()));
    CHECK_FALSE(eval(testing::path(3), sentences::nontrivial_cycle()));

    const std::vector<Edge> fork{{0, 1}, {0, 2}};
    CHECK_FALSE(eval(Digraph(3, fork), sentences::determinism()));
}

TEST_CASE("reachability macro") {
    const auto f = reach("x", "y");
    const auto p3 = testing::path(3);
    CHECK(eval(p3, f, Valuation{{{"x", 0}, {"y", 2}}, {}}));
    CHECK_FALSE(eval(p3, f, Valuation{{{"x", 2}, {"y", 0}}, {}}));
    const auto refl = forall("x", reach("x", "x"));
    std::mt19937 rng(8);
    for (int i = 0; i < 20; ++i) CHECK(eval(testing::random_digraph(rng, 1 + rng() % 5, 0.3), refl));
}

TEST_CASE("evaluation guards") {
    CHECK_CODE(eval(Digraph(25), sentences::nontrivial_cycle()), ErrorCode::kTooLargeForBruteForce);
    CHECK_FALSE(eval(Digraph(40), sentences::loop()));
    CHECK_CODE(eval(Digraph(2), parse_open("E(x,x)", {"x"})), ErrorCode::kScopeError);
    CHECK_CODE(eval(Digraph(2), parse_open("E(x,x)", {"x"}), Valuation{{{"x", 2}}, {}}), ErrorCode::kBadVertex);
    CHECK(eval(Digraph(24), parse("ex X. all x. x in X")));
}

TEST_CASE("evaluation agrees with direct algorithms on every digraph up to 3 vertices") {
    const auto reach_all = forall("a", forall("b", reach("a", "b")));
    for (std::size_t n = 0; n <= 3; ++n) {
        for (const auto& g : all_digraphs(n)) {
            REQUIRE(eval(g, sentences::loop()) == oracle::has_loop(g));
            REQUIRE(eval(g, sentences::determinism()) == oracle::out_degree_at_most_one(g));
            REQUIRE(eval(g, sentences::nontrivial_cycle()) == oracle::has_long_cycle(g));
            REQUIRE(eval(g, reach_all) == oracle::strongly_connected(g));
            for (Vertex x = 0; x < n; ++x) {
                const auto seen = oracle::reachable_from(g, x);
                for (Vertex y = 0; y < n; ++y)
                    REQUIRE(eval(g, reach("x", "y"), Valuation{{{"x", x}, {"y", y}}, {}}) == seen[y]);
            }
            for (const auto& [name, f] : sentences::battery()) {
                CAPTURE(name);
                REQUIRE(eval(g, f) == oracle::battery_oracles().at(name)(g));
            }
        }
    }
}

TEST_CASE("battery oracles on random 4 to 6 vertex digraphs") {
    std::mt19937 rng(41);
    for (int i = 0; i < 150; ++i) {
        const auto g = testing::random_digraph(rng, 4 + rng() % 3, 0.1 + 0.1 * (rng() % 5));
        for (const auto& [name, f] : sentences::battery()) {
            CAPTURE(name);
            REQUIRE(eval(g, f) == oracle::battery_oracles().at(name)(g));
        }
        REQUIRE(eval(g, sentences::nontrivial_cycle()) == oracle::has_long_cycle(g));
    }
}

TEST_CASE("De Morgan pairs agree") {
    std::mt19937 rng(12);
    const auto& b = sentences::battery();
    for (int i = 0; i < 200; ++i) {
        const auto& f = b[rng() % b.size()].formula;
        const auto& h = b[rng() % b.size()].formula;
        const auto g = testing::random_digraph(rng, 1 + rng() % 4, 0.4);
        REQUIRE(eval(g, negate(conj(f, h))) == eval(g, disj(negate(f), negate(h))));
        REQUIRE(eval(g, negate(disj(f, h))) == eval(g, conj(negate(f), negate(h))));
        REQUIRE(eval(g, implies(f, h)) == eval(g, disj(negate(f), h)));
    }
}

TEST_CASE("the clique sentences") {
    const std::vector<Edge> all{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    const std::vector<Edge> no_loops{{0, 1}, {1, 0}};
    CHECK(eval(Digraph(2, all), sentences::clique()));
    CHECK_FALSE(eval(Digraph(2, no_loops), sentences::clique()));
    CHECK(eval(Digraph(2, no_loops), sentences::clique_irreflexive()));
}
