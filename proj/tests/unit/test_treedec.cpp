#include "support.hpp"

#include "succmso/treedec.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace succmso;

namespace {

TreeDecomposition td(std::vector<long> parents, std::vector<std::vector<Vertex>> bags,
                     std::optional<std::size_t> leaf = std::nullopt) {
    return make_decomposition(std::move(parents), std::move(bags), leaf);
}

// Interpolation checked literally: for every pair of nodes p, r and every q
// on the tree path between them, B(p) ∩ B(r) ⊆ B(q).
bool oracle_valid(const Digraph& g, const TreeDecomposition& t) {
    const std::size_t n = t.size();
    for (const auto& bag : t.bags)
        for (Vertex v : bag)
            if (v >= g.size()) return false;
    for (Vertex v = 0; v < g.size(); ++v) {
        bool covered = false;
        for (const auto& bag : t.bags) covered = covered || std::binary_search(bag.begin(), bag.end(), v);
        if (!covered) return false;
    }
    for (const auto& [a, b] : symmetric_closure(g).edges()) {
        bool covered = false;
        for (const auto& bag : t.bags)
            covered = covered || (std::binary_search(bag.begin(), bag.end(), a) && std::binary_search(bag.begin(), bag.end(), b));
        if (!covered) return false;
    }
    auto ancestors = [&](std::size_t p) {
        std::vector<std::size_t> out{p};
        while (t.parents[out.back()] >= 0) out.push_back(static_cast<std::size_t>(t.parents[out.back()]));
        return out;
    };
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t r = 0; r < n; ++r) {
            const auto ap = ancestors(p);
            const auto ar = ancestors(r);
            std::vector<std::size_t> path;
            std::size_t meet = 0;
            for (std::size_t x : ap)
                if (std::find(ar.begin(), ar.end(), x) != ar.end()) {
                    meet = x;
                    break;
                }
            for (std::size_t x : ap) {
                path.push_back(x);
                if (x == meet) break;
            }
            for (std::size_t x : ar) {
                if (x == meet) break;
                path.push_back(x);
            }
            std::vector<Vertex> common;
            std::set_intersection(t.bags[p].begin(), t.bags[p].end(), t.bags[r].begin(), t.bags[r].end(),
                                  std::back_inserter(common));
            for (std::size_t q : path)
                if (!std::includes(t.bags[q].begin(), t.bags[q].end(), common.begin(), common.end())) return false;
        }
    return true;
}

TreeDecomposition random_tree(std::mt19937& rng, std::size_t nodes, std::size_t vertices, std::size_t bag_max) {
    std::vector<long> parents{-1};
    std::vector<std::vector<Vertex>> bags;
    for (std::size_t i = 1; i < nodes; ++i) parents.push_back(static_cast<long>(rng() % i));
    for (std::size_t i = 0; i < nodes; ++i) {
        std::vector<Vertex> bag;
        const std::size_t k = 1 + rng() % bag_max;
        for (std::size_t j = 0; j < k; ++j) bag.push_back(static_cast<Vertex>(rng() % vertices));
        bags.push_back(bag);
    }
    return td(parents, bags);
}

// A valid decomposition with high-degree nodes: eliminate in a random order,
// then hang extra leaves holding subsets of existing bags.
std::pair<Digraph, TreeDecomposition> random_valid(std::mt19937& rng) {
    const std::size_t n = 2 + rng() % 7;
    const auto g = testing::random_digraph(rng, n, 0.3);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    auto t = decomposition_from_ordering(g, order);
    const std::size_t extra = rng() % 8;
    for (std::size_t i = 0; i < extra; ++i) {
        const std::size_t at = rng() % std::min<std::size_t>(t.size(), 2);
        std::vector<Vertex> bag;
        for (Vertex v : t.bags[at])
            if (rng() % 2) bag.push_back(v);
        if (bag.empty()) bag.push_back(t.bags[at].front());
        t.parents.push_back(static_cast<long>(at));
        t.bags.push_back(bag);
    }
    t.check_structure();
    return {g, t};
}

// Root bag P1, middle bag V, pointed leaf P2: valid for any gadget.
TreeDecomposition anchored(const BiboundariedGraph& g) {
    std::vector<Vertex> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    return td({-1, 0, 1}, {g.p1, all, g.p2}, 2);
}

// Treewidth by the subset recurrence TW(S) = min over v in S of
// max(TW(S \ v), |Q(S \ v, v)|), Q(S, v) = vertices outside S ∪ {v} reachable
// from v through S.
long subset_treewidth(const Digraph& g) {
    const std::size_t n = g.size();
    if (n == 0) return -1;
    const auto u = symmetric_closure(g);
    const std::size_t full = std::size_t{1} << n;
    auto q_size = [&](std::size_t s, Vertex v) {
        std::size_t seen = std::size_t{1} << v;
        long count = 0;
        std::vector<Vertex> stack{v};
        while (!stack.empty()) {
            const Vertex a = stack.back();
            stack.pop_back();
            for (Vertex b : u.out(a)) {
                const std::size_t bit = std::size_t{1} << b;
                if (seen & bit) continue;
                seen |= bit;
                if (s & bit) stack.push_back(b);
                else ++count;
            }
        }
        return count;
    };
    std::vector<long> tw(full, 1L << 30);
    tw[0] = -1;
    for (std::size_t s = 1; s < full; ++s)
        for (Vertex v = 0; v < n; ++v)
            if (s & (std::size_t{1} << v)) {
                const std::size_t rest = s & ~(std::size_t{1} << v);
                tw[s] = std::min(tw[s], std::max(tw[rest], q_size(rest, v)));
            }
    return tw[full - 1];
}

Digraph complete(std::size_t n) {
    Digraph g(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            if (a != b) g.add_edge(a, b);
    return g;
}

} // namespace

TEST_CASE("validation examples") {
    const auto p3 = testing::path(3);
    const auto chain = parse_decomposition_json(testing::read_data("p3_chain.td.json"));
    CHECK(validate(p3, chain).ok());
    CHECK(width(chain) == 1);

    const auto tri = parse_decomposition_json(testing::read_data("triangle.td.json"));
    CHECK(validate(testing::cycle(3), tri).ok());
    CHECK(width(tri) == 2);

    const auto bad = parse_decomposition_json(testing::read_data("p3_bad.td.json"));
    const auto report = validate(p3, bad);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::kEdgeUncovered);
    CHECK(report.violations[0].describe() == "EdgeUncovered(1,2)");
}

TEST_CASE("violation kinds") {
    const auto p3 = testing::path(3);
    const auto uncovered = validate(p3, td({-1}, {{0, 1}}));
    CHECK(std::count_if(uncovered.violations.begin(), uncovered.violations.end(),
                        [](const Violation& v) { return v.kind == ViolationKind::kVertexUncovered && v.u == 2; }) == 1);
    const auto broken = validate(Digraph(3), td({-1, 0, 1}, {{0}, {1}, {0, 2}}));
    CHECK(broken.violations == std::vector<Violation>{{ViolationKind::kConnectivityViolated, 0, 0}});
    const auto range = validate(Digraph(1), td({-1}, {{0, 4}}));
    CHECK(range.violations.front().kind == ViolationKind::kBagVertexOutOfRange);
}

TEST_CASE("validate agrees with the path-interpolation oracle") {
    std::mt19937 rng(31);
    std::size_t valid = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const auto g = testing::random_digraph(rng, n, 0.25);
        const auto t = random_tree(rng, 1 + rng() % 5, n, 3);
        const bool ok = validate(g, t).ok();
        REQUIRE(ok == oracle_valid(g, t));
        valid += ok;
    }
    CHECK(valid > 20);
}

TEST_CASE("width") {
    CHECK(width(td({-1}, {{0, 1, 2}})) == 2);
    CHECK(width(td({-1, 0, 0}, {{0}, {1}, {2}})) == 0);
    CHECK_CODE(width(TreeDecomposition{}), ErrorCode::kEmptyDecomposition);
}

TEST_CASE("structure checks") {
    CHECK_CODE(td({-1, -1}, {{0}, {1}}), ErrorCode::kInvalidDecomposition);
    CHECK_CODE(td({1, 0}, {{0}, {1}}), ErrorCode::kInvalidDecomposition);
    CHECK_CODE(td({-1, 0}, {{0}, {1}}, 0), ErrorCode::kInvalidDecomposition);
    CHECK_CODE(parse_decomposition_json(R"({"root":1,"parents":[-1,0],"bags":[[0],[0]],"pointed_leaf":null})"),
               ErrorCode::kInvalidDecomposition);
}

TEST_CASE("degree-3 normalisation of a star") {
    const auto star = parse_decomposition_json(testing::read_data("star.td.json"));
    Digraph g(6);
    for (Vertex v = 1; v < 6; ++v) g.add_edge(0, v);
    REQUIRE(validate(g, star).ok());
    const auto n = normalize_degree3(star);
    CHECK(validate(g, n).ok());
    CHECK(width(n) == width(star));
    CHECK(n.size() > star.size());
    for (std::size_t i = 0; i < n.size(); ++i) CHECK(n.degree(i) <= 3);
    for (std::size_t i = star.size(); i < n.size(); ++i) CHECK(n.bags[i] == star.bags[0]);
    CHECK(normalize_degree3(n) == n);
    const auto chain = parse_decomposition_json(testing::read_data("p3_chain.td.json"));
    CHECK(normalize_degree3(chain) == chain);
}

TEST_CASE("degree-3 normalisation on random decompositions") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const auto [g, t] = random_valid(rng);
        REQUIRE(validate(g, t).ok());
        const auto n = normalize_degree3(t);
        REQUIRE(validate(g, n).ok());
        REQUIRE(width(n) == width(t));
        REQUIRE(n.size() >= t.size());
        for (std::size_t i = 0; i < n.size(); ++i) REQUIRE(n.degree(i) <= 3);
    }
}

TEST_CASE("subtree replacement and pointed gluing") {
    const auto t = td({-1, 0, 0, 1}, {{0}, {1}, {2}, {3}}, 2);
    const auto u = td({-1, 0}, {{7}, {8}}, 1);
    const auto r = subtree_replace(t, 1, u);
    CHECK(r.bags == std::vector<std::vector<Vertex>>{{0}, {2}, {7}, {8}});
    CHECK(r.parents == std::vector<long>{-1, 0, 0, 2});
    CHECK(r.pointed_leaf == std::optional<std::size_t>{3});

    const auto glued = glue_at_leaf(t, u);
    CHECK(glued.size() == t.size() + u.size() - 1);
    CHECK(glued.pointed_leaf.has_value());
    CHECK(glued.bags[*glued.pointed_leaf] == std::vector<Vertex>{8});

    CHECK_CODE(glue_at_leaf(td({-1, 0}, {{0}, {1}}), u), ErrorCode::kNotALeaf);
    auto inner = td({-1, 0, 1}, {{0}, {1}, {2}}, 2);
    inner.pointed_leaf = 1;
    CHECK_CODE(glue_at_leaf(inner, u), ErrorCode::kNotALeaf);
}

TEST_CASE("lambda") {
    const auto family = parse_decompositions_json(testing::read_data("path_tds.json"));
    const std::vector<std::size_t> one{2};
    CHECK(lambda(family, one) == family[2]);
    const auto w = word_from_digits("213");
    const auto l = lambda(family, w);
    CHECK(l.size() == 3 * 3 - 2);
    CHECK(width(l) == 1);
    CHECK_CODE(lambda(family, std::vector<std::size_t>{}), ErrorCode::kEmptyWord);
    CHECK_CODE(lambda(family, std::vector<std::size_t>{9}), ErrorCode::kBadParam);

    std::mt19937 rng(4);
    std::vector<TreeDecomposition> mixed{td({-1, 0}, {{0, 1, 2}, {1}}, 1), td({-1, 0, 0}, {{0}, {0, 1}, {1}}, 2),
                                         td({-1}, {{0}}, 0)};
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::size_t> word(1 + rng() % 6);
        for (auto& c : word) c = rng() % mixed.size();
        const auto out = lambda(mixed, word);
        std::size_t nodes = 0;
        long max_width = -1;
        for (auto c : word) {
            nodes += mixed[c].size();
            max_width = std::max(max_width, width(mixed[c]));
        }
        REQUIRE(out.size() == nodes - (word.size() - 1));
        REQUIRE(width(out) == max_width);
    }
}

TEST_CASE("decomposition of delta for the path triple") {
    const auto gamma = parse_gadgets_json(testing::read_data("path_family.json"));
    const auto decs = parse_decompositions_json(testing::read_data("path_tds.json"));
    const auto w = word_from_digits("213");
    const auto d = decomposition_of_delta(gamma, decs, w);
    const auto g = delta(gamma, w);
    CHECK(g.graph == testing::path(4));
    CHECK(validate(g.graph, d).ok());
    CHECK(width(d) == 1);

    const std::vector<std::size_t> two{2};
    CHECK(decomposition_of_delta(gamma, decs, two) == decs[2]);

    auto bad = decs;
    bad[1] = td({-1, 0, 1}, {{1}, {0, 1}, {0}}, 2);
    CHECK_CODE(decomposition_of_delta(gamma, bad, w), ErrorCode::kBadAnchorBags);
    bad[1] = td({-1, 0, 1}, {{0}, {0, 1}, {0, 1}}, 2);
    CHECK_CODE(decomposition_of_delta(gamma, bad, w), ErrorCode::kBadAnchorBags);
}

TEST_CASE("decomposition of delta on random families and words") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t ports = 1 + rng() % 2;
        std::vector<BiboundariedGraph> gamma;
        std::vector<TreeDecomposition> decs;
        for (int i = 0; i < 4; ++i) {
            const std::size_t n = ports + 1 + rng() % 3;
            BiboundariedGraph g{testing::random_digraph(rng, n, 0.3), {}, {}};
            std::vector<Vertex> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            g.p1.assign(order.begin(), order.begin() + ports);
            g.p2.assign(order.end() - ports, order.end());
            if (rng() % 3 == 0) g.p2.back() = g.p1.back();
            std::sort(g.p2.begin(), g.p2.end());
            if (std::adjacent_find(g.p2.begin(), g.p2.end()) != g.p2.end()) g.p2 = g.p1;
            gamma.push_back(g);
            decs.push_back(anchored(g));
        }
        std::vector<std::size_t> word(1 + rng() % 6);
        for (auto& c : word) c = rng() % gamma.size();
        const auto g = delta(gamma, word);
        const auto d = decomposition_of_delta(gamma, decs, word);
        CAPTURE(trial);
        REQUIRE(validate(g.graph, d).ok());
        long max_width = -1;
        for (auto c : word) max_width = std::max(max_width, width(decs[c]));
        REQUIRE(width(d) == max_width);
    }
}

TEST_CASE("exact treewidth examples") {
    CHECK(treewidth_exact(testing::path(4)) == 1);
    CHECK(treewidth_exact(complete(4)) == 3);
    CHECK(treewidth_exact(testing::cycle(4)) == 2);
    CHECK(treewidth_exact(Digraph()) == -1);
    CHECK(treewidth_exact(Digraph(3)) == 0);
    CHECK(treewidth_exact(complete(10)) == 9);
    CHECK_CODE(treewidth_exact(Digraph(11)), ErrorCode::kTooLarge);
}

TEST_CASE("exact treewidth against the subset recurrence and all orderings") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const auto g = testing::random_digraph(rng, n, 0.15 + 0.1 * (rng() % 5));
        const long tw = treewidth_exact(g);
        REQUIRE(tw == subset_treewidth(g));
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        long best = 1L << 30;
        do {
            const auto t = decomposition_from_ordering(g, order);
            REQUIRE(validate(g, t).ok());
            best = std::min(best, width(t));
        } while (std::next_permutation(order.begin(), order.end()));
        REQUIRE(best == tw);
    }
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = testing::random_digraph(rng, 6 + rng() % 3, 0.3);
        REQUIRE(treewidth_exact(g) == subset_treewidth(g));
    }
}

TEST_CASE("decomposition JSON round trip") {
    const auto t = td({-1, 0, 1}, {{0}, {0, 1}, {1}}, 2);
    CHECK(parse_decomposition_json(to_json(t)) == t);
    const auto star = parse_decomposition_json(testing::read_data("star.td.json"));
    CHECK(parse_decomposition_json(to_json(star)) == star);
    CHECK_CODE(parse_decomposition_json("{"), ErrorCode::kParseError);
    CHECK_CODE(decomposition_from_ordering(testing::path(3), std::vector<Vertex>{0, 0, 1}), ErrorCode::kBadParam);
}
