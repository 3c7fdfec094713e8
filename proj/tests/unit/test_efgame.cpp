#include "support.hpp"

#include "succmso/efgame.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace succmso;

namespace {

Digraph loop_vertex() {
    const std::vector<Edge> e{{0, 0}};
    return Digraph(1, e);
}

Digraph relabel(const Digraph& g, const std::vector<Vertex>& perm) {
    Digraph h(g.size());
    for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

std::vector<Digraph> small_universe() {
    std::vector<Digraph> out;
    for (std::size_t n = 1; n <= 2; ++n)
        for (const auto& g : all_digraphs(n)) out.push_back(g);
    return out;
}

} // namespace

TEST_CASE("game examples") {
    std::mt19937 rng(2);
    for (std::size_t m = 0; m <= 3; ++m) {
        const auto g = testing::random_digraph(rng, 1 + rng() % (m == 3 ? 3 : 5), 0.4);
        CHECK(ef_equiv(g, g, m));
    }
    CHECK(ef_equiv(Digraph(1), Digraph(2), 1));
    CHECK_FALSE(ef_equiv(Digraph(1), Digraph(2), 2));
    CHECK_FALSE(ef_equiv(Digraph(1), loop_vertex(), 1));
    CHECK(ef_equiv(Digraph(1), loop_vertex(), 0));
}

TEST_CASE("game guards") {
    CHECK_CODE(ef_equiv(Digraph(6), Digraph(1), 1), ErrorCode::kTooLarge);
    CHECK_CODE(ef_equiv(Digraph(1), Digraph(1), 4), ErrorCode::kTooLarge);
}

TEST_CASE("set moves distinguish what point moves cannot") {
    // Two 2-cycles vs one 4-cycle: agree on rank-2 point sentences, but a set
    // move can pick one side of a 2-cycle.
    const std::vector<Edge> two{{0, 1}, {1, 0}, {2, 3}, {3, 2}};
    const std::vector<Edge> four{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    const std::vector<Edge> four_sym{{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 0}, {0, 3}};
    CHECK_FALSE(ef_equiv(Digraph(4, two), Digraph(4, four), 2));
    CHECK(ef_equiv(Digraph(4, two), Digraph(4, two), 3));
    CHECK_FALSE(ef_equiv(Digraph(4, four), Digraph(4, four_sym), 2));
}

TEST_CASE("reflexive and symmetric, and invariant under relabelling") {
    const auto u = small_universe();
    for (std::size_t m = 0; m <= 2; ++m)
        for (std::size_t i = 0; i < u.size(); ++i) {
            REQUIRE(ef_equiv(u[i], u[i], m));
            for (std::size_t j = i + 1; j < u.size(); ++j) REQUIRE(ef_equiv(u[i], u[j], m) == ef_equiv(u[j], u[i], m));
        }
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const auto g = testing::random_digraph(rng, n, 0.4);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        REQUIRE(ef_equiv(g, relabel(g, perm), 2));
    }
}

TEST_CASE("equivalent graphs agree on every battery sentence of bounded rank") {
    std::mt19937 rng(123);
    std::size_t equivalent = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = 1 + rng() % 2;
        const auto g = testing::random_digraph(rng, 1 + rng() % 4, 0.1 * (1 + rng() % 6));
        const auto h = testing::random_digraph(rng, 1 + rng() % 4, 0.1 * (1 + rng() % 6));
        bool differs = false;
        for (const auto& [name, f] : mso::sentences::battery())
            if (mso::rank(f) <= m && mso::eval(g, f) != mso::eval(h, f)) differs = true;
        if (ef_equiv(g, h, m)) {
            ++equivalent;
            REQUIRE_FALSE(differs);
        }
    }
    for (std::size_t m = 1; m <= 2; ++m) {
        const auto u = small_universe();
        for (const auto& g : u)
            for (const auto& h : u) {
                if (!ef_equiv(g, h, m)) continue;
                ++equivalent;
                for (const auto& [name, f] : mso::sentences::battery())
                    if (mso::rank(f) <= m) REQUIRE(mso::eval(g, f) == mso::eval(h, f));
            }
    }
    CHECK(equivalent > 20);
}

TEST_CASE("q search") {
    CHECK(q_search(Digraph(1), 1, 8) == std::optional<std::size_t>{1});
    CHECK(q_search(Digraph(1), 2, 8) == std::optional<std::size_t>{2});
    CHECK(q_search(loop_vertex(), 1, 8) == std::optional<std::size_t>{1});
    CHECK(q_search(Digraph(1), 2, 1) == std::nullopt);
    CHECK_CODE(q_search(Digraph(), 1, 4), ErrorCode::kEmptyGraph);
    CHECK_CODE(q_search(Digraph(3), 1, 4), ErrorCode::kTooLarge);
}

TEST_CASE("q search results are least idempotence points below the bound") {
    const std::vector<Edge> e{{0, 1}};
    const std::vector<Digraph> graphs{Digraph(1), loop_vertex(), Digraph(2, e), Digraph(2)};
    for (const auto& g : graphs)
        for (std::size_t m = 1; m <= 2; ++m) {
            const std::size_t cap = kEfVertexLimit / g.size() - 1;
            const auto q = q_search(g, m, cap);
            if (!q) continue;
            CAPTURE(m);
            CHECK(ef_equiv(power_union(g, *q), power_union(g, *q + 1), m));
            if (*q > 1) CHECK_FALSE(ef_equiv(power_union(g, *q - 1), power_union(g, *q), m));
            CHECK(q_bound_total(g.size(), m) >= *q);
        }
}

TEST_CASE("q bound recursion") {
    CHECK(q_bound(1, 3, 0) == 3);
    CHECK(q_bound(1, 0, 1) == 2);
    CHECK(q_bound_total(1, 1) == 2);
    // log2 q(1, 0, 2) = 1 * (2 + 0 + 2)
    CHECK(q_bound(1, 0, 2) == 16);
    CHECK(q_bound(2, 1, 1) == pow2(2 * (1 + 1 + 1)));
    CHECK(q_bound(1, 0, 4) == pow2((std::size_t{1} << 19) + 4));
    CHECK_CODE(q_bound(1, 0, 5), ErrorCode::kBoundTooLarge);
    CHECK(q_bound_total(3, 0) == 0);
    for (std::uint64_t size = 1; size <= 3; ++size)
        for (std::uint64_t m = 0; m <= 2; ++m) {
            BigInt best = 0;
            for (std::uint64_t m1 = 0; m1 <= m; ++m1) best = std::max(best, q_bound(size, m1, m - m1));
            CHECK(q_bound_total(size, m) == best);
        }
}

TEST_CASE("saturating scans") {
    std::vector<Digraph> battery;
    for (std::size_t n = 0; n <= 3; ++n)
        for (const auto& g : all_digraphs(n)) battery.push_back(g);
    CHECK(saturating_scan(loop_vertex(), mso::sentences::loop(), battery) == ScanVerdict::kSufficient);
    CHECK(saturating_scan(Digraph(1), mso::sentences::loop(), battery) == ScanVerdict::kMixed);
    CHECK(saturating_scan(Digraph(2), mso::parse("all x. x=x"), battery) == ScanVerdict::kSufficient);
    CHECK(saturating_scan(loop_vertex(), mso::parse("all x. ~E(x,x)"), battery) == ScanVerdict::kForbidden);
    CHECK(saturating_scan(Digraph(1), mso::sentences::loop(), {}) == ScanVerdict::kSufficient);
    CHECK(name(ScanVerdict::kMixed) == "Mixed");
}
