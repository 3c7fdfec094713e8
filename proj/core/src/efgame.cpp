#include "succmso/efgame.hpp"

#include "succmso/error.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace succmso {

namespace {

using Mask = std::uint32_t;

struct Side {
    std::size_t n;
    std::vector<Mask> out; // out[u] bit v  <=>  E(u, v)

    explicit Side(const Digraph& g) : n(g.size()), out(g.size(), 0) {
        for (const auto& [u, v] : g.edges()) out[u] |= Mask{1} << v;
    }
    bool edge(Vertex u, Vertex v) const { return (out[u] >> v) & 1U; }
};

struct PointPair {
    Vertex a;
    Vertex b;
};

struct SetPair {
    Mask a;
    Mask b;
};

class Game {
  public:
    Game(const Digraph& g, const Digraph& h) : g_(g), h_(h) {}

    bool duplicator_wins(std::size_t rounds) { return wins(rounds); }

  private:
    bool point_ok(Vertex a, Vertex b) const {
        if (g_.edge(a, a) != h_.edge(b, b)) return false;
        for (const auto& p : points_) {
            if ((a == p.a) != (b == p.b)) return false;
            if (g_.edge(a, p.a) != h_.edge(b, p.b) || g_.edge(p.a, a) != h_.edge(p.b, b)) return false;
        }
        for (const auto& s : sets_)
            if (((s.a >> a) & 1U) != ((s.b >> b) & 1U)) return false;
        return true;
    }

    bool set_ok(Mask a, Mask b) const {
        for (const auto& p : points_)
            if (((a >> p.a) & 1U) != ((b >> p.b) & 1U)) return false;
        return true;
    }

    std::string key(std::size_t rounds) const {
        std::vector<std::uint64_t> pts;
        std::vector<std::uint64_t> sts;
        for (const auto& p : points_) pts.push_back((std::uint64_t{p.a} << 32) | p.b);
        for (const auto& s : sets_) sts.push_back((std::uint64_t{s.a} << 32) | s.b);
        std::sort(pts.begin(), pts.end());
        std::sort(sts.begin(), sts.end());
        std::string k(1, static_cast<char>(rounds));
        auto put = [&](std::uint64_t v) { k.append(reinterpret_cast<const char*>(&v), sizeof v); };
        for (auto v : pts) put(v);
        k.push_back('|');
        for (auto v : sts) put(v);
        return k;
    }

    bool already_chosen(bool left, Vertex v) const {
        return std::any_of(points_.begin(), points_.end(), [&](const PointPair& p) { return (left ? p.a : p.b) == v; });
    }

    // Spoiler plays on `left` (g) or right (h); Duplicator answers on the other side.
    bool answer_point(bool left, Vertex v, std::size_t rounds) {
        const Side& other = left ? h_ : g_;
        for (Vertex w = 0; w < other.n; ++w) {
            const Vertex a = left ? v : w;
            const Vertex b = left ? w : v;
            if (!point_ok(a, b)) continue;
            points_.push_back({a, b});
            const bool ok = wins(rounds - 1);
            points_.pop_back();
            if (ok) return true;
        }
        return false;
    }

    bool answer_set(bool left, Mask s, std::size_t rounds) {
        const Side& other = left ? h_ : g_;
        const Mask limit = Mask{1} << other.n;
        for (Mask t = 0; t < limit; ++t) {
            const Mask a = left ? s : t;
            const Mask b = left ? t : s;
            if (!set_ok(a, b)) continue;
            sets_.push_back({a, b});
            const bool ok = wins(rounds - 1);
            sets_.pop_back();
            if (ok) return true;
        }
        return false;
    }

    bool wins(std::size_t rounds) {
        if (rounds == 0) return true;
        const std::string k = key(rounds);
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;
        bool result = true;
        for (int side = 0; side < 2 && result; ++side) {
            const bool left = side == 0;
            const Side& mine = left ? g_ : h_;
            for (Vertex v = 0; v < mine.n && result; ++v) {
                // Replaying a chosen vertex forces the recorded answer and changes nothing.
                if (already_chosen(left, v)) continue;
                if (!answer_point(left, v, rounds)) result = false;
            }
            // With one round left a set cannot constrain any later point, and
            // copying its trace on the chosen points is always a legal answer.
            if (rounds < 2) continue;
            const Mask limit = Mask{1} << mine.n;
            for (Mask s = 0; s < limit && result; ++s)
                if (!answer_set(left, s, rounds)) result = false;
        }
        memo_.emplace(k, result);
        return result;
    }

    Side g_;
    Side h_;
    std::vector<PointPair> points_;
    std::vector<SetPair> sets_;
    std::unordered_map<std::string, bool> memo_;
};

} // namespace

bool ef_equiv(const Digraph& g, const Digraph& h, std::size_t m) {
    if (g.size() > kEfVertexLimit || h.size() > kEfVertexLimit)
        fail(ErrorCode::kTooLarge, "ef_equiv handles at most " + std::to_string(kEfVertexLimit) + " vertices per side");
    if (m > kEfRoundLimit) fail(ErrorCode::kTooLarge, "ef_equiv handles at most " + std::to_string(kEfRoundLimit) + " rounds");
    Game game(g, h);
    return game.duplicator_wins(m);
}

std::optional<std::size_t> q_search(const Digraph& g, std::size_t m, std::size_t q_max) {
    if (g.size() == 0) fail(ErrorCode::kEmptyGraph, "q_search needs a nonempty graph");
    for (std::size_t q = 1; q <= q_max; ++q)
        if (ef_equiv(power_union(g, q), power_union(g, q + 1), m)) return q;
    return std::nullopt;
}

BigInt q_bound(std::uint64_t size_g, std::uint64_t m1, std::uint64_t m2) {
    BigInt q = m1;
    for (std::uint64_t j = 1; j <= m2; ++j) {
        const BigInt exponent = BigInt(size_g) * (q + m1 + j);
        if (exponent > kQBoundExponentLimit) {
            std::string shown = to_decimal(exponent);
            if (shown.size() > 24) shown = "a " + std::to_string(shown.size()) + "-digit value";
            fail(ErrorCode::kBoundTooLarge, "exponent " + shown + " exceeds " + std::to_string(kQBoundExponentLimit));
        }
        q = pow2(static_cast<std::uint64_t>(exponent));
    }
    return q;
}

BigInt q_bound_total(std::uint64_t size_g, std::uint64_t m) {
    BigInt best = 0;
    for (std::uint64_t m1 = 0; m1 <= m; ++m1) best = std::max(best, q_bound(size_g, m1, m - m1));
    return best;
}

std::string_view name(ScanVerdict v) {
    switch (v) {
    case ScanVerdict::kSufficient: return "Sufficient";
    case ScanVerdict::kForbidden: return "Forbidden";
    case ScanVerdict::kMixed: return "Mixed";
    }
    return "?";
}

ScanVerdict saturating_scan(const Digraph& omega, const mso::FormulaPtr& phi, std::span<const Digraph> battery) {
    std::size_t models = 0;
    for (const auto& g : battery)
        if (mso::eval(disjoint_union(omega, g), phi)) ++models;
    if (models == battery.size()) return ScanVerdict::kSufficient;
    if (models == 0) return ScanVerdict::kForbidden;
    return ScanVerdict::kMixed;
}

} // namespace succmso
