#include "succmso/sgr.hpp"

#include "succmso/error.hpp"
#include "succmso/parallel.hpp"
#include "json_util.hpp"

#include <array>

namespace succmso {

Sgr::Sgr(BigInt n_vertices, BoolCircuit circuit) : n_(std::move(n_vertices)), circuit_(std::move(circuit)) {
    if (n_ < 1) fail(ErrorCode::kBadParam, "an SGR needs N >= 1");
    if (n_ > pow2(circuit_.label_bits()))
        fail(ErrorCode::kBadParam, "N = " + to_decimal(n_) + " exceeds 2^" + std::to_string(circuit_.label_bits()));
}

bool edge_query(const Sgr& s, const BigInt& x, const BigInt& y) {
    if (x < 0 || y < 0 || x >= s.n_vertices() || y >= s.n_vertices())
        fail(ErrorCode::kLabelOutOfRange, "labels must lie in [0, " + to_decimal(s.n_vertices()) + ")");
    return s.circuit().eval(x, y);
}

Digraph materialize(const Sgr& s, std::uint64_t limit, std::size_t threads) {
    if (s.n_vertices() > limit)
        fail(ErrorCode::kTooLargeToMaterialize,
             "N = " + to_decimal(s.n_vertices()) + " exceeds the limit " + std::to_string(limit));
    const std::uint64_t n = to_u64(s.n_vertices(), "N");
    if (n > std::numeric_limits<Vertex>::max()) fail(ErrorCode::kTooLargeToMaterialize, "N exceeds vertex index space");

    std::vector<std::vector<Vertex>> rows(n);
    parallel_for(n, threads, [&](std::size_t x) {
        std::array<std::uint64_t, 64> xs;
        std::array<std::uint64_t, 64> ys;
        xs.fill(x);
        for (std::uint64_t y0 = 0; y0 < n; y0 += 64) {
            const std::size_t lanes = static_cast<std::size_t>(std::min<std::uint64_t>(64, n - y0));
            for (std::size_t l = 0; l < lanes; ++l) ys[l] = y0 + l;
            const std::uint64_t hits = s.circuit().eval_lanes(xs, ys, lanes);
            for (std::size_t l = 0; l < lanes; ++l)
                if ((hits >> l) & 1U) rows[x].push_back(static_cast<Vertex>(y0 + l));
        }
    });
    Digraph g(n);
    for (std::uint64_t x = 0; x < n; ++x)
        for (Vertex y : rows[x]) g.add_edge(static_cast<Vertex>(x), y);
    return g;
}

BigInt size_convention_bound(const BigInt& n_vertices) { return 64 * (n_vertices * n_vertices + 64); }

bool check_size_convention(const Sgr& s) { return BigInt(gate_count(s.circuit())) <= size_convention_bound(s.n_vertices()); }

std::string serialize(const Sgr& s) {
    nlohmann::ordered_json doc;
    doc["N"] = to_decimal(s.n_vertices());
    doc["circuit"] = detail::circuit_to_json(s.circuit());
    return doc.dump() + "\n";
}

Sgr parse_sgr(std::string_view text) {
    const auto doc = detail::parse_json(text);
    if (!doc.is_object() || !doc.contains("N") || !doc["N"].is_string() || !doc.contains("circuit"))
        throw ParseError("SGR bundle needs a decimal-string \"N\" and a \"circuit\"", 0, 0);
    BigInt n;
    try {
        n = parse_decimal(doc["N"].get<std::string>());
    } catch (const Error& e) {
        throw ParseError(e.what(), 0, 0);
    }
    return Sgr(std::move(n), detail::circuit_from_json(doc["circuit"]));
}

} // namespace succmso
