#include "succmso/graph.hpp"

#include "succmso/error.hpp"

#include <algorithm>
#include <numeric>

namespace succmso {

Digraph::Digraph(std::size_t vertex_count) : out_(vertex_count) {}

Digraph::Digraph(std::size_t vertex_count, std::span<const Edge> edges) : out_(vertex_count) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

void Digraph::check(Vertex v) const {
    if (v >= out_.size())
        fail(ErrorCode::kBadVertex, "vertex " + std::to_string(v) + " not in a graph of size " + std::to_string(size()));
}

void Digraph::add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    auto& row = out_[u];
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it != row.end() && *it == v) return;
    row.insert(it, v);
    ++edge_count_;
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

const std::vector<Vertex>& Digraph::out(Vertex u) const {
    check(u);
    return out_[u];
}

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> all;
    all.reserve(edge_count_);
    for (Vertex u = 0; u < out_.size(); ++u)
        for (Vertex v : out_[u]) all.emplace_back(u, v);
    return all;
}

void BiboundariedGraph::validate() const {
    if (p1.size() != p2.size())
        fail(ErrorCode::kInvalidGraph, "port sequences have lengths " + std::to_string(p1.size()) + " and " +
                                           std::to_string(p2.size()));
    for (const auto* seq : {&p1, &p2}) {
        std::vector<bool> seen(graph.size());
        for (Vertex v : *seq) {
            if (v >= graph.size()) fail(ErrorCode::kInvalidGraph, "port " + std::to_string(v) + " out of range");
            if (seen[v]) fail(ErrorCode::kInvalidGraph, "port " + std::to_string(v) + " repeated in a sequence");
            seen[v] = true;
        }
    }
}

PortClasses port_classes(const BiboundariedGraph& g) {
    std::vector<Vertex> a(g.p1.begin(), g.p1.end());
    std::vector<Vertex> b(g.p2.begin(), g.p2.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    PortClasses out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.only_p1));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(out.only_p2));
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.shared));
    return out;
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
    Digraph out(a.size() + b.size());
    const auto shift = static_cast<Vertex>(a.size());
    for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
    for (const auto& [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
    return out;
}

Digraph power_union(const Digraph& a, std::size_t copies) {
    Digraph out(a.size() * copies);
    const auto edges = a.edges();
    for (std::size_t c = 0; c < copies; ++c) {
        const auto shift = static_cast<Vertex>(c * a.size());
        for (const auto& [u, v] : edges) out.add_edge(u + shift, v + shift);
    }
    return out;
}

namespace {

struct GlueMap {
    BiboundariedGraph graph;
    std::vector<Vertex> b_map;
};

GlueMap glue_mapped(const BiboundariedGraph& a, const BiboundariedGraph& b) {
    if (a.port_count() != b.port_count())
        fail(ErrorCode::kPortArityMismatch,
             std::to_string(a.port_count()) + " ports glued to " + std::to_string(b.port_count()) + " ports");
    a.validate();
    b.validate();
    constexpr Vertex kUnset = ~Vertex{0};
    std::vector<Vertex> map(b.size(), kUnset);
    for (std::size_t i = 0; i < b.p1.size(); ++i) map[b.p1[i]] = a.p2[i];
    auto next = static_cast<Vertex>(a.size());
    for (Vertex v = 0; v < b.size(); ++v)
        if (map[v] == kUnset) map[v] = next++;

    GlueMap out;
    out.graph.graph = Digraph(next);
    for (const auto& [u, v] : a.graph.edges()) out.graph.graph.add_edge(u, v);
    for (const auto& [u, v] : b.graph.edges()) out.graph.graph.add_edge(map[u], map[v]);
    out.graph.p1 = a.p1;
    for (Vertex v : b.p2) out.graph.p2.push_back(map[v]);
    out.b_map = std::move(map);
    return out;
}

} // namespace

BiboundariedGraph glue(const BiboundariedGraph& a, const BiboundariedGraph& b) { return glue_mapped(a, b).graph; }

DeltaResult delta_with_maps(std::span<const BiboundariedGraph> gamma, std::span<const std::size_t> word) {
    if (word.empty()) fail(ErrorCode::kEmptyWord, "delta needs a nonempty word");
    for (std::size_t letter : word)
        if (letter >= gamma.size())
            fail(ErrorCode::kBadParam, "letter " + std::to_string(letter) + " has no gadget (family size " +
                                           std::to_string(gamma.size()) + ")");
    DeltaResult out;
    out.graph = gamma[word[0]];
    std::vector<Vertex> identity(out.graph.size());
    std::iota(identity.begin(), identity.end(), Vertex{0});
    out.factor_maps.push_back(std::move(identity));
    for (std::size_t i = 1; i < word.size(); ++i) {
        auto step = glue_mapped(out.graph, gamma[word[i]]);
        out.graph = std::move(step.graph);
        out.factor_maps.push_back(std::move(step.b_map));
    }
    return out;
}

BiboundariedGraph delta(std::span<const BiboundariedGraph> gamma, std::span<const std::size_t> word) {
    return delta_with_maps(gamma, word).graph;
}

std::vector<std::size_t> word_from_digits(std::string_view digits) {
    std::vector<std::size_t> word;
    for (char c : digits) {
        if (c < '0' || c > '9') fail(ErrorCode::kBadParam, "word letters must be digits: '" + std::string(digits) + "'");
        word.push_back(static_cast<std::size_t>(c - '0'));
    }
    return word;
}

Spanned spanned_subgraph(const Digraph& g, const std::set<Vertex>& vertices) {
    Spanned out;
    std::vector<Vertex> index(g.size(), ~Vertex{0});
    for (Vertex v : vertices) {
        if (v >= g.size()) fail(ErrorCode::kBadVertex, "vertex " + std::to_string(v) + " out of range");
        index[v] = static_cast<Vertex>(out.relabel.size());
        out.relabel.push_back(v);
    }
    out.graph = Digraph(out.relabel.size());
    for (Vertex u : out.relabel)
        for (Vertex v : g.out(u))
            if (index[v] != ~Vertex{0}) out.graph.add_edge(index[u], index[v]);
    return out;
}

Digraph symmetric_closure(const Digraph& g) {
    Digraph out(g.size());
    for (const auto& [u, v] : g.edges()) {
        if (u == v) continue;
        out.add_edge(u, v);
        out.add_edge(v, u);
    }
    return out;
}

bool graph_equal(const Digraph& a, const Digraph& b) { return a == b; }

namespace {

struct IsoSearch {
    const Digraph& a;
    const Digraph& b;
    std::vector<Vertex> image;
    std::vector<bool> used;

    bool extend(Vertex u) {
        if (u == a.size()) return true;
        for (Vertex cand = 0; cand < b.size(); ++cand) {
            if (used[cand]) continue;
            if (a.out(u).size() != b.out(cand).size()) continue;
            if (a.has_edge(u, u) != b.has_edge(cand, cand)) continue;
            bool ok = true;
            for (Vertex w = 0; w < u && ok; ++w)
                ok = a.has_edge(u, w) == b.has_edge(cand, image[w]) && a.has_edge(w, u) == b.has_edge(image[w], cand);
            if (!ok) continue;
            image[u] = cand;
            used[cand] = true;
            if (extend(u + 1)) return true;
            used[cand] = false;
        }
        return false;
    }
};

} // namespace

bool isomorphic_small(const Digraph& a, const Digraph& b) {
    if (a.size() > kIsoLimit || b.size() > kIsoLimit)
        fail(ErrorCode::kTooLarge, "isomorphism search limited to " + std::to_string(kIsoLimit) + " vertices");
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    IsoSearch search{a, b, std::vector<Vertex>(a.size()), std::vector<bool>(b.size())};
    return search.extend(0);
}

std::vector<Digraph> all_digraphs(std::size_t n) {
    if (n > 4) fail(ErrorCode::kTooLarge, "all_digraphs enumerates at most 4 vertices");
    const std::size_t cells = n * n;
    std::vector<Digraph> out;
    out.reserve(std::size_t{1} << cells);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << cells); ++mask) {
        Digraph g(n);
        for (std::size_t c = 0; c < cells; ++c)
            if ((mask >> c) & 1U) g.add_edge(static_cast<Vertex>(c / n), static_cast<Vertex>(c % n));
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace succmso
