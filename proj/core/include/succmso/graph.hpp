#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace succmso {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Directed graph on {0, ..., vertex_count-1}. Self-loops allowed, no
/// multi-edges: adding an existing edge is a no-op.
class Digraph {
  public:
    Digraph() = default;
    explicit Digraph(std::size_t vertex_count);
    /// Throws BadVertex when an endpoint is out of range.
    Digraph(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t size() const noexcept { return out_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    void add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;

    /// Out-neighbourhood G(u), sorted ascending.
    const std::vector<Vertex>& out(Vertex u) const;

    /// All edges in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

  private:
    void check(Vertex v) const;

    std::vector<std::vector<Vertex>> out_;
    std::size_t edge_count_ = 0;
};

/// Digraph with two equal-length port sequences. P1 and P2 may share vertices.
struct BiboundariedGraph {
    Digraph graph;
    std::vector<Vertex> p1;
    std::vector<Vertex> p2;

    std::size_t size() const noexcept { return graph.size(); }
    std::size_t port_count() const noexcept { return p1.size(); }

    /// Throws InvalidGraph on unequal lengths, out-of-range or repeated ports.
    void validate() const;

    friend bool operator==(const BiboundariedGraph&, const BiboundariedGraph&) = default;
};

/// Port classes, each sorted by vertex label: P1\P2, P2\P1, P1∩P2.
struct PortClasses {
    std::vector<Vertex> only_p1;
    std::vector<Vertex> only_p2;
    std::vector<Vertex> shared;
};
PortClasses port_classes(const BiboundariedGraph& g);

Digraph disjoint_union(const Digraph& a, const Digraph& b);
Digraph power_union(const Digraph& a, std::size_t copies);

/// Gluing a ⊕ b. Canonical labels: a keeps its labels, the i-th vertex of
/// P1(b) becomes the i-th vertex of P2(a), and the remaining vertices of b
/// follow in increasing order of their labels in b. Throws PortArityMismatch.
BiboundariedGraph glue(const BiboundariedGraph& a, const BiboundariedGraph& b);

/// Result of a word-indexed gluing chain together with, for each letter of
/// the word, the map from that factor's vertices to result vertices.
struct DeltaResult {
    BiboundariedGraph graph;
    std::vector<std::vector<Vertex>> factor_maps;
};

/// Δ^Γ(w): left fold of `glue` over gamma[w[0]], gamma[w[1]], ...
/// Throws EmptyWord, BadParam on an unknown letter, PortArityMismatch.
BiboundariedGraph delta(std::span<const BiboundariedGraph> gamma, std::span<const std::size_t> word);
DeltaResult delta_with_maps(std::span<const BiboundariedGraph> gamma, std::span<const std::size_t> word);

/// Word from digits, e.g. "2113" -> {2,1,1,3}. Throws BadParam on non-digits.
std::vector<std::size_t> word_from_digits(std::string_view digits);

struct Spanned {
    Digraph graph;
    /// relabel[i] is the original label of new vertex i.
    std::vector<Vertex> relabel;
};

/// Induced subgraph, relabelled 0..k-1 in increasing original order.
Spanned spanned_subgraph(const Digraph& g, const std::set<Vertex>& vertices);

/// Adds both orientations of every edge; loops are dropped.
Digraph symmetric_closure(const Digraph& g);

bool graph_equal(const Digraph& a, const Digraph& b);

/// Brute-force permutation search with degree pruning. Throws TooLarge
/// when either graph has more than `kIsoLimit` vertices.
inline constexpr std::size_t kIsoLimit = 10;
bool isomorphic_small(const Digraph& a, const Digraph& b);

/// Every digraph on n labelled vertices (loops allowed), in increasing order
/// of the n*n-bit adjacency mask. Throws TooLarge for n > 4.
std::vector<Digraph> all_digraphs(std::size_t n);

/// Graph text format:
///   graph <n>
///   e <u> <v>
///   p1 <v...>
///   p2 <v...>
/// with `#` comments. Missing port lines mean empty port sequences.
BiboundariedGraph parse_graph_text(std::string_view text);
std::string to_graph_text(const BiboundariedGraph& g);
std::string to_graph_text(const Digraph& g);

/// Gadget JSON: {"n":..,"edges":[[u,v],..],"p1":[..],"p2":[..]}; a gadget
/// file is an array of these.
std::vector<BiboundariedGraph> parse_gadgets_json(std::string_view text);
std::string gadgets_to_json(std::span<const BiboundariedGraph> gadgets);

} // namespace succmso
