#pragma once

#include "succmso/graph.hpp"

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace succmso {

/// Rooted tree of bags. Node i has parent parents[i] (-1 for the root) and
/// bag bags[i], kept sorted. An optional pointed leaf marks the gluing site.
struct TreeDecomposition {
    std::vector<long> parents;
    std::vector<std::vector<Vertex>> bags;
    std::size_t root = 0;
    std::optional<std::size_t> pointed_leaf;

    std::size_t size() const noexcept { return bags.size(); }

    /// Children of every node, in increasing index order.
    std::vector<std::vector<std::size_t>> children() const;

    /// Parent plus children.
    std::size_t degree(std::size_t node) const;

    /// Throws InvalidDecomposition unless parents/bags describe one rooted
    /// tree, bags are sorted sets, and the pointed leaf (if any) is a leaf.
    void check_structure() const;

    friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

/// Builds a decomposition from parent pointers and bags (bags are sorted and
/// deduplicated); the root is the unique node with parent -1.
TreeDecomposition make_decomposition(std::vector<long> parents, std::vector<std::vector<Vertex>> bags,
                                     std::optional<std::size_t> pointed_leaf = std::nullopt);

enum class ViolationKind { kBagVertexOutOfRange, kVertexUncovered, kEdgeUncovered, kConnectivityViolated };

struct Violation {
    ViolationKind kind;
    Vertex u = 0;
    Vertex v = 0;

    std::string describe() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Checks coverage of vertices, coverage of every edge of the symmetric
/// closure, and connectivity of {nodes whose bag contains v} for each v.
ValidationReport validate(const Digraph& g, const TreeDecomposition& t);

/// Largest bag size minus one. Throws EmptyDecomposition on a tree with no nodes.
long width(const TreeDecomposition& t);

/// Splits every node of degree > 3 into a chain of copies of its bag, each
/// copy keeping at most two children. Original node indices are preserved and
/// chain copies are appended.
TreeDecomposition normalize_degree3(const TreeDecomposition& t);

/// T[S(v) <- u]: drops the subtree rooted at v and hangs u where v was.
/// Surviving nodes of t keep their relative order, u's nodes follow; the
/// pointed leaf is u's.
TreeDecomposition subtree_replace(const TreeDecomposition& t, std::size_t v, const TreeDecomposition& u);

/// T ⊕ U at t's pointed leaf. Throws NotALeaf when t has no pointed leaf or
/// it has children.
TreeDecomposition glue_at_leaf(const TreeDecomposition& t, const TreeDecomposition& u);

/// Λ^T(w): left fold of glue_at_leaf over family[w[0]], family[w[1]], ...
TreeDecomposition lambda(std::span<const TreeDecomposition> family, std::span<const std::size_t> word);

/// Decomposition of delta(gamma, word) assembled from per-gadget pointed
/// decompositions whose root bag is P1 and pointed-leaf bag is P2 of the
/// gadget (as sets). Bags are carried through delta's canonical relabelling.
/// Throws BadAnchorBags when an anchor does not match.
TreeDecomposition decomposition_of_delta(std::span<const BiboundariedGraph> gamma,
                                         std::span<const TreeDecomposition> decompositions,
                                         std::span<const std::size_t> word);

inline constexpr std::size_t kTreewidthLimit = 10;

/// Exact treewidth of the symmetric closure, minimised over all elimination
/// orderings (depth-first, cutting branches that cannot improve). -1 for the
/// empty graph. Throws TooLarge above kTreewidthLimit vertices.
long treewidth_exact(const Digraph& g);

/// Decomposition induced by eliminating vertices in `order` on the symmetric
/// closure of g, rooted at the bag of the last vertex.
TreeDecomposition decomposition_from_ordering(const Digraph& g, std::span<const Vertex> order);

/// {"root": i, "parents": [...], "bags": [[...], ...], "pointed_leaf": i | null}
TreeDecomposition parse_decomposition_json(std::string_view text);
std::vector<TreeDecomposition> parse_decompositions_json(std::string_view text);
std::string to_json(const TreeDecomposition& t);

} // namespace succmso
