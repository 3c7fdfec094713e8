#include "succmso/treedec.hpp"

#include "succmso/error.hpp"
#include "succmso/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace succmso {

namespace {

void normalize_bag(std::vector<Vertex>& bag) {
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
}

bool contains(const std::vector<Vertex>& bag, Vertex v) { return std::binary_search(bag.begin(), bag.end(), v); }

} // namespace

std::vector<std::vector<std::size_t>> TreeDecomposition::children() const {
    std::vector<std::vector<std::size_t>> out(size());
    for (std::size_t i = 0; i < size(); ++i)
        if (parents[i] >= 0) out[static_cast<std::size_t>(parents[i])].push_back(i);
    return out;
}

std::size_t TreeDecomposition::degree(std::size_t node) const {
    if (node >= size()) fail(ErrorCode::kIndexOutOfRange, "node " + std::to_string(node) + " out of range");
    std::size_t d = parents[node] >= 0 ? 1 : 0;
    for (long p : parents)
        if (p == static_cast<long>(node)) ++d;
    return d;
}

void TreeDecomposition::check_structure() const {
    const std::size_t n = size();
    if (parents.size() != n) fail(ErrorCode::kInvalidDecomposition, "parents and bags differ in length");
    if (n == 0) return;
    if (root >= n) fail(ErrorCode::kInvalidDecomposition, "root index out of range");
    std::size_t roots = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (parents[i] == -1) {
            ++roots;
            if (i != root) fail(ErrorCode::kInvalidDecomposition, "node " + std::to_string(i) + " has no parent but is not the root");
        } else if (parents[i] < 0 || static_cast<std::size_t>(parents[i]) >= n) {
            fail(ErrorCode::kInvalidDecomposition, "parent of node " + std::to_string(i) + " out of range");
        }
        if (!std::is_sorted(bags[i].begin(), bags[i].end()) ||
            std::adjacent_find(bags[i].begin(), bags[i].end()) != bags[i].end())
            fail(ErrorCode::kInvalidDecomposition, "bag " + std::to_string(i) + " is not a sorted set");
    }
    if (roots != 1) fail(ErrorCode::kInvalidDecomposition, "expected exactly one root");
    // Every node must reach the root within n steps.
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t cur = i;
        std::size_t steps = 0;
        while (cur != root) {
            if (++steps > n) fail(ErrorCode::kInvalidDecomposition, "parent pointers contain a cycle");
            cur = static_cast<std::size_t>(parents[cur]);
        }
    }
    if (pointed_leaf) {
        if (*pointed_leaf >= n) fail(ErrorCode::kInvalidDecomposition, "pointed leaf out of range");
        for (long p : parents)
            if (p == static_cast<long>(*pointed_leaf)) fail(ErrorCode::kInvalidDecomposition, "pointed node is not a leaf");
    }
}

TreeDecomposition make_decomposition(std::vector<long> parents, std::vector<std::vector<Vertex>> bags,
                                     std::optional<std::size_t> pointed_leaf) {
    TreeDecomposition t;
    for (auto& b : bags) normalize_bag(b);
    t.parents = std::move(parents);
    t.bags = std::move(bags);
    t.pointed_leaf = pointed_leaf;
    for (std::size_t i = 0; i < t.parents.size(); ++i)
        if (t.parents[i] == -1) {
            t.root = i;
            break;
        }
    t.check_structure();
    return t;
}

std::string Violation::describe() const {
    switch (kind) {
    case ViolationKind::kBagVertexOutOfRange: return "BagVertexOutOfRange(" + std::to_string(u) + ")";
    case ViolationKind::kVertexUncovered: return "VertexUncovered(" + std::to_string(u) + ")";
    case ViolationKind::kEdgeUncovered: return "EdgeUncovered(" + std::to_string(u) + "," + std::to_string(v) + ")";
    case ViolationKind::kConnectivityViolated: return "ConnectivityViolated(" + std::to_string(u) + ")";
    }
    return "?";
}

ValidationReport validate(const Digraph& g, const TreeDecomposition& t) {
    t.check_structure();
    ValidationReport report;
    const std::size_t n = g.size();
    for (const auto& bag : t.bags)
        for (Vertex v : bag)
            if (v >= n) report.violations.push_back({ViolationKind::kBagVertexOutOfRange, v, 0});

    std::vector<std::vector<std::size_t>> holders(n);
    for (std::size_t i = 0; i < t.size(); ++i)
        for (Vertex v : t.bags[i])
            if (v < n) holders[v].push_back(i);

    for (Vertex v = 0; v < n; ++v)
        if (holders[v].empty()) report.violations.push_back({ViolationKind::kVertexUncovered, v, 0});

    for (const auto& [a, b] : symmetric_closure(g).edges()) {
        if (a > b) continue;
        const bool covered = std::any_of(t.bags.begin(), t.bags.end(),
                                         [&](const auto& bag) { return contains(bag, a) && contains(bag, b); });
        if (!covered) report.violations.push_back({ViolationKind::kEdgeUncovered, a, b});
    }

    // The holders of v form a connected subtree iff exactly one of them has
    // a parent outside the set.
    for (Vertex v = 0; v < n; ++v) {
        std::size_t tops = 0;
        for (std::size_t node : holders[v]) {
            const long p = t.parents[node];
            if (p < 0 || !contains(t.bags[static_cast<std::size_t>(p)], v)) ++tops;
        }
        if (tops > 1) report.violations.push_back({ViolationKind::kConnectivityViolated, v, 0});
    }
    return report;
}

long width(const TreeDecomposition& t) {
    if (t.size() == 0) fail(ErrorCode::kEmptyDecomposition, "a decomposition needs at least one bag");
    std::size_t best = 0;
    for (const auto& b : t.bags) best = std::max(best, b.size());
    return static_cast<long>(best) - 1;
}

TreeDecomposition normalize_degree3(const TreeDecomposition& t) {
    t.check_structure();
    TreeDecomposition out = t;
    const auto kids = t.children();
    for (std::size_t node = 0; node < t.size(); ++node) {
        const std::size_t d = kids[node].size();
        const bool has_parent = t.parents[node] >= 0;
        if (d + (has_parent ? 1 : 0) <= 3) continue;
        // node keeps kids[0]; copies c_1..c_{d-2} each take one child and the
        // last copy takes the final two.
        std::size_t holder = node;
        for (std::size_t j = 1; j + 1 < d; ++j) {
            const std::size_t copy = out.size();
            out.bags.push_back(t.bags[node]);
            out.parents.push_back(static_cast<long>(holder));
            out.parents[kids[node][j]] = static_cast<long>(copy);
            holder = copy;
        }
        out.parents[kids[node][d - 1]] = static_cast<long>(holder);
    }
    return out;
}

TreeDecomposition subtree_replace(const TreeDecomposition& t, std::size_t v, const TreeDecomposition& u) {
    t.check_structure();
    u.check_structure();
    if (v >= t.size()) fail(ErrorCode::kIndexOutOfRange, "node " + std::to_string(v) + " out of range");
    if (u.size() == 0) fail(ErrorCode::kEmptyDecomposition, "replacement tree is empty");

    std::vector<bool> removed(t.size(), false);
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::size_t cur = i;
        while (true) {
            if (cur == v) {
                removed[i] = true;
                break;
            }
            if (t.parents[cur] < 0) break;
            cur = static_cast<std::size_t>(t.parents[cur]);
        }
    }
    std::vector<long> index(t.size(), -1);
    TreeDecomposition out;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!removed[i]) {
            index[i] = static_cast<long>(out.size());
            out.bags.push_back(t.bags[i]);
            out.parents.push_back(t.parents[i]);
        }
    for (auto& p : out.parents)
        if (p >= 0) p = index[static_cast<std::size_t>(p)];
    if (t.parents[v] >= 0) out.root = static_cast<std::size_t>(index[t.root]);

    const std::size_t offset = out.size();
    for (std::size_t i = 0; i < u.size(); ++i) {
        out.bags.push_back(u.bags[i]);
        out.parents.push_back(u.parents[i] >= 0 ? u.parents[i] + static_cast<long>(offset) : -1);
    }
    const long attach = t.parents[v] >= 0 ? index[static_cast<std::size_t>(t.parents[v])] : -1;
    out.parents[offset + u.root] = attach;
    if (attach < 0) out.root = offset + u.root;
    if (u.pointed_leaf) out.pointed_leaf = offset + *u.pointed_leaf;
    return out;
}

TreeDecomposition glue_at_leaf(const TreeDecomposition& t, const TreeDecomposition& u) {
    if (!t.pointed_leaf) fail(ErrorCode::kNotALeaf, "left operand has no pointed leaf");
    const std::size_t leaf = *t.pointed_leaf;
    if (leaf >= t.size()) fail(ErrorCode::kNotALeaf, "pointed leaf out of range");
    for (long p : t.parents)
        if (p == static_cast<long>(leaf)) fail(ErrorCode::kNotALeaf, "pointed node " + std::to_string(leaf) + " has children");
    return subtree_replace(t, leaf, u);
}

TreeDecomposition lambda(std::span<const TreeDecomposition> family, std::span<const std::size_t> word) {
    if (word.empty()) fail(ErrorCode::kEmptyWord, "lambda needs a nonempty word");
    auto member = [&](std::size_t letter) -> const TreeDecomposition& {
        if (letter >= family.size()) fail(ErrorCode::kBadParam, "letter " + std::to_string(letter) + " has no decomposition");
        const auto& d = family[letter];
        if (!d.pointed_leaf) fail(ErrorCode::kNotALeaf, "decomposition " + std::to_string(letter) + " has no pointed leaf");
        return d;
    };
    TreeDecomposition acc = member(word[0]);
    acc.check_structure();
    for (std::size_t i = 1; i < word.size(); ++i) acc = glue_at_leaf(acc, member(word[i]));
    return acc;
}

TreeDecomposition decomposition_of_delta(std::span<const BiboundariedGraph> gamma,
                                         std::span<const TreeDecomposition> decompositions,
                                         std::span<const std::size_t> word) {
    if (decompositions.size() != gamma.size())
        fail(ErrorCode::kBadParam, "need one decomposition per gadget");
    const DeltaResult d = delta_with_maps(gamma, word);

    std::vector<TreeDecomposition> factors;
    factors.reserve(word.size());
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
        const std::size_t letter = word[pos];
        const TreeDecomposition& src = decompositions[letter];
        src.check_structure();
        if (!src.pointed_leaf) fail(ErrorCode::kBadAnchorBags, "decomposition " + std::to_string(letter) + " has no pointed leaf");
        std::vector<Vertex> p1 = gamma[letter].p1;
        std::vector<Vertex> p2 = gamma[letter].p2;
        normalize_bag(p1);
        normalize_bag(p2);
        if (src.bags[src.root] != p1)
            fail(ErrorCode::kBadAnchorBags, "root bag of decomposition " + std::to_string(letter) + " is not P1");
        if (src.bags[*src.pointed_leaf] != p2)
            fail(ErrorCode::kBadAnchorBags, "pointed-leaf bag of decomposition " + std::to_string(letter) + " is not P2");

        TreeDecomposition mapped = src;
        for (auto& bag : mapped.bags) {
            for (auto& v : bag) {
                if (v >= d.factor_maps[pos].size())
                    fail(ErrorCode::kBadAnchorBags, "bag vertex " + std::to_string(v) + " outside gadget " + std::to_string(letter));
                v = d.factor_maps[pos][v];
            }
            normalize_bag(bag);
        }
        factors.push_back(std::move(mapped));
    }
    std::vector<std::size_t> positions(word.size());
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    return lambda(factors, positions);
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> undirected_adjacency(const Digraph& g) {
    std::vector<Mask> adj(g.size(), 0);
    for (const auto& [a, b] : symmetric_closure(g).edges()) adj[a] |= Mask{1} << b;
    return adj;
}

// Depth-first search over elimination orderings. `adj` is the current fill
// graph restricted to uneliminated vertices; branches whose running width
// already reaches `best` are cut.
void search_orderings(std::vector<Mask> adj, Mask remaining, long so_far, std::atomic<long>& best) {
    if (remaining == 0) {
        long cur = best.load();
        while (so_far < cur && !best.compare_exchange_weak(cur, so_far)) {}
        return;
    }
    for (Mask rest = remaining; rest != 0; rest &= rest - 1) {
        const Vertex v = static_cast<Vertex>(__builtin_ctz(rest));
        const Mask nb = adj[v] & remaining & ~(Mask{1} << v);
        const long w = std::max(so_far, static_cast<long>(__builtin_popcount(nb)));
        if (w >= best.load()) continue;
        std::vector<Mask> next = adj;
        for (Mask m = nb; m != 0; m &= m - 1) next[__builtin_ctz(m)] |= nb & ~(Mask{1} << __builtin_ctz(m));
        search_orderings(std::move(next), remaining & ~(Mask{1} << v), w, best);
    }
}

} // namespace

long treewidth_exact(const Digraph& g) {
    const std::size_t n = g.size();
    if (n > kTreewidthLimit)
        fail(ErrorCode::kTooLarge, "treewidth_exact handles at most " + std::to_string(kTreewidthLimit) + " vertices");
    if (n == 0) return -1;
    const auto adj = undirected_adjacency(g);
    const Mask all = (Mask{1} << n) - 1;
    std::atomic<long> best(static_cast<long>(n) - 1);
    if (n == 1) return 0;
    parallel_for(n, default_threads(), [&](std::size_t first) {
        const Vertex v = static_cast<Vertex>(first);
        const Mask nb = adj[v] & ~(Mask{1} << v);
        const long w = __builtin_popcount(nb);
        if (w >= best.load()) return;
        std::vector<Mask> next = adj;
        for (Mask m = nb; m != 0; m &= m - 1) next[__builtin_ctz(m)] |= nb & ~(Mask{1} << __builtin_ctz(m));
        search_orderings(std::move(next), all & ~(Mask{1} << v), w, best);
    });
    return best.load();
}

TreeDecomposition decomposition_from_ordering(const Digraph& g, std::span<const Vertex> order) {
    const std::size_t n = g.size();
    if (order.size() != n) fail(ErrorCode::kBadParam, "ordering must list every vertex once");
    std::vector<long> position(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (order[i] >= n || position[order[i]] >= 0) fail(ErrorCode::kBadParam, "ordering must list every vertex once");
        position[order[i]] = static_cast<long>(i);
    }
    if (n == 0) return make_decomposition({-1}, {{}});

    std::vector<std::set<Vertex>> fill(n);
    for (const auto& [a, b] : symmetric_closure(g).edges()) fill[a].insert(b);

    std::vector<std::vector<Vertex>> bags(n);
    std::vector<long> parents(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = order[i];
        std::vector<Vertex> later;
        for (Vertex w : fill[v])
            if (position[w] > static_cast<long>(i)) later.push_back(w);
        for (Vertex a : later)
            for (Vertex b : later)
                if (a != b) fill[a].insert(b);
        bags[i] = later;
        bags[i].push_back(v);
        if (i + 1 == n) break;
        long parent = static_cast<long>(n) - 1;
        for (Vertex w : later) parent = std::min(parent, position[w]);
        parents[i] = parent;
    }
    return make_decomposition(std::move(parents), std::move(bags));
}

} // namespace succmso
