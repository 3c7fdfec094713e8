#include "succmso/error.hpp"
#include "succmso/reduce.hpp"

#include <algorithm>

namespace succmso {

namespace {

BiboundariedGraph edge_gadget() {
    BiboundariedGraph g;
    g.graph = Digraph(2);
    g.graph.add_edge(0, 1);
    g.p1 = {0};
    g.p2 = {1};
    return g;
}

BiboundariedGraph glue_power(const BiboundariedGraph& g, std::size_t n) {
    std::vector<BiboundariedGraph> family{g};
    std::vector<std::size_t> word(n, 0);
    return delta(family, word);
}

// P1∩P2 together with its out-neighbours.
std::set<Vertex> h_vertices(const BiboundariedGraph& g) {
    std::set<Vertex> out;
    for (Vertex p : port_classes(g).shared) {
        out.insert(p);
        for (Vertex v : g.graph.out(p)) out.insert(v);
    }
    return out;
}

} // namespace

std::vector<BiboundariedGraph> triple_family(const GadgetTriple& triple) {
    return {triple.g1, triple.g1, triple.g2, triple.g3};
}

GadgetQuadruple build_quadruple(const GadgetTriple& triple, const Digraph& omega, HSource source) {
    triple.g1.validate();
    triple.g2.validate();
    triple.g3.validate();
    if (port_classes(triple.g1).shared.size() == triple.g1.size())
        fail(ErrorCode::kConstructionFailed, "COND_II: P1∩P2 covers every vertex of G1");

    const std::set<Vertex> base_h = h_vertices(triple.g1);
    for (std::size_t n = 1; n <= kBuildIterationLimit; ++n) {
        const BiboundariedGraph g1n = glue_power(triple.g1, n);
        const BiboundariedGraph& h_host = source == HSource::kGlued ? g1n : triple.g1;
        const std::set<Vertex> h = source == HSource::kGlued ? h_vertices(g1n) : base_h;
        if (g1n.size() < h.size() + omega.size()) continue;

        // H keeps its labels; omega then padding fill the free labels in order.
        BiboundariedGraph g0;
        g0.graph = Digraph(g1n.size());
        for (Vertex u : h)
            for (Vertex v : h_host.graph.out(u))
                if (h.count(v)) g0.graph.add_edge(u, v);
        std::vector<Vertex> free_labels;
        for (Vertex v = 0; v < g1n.size(); ++v)
            if (!h.count(v)) free_labels.push_back(v);
        for (const auto& [u, v] : omega.edges()) g0.graph.add_edge(free_labels[u], free_labels[v]);
        g0.p1 = g1n.p1;
        g0.p2 = g1n.p2;

        try {
            return normalize_layout({g0, g1n, triple.g2, triple.g3});
        } catch (const Error& e) {
            if (e.code() != ErrorCode::kValidationError && e.code() != ErrorCode::kInvalidGraph) throw;
            std::string what = e.what();
            const std::string prefix = std::string(name(e.code())) + ": ";
            if (what.rfind(prefix, 0) == 0) what = what.substr(prefix.size());
            fail(ErrorCode::kConstructionFailed, what);
        }
    }
    fail(ErrorCode::kConstructionFailed, "no gluing power up to " + std::to_string(kBuildIterationLimit) +
                                             " leaves room for H and omega");
}

PumpReport pump_check(const GadgetTriple& triple, const mso::FormulaPtr& phi, bool expected, std::size_t n_max) {
    const auto family = triple_family(triple);
    PumpReport report;
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<std::size_t> word{2};
        word.insert(word.end(), n, 1);
        word.push_back(3);
        const bool value = mso::eval(delta(family, word).graph, phi);
        report.values.push_back(value);
        if (value != expected && !report.first_mismatch) report.first_mismatch = n;
    }
    return report;
}

namespace gadgets {

std::array<BiboundariedGraph, 4> toy_quadruple() {
    BiboundariedGraph g0 = edge_gadget();
    g0.graph.add_edge(0, 0);
    return {g0, edge_gadget(), edge_gadget(), edge_gadget()};
}

GadgetTriple path_triple() { return {edge_gadget(), edge_gadget(), edge_gadget()}; }

Digraph loop_vertex() {
    Digraph g(1);
    g.add_edge(0, 0);
    return g;
}

} // namespace gadgets

} // namespace succmso
