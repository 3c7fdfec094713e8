#include "succmso/reduce.hpp"

#include "succmso/error.hpp"
#include "succmso/synth.hpp"

#include <algorithm>

namespace succmso {

BigInt GadgetQuadruple::last_copy(std::size_t s) const { return pow2(s) - 1; }

BigInt GadgetQuadruple::vertex_count(std::size_t s) const { return BigInt(n2) + pow2(s) * n1 + n3; }

BigInt GadgetQuadruple::shared_label(std::size_t s, std::size_t t) const {
    return BigInt(n2) + pow2(s) * n1 + k_only + t;
}

namespace {

[[noreturn]] void reject(const char* condition, const std::string& detail) {
    fail(ErrorCode::kValidationError, std::string(condition) + ": " + detail);
}

std::vector<long> port_positions(const std::vector<Vertex>& ports, std::size_t n) {
    std::vector<long> pos(n, -1);
    for (std::size_t i = 0; i < ports.size(); ++i) pos[ports[i]] = static_cast<long>(i);
    return pos;
}

void check_conditions(const std::array<BiboundariedGraph, 4>& g, const char* stage) {
    const std::string where = std::string(" (") + stage + ")";
    if (g[0].size() != g[1].size())
        reject("COND_I", "|G0| = " + std::to_string(g[0].size()) + " but |G1| = " + std::to_string(g[1].size()) + where);
    const auto c0 = port_classes(g[0]);
    const auto c1 = port_classes(g[1]);
    if (c0.shared != c1.shared) reject("COND_II", "P1∩P2 differs between G0 and G1" + where);
    if (c1.shared.size() == g[1].size()) reject("COND_II", "P1∩P2 covers every vertex of G1" + where);
    for (Vertex p : c0.shared)
        if (g[0].graph.out(p) != g[1].graph.out(p))
            reject("COND_III", "out-neighbourhoods of shared port " + std::to_string(p) + " differ" + where);
}

BiboundariedGraph apply_relabel(const BiboundariedGraph& g, const std::vector<Vertex>& relabel) {
    BiboundariedGraph out;
    out.graph = Digraph(g.size());
    for (const auto& [u, v] : g.graph.edges()) out.graph.add_edge(relabel[u], relabel[v]);
    for (Vertex v : g.p1) out.p1.push_back(relabel[v]);
    for (Vertex v : g.p2) out.p2.push_back(relabel[v]);
    return out;
}

} // namespace

GadgetQuadruple normalize_layout(const std::array<BiboundariedGraph, 4>& gadgets) {
    for (const auto& g : gadgets) g.validate();
    const std::size_t k = gadgets[0].port_count();
    for (std::size_t i = 1; i < 4; ++i)
        if (gadgets[i].port_count() != k)
            reject("PORT_ALIGNMENT", "G" + std::to_string(i) + " has " + std::to_string(gadgets[i].port_count()) +
                                         " ports, G0 has " + std::to_string(k));
    check_conditions(gadgets, "input labels");

    std::array<PortClasses, 4> classes;
    std::array<std::vector<long>, 4> pos1;
    std::array<std::vector<long>, 4> pos2;
    for (std::size_t i = 0; i < 4; ++i) {
        classes[i] = port_classes(gadgets[i]);
        pos1[i] = port_positions(gadgets[i].p1, gadgets[i].size());
        pos2[i] = port_positions(gadgets[i].p2, gadgets[i].size());
    }
    const std::size_t k_shared = classes[1].shared.size();
    for (std::size_t i = 0; i < 4; ++i)
        if (classes[i].shared.size() != k_shared)
            reject("PORT_ALIGNMENT", "G" + std::to_string(i) + " has " + std::to_string(classes[i].shared.size()) +
                                         " shared ports, G1 has " + std::to_string(k_shared));

    // Shared index set Σ: positions that shared ports occupy in the glued faces.
    auto indices = [&](std::size_t i, const std::vector<long>& pos) {
        std::vector<long> out;
        for (Vertex p : classes[i].shared) out.push_back(pos[p]);
        std::sort(out.begin(), out.end());
        return out;
    };
    for (std::size_t i = 0; i < 2; ++i)
        for (Vertex p : classes[i].shared)
            if (pos1[i][p] != pos2[i][p])
                reject("PORT_ALIGNMENT", "shared port " + std::to_string(p) + " of G" + std::to_string(i) +
                                             " sits at different positions in P1 and P2");
    const auto sigma = indices(1, pos1[1]);
    if (indices(0, pos1[0]) != sigma) reject("PORT_ALIGNMENT", "shared port positions differ between G0 and G1");
    if (indices(2, pos2[2]) != sigma) reject("PORT_ALIGNMENT", "shared ports of G2 do not sit at the shared positions of P2");
    if (indices(3, pos1[3]) != sigma) reject("PORT_ALIGNMENT", "shared ports of G3 do not sit at the shared positions of P1");

    GadgetQuadruple quad;
    quad.k = k;
    quad.k_shared = k_shared;
    quad.k_only = k - k_shared;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& g = gadgets[i];
        const std::size_t n = g.size();
        std::vector<Vertex> relabel(n);
        Vertex next = 0;
        auto place_only_p1 = [&] {
            for (Vertex v : g.p1)
                if (pos2[i][v] < 0) relabel[v] = next++;
        };
        auto place_only_p2 = [&] {
            for (Vertex v : g.p2)
                if (pos1[i][v] < 0) relabel[v] = next++;
        };
        // P1∩P2 in order of shared position; G2 reads it from P2, the others from P1.
        auto place_shared = [&] {
            const auto& face = i == 2 ? g.p2 : g.p1;
            const auto& other = i == 2 ? pos1[i] : pos2[i];
            for (Vertex v : face)
                if (other[v] >= 0) relabel[v] = next++;
        };
        auto place_interior = [&] {
            for (Vertex v = 0; v < n; ++v)
                if (pos1[i][v] < 0 && pos2[i][v] < 0) relabel[v] = next++;
        };
        place_only_p1();
        if (i == 3) {
            place_shared();
            place_interior();
            place_only_p2();
        } else {
            place_interior();
            place_only_p2();
            place_shared();
        }
        quad.g[i] = apply_relabel(g, relabel);
        quad.relabel[i] = std::move(relabel);
    }
    check_conditions(quad.g, "layout labels");

    quad.n1 = quad.g[1].size() - k;
    quad.n2 = quad.g[2].size() - k;
    quad.n3 = quad.g[3].size();
    quad.validated = true;
    return quad;
}

namespace {

// δ^q_0 = δ^q_1 as a formula on integers, branch chosen by r.
BigInt delta01(const GadgetQuadruple& quad, std::size_t s, const BigInt& q, const BigInt& r) {
    if (r < BigInt(quad.g[1].size() - quad.k_shared)) return BigInt(quad.n2) + q * quad.n1 + r;
    return BigInt(quad.n2) + quad.last_copy(s) * quad.n1 + r;
}

} // namespace

BigInt delta_map(const GadgetQuadruple& quad, std::size_t s, std::size_t j, const BigInt& q, std::size_t r) {
    if (j > 3) fail(ErrorCode::kIndexOutOfRange, "gadget index " + std::to_string(j) + " outside 0..3");
    if (r >= quad.g[j].size())
        fail(ErrorCode::kIndexOutOfRange, "vertex " + std::to_string(r) + " outside G" + std::to_string(j));
    switch (j) {
    case 0:
    case 1:
        if (q < -1 || q > pow2(s)) fail(ErrorCode::kIndexOutOfRange, "copy index " + to_decimal(q) + " outside [-1, 2^s]");
        return delta01(quad, s, q, r);
    case 2:
        if (r < quad.g[2].size() - quad.k_shared) return BigInt(r);
        return delta2_high_outer(quad, s, r);
    default: return BigInt(quad.n2) + pow2(s) * quad.n1 + r;
    }
}

BigInt delta2_high_outer(const GadgetQuadruple& quad, std::size_t s, std::size_t r) {
    return delta01(quad, s, quad.last_copy(s), r) + BigInt(quad.g[1].size()) - BigInt(quad.g[2].size());
}

BigInt delta2_high_inner(const GadgetQuadruple& quad, std::size_t s, std::size_t r) {
    return delta01(quad, s, quad.last_copy(s), BigInt(r) + BigInt(quad.g[1].size()) - BigInt(quad.g[2].size()));
}

std::vector<std::size_t> sat_word(const CnfInstance& s) {
    if (s.vars > 20) fail(ErrorCode::kTooLarge, "S̄ is only expanded for s <= 20");
    std::vector<std::size_t> word{2};
    const std::uint64_t count = std::uint64_t{1} << s.vars;
    for (std::uint64_t q = 0; q < count; ++q) word.push_back(evaluate(s, q) ? 0 : 1);
    word.push_back(3);
    return word;
}

std::set<BigInt> succ_ref(const GadgetQuadruple& quad, const CnfInstance& s, const BigInt& x) {
    if (!quad.validated) fail(ErrorCode::kNotValidated, "quadruple has not been through normalize_layout");
    const std::size_t bits = s.vars;
    const BigInt n_total = quad.vertex_count(bits);
    if (x < 0 || x >= n_total) fail(ErrorCode::kIndexOutOfRange, "label " + to_decimal(x) + " outside [0, " + to_decimal(n_total) + ")");

    std::set<BigInt> out;
    auto add_row = [&](std::size_t j, const BigInt& q, std::size_t r) {
        for (Vertex v : quad.g[j].graph.out(static_cast<Vertex>(r))) out.insert(delta_map(quad, bits, j, q, v));
    };
    const BigInt copies_end = BigInt(quad.n2) + pow2(bits) * quad.n1;

    if (x < quad.n2) {
        add_row(2, 0, static_cast<std::size_t>(x));
        return out;
    }
    if (x < copies_end) {
        const BigInt xb = x - quad.n2;
        const BigInt q = xb / quad.n1;
        const auto r = static_cast<std::size_t>(xb % quad.n1);
        const std::size_t j = sbar_at(s, q) ? 1 : 0;
        add_row(j, q, r);
        if (r < quad.k_only) {
            const std::size_t i = q == 0 ? 2 : (sbar_at(s, q - 1) ? 1 : 0);
            add_row(i, q - 1, r + (i == 2 ? quad.n2 : quad.n1));
        }
        return out;
    }
    const auto r = static_cast<std::size_t>(x - copies_end);
    add_row(3, 0, r);
    if (r < quad.k_only) {
        const BigInt last = quad.last_copy(bits);
        add_row(sbar_at(s, last) ? 1 : 0, last, r + quad.n1);
    } else if (r < quad.k) {
        add_row(2, 0, r + quad.n2);
        for (BigInt t = 0; t <= quad.last_copy(bits); ++t) add_row(1, t, r + quad.n1);
    }
    return out;
}

Sgr reduce_loop(const CnfInstance& s) {
    s.validate();
    CircuitBuilder b(s.vars);
    const auto x = b.x_bundle();
    const auto y = b.y_bundle();
    const GateId holds = synth::cnf_eval(b, s.clauses, x);
    const GateId stay = synth::eq(b, x, y);
    const auto next = synth::resize(b, synth::add_const(b, x, 1), s.vars);
    const GateId step = synth::eq(b, y, next);
    const GateId out = synth::select(b, holds, stay, step);
    return Sgr(pow2(s.vars), std::move(b).finish(out));
}

Sgr reduce_clique(const CnfInstance& s) {
    s.validate();
    CircuitBuilder b(s.vars);
    const auto x = b.x_bundle();
    const auto y = b.y_bundle();
    const GateId holds = synth::cnf_eval(b, s.clauses, x);
    const GateId out = b.or_(b.not_(holds), synth::eq(b, x, y));
    return Sgr(pow2(s.vars), std::move(b).finish(out));
}

} // namespace succmso
