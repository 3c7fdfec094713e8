#pragma once

#include "succmso/bigint.hpp"
#include "succmso/cnf.hpp"
#include "succmso/graph.hpp"
#include "succmso/mso.hpp"
#include "succmso/sgr.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace succmso {

/// Four gadgets G0..G3 in the normalized layout, with the layout constants.
/// Only normalize_layout produces a quadruple with `validated` set; compile
/// refuses anything else.
struct GadgetQuadruple {
    std::array<BiboundariedGraph, 4> g;
    std::size_t k = 0;        ///< port count
    std::size_t k_only = 0;   ///< k': ports in exactly one of P1, P2
    std::size_t k_shared = 0; ///< k'': ports in both
    std::size_t n1 = 0;       ///< |G1| - k
    std::size_t n2 = 0;       ///< |G2| - k
    std::size_t n3 = 0;       ///< |G3|
    /// relabel[i][old] = new label of vertex `old` of the input gadget i.
    std::array<std::vector<Vertex>, 4> relabel;
    bool validated = false;

    /// ℓ̂ = 2^s - 1, the index of the last G0/G1 copy.
    BigInt last_copy(std::size_t s) const;
    /// N = n2 + 2^s * n1 + n3.
    BigInt vertex_count(std::size_t s) const;
    /// Label of shared vertex t: n2 + 2^s * n1 + k' + t.
    BigInt shared_label(std::size_t s, std::size_t t) const;
};

/// Checks conditions (i)-(iii) on the given labels, checks that ports align
/// positionally across the four gadgets, then relabels every gadget into the
/// layout: for G0..G2, P1\P2 first, then interior vertices, then P2\P1, then
/// P1∩P2; for G3, P1\P2, then P1∩P2, then interior, then P2\P1. Port-only
/// classes are ordered by their position in the port sequence. Throws
/// ValidationError whose message starts with COND_I, COND_II, COND_III or
/// PORT_ALIGNMENT.
GadgetQuadruple normalize_layout(const std::array<BiboundariedGraph, 4>& gadgets);

/// Label of vertex r of gadget j in copy q. For j in {0, 1}, q ranges over
/// [-1, 2^s]; for j in {2, 3}, q is ignored. Throws IndexOutOfRange.
BigInt delta_map(const GadgetQuadruple& quad, std::size_t s, std::size_t j, const BigInt& q, std::size_t r);

/// High range of δ2 read as δ^ℓ̂_1(r) + |G1| - |G2| and as δ^ℓ̂_1(r + |G1| - |G2|).
BigInt delta2_high_outer(const GadgetQuadruple& quad, std::size_t s, std::size_t r);
BigInt delta2_high_inner(const GadgetQuadruple& quad, std::size_t s, std::size_t r);

/// Out-neighbours of label x in Δ(2·S̄·3) under the layout labelling, by
/// direct integer arithmetic. Throws IndexOutOfRange unless 0 <= x < N.
std::set<BigInt> succ_ref(const GadgetQuadruple& quad, const CnfInstance& s, const BigInt& x);

/// Word 2·S̄·3 over letters {0, 1, 2, 3}. Throws TooLarge when s > 20.
std::vector<std::size_t> sat_word(const CnfInstance& s);

/// Circuit for Δ(2·S̄·3) with N = vertex_count(s) and label width
/// max(1, bit_length(N - 1)). Throws NotValidated.
Sgr compile(const GadgetQuadruple& quad, const CnfInstance& s);

/// N = 2^s; x→x when S(x) holds, otherwise x→x+1 (mod 2^s).
Sgr reduce_loop(const CnfInstance& s);

/// N = 2^s; C(x, y) = ¬S(x) ∨ x = y. A clique iff S is unsatisfiable.
Sgr reduce_clique(const CnfInstance& s);

struct GadgetTriple {
    BiboundariedGraph g1;
    BiboundariedGraph g2;
    BiboundariedGraph g3;
};

/// Where build_quadruple takes H from: the n-fold gluing G1' (default) or G1.
enum class HSource { kGlued, kBase };

inline constexpr std::size_t kBuildIterationLimit = 64;

/// G0' = H ⊔ omega padded with isolated vertices to |G1'|, where G1' is the
/// n-fold gluing of G1 for the least n with |G1'| >= |H| + |omega|, and H is
/// spanned by P1∩P2 and its out-neighbours. H keeps its G1' labels; omega and
/// the padding take the remaining labels in ascending order. G0' uses G1'
/// ports. Throws ConstructionFailed when P1∩P2 = V(G1), when no n up to
/// kBuildIterationLimit suffices, or when the result fails normalize_layout.
GadgetQuadruple build_quadruple(const GadgetTriple& triple, const Digraph& omega, HSource source = HSource::kGlued);

struct PumpReport {
    std::vector<bool> values;                  ///< φ on Δ(2·1^n·3), n = 0..n_max
    std::optional<std::size_t> first_mismatch; ///< least n with values[n] != expected
    bool ok() const noexcept { return !first_mismatch; }
};

/// Evaluates φ on Δ(2·1^n·3) for n = 0..n_max.
PumpReport pump_check(const GadgetTriple& triple, const mso::FormulaPtr& phi, bool expected, std::size_t n_max);

/// Family {G1, G1, G2, G3} so that digits of a word over {1, 2, 3} index it.
std::vector<BiboundariedGraph> triple_family(const GadgetTriple& triple);

namespace gadgets {
/// G0 = {0→0, 0→1}, G1 = G2 = G3 = edge 0→1, all with p1 = (0), p2 = (1).
std::array<BiboundariedGraph, 4> toy_quadruple();
/// G1 = G2 = G3 = edge 0→1 with p1 = (0), p2 = (1).
GadgetTriple path_triple();
/// A single vertex with a loop.
Digraph loop_vertex();
} // namespace gadgets

} // namespace succmso
