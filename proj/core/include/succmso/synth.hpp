#pragma once

/// Gate-level synthesis primitives.
///
/// Every primitive appends gates to a CircuitBuilder and returns the gate or
/// bundle carrying its result. Arithmetic is on unsigned bundles (LSB first).
/// Result widths are chosen so that no primitive silently loses bits, except
/// `sub_const`, which is explicitly modular.

#include "succmso/bigint.hpp"
#include "succmso/circuit.hpp"

#include <utility>
#include <vector>

namespace succmso::synth {

/// Upper bound on bundle widths; anything wider is rejected with BadParam.
inline constexpr std::size_t kMaxWidth = 1U << 16;

/// CNF clause: nonzero literals, +v / -v for variable v (1-based).
using Clause = std::vector<int>;

GateId and_all(CircuitBuilder& b, std::span<const GateId> gates);
GateId or_all(CircuitBuilder& b, std::span<const GateId> gates);

/// Two-input multiplexer: `select ? when_true : when_false`.
GateId select(CircuitBuilder& b, GateId sel, GateId when_true, GateId when_false);

/// Zero-extends or truncates.
WireBundle resize(CircuitBuilder& b, const WireBundle& bundle, std::size_t width);

GateId eq_const(CircuitBuilder& b, const WireBundle& bundle, const BigInt& c);
GateId eq(CircuitBuilder& b, const WireBundle& lhs, const WireBundle& rhs);
GateId less_const(CircuitBuilder& b, const WireBundle& bundle, const BigInt& c);

/// Sum of two bundles, width max(w_a, w_b) + 1.
WireBundle add(CircuitBuilder& b, const WireBundle& lhs, const WireBundle& rhs);

/// bundle + c, exact: width max(w, bits(c)) + 1.
WireBundle add_const(CircuitBuilder& b, const WireBundle& bundle, const BigInt& c);

/// (bundle - c) mod 2^w, same width as the input.
WireBundle sub_const(CircuitBuilder& b, const WireBundle& bundle, const BigInt& c);

/// bundle * c by shift-and-add, exact: width w + bits(c).
WireBundle mul_const(CircuitBuilder& b, const WireBundle& bundle, const BigInt& c);

struct DivMod {
    WireBundle quotient;   ///< width w
    WireBundle remainder;  ///< width max(1, bits(d - 1))
};

/// Restoring long division by a positive constant, one conditional
/// subtraction per dividend bit. Throws BadParam when d <= 0.
DivMod divmod_const(CircuitBuilder& b, const WireBundle& bundle, const BigInt& d);

/// table[select value]; table.size() must be 2^select.size(). Output width is
/// the widest entry; narrower entries are zero-extended.
WireBundle mux(CircuitBuilder& b, std::span<const GateId> select, std::span<const WireBundle> table);

/// Value of the CNF when variable v is read from bundle bit v-1. The empty
/// clause list evaluates to true. Throws BadParam when a literal is zero or
/// reads beyond the bundle.
GateId cnf_eval(CircuitBuilder& b, std::span<const Clause> clauses, const WireBundle& vars);

} // namespace succmso::synth
