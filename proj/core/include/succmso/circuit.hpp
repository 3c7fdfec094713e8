#pragma once

#include "succmso/bigint.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace succmso {

using GateId = std::uint32_t;

enum class GateKind : std::uint8_t { kInput, kConst, kNot, kAnd, kOr };

/// One gate record. For kInput `a` is the wire index, for kConst `a` is the
/// constant bit; kNot reads `a`; kAnd/kOr read `a` and `b`.
struct Gate {
    GateKind kind = GateKind::kConst;
    GateId a = 0;
    GateId b = 0;

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Adjacency circuit on 2n input wires with one output.
///
/// Wire convention: wires 0..n-1 carry x least-significant-bit first,
/// wires n..2n-1 carry y least-significant-bit first. Gates are stored in
/// topological order and the object is immutable once constructed.
class BoolCircuit {
  public:
    /// Validates the invariants; throws TopologyError on a forward or
    /// self reference and BadParam on an out-of-range wire or output.
    BoolCircuit(std::size_t label_bits, std::vector<Gate> gates, GateId output);

    std::size_t label_bits() const noexcept { return label_bits_; }
    std::span<const Gate> gates() const noexcept { return gates_; }
    GateId output() const noexcept { return output_; }

    /// Throws InputOutOfRange unless x, y < 2^label_bits.
    bool eval(const BigInt& x, const BigInt& y) const;
    bool eval(std::uint64_t x, std::uint64_t y) const;

    /// Evaluates 64 (x, y) pairs at once: lane i uses xs[i], ys[i].
    /// Only valid when label_bits <= 64; no range checking.
    std::uint64_t eval_lanes(std::span<const std::uint64_t, 64> xs, std::span<const std::uint64_t, 64> ys,
                             std::size_t lanes) const;

    friend bool operator==(const BoolCircuit&, const BoolCircuit&) = default;

  private:
    std::size_t label_bits_;
    std::vector<Gate> gates_;
    GateId output_;
};

std::size_t gate_count(const BoolCircuit& circuit);

/// Gates other than input records.
std::size_t logic_gate_count(const BoolCircuit& circuit);

/// Circuit file format: {"version":1,"label_bits":n,"gates":[...],"output":i}.
std::string serialize(const BoolCircuit& circuit);
BoolCircuit parse_circuit(std::string_view text);

/// Multi-bit value threaded through synthesis, least-significant bit first.
struct WireBundle {
    std::vector<GateId> bits;

    std::size_t width() const noexcept { return bits.size(); }
    GateId operator[](std::size_t i) const { return bits[i]; }
};

/// Append-only builder for BoolCircuit.
///
/// Folds constants on the fly (and(x,0) = 0, not(not x) = x, ...) and
/// shares input and constant records, so synthesized primitives never emit
/// gates whose value is already known.
class CircuitBuilder {
  public:
    explicit CircuitBuilder(std::size_t label_bits);

    std::size_t label_bits() const noexcept { return label_bits_; }
    std::size_t size() const noexcept { return gates_.size(); }

    GateId input(std::size_t wire);
    GateId constant(bool value);
    GateId not_(GateId g);
    GateId and_(GateId g, GateId h);
    GateId or_(GateId g, GateId h);

    /// Gate-level constant value, if `g` is a folded constant.
    std::optional<bool> constant_value(GateId g) const;

    WireBundle x_bundle();
    WireBundle y_bundle();
    WireBundle constant_bundle(const BigInt& value, std::size_t width);

    BoolCircuit finish(GateId output) &&;

  private:
    GateId push(Gate gate);
    void check(GateId g) const;

    std::size_t label_bits_;
    std::vector<Gate> gates_;
    std::vector<GateId> input_ids_;
    GateId const_ids_[2];
};

} // namespace succmso
