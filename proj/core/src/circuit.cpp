#include "succmso/circuit.hpp"

#include "succmso/error.hpp"

#include <limits>

namespace succmso {

namespace {

constexpr GateId kNone = std::numeric_limits<GateId>::max();

template <typename Bit>
bool run(std::span<const Gate> gates, GateId output, Bit&& wire_bit) {
    std::vector<std::uint8_t> value(gates.size());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        switch (g.kind) {
        case GateKind::kInput: value[i] = wire_bit(g.a); break;
        case GateKind::kConst: value[i] = static_cast<std::uint8_t>(g.a); break;
        case GateKind::kNot: value[i] = !value[g.a]; break;
        case GateKind::kAnd: value[i] = value[g.a] & value[g.b]; break;
        case GateKind::kOr: value[i] = value[g.a] | value[g.b]; break;
        }
    }
    return value[output] != 0;
}

} // namespace

BoolCircuit::BoolCircuit(std::size_t label_bits, std::vector<Gate> gates, GateId output)
    : label_bits_(label_bits), gates_(std::move(gates)), output_(output) {
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        const Gate& g = gates_[i];
        auto earlier = [&](GateId ref) {
            if (ref >= i)
                throw Error(ErrorCode::kTopologyError,
                            "gate " + std::to_string(i) + " references gate " + std::to_string(ref));
        };
        switch (g.kind) {
        case GateKind::kInput:
            if (g.a >= 2 * label_bits_)
                fail(ErrorCode::kBadParam, "gate " + std::to_string(i) + " reads wire " + std::to_string(g.a) +
                                               " but the circuit has " + std::to_string(2 * label_bits_) + " wires");
            break;
        case GateKind::kConst:
            if (g.a > 1) fail(ErrorCode::kBadParam, "constant gate " + std::to_string(i) + " is not 0/1");
            break;
        case GateKind::kNot: earlier(g.a); break;
        case GateKind::kAnd:
        case GateKind::kOr:
            earlier(g.a);
            earlier(g.b);
            break;
        }
    }
    if (output_ >= gates_.size()) fail(ErrorCode::kBadParam, "output index " + std::to_string(output_) + " out of range");
}

bool BoolCircuit::eval(const BigInt& x, const BigInt& y) const {
    const BigInt limit = pow2(label_bits_);
    if (x < 0 || y < 0 || x >= limit || y >= limit)
        fail(ErrorCode::kInputOutOfRange, "labels must lie in [0, 2^" + std::to_string(label_bits_) + ")");
    const std::size_t n = label_bits_;
    return run(gates_, output_, [&](GateId wire) -> std::uint8_t {
        return wire < n ? boost::multiprecision::bit_test(x, wire) : boost::multiprecision::bit_test(y, wire - n);
    });
}

bool BoolCircuit::eval(std::uint64_t x, std::uint64_t y) const {
    const std::size_t n = label_bits_;
    if (n < 64 && ((x >> n) != 0 || (y >> n) != 0))
        fail(ErrorCode::kInputOutOfRange, "labels must lie in [0, 2^" + std::to_string(n) + ")");
    return run(gates_, output_, [&](GateId wire) -> std::uint8_t {
        const std::uint64_t word = wire < n ? x : y;
        const std::size_t bit = wire < n ? wire : wire - n;
        return bit < 64 ? static_cast<std::uint8_t>((word >> bit) & 1U) : 0;
    });
}

std::uint64_t BoolCircuit::eval_lanes(std::span<const std::uint64_t, 64> xs, std::span<const std::uint64_t, 64> ys,
                                      std::size_t lanes) const {
    const std::size_t n = label_bits_;
    std::vector<std::uint64_t> value(gates_.size());
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        const Gate& g = gates_[i];
        switch (g.kind) {
        case GateKind::kInput: {
            const auto& words = g.a < n ? xs : ys;
            const std::size_t bit = g.a < n ? g.a : g.a - n;
            std::uint64_t lane_bits = 0;
            if (bit < 64)
                for (std::size_t l = 0; l < lanes; ++l) lane_bits |= ((words[l] >> bit) & 1U) << l;
            value[i] = lane_bits;
            break;
        }
        case GateKind::kConst: value[i] = g.a ? ~std::uint64_t{0} : 0; break;
        case GateKind::kNot: value[i] = ~value[g.a]; break;
        case GateKind::kAnd: value[i] = value[g.a] & value[g.b]; break;
        case GateKind::kOr: value[i] = value[g.a] | value[g.b]; break;
        }
    }
    const std::uint64_t mask = lanes >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << lanes) - 1);
    return value[output_] & mask;
}

std::size_t gate_count(const BoolCircuit& circuit) { return circuit.gates().size(); }

std::size_t logic_gate_count(const BoolCircuit& circuit) {
    std::size_t count = 0;
    for (const Gate& g : circuit.gates())
        if (g.kind != GateKind::kInput) ++count;
    return count;
}

// ---------------------------------------------------------------------------

CircuitBuilder::CircuitBuilder(std::size_t label_bits)
    : label_bits_(label_bits), input_ids_(2 * label_bits, kNone), const_ids_{kNone, kNone} {}

GateId CircuitBuilder::push(Gate gate) {
    if (gates_.size() >= kNone - 1) fail(ErrorCode::kBadParam, "circuit exceeds the gate index space");
    gates_.push_back(gate);
    return static_cast<GateId>(gates_.size() - 1);
}

void CircuitBuilder::check(GateId g) const {
    if (g >= gates_.size()) fail(ErrorCode::kBadParam, "reference to nonexistent gate " + std::to_string(g));
}

GateId CircuitBuilder::input(std::size_t wire) {
    if (wire >= input_ids_.size())
        fail(ErrorCode::kBadParam, "wire " + std::to_string(wire) + " out of range");
    if (input_ids_[wire] == kNone) input_ids_[wire] = push({GateKind::kInput, static_cast<GateId>(wire), 0});
    return input_ids_[wire];
}

GateId CircuitBuilder::constant(bool value) {
    GateId& id = const_ids_[value ? 1 : 0];
    if (id == kNone) id = push({GateKind::kConst, value ? 1U : 0U, 0});
    return id;
}

std::optional<bool> CircuitBuilder::constant_value(GateId g) const {
    check(g);
    if (gates_[g].kind != GateKind::kConst) return std::nullopt;
    return gates_[g].a != 0;
}

GateId CircuitBuilder::not_(GateId g) {
    check(g);
    if (auto c = constant_value(g)) return constant(!*c);
    if (gates_[g].kind == GateKind::kNot) return gates_[g].a;
    return push({GateKind::kNot, g, 0});
}

GateId CircuitBuilder::and_(GateId g, GateId h) {
    check(g);
    check(h);
    if (g == h) return g;
    auto cg = constant_value(g);
    auto ch = constant_value(h);
    if (cg) return *cg ? h : constant(false);
    if (ch) return *ch ? g : constant(false);
    return push({GateKind::kAnd, g, h});
}

GateId CircuitBuilder::or_(GateId g, GateId h) {
    check(g);
    check(h);
    if (g == h) return g;
    auto cg = constant_value(g);
    auto ch = constant_value(h);
    if (cg) return *cg ? constant(true) : h;
    if (ch) return *ch ? constant(true) : g;
    return push({GateKind::kOr, g, h});
}

WireBundle CircuitBuilder::x_bundle() {
    WireBundle out;
    for (std::size_t i = 0; i < label_bits_; ++i) out.bits.push_back(input(i));
    return out;
}

WireBundle CircuitBuilder::y_bundle() {
    WireBundle out;
    for (std::size_t i = 0; i < label_bits_; ++i) out.bits.push_back(input(label_bits_ + i));
    return out;
}

WireBundle CircuitBuilder::constant_bundle(const BigInt& value, std::size_t width) {
    if (value < 0) fail(ErrorCode::kBadParam, "negative constant bundle");
    WireBundle out;
    for (std::size_t i = 0; i < width; ++i) out.bits.push_back(constant(boost::multiprecision::bit_test(value, i)));
    return out;
}

BoolCircuit CircuitBuilder::finish(GateId output) && {
    check(output);
    return BoolCircuit(label_bits_, std::move(gates_), output);
}

} // namespace succmso
