#include "support.hpp"

#include "succmso/circuit.hpp"
#include "succmso/synth.hpp"

#include <doctest.h>

#include <random>

using namespace succmso;
namespace sy = succmso::synth;

namespace {

BoolCircuit constant_true(std::size_t n) {
    CircuitBuilder b(n);
    const GateId t = b.constant(true);
    return std::move(b).finish(t);
}

BoolCircuit equality(std::size_t n) {
    CircuitBuilder b(n);
    const auto x = b.x_bundle();
    const auto y = b.y_bundle();
    const GateId e = sy::eq(b, x, y);
    return std::move(b).finish(e);
}

// Builds a circuit with `n` label bits, lets `make` append a primitive on the
// x bundle, and returns the finished circuit together with the result bundle.
template <class Make>
std::pair<BoolCircuit, WireBundle> unary(std::size_t n, Make make) {
    CircuitBuilder b(n);
    const auto x = b.x_bundle();
    WireBundle out = make(b, x);
    const GateId anchor = out.bits.empty() ? b.constant(false) : out.bits.front();
    return {std::move(b).finish(anchor), out};
}

bool clause_list_value(const std::vector<sy::Clause>& cs, std::uint64_t a) {
    for (const auto& c : cs) {
        bool sat = false;
        for (int lit : c) {
            const bool bit = (a >> (std::abs(lit) - 1)) & 1;
            sat = sat || (lit > 0 ? bit : !bit);
        }
        if (!sat) return false;
    }
    return true;
}

} // namespace

TEST_CASE("constant-true circuit accepts every pair") {
    const auto c = constant_true(2);
    for (std::uint64_t x = 0; x < 4; ++x)
        for (std::uint64_t y = 0; y < 4; ++y) CHECK(c.eval(x, y));
}

TEST_CASE("equality circuit on two bits") {
    const auto c = equality(2);
    CHECK(c.eval(2, 2));
    CHECK_FALSE(c.eval(2, 1));
    for (std::uint64_t x = 0; x < 4; ++x)
        for (std::uint64_t y = 0; y < 4; ++y) CHECK(c.eval(x, y) == (x == y));
}

TEST_CASE("clause (v1 | ~v2) on x wires") {
    CircuitBuilder b(2);
    const auto x = b.x_bundle();
    const std::vector<sy::Clause> cs{{1, -2}};
    const GateId out = sy::cnf_eval(b, cs, x);
    const auto c = std::move(b).finish(out);
    // v1 = 0, v2 = 1
    CHECK_FALSE(c.eval(0b10, 0));
    CHECK(c.eval(0b00, 0));
    CHECK(c.eval(0b01, 0));
    CHECK(c.eval(0b11, 0));
}

TEST_CASE("eval rejects labels outside 2^n") {
    const auto c = constant_true(2);
    CHECK_CODE(c.eval(4, 0), ErrorCode::kInputOutOfRange);
    CHECK_CODE(c.eval(0, 7), ErrorCode::kInputOutOfRange);
    CHECK_CODE(c.eval(BigInt(-1), BigInt(0)), ErrorCode::kInputOutOfRange);
    CHECK_CODE(c.eval(pow2(2), BigInt(0)), ErrorCode::kInputOutOfRange);
}

TEST_CASE("BigInt and word evaluation agree on wide labels") {
    const auto c = equality(70);
    const BigInt big = pow2(69) + 12345;
    CHECK(c.eval(big, big));
    CHECK_FALSE(c.eval(big, big - 1));
}

TEST_CASE("topology and range are validated at construction") {
    CHECK_CODE(BoolCircuit(1, {{GateKind::kNot, 0, 0}}, 0), ErrorCode::kTopologyError);
    CHECK_CODE(BoolCircuit(1, {{GateKind::kConst, 1, 0}, {GateKind::kAnd, 0, 2}, {GateKind::kConst, 0, 0}}, 1),
               ErrorCode::kTopologyError);
    CHECK_CODE(BoolCircuit(1, {{GateKind::kInput, 2, 0}}, 0), ErrorCode::kBadParam);
    CHECK_CODE(BoolCircuit(1, {{GateKind::kConst, 0, 0}}, 1), ErrorCode::kBadParam);
}

TEST_CASE("gate counts") {
    CHECK(gate_count(constant_true(3)) == 1);
    for (std::size_t n = 1; n <= 16; ++n) {
        const auto c = equality(n);
        const auto logic = logic_gate_count(c);
        CHECK(logic >= n);
        CHECK(logic <= 6 * n);
        CHECK(gate_count(c) == logic + 2 * n);
    }
}

TEST_CASE("serialization round trip") {
    for (const auto& c : {constant_true(1), equality(3), equality(8)}) {
        const auto back = parse_circuit(serialize(c));
        CHECK(back == c);
        CHECK(gate_count(back) == gate_count(c));
    }
    const auto text = serialize(constant_true(1));
    CHECK(text.find("\"version\":1") != std::string::npos);
}

TEST_CASE("parse errors") {
    CHECK_CODE(parse_circuit(R"({"version":1,"label_bits":1,"gates":[["not",1],["const",0]],"output":0})"),
               ErrorCode::kTopologyError);
    CHECK_CODE(parse_circuit(R"({"version":1,"label_bits":1,"gates":[["xor",0,0]],"output":0})"),
               ErrorCode::kParseError);
    CHECK_CODE(parse_circuit(R"({"version":2,"label_bits":1,"gates":[["const",0]],"output":0})"),
               ErrorCode::kParseError);
    CHECK_CODE(parse_circuit("{\"version\":1,\n \"label_bits\": }"), ErrorCode::kParseError);
    try {
        parse_circuit("{\"version\":1,\n \"label_bits\": }");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() > 0);
    }
}

TEST_CASE("worked synthesis examples") {
    {
        CircuitBuilder b2(3);
        const auto dm = sy::divmod_const(b2, b2.x_bundle(), 3);
        const auto c2 = std::move(b2).finish(dm.quotient[0]);
        const auto v = testing::simulate(c2, 5, 0);
        CHECK(testing::read_bundle(v, dm.quotient) == 1);
        CHECK(testing::read_bundle(v, dm.remainder) == 2);
    }
    {
        auto [c, m] = unary(2, [](CircuitBuilder& b, const WireBundle& x) { return sy::mul_const(b, x, 1); });
        CHECK(testing::read_bundle(testing::simulate(c, 3, 0), m) == 3);
    }
    {
        CircuitBuilder b(1);
        const std::vector<sy::Clause> cs{{1}, {-1}};
        const GateId out = sy::cnf_eval(b, cs, b.x_bundle());
        const auto c = std::move(b).finish(out);
        CHECK_FALSE(c.eval(0, 0));
        CHECK_FALSE(c.eval(1, 0));
    }
}

TEST_CASE("primitives agree with integer arithmetic for widths up to 8") {
    for (std::size_t w = 1; w <= 8; ++w) {
        const std::uint64_t top = std::uint64_t{1} << w;
        CAPTURE(w);
        for (std::uint64_t c = 0; c <= top + 2; c += (w > 5 ? 7 : 1)) {
            CAPTURE(c);
            CircuitBuilder b(w);
            const auto x = b.x_bundle();
            const GateId e = sy::eq_const(b, x, c);
            const GateId l = sy::less_const(b, x, c);
            const auto add = sy::add_const(b, x, c);
            const auto sub = sy::sub_const(b, x, c);
            const auto mul = sy::mul_const(b, x, c);
            const auto circuit = std::move(b).finish(e);
            CHECK(add.width() == std::max(w, bit_length(c)) + 1);
            CHECK(sub.width() == w);
            for (std::uint64_t v = 0; v < top; ++v) {
                const auto s = testing::simulate(circuit, v, 0);
                REQUIRE(s[e] == (v == c));
                REQUIRE(s[l] == (v < c));
                REQUIRE(testing::read_bundle(s, add) == v + c);
                REQUIRE(testing::read_bundle(s, sub) == ((v - c) & (top - 1)));
                REQUIRE(testing::read_bundle(s, mul) == v * c);
            }
        }
    }
}

TEST_CASE("divmod_const satisfies x = q*d + r with 0 <= r < d") {
    for (std::size_t w = 1; w <= 8; ++w) {
        const std::uint64_t top = std::uint64_t{1} << w;
        for (std::uint64_t d : {1, 2, 3, 5, 6, 7, 10, 13, 255, 256, 1000}) {
            CircuitBuilder b(w);
            const auto dm = sy::divmod_const(b, b.x_bundle(), d);
            const auto c = std::move(b).finish(dm.remainder[0]);
            CHECK(dm.quotient.width() == w);
            for (std::uint64_t v = 0; v < top; ++v) {
                const auto s = testing::simulate(c, v, 0);
                const auto q = testing::read_bundle(s, dm.quotient);
                const auto r = testing::read_bundle(s, dm.remainder);
                REQUIRE(q * d + r == v);
                REQUIRE(r < d);
            }
        }
    }
}

TEST_CASE("eq and add on two bundles, exhaustive at width 8") {
    CircuitBuilder b(8);
    const auto x = b.x_bundle();
    const auto y = b.y_bundle();
    const GateId e = sy::eq(b, x, y);
    const auto sum = sy::add(b, x, y);
    const auto c = std::move(b).finish(e);
    for (std::uint64_t u = 0; u < 256; ++u)
        for (std::uint64_t v = 0; v < 256; ++v) {
            const auto s = testing::simulate(c, u, v);
            REQUIRE(s[e] == (u == v));
            REQUIRE(testing::read_bundle(s, sum) == u + v);
            REQUIRE(c.eval(u, v) == (u == v));
        }
}

TEST_CASE("mux selects the table row") {
    for (std::size_t sel_bits = 1; sel_bits <= 3; ++sel_bits) {
        CircuitBuilder b(sel_bits);
        const auto x = b.x_bundle();
        std::vector<WireBundle> table;
        for (std::size_t i = 0; i < (std::size_t{1} << sel_bits); ++i)
            table.push_back(b.constant_bundle(BigInt(i * 5 + 1), 1 + i % 5));
        const auto out = sy::mux(b, x.bits, table);
        const auto c = std::move(b).finish(out[0]);
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << sel_bits); ++v)
            CHECK(testing::read_bundle(testing::simulate(c, v, 0), out) == ((v * 5 + 1) & ((1u << (1 + v % 5)) - 1)));
    }
}

TEST_CASE("cnf_eval agrees with clause-by-clause evaluation") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int vars = 1 + static_cast<int>(rng() % 8);
        std::vector<sy::Clause> cs(rng() % 5);
        for (auto& cl : cs) {
            cl.resize(1 + rng() % 3);
            for (int& lit : cl) lit = (1 + static_cast<int>(rng() % vars)) * (rng() % 2 ? 1 : -1);
        }
        CircuitBuilder b(static_cast<std::size_t>(vars));
        const GateId out = sy::cnf_eval(b, cs, b.x_bundle());
        const auto c = std::move(b).finish(out);
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << vars); ++a) REQUIRE(c.eval(a, 0) == clause_list_value(cs, a));
    }
}

TEST_CASE("synthesis parameter errors") {
    CircuitBuilder b(3);
    const auto x = b.x_bundle();
    CHECK_CODE(sy::divmod_const(b, x, 0), ErrorCode::kBadParam);
    CHECK_CODE(sy::divmod_const(b, x, -3), ErrorCode::kBadParam);
    const std::vector<WireBundle> three(3, x);
    CHECK_CODE(sy::mux(b, std::span<const GateId>(x.bits).first(2), three), ErrorCode::kBadParam);
    const std::vector<sy::Clause> zero{{0}};
    CHECK_CODE(sy::cnf_eval(b, zero, x), ErrorCode::kBadParam);
    const std::vector<sy::Clause> wide{{4}};
    CHECK_CODE(sy::cnf_eval(b, wide, x), ErrorCode::kBadParam);
    CHECK_CODE(sy::mul_const(b, x, pow2(sy::kMaxWidth)), ErrorCode::kBadParam);
    CHECK_CODE(sy::eq_const(b, WireBundle{}, 0), ErrorCode::kBadParam);
}

TEST_CASE("evaluation is deterministic") {
    const auto c = equality(5);
    for (std::uint64_t x = 0; x < 32; ++x)
        for (std::uint64_t y = 0; y < 32; ++y) CHECK(c.eval(x, y) == c.eval(x, y));
}
