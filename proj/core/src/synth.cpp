#include "succmso/synth.hpp"

#include "succmso/error.hpp"

#include <algorithm>

namespace succmso::synth {

namespace {

void check_width(std::size_t width, const char* what) {
    if (width == 0) fail(ErrorCode::kBadParam, std::string(what) + ": bundle width must be positive");
    if (width > kMaxWidth) fail(ErrorCode::kBadParam, std::string(what) + ": result width exceeds limit");
}

GateId xor_(CircuitBuilder& b, GateId g, GateId h) { return b.and_(b.or_(g, h), b.not_(b.and_(g, h))); }

BigInt reduce_mod_pow2(const BigInt& value, std::size_t width) {
    const BigInt modulus = pow2(width);
    BigInt r = value % modulus;
    if (r < 0) r += modulus;
    return r;
}

} // namespace

GateId and_all(CircuitBuilder& b, std::span<const GateId> gates) {
    GateId acc = b.constant(true);
    for (GateId g : gates) acc = b.and_(acc, g);
    return acc;
}

GateId or_all(CircuitBuilder& b, std::span<const GateId> gates) {
    GateId acc = b.constant(false);
    for (GateId g : gates) acc = b.or_(acc, g);
    return acc;
}

GateId select(CircuitBuilder& b, GateId sel, GateId when_true, GateId when_false) {
    if (when_true == when_false) return when_true;
    return b.or_(b.and_(sel, when_true), b.and_(b.not_(sel), when_false));
}

WireBundle resize(CircuitBuilder& b, const WireBundle& bundle, std::size_t width) {
    WireBundle out;
    out.bits.reserve(width);
    for (std::size_t i = 0; i < width; ++i) out.bits.push_back(i < bundle.width() ? bundle[i] : b.constant(false));
    return out;
}

GateId eq_const(CircuitBuilder& b, const WireBundle& bundle, const BigInt& c) {
    check_width(bundle.width(), "eq_const");
    if (c < 0 || bit_length(c) > bundle.width()) return b.constant(false);
    GateId acc = b.constant(true);
    for (std::size_t i = 0; i < bundle.width(); ++i)
        acc = b.and_(acc, boost::multiprecision::bit_test(c, i) ? bundle[i] : b.not_(bundle[i]));
    return acc;
}

GateId eq(CircuitBuilder& b, const WireBundle& lhs, const WireBundle& rhs) {
    check_width(lhs.width(), "eq");
    check_width(rhs.width(), "eq");
    const std::size_t width = std::max(lhs.width(), rhs.width());
    const WireBundle l = resize(b, lhs, width);
    const WireBundle r = resize(b, rhs, width);
    GateId acc = b.constant(true);
    for (std::size_t i = 0; i < width; ++i) {
        // xnor as (a & b) | ~(a | b)
        const GateId same = b.or_(b.and_(l[i], r[i]), b.not_(b.or_(l[i], r[i])));
        acc = b.and_(acc, same);
    }
    return acc;
}

GateId less_const(CircuitBuilder& b, const WireBundle& bundle, const BigInt& c) {
    check_width(bundle.width(), "less_const");
    if (c <= 0) return b.constant(false);
    if (bit_length(c) > bundle.width()) return b.constant(true);
    // lt holds "bundle[0..i] < c[0..i]", scanned from the least significant bit
    GateId lt = b.constant(false);
    for (std::size_t i = 0; i < bundle.width(); ++i) {
        const GateId below = b.not_(bundle[i]);
        lt = boost::multiprecision::bit_test(c, i) ? b.or_(below, lt) : b.and_(below, lt);
    }
    return lt;
}

WireBundle add(CircuitBuilder& b, const WireBundle& lhs, const WireBundle& rhs) {
    check_width(lhs.width(), "add");
    check_width(rhs.width(), "add");
    const std::size_t width = std::max(lhs.width(), rhs.width());
    check_width(width + 1, "add");
    const WireBundle l = resize(b, lhs, width);
    const WireBundle r = resize(b, rhs, width);
    WireBundle out;
    GateId carry = b.constant(false);
    for (std::size_t i = 0; i < width; ++i) {
        const GateId both = b.and_(l[i], r[i]);
        const GateId half = b.and_(b.or_(l[i], r[i]), b.not_(both));
        out.bits.push_back(xor_(b, half, carry));
        carry = b.or_(both, b.and_(half, carry));
    }
    out.bits.push_back(carry);
    return out;
}

WireBundle add_const(CircuitBuilder& b, const WireBundle& bundle, const BigInt& c) {
    if (c < 0) fail(ErrorCode::kBadParam, "add_const: negative constant");
    check_width(bundle.width(), "add_const");
    const std::size_t cw = std::max<std::size_t>(1, bit_length(c));
    return add(b, bundle, b.constant_bundle(c, cw));
}

WireBundle sub_const(CircuitBuilder& b, const WireBundle& bundle, const BigInt& c) {
    check_width(bundle.width(), "sub_const");
    const std::size_t width = bundle.width();
    const BigInt addend = reduce_mod_pow2(-c, width);
    WireBundle sum = add(b, bundle, b.constant_bundle(addend, width));
    sum.bits.resize(width);
    return sum;
}

WireBundle mul_const(CircuitBuilder& b, const WireBundle& bundle, const BigInt& c) {
    if (c < 0) fail(ErrorCode::kBadParam, "mul_const: negative constant");
    check_width(bundle.width(), "mul_const");
    const std::size_t width = bundle.width() + bit_length(c);
    check_width(width, "mul_const");
    WireBundle acc = b.constant_bundle(0, bundle.width());
    for (std::size_t i = 0; i < bit_length(c); ++i) {
        if (!boost::multiprecision::bit_test(c, i)) continue;
        WireBundle shifted;
        for (std::size_t k = 0; k < i; ++k) shifted.bits.push_back(b.constant(false));
        shifted.bits.insert(shifted.bits.end(), bundle.bits.begin(), bundle.bits.end());
        acc = add(b, acc, shifted);
        acc.bits.resize(std::min(acc.width(), width));
    }
    return resize(b, acc, width);
}

DivMod divmod_const(CircuitBuilder& b, const WireBundle& bundle, const BigInt& d) {
    if (d <= 0) fail(ErrorCode::kBadParam, "divmod_const: divisor must be positive");
    check_width(bundle.width(), "divmod_const");
    const std::size_t dw = bit_length(d);
    // the running remainder stays below d, so after the shift it is below 2d
    WireBundle rem = b.constant_bundle(0, dw + 1);
    std::vector<GateId> quotient(bundle.width());
    for (std::size_t step = bundle.width(); step-- > 0;) {
        WireBundle shifted;
        shifted.bits.push_back(bundle[step]);
        shifted.bits.insert(shifted.bits.end(), rem.bits.begin(), rem.bits.begin() + static_cast<long>(dw));
        const GateId fits = b.not_(less_const(b, shifted, d));
        const WireBundle reduced = sub_const(b, shifted, d);
        for (std::size_t i = 0; i < shifted.width(); ++i) rem.bits[i] = select(b, fits, reduced[i], shifted[i]);
        quotient[step] = fits;
    }
    DivMod out;
    out.quotient.bits = std::move(quotient);
    out.remainder = resize(b, rem, std::max<std::size_t>(1, bit_length(d - 1)));
    return out;
}

WireBundle mux(CircuitBuilder& b, std::span<const GateId> select_bits, std::span<const WireBundle> table) {
    if (select_bits.size() > 24) fail(ErrorCode::kBadParam, "mux: too many select bits");
    if (table.size() != (std::size_t{1} << select_bits.size()))
        fail(ErrorCode::kBadParam, "mux: table size must be 2^(select bits)");
    std::size_t width = 0;
    for (const auto& entry : table) width = std::max(width, entry.width());
    check_width(width, "mux");
    std::vector<WireBundle> level;
    level.reserve(table.size());
    for (const auto& entry : table) level.push_back(resize(b, entry, width));
    for (GateId sel : select_bits) {
        std::vector<WireBundle> next;
        next.reserve(level.size() / 2);
        for (std::size_t j = 0; j + 1 < level.size(); j += 2) {
            WireBundle merged;
            for (std::size_t i = 0; i < width; ++i) merged.bits.push_back(select(b, sel, level[j + 1][i], level[j][i]));
            next.push_back(std::move(merged));
        }
        level = std::move(next);
    }
    return level.front();
}

GateId cnf_eval(CircuitBuilder& b, std::span<const Clause> clauses, const WireBundle& vars) {
    std::vector<GateId> clause_bits;
    clause_bits.reserve(clauses.size());
    for (const Clause& clause : clauses) {
        std::vector<GateId> lits;
        for (int lit : clause) {
            if (lit == 0) fail(ErrorCode::kBadParam, "cnf_eval: zero literal");
            const auto var = static_cast<std::size_t>(lit > 0 ? lit : -lit);
            if (var > vars.width())
                fail(ErrorCode::kBadParam, "cnf_eval: variable " + std::to_string(var) + " beyond bundle width");
            const GateId bit = vars[var - 1];
            lits.push_back(lit > 0 ? bit : b.not_(bit));
        }
        clause_bits.push_back(or_all(b, lits));
    }
    return and_all(b, clause_bits);
}

} // namespace succmso::synth
