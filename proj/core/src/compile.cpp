#include "succmso/error.hpp"
#include "succmso/reduce.hpp"
#include "succmso/synth.hpp"

#include <map>

namespace succmso {

namespace {

class Compiler {
  public:
    Compiler(const GadgetQuadruple& quad, const CnfInstance& cnf)
        : quad_(quad), cnf_(cnf), s_(cnf.vars), n_total_(quad.vertex_count(s_)),
          width_(std::max<std::size_t>(1, bit_length(n_total_ - 1))), b_(width_), x_(b_.x_bundle()), y_(b_.y_bundle()),
          last_(quad.last_copy(s_)), copies_end_(BigInt(quad.n2) + pow2(s_) * quad.n1),
          low_range_(quad.g[1].size() - quad.k_shared) {}

    Sgr run() {
        std::vector<GateId> terms;
        gadget2_case(terms);
        copies_case(terms);
        gadget3_case(terms);
        const GateId out = synth::or_all(b_, terms);
        return Sgr(n_total_, std::move(b_).finish(out));
    }

  private:
    // y == c for a constant label c.
    GateId y_is(const BigInt& c) {
        if (c < 0 || c >= n_total_) return b_.constant(false);
        auto [it, fresh] = y_const_.try_emplace(c, 0);
        if (fresh) it->second = synth::eq_const(b_, y_, c);
        return it->second;
    }

    // y == base + c, with base = n2 + q * n1 computed from x.
    GateId y_at_offset(long c) {
        auto [it, fresh] = y_offset_.try_emplace(c, 0);
        if (fresh) {
            const auto target = c >= 0 ? synth::resize(b_, synth::add_const(b_, base_, c), width_)
                                       : synth::sub_const(b_, base_, -c);
            it->second = synth::eq(b_, y_, target);
        }
        return it->second;
    }

    GateId constant_row(std::size_t j, const BigInt& q, std::size_t r) {
        std::vector<GateId> hits;
        for (Vertex v : quad_.g[j].graph.out(static_cast<Vertex>(r))) hits.push_back(y_is(delta_map(quad_, s_, j, q, v)));
        return synth::or_all(b_, hits);
    }

    // Row r of G0/G1 in copy q + shift, q read from x.
    GateId symbolic_row(std::size_t j, long shift, std::size_t r) {
        std::vector<GateId> hits;
        for (Vertex v : quad_.g[j].graph.out(static_cast<Vertex>(r))) {
            if (v < low_range_)
                hits.push_back(y_at_offset(shift * static_cast<long>(quad_.n1) + static_cast<long>(v)));
            else
                hits.push_back(y_is(BigInt(quad_.n2) + last_ * quad_.n1 + v));
        }
        return synth::or_all(b_, hits);
    }

    void gadget2_case(std::vector<GateId>& terms) {
        for (std::size_t r = 0; r < quad_.n2; ++r)
            terms.push_back(b_.and_(synth::eq_const(b_, x_, r), constant_row(2, 0, r)));
    }

    void copies_case(std::vector<GateId>& terms) {
        const GateId in_copies = b_.and_(b_.not_(synth::less_const(b_, x_, quad_.n2)), synth::less_const(b_, x_, copies_end_));
        const auto offset = synth::sub_const(b_, x_, quad_.n2);
        const auto dm = synth::divmod_const(b_, offset, quad_.n1);
        base_ = synth::resize(b_, synth::add_const(b_, synth::mul_const(b_, dm.quotient, quad_.n1), quad_.n2), width_);

        const auto q_vars = synth::resize(b_, dm.quotient, s_);
        const auto prev_vars = synth::resize(b_, synth::sub_const(b_, dm.quotient, 1), s_);
        const GateId sbar_q = b_.not_(synth::cnf_eval(b_, cnf_.clauses, q_vars));
        const GateId sbar_prev = b_.not_(synth::cnf_eval(b_, cnf_.clauses, prev_vars));
        const GateId first_copy = synth::eq_const(b_, dm.quotient, 0);

        std::vector<GateId> rows;
        for (std::size_t r = 0; r < quad_.n1; ++r) {
            GateId row = synth::select(b_, sbar_q, symbolic_row(1, 0, r), symbolic_row(0, 0, r));
            if (r < quad_.k_only) {
                const GateId prev01 = synth::select(b_, sbar_prev, symbolic_row(1, -1, r + quad_.n1),
                                                    symbolic_row(0, -1, r + quad_.n1));
                row = b_.or_(row, synth::select(b_, first_copy, constant_row(2, 0, r + quad_.n2), prev01));
            }
            rows.push_back(b_.and_(synth::eq_const(b_, dm.remainder, r), row));
        }
        terms.push_back(b_.and_(in_copies, synth::or_all(b_, rows)));
    }

    // y = n2 + t * n1 + v for some t in [0, ℓ̂], with v a low-range vertex of G1.
    GateId in_all_copies(Vertex v) {
        if (!y_split_) {
            y_above_n2_ = b_.not_(synth::less_const(b_, y_, quad_.n2));
            y_split_ = synth::divmod_const(b_, synth::sub_const(b_, y_, quad_.n2), quad_.n1);
        }
        const std::size_t a = v / quad_.n1;
        const std::size_t rem = v % quad_.n1;
        const GateId low_ok = b_.not_(synth::less_const(b_, y_split_->quotient, a));
        const GateId high_ok = synth::less_const(b_, y_split_->quotient, last_ + a + 1);
        return b_.and_(b_.and_(y_above_n2_, synth::eq_const(b_, y_split_->remainder, rem)), b_.and_(low_ok, high_ok));
    }

    void gadget3_case(std::vector<GateId>& terms) {
        const std::size_t last_letter = sbar_at(cnf_, last_) ? 1 : 0;
        for (std::size_t r = 0; r < quad_.n3; ++r) {
            GateId row = constant_row(3, 0, r);
            if (r < quad_.k_only) {
                row = b_.or_(row, constant_row(last_letter, last_, r + quad_.n1));
            } else if (r < quad_.k) {
                row = b_.or_(row, constant_row(2, 0, r + quad_.n2));
                for (Vertex v : quad_.g[1].graph.out(static_cast<Vertex>(r + quad_.n1))) {
                    const GateId hit = v < low_range_ ? in_all_copies(v) : y_is(BigInt(quad_.n2) + last_ * quad_.n1 + v);
                    row = b_.or_(row, hit);
                }
            }
            terms.push_back(b_.and_(synth::eq_const(b_, x_, copies_end_ + r), row));
        }
    }

    const GadgetQuadruple& quad_;
    const CnfInstance& cnf_;
    std::size_t s_;
    BigInt n_total_;
    std::size_t width_;
    CircuitBuilder b_;
    WireBundle x_;
    WireBundle y_;
    BigInt last_;
    BigInt copies_end_;
    std::size_t low_range_;
    WireBundle base_;
    std::map<BigInt, GateId> y_const_;
    std::map<long, GateId> y_offset_;
    std::optional<synth::DivMod> y_split_;
    GateId y_above_n2_ = 0;
};

} // namespace

Sgr compile(const GadgetQuadruple& quad, const CnfInstance& s) {
    if (!quad.validated) fail(ErrorCode::kNotValidated, "quadruple has not been through normalize_layout");
    s.validate();
    return Compiler(quad, s).run();
}

} // namespace succmso
