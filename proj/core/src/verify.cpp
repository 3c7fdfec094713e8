#include "succmso/verify.hpp"

#include "succmso/error.hpp"
#include "succmso/parallel.hpp"
#include "succmso/sgr.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>

namespace succmso {

namespace {

bool satisfies(const CnfInstance& s, const std::vector<bool>& a) {
    for (const auto& clause : s.clauses) {
        bool sat = false;
        for (int lit : clause)
            if (a[static_cast<std::size_t>(std::abs(lit) - 1)] == (lit > 0)) sat = true;
        if (!sat) return false;
    }
    return true;
}

// Values: 0 unassigned, 1 true, 2 false.
bool dpll(const CnfInstance& s, std::vector<int>& value) {
    std::vector<std::size_t> trail;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& clause : s.clauses) {
            int free_lit = 0;
            std::size_t free_count = 0;
            bool sat = false;
            for (int lit : clause) {
                const int v = value[static_cast<std::size_t>(std::abs(lit) - 1)];
                if (v == 0) {
                    ++free_count;
                    free_lit = lit;
                } else if ((v == 1) == (lit > 0)) {
                    sat = true;
                    break;
                }
            }
            if (sat) continue;
            if (free_count == 0) {
                for (auto var : trail) value[var] = 0;
                return false;
            }
            if (free_count == 1) {
                const auto var = static_cast<std::size_t>(std::abs(free_lit) - 1);
                value[var] = free_lit > 0 ? 1 : 2;
                trail.push_back(var);
                changed = true;
            }
        }
    }
    const auto open = std::find(value.begin(), value.end(), 0);
    if (open == value.end()) return true;
    for (int choice : {1, 2}) {
        *open = choice;
        if (dpll(s, value)) return true;
    }
    *open = 0;
    for (auto var : trail) value[var] = 0;
    return false;
}

} // namespace

SatResult sat_solve(const CnfInstance& s) {
    s.validate();
    std::vector<bool> assignment(s.vars, false);
    if (s.vars <= kEnumerationLimit) {
        const std::uint64_t count = std::uint64_t{1} << s.vars;
        for (std::uint64_t a = 0; a < count; ++a) {
            if (!evaluate(s, a)) continue;
            for (std::size_t v = 0; v < s.vars; ++v) assignment[v] = (a >> v) & 1U;
            if (!satisfies(s, assignment)) fail(ErrorCode::kBadParam, "internal: enumeration produced a non-model");
            return assignment;
        }
        return std::nullopt;
    }
    std::vector<int> value(s.vars, 0);
    if (!dpll(s, value)) return std::nullopt;
    for (std::size_t v = 0; v < s.vars; ++v) assignment[v] = value[v] == 1;
    if (!satisfies(s, assignment)) fail(ErrorCode::kBadParam, "internal: search produced a non-model");
    return assignment;
}

namespace {

struct Placement {
    std::uint64_t n_total;
    std::vector<std::size_t> word;
    // placed[pos][r] = layout label of vertex r of the pos-th factor.
    std::vector<std::vector<Vertex>> placed;
};

Placement place(const GadgetQuadruple& quad, const CnfInstance& s) {
    if (!quad.validated) fail(ErrorCode::kNotValidated, "quadruple has not been through normalize_layout");
    const BigInt n_big = quad.vertex_count(s.vars);
    if (n_big > kLayoutLimit) fail(ErrorCode::kTooLarge, "N = " + to_decimal(n_big) + " exceeds the layout limit");
    Placement p;
    p.n_total = to_u64(n_big, "N");
    p.word = sat_word(s);
    const std::uint64_t copies = std::uint64_t{1} << s.vars;
    const std::uint64_t g3_start = quad.n2 + copies * quad.n1;
    const std::uint64_t shared_start = g3_start + quad.k_only;

    // G2 occupies [0, |G2| - k''); G0/G1 copy q starts at n2 + q*n1; the
    // shared block sits inside G3's P1 region.
    auto place_front = [&](std::size_t gadget, std::uint64_t start) {
        const std::size_t size = quad.g[gadget].size();
        const std::size_t own = size - quad.k_shared;
        std::vector<Vertex> labels(size);
        for (std::size_t r = 0; r < size; ++r)
            labels[r] = static_cast<Vertex>(r < own ? start + r : shared_start + (r - own));
        return labels;
    };
    p.placed.push_back(place_front(2, 0));
    for (std::uint64_t q = 0; q < copies; ++q) p.placed.push_back(place_front(p.word[q + 1], quad.n2 + q * quad.n1));
    std::vector<Vertex> g3(quad.g[3].size());
    for (std::size_t r = 0; r < g3.size(); ++r) g3[r] = static_cast<Vertex>(g3_start + r);
    p.placed.push_back(std::move(g3));
    return p;
}

} // namespace

Digraph delta_layout(const GadgetQuadruple& quad, const CnfInstance& s) {
    const Placement p = place(quad, s);
    Digraph out(p.n_total);
    for (std::size_t pos = 0; pos < p.word.size(); ++pos)
        for (const auto& [u, v] : quad.g[p.word[pos]].graph.edges()) out.add_edge(p.placed[pos][u], p.placed[pos][v]);
    return out;
}

std::vector<Vertex> canonical_to_layout(const GadgetQuadruple& quad, const CnfInstance& s) {
    const Placement p = place(quad, s);
    const std::vector<BiboundariedGraph> family(quad.g.begin(), quad.g.end());
    const DeltaResult d = delta_with_maps(family, p.word);
    if (d.graph.size() != p.n_total)
        fail(ErrorCode::kBadParam, "canonical gluing has " + std::to_string(d.graph.size()) + " vertices, layout has " +
                                       std::to_string(p.n_total));
    std::vector<long> map(p.n_total, -1);
    for (std::size_t pos = 0; pos < p.word.size(); ++pos)
        for (std::size_t r = 0; r < p.placed[pos].size(); ++r) {
            const Vertex canonical = d.factor_maps[pos][r];
            const Vertex layout = p.placed[pos][r];
            if (map[canonical] >= 0 && map[canonical] != static_cast<long>(layout))
                fail(ErrorCode::kBadParam, "canonical vertex " + std::to_string(canonical) + " lands on two layout labels");
            map[canonical] = layout;
        }
    std::vector<Vertex> out(p.n_total);
    std::vector<bool> hit(p.n_total, false);
    for (std::size_t c = 0; c < p.n_total; ++c) {
        if (map[c] < 0 || hit[static_cast<std::size_t>(map[c])])
            fail(ErrorCode::kBadParam, "canonical and layout labellings are not in bijection");
        hit[static_cast<std::size_t>(map[c])] = true;
        out[c] = static_cast<Vertex>(map[c]);
    }
    return out;
}

bool EndToEndReport::pass() const {
    return std::all_of(records.begin(), records.end(), [](const InstanceRecord& r) { return r.pass(); });
}

std::string EndToEndReport::to_text() const {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto& r : records) {
        out << (r.pass() ? "PASS " : "FAIL ") << r.id << " sat=" << (r.satisfiable ? "yes" : "no")
            << " formula=" << (r.formula_holds ? "true" : "false") << " layout=" << (r.layout_equal ? "equal" : "DIFF")
            << " succ_ref=" << (r.succ_ref_equal ? "equal" : "DIFF");
        if (!r.error.empty()) out << " error=\"" << r.error << '"';
        out << '\n';
        if (r.pass()) ++passed;
    }
    out << "overall " << (pass() ? "PASS" : "FAIL") << " (" << passed << "/" << records.size() << ")\n";
    return out.str();
}

std::string EndToEndReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["pass"] = pass();
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json item;
        item["id"] = r.id;
        item["satisfiable"] = r.satisfiable;
        item["formula"] = r.formula_holds;
        item["formula_ok"] = r.formula_ok;
        item["layout_equal"] = r.layout_equal;
        item["succ_ref_equal"] = r.succ_ref_equal;
        item["micros"] = r.micros;
        item["error"] = r.error;
        item["pass"] = r.pass();
        list.push_back(std::move(item));
    }
    doc["records"] = std::move(list);
    return doc.dump(2) + "\n";
}

EndToEndReport end_to_end(const GadgetQuadruple& quad, const mso::FormulaPtr& phi,
                          const std::vector<NamedInstance>& instances, bool models_when_sat, std::size_t threads) {
    if (!quad.validated) fail(ErrorCode::kNotValidated, "quadruple has not been through normalize_layout");
    EndToEndReport report;
    report.records.resize(instances.size());
    parallel_for(instances.size(), threads, [&](std::size_t idx) {
        const auto start = std::chrono::steady_clock::now();
        InstanceRecord& rec = report.records[idx];
        rec.id = instances[idx].id;
        const CnfInstance& s = instances[idx].cnf;
        try {
            rec.satisfiable = sat_solve(s).has_value();
            const Digraph compiled = materialize(compile(quad, s), kLayoutLimit);
            rec.layout_equal = compiled == delta_layout(quad, s);
            rec.formula_holds = mso::eval(compiled, phi);
            rec.formula_ok = rec.formula_holds == (models_when_sat ? rec.satisfiable : !rec.satisfiable);
            rec.succ_ref_equal = true;
            for (Vertex x = 0; x < compiled.size() && rec.succ_ref_equal; ++x) {
                std::set<BigInt> row;
                for (Vertex y : compiled.out(x)) row.insert(BigInt(y));
                rec.succ_ref_equal = row == succ_ref(quad, s, BigInt(x));
            }
        } catch (const Error& e) {
            rec.error = e.what();
        }
        rec.micros = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
    });
    return report;
}

namespace {

std::string clause_text(const synth::Clause& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i]);
    return out + ")";
}

std::string instance_id(const CnfInstance& s) {
    std::string out = "s" + std::to_string(s.vars) + ":";
    if (s.clauses.empty()) return out + "true";
    for (const auto& c : s.clauses) out += clause_text(c);
    return out;
}

} // namespace

std::vector<NamedInstance> builtin_battery(std::uint64_t seed) {
    std::vector<NamedInstance> out;
    for (std::size_t vars = 1; vars <= 2; ++vars) {
        std::vector<int> literals;
        for (int v = 1; v <= static_cast<int>(vars); ++v) {
            literals.push_back(v);
            literals.push_back(-v);
        }
        std::vector<synth::Clause> clauses;
        for (std::uint32_t mask = 1; mask < (1U << literals.size()); ++mask) {
            synth::Clause c;
            for (std::size_t i = 0; i < literals.size(); ++i)
                if ((mask >> i) & 1U) c.push_back(literals[i]);
            clauses.push_back(std::move(c));
        }
        auto push = [&](std::vector<synth::Clause> cs) {
            CnfInstance s{vars, std::move(cs)};
            out.push_back({instance_id(s), std::move(s)});
        };
        push({});
        for (const auto& c : clauses) push({c});
        for (std::size_t a = 0; a < clauses.size(); ++a)
            for (std::size_t b = a + 1; b < clauses.size(); ++b) push({clauses[a], clauses[b]});
    }
    auto extra = random_instances(seed, 10, 3);
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

std::vector<NamedInstance> random_instances(std::uint64_t seed, std::size_t count, std::size_t vars) {
    if (vars == 0) fail(ErrorCode::kBadParam, "random instances need at least one variable");
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    std::vector<NamedInstance> out;
    for (std::size_t i = 0; i < count; ++i) {
        CnfInstance s{vars, {}};
        const std::size_t clause_count = 1 + rng() % 5;
        for (std::size_t c = 0; c < clause_count; ++c) {
            synth::Clause clause;
            const std::size_t width = 1 + rng() % 3;
            for (std::size_t l = 0; l < width; ++l) {
                const int v = 1 + static_cast<int>(rng() % vars);
                clause.push_back(rng() % 2 ? v : -v);
            }
            s.clauses.push_back(std::move(clause));
        }
        out.push_back({"rand" + std::to_string(i) + "/" + instance_id(s), std::move(s)});
    }
    return out;
}

} // namespace succmso
