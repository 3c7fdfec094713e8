#include "cli.hpp"

#include "succmso/efgame.hpp"
#include "succmso/error.hpp"
#include "succmso/sgr.hpp"

#include <iostream>
#include <memory>

namespace succmso::cli {

namespace {

CLI::App* group(CLI::App& app, const char* name, const char* about) {
    CLI::App* g = app.add_subcommand(name, about);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
}

CLI::App* command(CLI::App* parent, const char* name, const char* about) {
    CLI::App* c = parent->add_subcommand(name, about);
    c->fallthrough();
    return c;
}

void print_graph(const Context& ctx, const Digraph& g, const std::string& out) {
    emit(out, ctx.json ? graph_json(g).dump() + "\n" : to_graph_text(g));
}

void print_graph(const Context& ctx, const BiboundariedGraph& g, const std::string& out) {
    emit(out, ctx.json ? graph_json(g).dump() + "\n" : to_graph_text(g));
}

void print_value(const Context& ctx, const std::string& key, const Json& value) {
    if (ctx.json)
        std::cout << Json{{key, value}}.dump() << "\n";
    else if (value.is_string())
        std::cout << value.get<std::string>() << "\n";
    else
        std::cout << value.dump() << "\n";
}

// ---------------------------------------------------------------- sgr

void add_sgr(CLI::App& app, Context& ctx) {
    CLI::App* g = group(app, "sgr", "Succinct graph representations");

    struct Opts {
        std::string sgr, out, x, y;
        std::uint64_t limit = std::uint64_t{1} << 14;
    };
    auto o = std::make_shared<Opts>();

    auto* mat = command(g, "materialize", "Evaluate C on every label pair and print the graph");
    mat->add_option("--sgr", o->sgr, "SGR bundle (JSON)")->required();
    mat->add_option("--limit", o->limit, "Refuse when N exceeds this")->capture_default_str();
    mat->add_option("--out", o->out, "Write the graph here instead of stdout");
    mat->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            print_graph(ctx, materialize(parse_sgr(read_file(o->sgr)), o->limit, ctx.threads), o->out);
            return kOk;
        };
    });

    auto* edge = command(g, "edge", "Query C(x, y)");
    edge->add_option("--sgr", o->sgr, "SGR bundle (JSON)")->required();
    edge->add_option("--x", o->x, "Source label (decimal)")->required();
    edge->add_option("--y", o->y, "Target label (decimal)")->required();
    edge->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            return verdict(ctx, edge_query(parse_sgr(read_file(o->sgr)), parse_decimal(o->x), parse_decimal(o->y)));
        };
    });

    auto* size = command(g, "check-size", "Compare the gate count with 64*(N^2+64)");
    size->add_option("--sgr", o->sgr, "SGR bundle (JSON)")->required();
    size->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            const Sgr s = parse_sgr(read_file(o->sgr));
            const bool ok = check_size_convention(s);
            const std::string gates = std::to_string(gate_count(s.circuit()));
            const std::string bound = to_decimal(size_convention_bound(s.n_vertices()));
            if (ctx.json)
                std::cout << Json{{"N", to_decimal(s.n_vertices())}, {"gates", gate_count(s.circuit())}, {"bound", bound}, {"ok", ok}}.dump()
                          << "\n";
            else
                std::cout << "N " << to_decimal(s.n_vertices()) << " gates " << gates << " bound " << bound << " "
                          << (ok ? "ok" : "exceeds") << "\n";
            return ok ? kOk : kFalse;
        };
    });
}

// ---------------------------------------------------------------- mso

void add_mso(CLI::App& app, Context& ctx) {
    CLI::App* g = group(app, "mso", "Monadic second-order logic");
    struct Opts {
        std::string graph, formula;
    };
    auto o = std::make_shared<Opts>();

    auto* check = command(g, "check", "Does the graph satisfy the sentence?");
    check->add_option("--graph", o->graph, "Graph text file")->required();
    check->add_option("--formula", o->formula, "MSO sentence")->required();
    check->callback([&ctx, o] {
        ctx.action = [&ctx, o] { return verdict(ctx, mso::eval(load_graph(o->graph).graph, load_formula(o->formula))); };
    });

    auto* rank = command(g, "rank", "Quantifier rank (number of quantifiers)");
    rank->add_option("--formula", o->formula, "MSO sentence")->required();
    rank->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            print_value(ctx, "rank", mso::rank(load_formula(o->formula)));
            return kOk;
        };
    });

    auto* parse = command(g, "parse", "Parse and print in canonical form");
    parse->add_option("--formula", o->formula, "MSO sentence")->required();
    parse->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            const auto f = load_formula(o->formula);
            if (ctx.json)
                std::cout << Json{{"formula", mso::print(f)}, {"rank", mso::rank(f)}, {"set_quantifiers", mso::has_set_quantifier(f)}}.dump()
                          << "\n";
            else
                std::cout << mso::print(f) << "\n";
            return kOk;
        };
    });
}

// ---------------------------------------------------------------- td

void add_td(CLI::App& app, Context& ctx) {
    CLI::App* g = group(app, "td", "Tree decompositions");
    struct Opts {
        std::string graph, td, tds, gadgets, word, out;
    };
    auto o = std::make_shared<Opts>();

    auto* validate_cmd = command(g, "validate", "Check coverage, edge coverage and connectivity");
    validate_cmd->add_option("--graph", o->graph, "Graph text file")->required();
    validate_cmd->add_option("--td", o->td, "Decomposition (JSON)")->required();
    validate_cmd->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            const auto report = validate(load_graph(o->graph).graph, parse_decomposition_json(read_file(o->td)));
            if (ctx.json) {
                Json list = Json::array();
                for (const auto& v : report.violations) list.push_back(v.describe());
                std::cout << Json{{"ok", report.ok()}, {"violations", list}}.dump() << "\n";
            } else if (report.ok()) {
                std::cout << "ok\n";
            } else {
                for (const auto& v : report.violations) std::cout << v.describe() << "\n";
            }
            return report.ok() ? kOk : kFalse;
        };
    });

    auto* width_cmd = command(g, "width", "Largest bag size minus one");
    width_cmd->add_option("--td", o->td, "Decomposition (JSON)")->required();
    width_cmd->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            print_value(ctx, "width", width(parse_decomposition_json(read_file(o->td))));
            return kOk;
        };
    });

    auto* norm = command(g, "normalize3", "Split nodes of degree > 3 into chains");
    norm->add_option("--td", o->td, "Decomposition (JSON)")->required();
    norm->add_option("--out", o->out, "Output file");
    norm->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            emit(o->out, to_json(normalize_degree3(parse_decomposition_json(read_file(o->td)))));
            return kOk;
        };
    });

    auto* tw = command(g, "treewidth", "Exact treewidth (at most 10 vertices)");
    tw->add_option("--graph", o->graph, "Graph text file")->required();
    tw->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            print_value(ctx, "treewidth", treewidth_exact(load_graph(o->graph).graph));
            return kOk;
        };
    });

    auto* of_delta = command(g, "of-delta", "Decomposition of a gluing chain from per-gadget decompositions");
    of_delta->add_option("--gadgets", o->gadgets, "Gadget family (JSON array)")->required();
    of_delta->add_option("--tds", o->tds, "One pointed decomposition per gadget (JSON array)")->required();
    of_delta->add_option("--word", o->word, "Word of gadget indices, e.g. 213")->required();
    of_delta->add_option("--out", o->out, "Output file");
    of_delta->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            const auto family = load_gadgets(o->gadgets);
            const auto tds = parse_decompositions_json(read_file(o->tds));
            emit(o->out, to_json(decomposition_of_delta(family, tds, word_from_digits(o->word))));
            return kOk;
        };
    });
}

// ---------------------------------------------------------------- ef

void add_ef(CLI::App& app, Context& ctx) {
    CLI::App* g = group(app, "ef", "Ehrenfeucht-Fraisse games and q-bounds");
    struct Opts {
        std::string g, h, graph, omega, formula;
        std::size_t rounds = 1, q_max = 8, battery_size = 3;
        std::uint64_t size = 1;
        std::optional<std::uint64_t> m1, m2;
    };
    auto o = std::make_shared<Opts>();

    auto* equiv = command(g, "equiv", "Decide g ≡_m h");
    equiv->add_option("--a", o->g, "First graph")->required();
    equiv->add_option("--b", o->h, "Second graph")->required();
    equiv->add_option("--rounds,-m", o->rounds, "Rounds m")->required();
    equiv->callback([&ctx, o] {
        ctx.action = [&ctx, o] { return verdict(ctx, ef_equiv(load_graph(o->g).graph, load_graph(o->h).graph, o->rounds)); };
    });

    auto* qs = command(g, "qsearch", "Least q with q copies ≡_m q+1 copies");
    qs->add_option("--graph", o->graph, "Graph text file")->required();
    qs->add_option("--rounds,-m", o->rounds, "Rounds m")->required();
    qs->add_option("--qmax", o->q_max, "Largest q tried")->capture_default_str();
    qs->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            const auto q = q_search(load_graph(o->graph).graph, o->rounds, o->q_max);
            if (ctx.json)
                std::cout << Json{{"q", q ? Json(*q) : Json(nullptr)}}.dump() << "\n";
            else
                std::cout << (q ? std::to_string(*q) : std::string("NotFound")) << "\n";
            return q ? kOk : kFalse;
        };
    });

    auto* qb = command(g, "qbound", "Explicit upper bound on q (exact integer)");
    qb->add_option("--size", o->size, "|G|")->required();
    qb->add_option("--rounds,-m", o->rounds, "Total rank m (maximised over splits)");
    qb->add_option("--m1", o->m1, "Point moves (with --m2)");
    qb->add_option("--m2", o->m2, "Set moves (with --m1)");
    qb->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            if (o->m1.has_value() != o->m2.has_value()) fail(ErrorCode::kBadParam, "--m1 and --m2 go together");
            const BigInt value = o->m1 ? q_bound(o->size, *o->m1, *o->m2) : q_bound_total(o->size, o->rounds);
            print_value(ctx, "q", to_decimal(value));
            return kOk;
        };
    });

    auto* sat = command(g, "saturate", "Scan omega ⊔ G over every digraph G up to a size");
    sat->add_option("--omega", o->omega, "Graph text file")->required();
    sat->add_option("--formula", o->formula, "MSO sentence")->required();
    sat->add_option("--battery-size", o->battery_size, "Largest |G| in the battery (at most 3)")->capture_default_str();
    sat->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            if (o->battery_size > 3) fail(ErrorCode::kTooLarge, "battery size is capped at 3");
            std::vector<Digraph> battery;
            for (std::size_t n = 0; n <= o->battery_size; ++n) {
                auto part = all_digraphs(n);
                battery.insert(battery.end(), part.begin(), part.end());
            }
            const auto v = saturating_scan(load_graph(o->omega).graph, load_formula(o->formula), battery);
            print_value(ctx, "verdict", std::string(name(v)));
            return kOk;
        };
    });
}

// ---------------------------------------------------------------- graph

void add_graph(CLI::App& app, Context& ctx) {
    CLI::App* g = group(app, "graph", "Biboundaried graphs and gluing");
    struct Opts {
        std::string a, b, gadgets, word, out;
        std::size_t copies = 0;
    };
    auto o = std::make_shared<Opts>();

    auto* glue_cmd = command(g, "glue", "a ⊕ b");
    glue_cmd->add_option("--a", o->a, "Left graph")->required();
    glue_cmd->add_option("--b", o->b, "Right graph")->required();
    glue_cmd->add_option("--out", o->out, "Output file");
    glue_cmd->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            print_graph(ctx, glue(load_graph(o->a), load_graph(o->b)), o->out);
            return kOk;
        };
    });

    auto* delta_cmd = command(g, "delta", "Left fold of ⊕ over a word");
    delta_cmd->add_option("--gadgets", o->gadgets, "Gadget family (JSON array)")->required();
    delta_cmd->add_option("--word", o->word, "Word of gadget indices, e.g. 2113")->required();
    delta_cmd->add_option("--out", o->out, "Output file");
    delta_cmd->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            print_graph(ctx, delta(load_gadgets(o->gadgets), word_from_digits(o->word)), o->out);
            return kOk;
        };
    });

    auto* uni = command(g, "union", "Disjoint union of a and b, or of --copies copies of a");
    uni->add_option("--a", o->a, "First graph")->required();
    uni->add_option("--b", o->b, "Second graph");
    uni->add_option("--copies", o->copies, "Number of copies of a");
    uni->add_option("--out", o->out, "Output file");
    uni->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            if (o->b.empty() == (o->copies == 0)) fail(ErrorCode::kBadParam, "give exactly one of --b and --copies");
            const Digraph a = load_graph(o->a).graph;
            print_graph(ctx, o->b.empty() ? power_union(a, o->copies) : disjoint_union(a, load_graph(o->b).graph), o->out);
            return kOk;
        };
    });

    auto* iso = command(g, "iso", "Are a and b isomorphic? (at most 10 vertices)");
    iso->add_option("--a", o->a, "First graph")->required();
    iso->add_option("--b", o->b, "Second graph")->required();
    iso->callback([&ctx, o] {
        ctx.action = [&ctx, o] { return verdict(ctx, isomorphic_small(load_graph(o->a).graph, load_graph(o->b).graph)); };
    });
}

} // namespace

void add_structure_commands(CLI::App& app, Context& ctx) {
    add_sgr(app, ctx);
    add_mso(app, ctx);
    add_td(app, ctx);
    add_ef(app, ctx);
    add_graph(app, ctx);
}

} // namespace succmso::cli
