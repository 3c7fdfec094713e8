#include "cli.hpp"

#include "succmso/error.hpp"
#include "succmso/sgr.hpp"
#include "succmso/verify.hpp"

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

// Bundle to --out (then N on stdout) or the bundle itself to stdout.
int emit_sgr(const Context& ctx, const Sgr& s, const std::string& out) {
    if (out.empty()) {
        std::cout << serialize(s);
        return kOk;
    }
    write_file(out, serialize(s));
    if (ctx.json)
        std::cout << Json{{"N", to_decimal(s.n_vertices())}, {"out", out}}.dump() << "\n";
    else
        std::cout << to_decimal(s.n_vertices()) << "\n";
    return kOk;
}

Json layout_json(const GadgetQuadruple& q) {
    return Json{{"k", q.k}, {"k_only", q.k_only}, {"k_shared", q.k_shared}, {"n1", q.n1}, {"n2", q.n2}, {"n3", q.n3}};
}

void add_reduce(CLI::App& app, Context& ctx) {
    CLI::App* g = group(app, "reduce", "SAT reductions and gadget construction");
    struct Opts {
        std::string cnf, gadgets, triple, omega, formula, out, x;
        std::string h_source = "glued";
        bool expected = false;
        std::size_t n_max = 5;
    };
    auto o = std::make_shared<Opts>();

    auto* s2s = command(g, "sat2sgr", "Compile a CNF and a gadget quadruple into an SGR");
    s2s->add_option("--cnf", o->cnf, "DIMACS file")->required();
    s2s->add_option("--gadgets", o->gadgets, "Quadruple G0..G3 (JSON array)")->required();
    s2s->add_option("--out", o->out, "Write the SGR bundle here and print N");
    s2s->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            return emit_sgr(ctx, compile(normalize_layout(load_quadruple(o->gadgets)), load_cnf(o->cnf)), o->out);
        };
    });

    auto* loop = command(g, "loop", "SGR with a loop exactly at satisfying assignments");
    loop->add_option("--cnf", o->cnf, "DIMACS file")->required();
    loop->add_option("--out", o->out, "Write the SGR bundle here and print N");
    loop->callback([&ctx, o] {
        ctx.action = [&ctx, o] { return emit_sgr(ctx, reduce_loop(load_cnf(o->cnf)), o->out); };
    });

    auto* clique = command(g, "clique", "SGR that is a clique iff the CNF is unsatisfiable");
    clique->add_option("--cnf", o->cnf, "DIMACS file")->required();
    clique->add_option("--out", o->out, "Write the SGR bundle here and print N");
    clique->callback([&ctx, o] {
        ctx.action = [&ctx, o] { return emit_sgr(ctx, reduce_clique(load_cnf(o->cnf)), o->out); };
    });

    auto* build = command(g, "build-quad", "Quadruple (G0', G1', G2, G3) from a triple and omega");
    build->add_option("--triple", o->triple, "Triple G1..G3 (JSON array)")->required();
    build->add_option("--omega", o->omega, "Omega graph text file")->required();
    build->add_option("--h-source", o->h_source, "Take H from the glued G1' or the base G1")
        ->check(CLI::IsMember({"glued", "base"}))
        ->capture_default_str();
    build->add_option("--out", o->out, "Output file");
    build->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            const auto source = o->h_source == "base" ? HSource::kBase : HSource::kGlued;
            const auto quad = build_quadruple(load_triple(o->triple), load_graph(o->omega).graph, source);
            emit(o->out, gadgets_to_json(quad.g));
            return kOk;
        };
    });

    auto* vq = command(g, "validate-quad", "Check conditions (i)-(iii) and port alignment");
    vq->add_option("--gadgets", o->gadgets, "Quadruple G0..G3 (JSON array)")->required();
    vq->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            const auto q = normalize_layout(load_quadruple(o->gadgets));
            if (ctx.json) {
                Json doc = layout_json(q);
                doc["valid"] = true;
                std::cout << doc.dump() << "\n";
            } else {
                std::cout << "valid k=" << q.k << " k'=" << q.k_only << " k''=" << q.k_shared << " n1=" << q.n1
                          << " n2=" << q.n2 << " n3=" << q.n3 << "\n";
            }
            return kOk;
        };
    });

    auto* pump = command(g, "pump-check", "Evaluate a sentence on 2·1^n·3 for n = 0..nmax");
    pump->add_option("--triple", o->triple, "Triple G1..G3 (JSON array)")->required();
    pump->add_option("--formula", o->formula, "MSO sentence")->required();
    pump->add_option("--expected", o->expected, "Expected verdict (true/false)")->required();
    pump->add_option("--nmax", o->n_max, "Largest n")->capture_default_str();
    pump->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            const auto report = pump_check(load_triple(o->triple), load_formula(o->formula), o->expected, o->n_max);
            if (ctx.json) {
                std::cout << Json{{"ok", report.ok()},
                                  {"values", report.values},
                                  {"first_mismatch", report.first_mismatch ? Json(*report.first_mismatch) : Json(nullptr)}}
                                 .dump()
                          << "\n";
            } else {
                for (std::size_t n = 0; n < report.values.size(); ++n)
                    std::cout << "n=" << n << " " << (report.values[n] ? "true" : "false") << "\n";
                if (report.ok())
                    std::cout << "ok\n";
                else
                    std::cout << "mismatch at n=" << *report.first_mismatch << "\n";
            }
            return report.ok() ? kOk : kFalse;
        };
    });

    auto* sr = command(g, "succ-ref", "Out-neighbours of a label by direct arithmetic");
    sr->add_option("--gadgets", o->gadgets, "Quadruple G0..G3 (JSON array)")->required();
    sr->add_option("--cnf", o->cnf, "DIMACS file")->required();
    sr->add_option("--x", o->x, "Label (decimal)")->required();
    sr->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            const auto quad = normalize_layout(load_quadruple(o->gadgets));
            const auto succ = succ_ref(quad, load_cnf(o->cnf), parse_decimal(o->x));
            if (ctx.json) {
                Json list = Json::array();
                for (const auto& y : succ) list.push_back(to_decimal(y));
                std::cout << Json{{"x", o->x}, {"successors", list}}.dump() << "\n";
            } else {
                std::string line;
                for (const auto& y : succ) line += (line.empty() ? "" : " ") + to_decimal(y);
                std::cout << line << "\n";
            }
            return kOk;
        };
    });
}

void add_verify(CLI::App& app, Context& ctx) {
    CLI::App* g = group(app, "verify", "Independent oracles and end-to-end checks");
    struct Opts {
        std::string cnf, gadgets, formula, out;
        std::string battery = "builtin";
        std::vector<std::string> cnfs;
        std::string expect = "sat";
    };
    auto o = std::make_shared<Opts>();

    auto* sat = command(g, "sat", "Solve a CNF");
    sat->add_option("--cnf", o->cnf, "DIMACS file")->required();
    sat->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            const auto result = sat_solve(load_cnf(o->cnf));
            if (ctx.json) {
                std::cout << Json{{"satisfiable", result.has_value()},
                                  {"assignment", result ? Json(*result) : Json(nullptr)}}
                                 .dump()
                          << "\n";
            } else if (result) {
                std::cout << "sat";
                for (std::size_t v = 0; v < result->size(); ++v) std::cout << " v" << v + 1 << "=" << ((*result)[v] ? 1 : 0);
                std::cout << "\n";
            } else {
                std::cout << "unsat\n";
            }
            return result ? kOk : kFalse;
        };
    });

    auto* layout = command(g, "delta-layout", "Reference gluing 2·S̄·3 placed on layout labels");
    layout->add_option("--gadgets", o->gadgets, "Quadruple G0..G3 (JSON array)")->required();
    layout->add_option("--cnf", o->cnf, "DIMACS file")->required();
    layout->add_option("--out", o->out, "Output file");
    layout->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            const Digraph d = delta_layout(normalize_layout(load_quadruple(o->gadgets)), load_cnf(o->cnf));
            emit(o->out, ctx.json ? graph_json(d).dump() + "\n" : to_graph_text(d));
            return kOk;
        };
    });

    auto* e2e = command(g, "end2end", "Compile, materialize and cross-check a CNF battery");
    e2e->add_option("--gadgets", o->gadgets, "Quadruple G0..G3 (JSON array)")->required();
    e2e->add_option("--formula", o->formula, "Companion MSO sentence")->required();
    e2e->add_option("--battery", o->battery, "'builtin' or 'files' (with --cnf)")
        ->check(CLI::IsMember({"builtin", "files"}))
        ->capture_default_str();
    e2e->add_option("--cnf", o->cnfs, "DIMACS files for --battery files");
    e2e->add_option("--expect", o->expect, "Sentence holds exactly on 'sat' or on 'unsat' instances")
        ->check(CLI::IsMember({"sat", "unsat"}))
        ->capture_default_str();
    e2e->callback([&ctx, o] {
        ctx.action = [&ctx, o] {
            std::vector<NamedInstance> instances;
            if (o->battery == "builtin") {
                if (!o->cnfs.empty()) fail(ErrorCode::kBadParam, "--cnf needs --battery files");
                instances = builtin_battery(ctx.seed);
            } else {
                if (o->cnfs.empty()) fail(ErrorCode::kBadParam, "--battery files needs at least one --cnf");
                for (const auto& path : o->cnfs) instances.push_back({path, load_cnf(path)});
            }
            const auto quad = normalize_layout(load_quadruple(o->gadgets));
            const auto report = end_to_end(quad, load_formula(o->formula), instances, o->expect == "sat", ctx.threads);
            std::cout << (ctx.json ? report.to_json() : report.to_text());
            return report.pass() ? kOk : kFalse;
        };
    });
}

} // namespace

void add_reduction_commands(CLI::App& app, Context& ctx) {
    add_reduce(app, ctx);
    add_verify(app, ctx);
}

} // namespace succmso::cli
