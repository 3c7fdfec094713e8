// succmso: command-line front end.
//
// Exit codes: 0 on success or a true verdict, 1 on an operation error or a
// false verdict, 2 on a usage error.

#include "cli.hpp"

#include "succmso/error.hpp"
#include "succmso/parallel.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace succmso;
    cli::Context ctx;
    ctx.threads = default_threads();

    CLI::App app{"Succinct graph representations, MSO evaluation and the SAT reduction toolkit", "succmso"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--json", ctx.json, "Machine-readable output");
    app.add_option("--seed", ctx.seed, "Seed for randomized batteries")->capture_default_str();
    app.add_option("--threads", ctx.threads, "Worker threads (default: SUCCMSO_THREADS or 1)")->check(CLI::PositiveNumber);

    cli::add_structure_commands(app, ctx);
    cli::add_reduction_commands(app, ctx);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kUsage;
    }

    if (!ctx.action) {
        std::cerr << app.help();
        return cli::kUsage;
    }
    try {
        return ctx.action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kFalse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kFalse;
    }
}
