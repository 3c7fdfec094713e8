#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include "succmso/graph.hpp"
#include "succmso/mso.hpp"
#include "succmso/reduce.hpp"
#include "succmso/treedec.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace succmso::cli {

/// Options shared by every subcommand, plus the action selected by parsing.
struct Context {
    bool json = false;
    std::uint64_t seed = 20250607;
    std::size_t threads = 1;
    std::function<int()> action;
};

using Json = nlohmann::ordered_json;

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUsage = 2;

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Graph text file (ports optional).
BiboundariedGraph load_graph(const std::string& path);
std::vector<BiboundariedGraph> load_gadgets(const std::string& path);
std::array<BiboundariedGraph, 4> load_quadruple(const std::string& path);
GadgetTriple load_triple(const std::string& path);
CnfInstance load_cnf(const std::string& path);
mso::FormulaPtr load_formula(const std::string& text);

Json graph_json(const Digraph& g);
Json graph_json(const BiboundariedGraph& g);

/// Prints the verdict ("true"/"false" or {"result": ...}) and maps it to 0/1.
int verdict(const Context& ctx, bool value);
/// Writes `text` to `out` if given, else to stdout.
void emit(const std::string& out, const std::string& text);

void add_structure_commands(CLI::App& app, Context& ctx);
void add_reduction_commands(CLI::App& app, Context& ctx);

} // namespace succmso::cli
