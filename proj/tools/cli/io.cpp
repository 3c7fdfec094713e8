#include "cli.hpp"

#include "succmso/cnf.hpp"
#include "succmso/error.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace succmso::cli {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::kIoError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) fail(ErrorCode::kIoError, "cannot write '" + path + "'");
}

BiboundariedGraph load_graph(const std::string& path) { return parse_graph_text(read_file(path)); }

std::vector<BiboundariedGraph> load_gadgets(const std::string& path) { return parse_gadgets_json(read_file(path)); }

std::array<BiboundariedGraph, 4> load_quadruple(const std::string& path) {
    auto list = load_gadgets(path);
    if (list.size() != 4) fail(ErrorCode::kBadParam, "'" + path + "' must hold exactly four gadgets G0..G3");
    return {list[0], list[1], list[2], list[3]};
}

GadgetTriple load_triple(const std::string& path) {
    auto list = load_gadgets(path);
    if (list.size() != 3) fail(ErrorCode::kBadParam, "'" + path + "' must hold exactly three gadgets G1..G3");
    return {list[0], list[1], list[2]};
}

CnfInstance load_cnf(const std::string& path) { return parse_dimacs(read_file(path)); }

mso::FormulaPtr load_formula(const std::string& text) { return mso::parse(text); }

Json graph_json(const Digraph& g) {
    Json doc;
    doc["n"] = g.size();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    return doc;
}

Json graph_json(const BiboundariedGraph& g) {
    Json doc = graph_json(g.graph);
    doc["p1"] = g.p1;
    doc["p2"] = g.p2;
    return doc;
}

int verdict(const Context& ctx, bool value) {
    if (ctx.json)
        std::cout << Json{{"result", value}}.dump() << "\n";
    else
        std::cout << (value ? "true" : "false") << "\n";
    return value ? kOk : kFalse;
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty())
        std::cout << text;
    else
        write_file(out, text);
}

} // namespace succmso::cli
