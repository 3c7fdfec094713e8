#include "succmso/error.hpp"
#include "succmso/graph.hpp"
#include "json_util.hpp"

#include <charconv>
#include <sstream>

namespace succmso {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

Vertex parse_label(std::string_view tok, std::size_t line, std::size_t col) {
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("expected a vertex label, got '" + std::string(tok) + "'", line, col);
    return v;
}

} // namespace

BiboundariedGraph parse_graph_text(std::string_view text) {
    BiboundariedGraph out;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto toks = split_ws(line);
        if (toks.empty()) continue;
        auto col_of = [&](std::string_view tok) { return static_cast<std::size_t>(tok.data() - line.data()) + 1; };
        const std::string_view head = toks[0];
        if (head == "graph") {
            if (have_header) throw ParseError("duplicate 'graph' line", line_no, 1);
            if (toks.size() != 2) throw ParseError("expected 'graph <n>'", line_no, 1);
            out.graph = Digraph(parse_label(toks[1], line_no, col_of(toks[1])));
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError("first statement must be 'graph <n>'", line_no, col_of(head));
        if (head == "e") {
            if (toks.size() != 3) throw ParseError("expected 'e <u> <v>'", line_no, 1);
            const Vertex u = parse_label(toks[1], line_no, col_of(toks[1]));
            const Vertex v = parse_label(toks[2], line_no, col_of(toks[2]));
            if (u >= out.graph.size() || v >= out.graph.size())
                throw ParseError("edge endpoint out of range", line_no, col_of(toks[1]));
            out.graph.add_edge(u, v);
        } else if (head == "p1" || head == "p2") {
            auto& seq = head == "p1" ? out.p1 : out.p2;
            seq.clear();
            for (std::size_t k = 1; k < toks.size(); ++k) {
                const Vertex v = parse_label(toks[k], line_no, col_of(toks[k]));
                if (v >= out.graph.size()) throw ParseError("port out of range", line_no, col_of(toks[k]));
                seq.push_back(v);
            }
        } else {
            throw ParseError("unknown statement '" + std::string(head) + "'", line_no, col_of(head));
        }
    }
    if (!have_header) throw ParseError("missing 'graph <n>' line", 0, 0);
    out.validate();
    return out;
}

std::string to_graph_text(const Digraph& g) {
    std::ostringstream os;
    os << "graph " << g.size() << "\n";
    for (const auto& [u, v] : g.edges()) os << "e " << u << " " << v << "\n";
    return os.str();
}

std::string to_graph_text(const BiboundariedGraph& g) {
    std::ostringstream os;
    os << to_graph_text(g.graph);
    if (!g.p1.empty() || !g.p2.empty()) {
        os << "p1";
        for (Vertex v : g.p1) os << " " << v;
        os << "\np2";
        for (Vertex v : g.p2) os << " " << v;
        os << "\n";
    }
    return os.str();
}

namespace detail {

nlohmann::ordered_json gadget_to_json(const BiboundariedGraph& g) {
    nlohmann::ordered_json obj;
    obj["n"] = g.size();
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.graph.edges()) edges.push_back({u, v});
    obj["edges"] = std::move(edges);
    obj["p1"] = g.p1;
    obj["p2"] = g.p2;
    return obj;
}

BiboundariedGraph gadget_from_json(const nlohmann::ordered_json& obj) {
    if (!obj.is_object()) throw ParseError("gadget must be a JSON object", 0, 0);
    const auto n = require_uint(obj, "n", "gadget");
    BiboundariedGraph g;
    g.graph = Digraph(n);
    if (obj.contains("edges")) {
        if (!obj["edges"].is_array()) throw ParseError("gadget \"edges\" must be an array", 0, 0);
        for (const auto& e : obj["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
                throw ParseError("edge must be [u, v]", 0, 0);
            const auto u = e[0].get<std::uint64_t>();
            const auto v = e[1].get<std::uint64_t>();
            if (u >= n || v >= n) throw ParseError("edge endpoint out of range", 0, 0);
            g.graph.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
    }
    for (const char* key : {"p1", "p2"}) {
        auto& seq = key[1] == '1' ? g.p1 : g.p2;
        if (!obj.contains(key)) continue;
        if (!obj[key].is_array()) throw ParseError(std::string("gadget \"") + key + "\" must be an array", 0, 0);
        for (const auto& v : obj[key]) {
            if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= n) throw ParseError("port out of range", 0, 0);
            seq.push_back(static_cast<Vertex>(v.get<std::uint64_t>()));
        }
    }
    g.validate();
    return g;
}

} // namespace detail

std::vector<BiboundariedGraph> parse_gadgets_json(std::string_view text) {
    const auto doc = detail::parse_json(text);
    if (!doc.is_array()) throw ParseError("gadget file must be a JSON array", 0, 0);
    std::vector<BiboundariedGraph> out;
    for (const auto& item : doc) out.push_back(detail::gadget_from_json(item));
    return out;
}

std::string gadgets_to_json(std::span<const BiboundariedGraph> gadgets) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& g : gadgets) doc.push_back(detail::gadget_to_json(g));
    return doc.dump(2) + "\n";
}

} // namespace succmso
