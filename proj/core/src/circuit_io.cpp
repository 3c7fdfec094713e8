#include "succmso/circuit.hpp"
#include "succmso/error.hpp"
#include "json_util.hpp"

#include <json.hpp>

namespace succmso {

using nlohmann::ordered_json;

std::string serialize(const BoolCircuit& circuit) {
    return detail::circuit_to_json(circuit).dump() + "\n";
}

BoolCircuit parse_circuit(std::string_view text) {
    return detail::circuit_from_json(detail::parse_json(text));
}

namespace detail {

ordered_json circuit_to_json(const BoolCircuit& circuit) {
    ordered_json gates = ordered_json::array();
    for (const Gate& g : circuit.gates()) {
        switch (g.kind) {
        case GateKind::kInput: gates.push_back({"input", g.a}); break;
        case GateKind::kConst: gates.push_back({"const", g.a}); break;
        case GateKind::kNot: gates.push_back({"not", g.a}); break;
        case GateKind::kAnd: gates.push_back({"and", g.a, g.b}); break;
        case GateKind::kOr: gates.push_back({"or", g.a, g.b}); break;
        }
    }
    ordered_json out;
    out["version"] = 1;
    out["label_bits"] = circuit.label_bits();
    out["gates"] = std::move(gates);
    out["output"] = circuit.output();
    return out;
}

BoolCircuit circuit_from_json(const ordered_json& doc) {
    if (!doc.is_object()) throw ParseError("circuit must be a JSON object", 0, 0);
    if (doc.value("version", -1) != 1) throw ParseError("circuit \"version\" must be 1", 0, 0);
    const auto label_bits = require_uint(doc, "label_bits", "circuit");
    const auto output = require_uint(doc, "output", "circuit");
    if (!doc.contains("gates") || !doc["gates"].is_array()) throw ParseError("circuit needs a \"gates\" array", 0, 0);

    std::vector<Gate> gates;
    const auto& list = doc["gates"];
    gates.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& rec = list[i];
        auto bad = [&](const std::string& why) -> ParseError {
            return ParseError("gate " + std::to_string(i) + ": " + why, 0, 0);
        };
        if (!rec.is_array() || rec.empty() || !rec[0].is_string()) throw bad("expected [kind, args...]");
        const std::string kind = rec[0].get<std::string>();
        auto arg = [&](std::size_t k) -> GateId {
            if (!rec[k].is_number_unsigned()) throw bad("argument " + std::to_string(k) + " must be a nonnegative integer");
            const auto v = rec[k].get<std::uint64_t>();
            if (v > std::numeric_limits<GateId>::max()) throw bad("argument out of range");
            return static_cast<GateId>(v);
        };
        auto arity = [&](std::size_t n) {
            if (rec.size() != n + 1) throw bad("\"" + kind + "\" takes " + std::to_string(n) + " argument(s)");
        };
        if (kind == "input") {
            arity(1);
            gates.push_back({GateKind::kInput, arg(1), 0});
        } else if (kind == "const") {
            arity(1);
            const GateId v = arg(1);
            if (v > 1) throw bad("constant must be 0 or 1");
            gates.push_back({GateKind::kConst, v, 0});
        } else if (kind == "not") {
            arity(1);
            gates.push_back({GateKind::kNot, arg(1), 0});
        } else if (kind == "and" || kind == "or") {
            arity(2);
            gates.push_back({kind == "and" ? GateKind::kAnd : GateKind::kOr, arg(1), arg(2)});
        } else {
            throw bad("unknown gate kind \"" + kind + "\"");
        }
    }
    if (output > std::numeric_limits<GateId>::max()) throw ParseError("output index out of range", 0, 0);
    return BoolCircuit(label_bits, std::move(gates), static_cast<GateId>(output));
}

ordered_json parse_json(std::string_view text) {
    try {
        return ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        // byte is 1-based and points at the offending character
        std::size_t line = 1, col = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("malformed JSON", line, col);
    }
}

std::uint64_t require_uint(const ordered_json& obj, const char* key, const char* what) {
    if (!obj.contains(key) || !obj[key].is_number_unsigned())
        throw ParseError(std::string(what) + " needs a nonnegative integer \"" + key + "\"", 0, 0);
    return obj[key].get<std::uint64_t>();
}

} // namespace detail
} // namespace succmso
