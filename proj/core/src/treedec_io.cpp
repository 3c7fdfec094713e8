#include "succmso/error.hpp"
#include "succmso/treedec.hpp"
#include "json_util.hpp"

namespace succmso {

using nlohmann::ordered_json;

namespace {

TreeDecomposition from_json(const ordered_json& doc) {
    if (!doc.is_object()) throw ParseError("decomposition must be a JSON object", 0, 0);
    if (!doc.contains("parents") || !doc["parents"].is_array() || !doc.contains("bags") || !doc["bags"].is_array())
        throw ParseError("decomposition needs \"parents\" and \"bags\" arrays", 0, 0);
    std::vector<long> parents;
    for (const auto& p : doc["parents"]) {
        if (!p.is_number_integer()) throw ParseError("parents must be integers", 0, 0);
        parents.push_back(p.get<long>());
    }
    std::vector<std::vector<Vertex>> bags;
    for (const auto& b : doc["bags"]) {
        if (!b.is_array()) throw ParseError("each bag must be an array", 0, 0);
        std::vector<Vertex> bag;
        for (const auto& v : b) {
            if (!v.is_number_unsigned()) throw ParseError("bag entries must be non-negative integers", 0, 0);
            bag.push_back(v.get<Vertex>());
        }
        bags.push_back(std::move(bag));
    }
    std::optional<std::size_t> leaf;
    if (doc.contains("pointed_leaf") && !doc["pointed_leaf"].is_null()) {
        if (!doc["pointed_leaf"].is_number_unsigned()) throw ParseError("pointed_leaf must be an index or null", 0, 0);
        leaf = doc["pointed_leaf"].get<std::size_t>();
    }
    TreeDecomposition t = make_decomposition(std::move(parents), std::move(bags), leaf);
    if (doc.contains("root")) {
        if (!doc["root"].is_number_unsigned() || doc["root"].get<std::size_t>() != t.root)
            fail(ErrorCode::kInvalidDecomposition, "\"root\" does not match the node with parent -1");
    }
    return t;
}

} // namespace

TreeDecomposition parse_decomposition_json(std::string_view text) { return from_json(detail::parse_json(text)); }

std::vector<TreeDecomposition> parse_decompositions_json(std::string_view text) {
    const auto doc = detail::parse_json(text);
    if (!doc.is_array()) throw ParseError("expected an array of decompositions", 0, 0);
    std::vector<TreeDecomposition> out;
    for (const auto& item : doc) out.push_back(from_json(item));
    return out;
}

std::string to_json(const TreeDecomposition& t) {
    ordered_json doc;
    doc["root"] = t.root;
    doc["parents"] = t.parents;
    doc["bags"] = t.bags;
    doc["pointed_leaf"] = t.pointed_leaf ? ordered_json(*t.pointed_leaf) : ordered_json(nullptr);
    return doc.dump() + "\n";
}

} // namespace succmso
