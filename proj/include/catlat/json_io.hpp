#pragma once

#include <string>
#include <utility>

#include "json.hpp"

#include "catlat/orders.hpp"

namespace catlat {

using ordered_json = nlohmann::ordered_json;

/// Poset object: {"n": ..., "pairs": [[x,y], ...], "canonical": ...} with
/// pairs in lexicographic order. The stored relation is the full transitively
/// closed strict order, never just the covers.
inline ordered_json spio_to_json(const Spio& a) {
    ordered_json j;
    j["n"] = a.size();
    ordered_json arr = ordered_json::array();
    for (const auto& [x, y] : a.relation().pairs()) arr.push_back({x, y});
    j["pairs"] = std::move(arr);
    j["canonical"] = a.is_canonical();
    return j;
}

inline Spio spio_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("pairs"))
        throw std::invalid_argument("poset JSON must be an object with \"n\" and \"pairs\"");
    if (!j.at("n").is_number_integer())
        throw std::invalid_argument("poset JSON: \"n\" must be an integer");
    const int n = j.at("n").get<int>();
    BinaryRelation rel(n);
    for (const auto& item : j.at("pairs")) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw std::invalid_argument("poset JSON: each pair must be a two-integer array");
        rel.add(item[0].get<int>(), item[1].get<int>());
    }
    if (!is_strict_order(rel))
        throw std::invalid_argument(
            "poset JSON must contain the full transitively closed strict order");
    Spio s{std::move(rel)};
    if (j.contains("canonical")) {
        if (!j.at("canonical").is_boolean())
            throw std::invalid_argument("poset JSON: \"canonical\" must be a boolean");
        if (j.at("canonical").get<bool>() && !s.is_canonical())
            throw std::invalid_argument(
                "poset JSON claims canonical labelling but the relation is not canonical");
    }
    return s;
}

inline ordered_json hasse_to_json(const HasseDiagram& h) {
    ordered_json j;
    j["order"] = h.order;
    j["n"] = h.n;
    j["elements"] = h.elements;
    ordered_json covers = ordered_json::array();
    for (const auto& [lo, hi] : h.covers) covers.push_back({lo, hi});
    j["covers"] = std::move(covers);
    return j;
}

/// Cover adjacency of a full-symmetric-group Bruhat order.
inline ordered_json bruhat_covers_json(const BruhatTable& table) {
    ordered_json j;
    j["order"] = table.kind() == BruhatTable::Kind::strong ? "strong" : "weak";
    j["n"] = table.n();
    ordered_json elems = ordered_json::array();
    for (const Permutation& p : table.elements()) elems.push_back(p.to_string());
    j["elements"] = std::move(elems);
    ordered_json covers = ordered_json::array();
    for (const auto& [lo, hi] : table.covers()) covers.push_back({lo, hi});
    j["covers"] = std::move(covers);
    return j;
}

}  // namespace catlat
