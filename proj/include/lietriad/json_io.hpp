// JSON encodings of the core types.  Rationals serialize as canonical
// strings "p/q" (sign on the numerator); Satake diagrams use 0-based node
// indices over the Bourbaki base.
#pragma once

#include <json.hpp>

#include "lietriad/classify.hpp"

namespace lietriad {

using json = nlohmann::json;

inline json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

inline Vec vec_from_json(const json& a) {
    Vec v;
    for (const auto& x : a) v.push_back(Rational::parse(x.get<std::string>()));
    return v;
}

inline json root_system_to_json(const RootSystem& rs) {
    json j;
    j["type"] = std::string(1, static_cast<char>(rs.type.series));
    j["rank"] = rs.type.rank;
    json roots = json::array();
    for (const auto& r : rs.roots) roots.push_back(vec_to_json(r));
    j["roots"] = roots;
    j["simple"] = rs.simple;
    return j;
}

inline json satake_to_json(const SatakeDiagram& s) {
    json j;
    j["type"] = std::string(1, static_cast<char>(s.type.series));
    j["rank"] = s.rank();
    j["black"] = s.black;
    json arrows = json::array();
    for (const auto& [a, b] : s.arrows) arrows.push_back(json::array({a, b}));
    j["arrows"] = arrows;
    return j;
}

inline SatakeDiagram satake_from_json(const json& j) {
    SatakeDiagram s;
    s.type = CartanType::parse(j.at("type").get<std::string>() + std::to_string(j.at("rank").get<int>()));
    for (const auto& b : j.at("black")) s.black.push_back(b.get<int>());
    for (const auto& a : j.at("arrows")) s.arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
    s.normalize();
    s.validate_structure();
    return s;
}

inline json double_satake_to_json(const DoubleSatakeDiagram& d) {
    json j;
    j["type"] = std::string(1, static_cast<char>(d.type().series));
    j["rank"] = d.type().rank;
    j["s1"] = {{"black", d.s1.black}, {"arrows", satake_to_json(d.s1)["arrows"]}};
    j["s2"] = {{"black", d.s2.black}, {"arrows", satake_to_json(d.s2)["arrows"]}};
    return j;
}

inline DoubleSatakeDiagram double_satake_from_json(const json& j) {
    auto part = [&](const char* key) {
        json s = j.at(key);
        s["type"] = j.at("type");
        s["rank"] = j.at("rank");
        return satake_from_json(s);
    };
    DoubleSatakeDiagram d{part("s1"), part("s2")};
    d.check();
    return d;
}

inline json triad_to_json(const TriadClass& t) {
    json j;
    j["g"] = t.g;
    j["k1"] = t.class1.k_label;
    j["k2"] = t.class2.k_label;
    j["twist"] = t.twist;
    j["rank"] = t.rank;
    j["order"] = t.order;
    j["self_dual"] = t.self_dual;
    j["display"] = t.display_name;
    j["diagram"] = double_satake_to_json(t.representative);
    return j;
}

inline json report_to_json(const ClassificationReport& r) {
    json j;
    j["g"] = r.g;
    j["catalog_hash"] = r.catalog_hash;
    json cl = json::array();
    for (const auto& t : r.classes) cl.push_back(triad_to_json(t));
    j["classes"] = cl;
    return j;
}

// frozen snapshot entry format: {g, class_label, k_label, params, diagram}
inline json catalog_to_json(const std::vector<AlgebraLabel>& algebras) {
    json arr = json::array();
    for (const auto& g : algebras) {
        for (const auto& c : involution_classes(g)) {
            json e;
            e["g"] = c.g;
            e["class_label"] = c.family;
            e["k_label"] = c.k_label;
            e["params"] = c.params;
            e["diagram"] = satake_to_json(c.diagram);
            arr.push_back(e);
        }
    }
    return arr;
}

// Markdown table mirroring the rank/order classification columns
inline std::string report_to_markdown(const ClassificationReport& r) {
    std::string out;
    out += "| (g, k1, k2) | rank | order | self-dual |\n";
    out += "|---|---|---|---|\n";
    for (const auto& t : r.classes) {
        out += "| " + t.display_name + " | " + std::to_string(t.rank) + " | " +
               std::to_string(t.order) + " | " + (t.self_dual ? "yes" : "no") + " |\n";
    }
    return out;
}

inline std::string report_to_text(const ClassificationReport& r) {
    std::string out = "classification of " + r.g + " (" +
                      std::to_string(r.classes.size()) + " classes, catalog " + r.catalog_hash + ")\n";
    for (const auto& t : r.classes) {
        out += "  " + t.display_name + ": rank " + std::to_string(t.rank) + ", order " +
               std::to_string(t.order) + (t.self_dual ? ", self-dual" : "") + "\n";
    }
    return out;
}

} // namespace lietriad
