// DOT and plain-text rendering of Satake and double Satake diagrams.
// Output is deterministic for a fixed input: black nodes are filled, Satake
// involutions are dashed undirected edges labeled "p".
#pragma once

#include "lietriad/sigma.hpp"
#include "lietriad/double_system.hpp"

namespace lietriad {

namespace detail {

// edge multiplicity between simple roots i, j: n_ij * n_ji (0, 1, 2, 3)
inline int edge_multiplicity(const RootSystem& rs, int i, int j) {
    Rational m = RootSystem::cartan_pairing(rs.simple_root(i), rs.simple_root(j)) *
                 RootSystem::cartan_pairing(rs.simple_root(j), rs.simple_root(i));
    return static_cast<int>(m.num());
}

inline void dot_nodes_edges(std::string& out, const RootSystem& rs, const SatakeDiagram& s,
                            const std::string& prefix, int rank_group) {
    for (int i = 0; i < s.rank(); ++i) {
        out += "  " + prefix + std::to_string(i + 1) + " [label=\"a" + std::to_string(i + 1) +
               "\", shape=circle, style=filled, fillcolor=" +
               (s.is_black(i) ? std::string("black, fontcolor=white") : std::string("white")) + "];\n";
    }
    if (rank_group >= 0) {
        out += "  { rank=same; ";
        for (int i = 0; i < s.rank(); ++i) out += prefix + std::to_string(i + 1) + "; ";
        out += "}\n";
    }
    for (int i = 0; i < s.rank(); ++i)
        for (int j = i + 1; j < s.rank(); ++j) {
            int m = edge_multiplicity(rs, i, j);
            for (int k = 0; k < m; ++k)
                out += "  " + prefix + std::to_string(i + 1) + " -- " + prefix + std::to_string(j + 1) + ";\n";
        }
    for (const auto& [a, b] : s.arrows)
        out += "  " + prefix + std::to_string(a + 1) + " -- " + prefix + std::to_string(b + 1) +
               " [style=dashed, label=\"p\", constraint=false];\n";
}

} // namespace detail

inline std::string satake_to_dot(const SatakeDiagram& s) {
    auto rs = shared_root_system(s.type);
    std::string out = "graph satake_" + s.type.str() + " {\n";
    detail::dot_nodes_edges(out, *rs, s, "a", -1);
    out += "}\n";
    return out;
}

// two stacked copies of the Dynkin graph with aligned nodes
inline std::string double_satake_to_dot(const DoubleSatakeDiagram& d) {
    auto rs = shared_root_system(d.type());
    std::string out = "graph double_satake_" + d.type().str() + " {\n";
    detail::dot_nodes_edges(out, *rs, d.s1, "u", 0);
    detail::dot_nodes_edges(out, *rs, d.s2, "v", 1);
    for (int i = 0; i < d.type().rank; ++i)
        out += "  u" + std::to_string(i + 1) + " -- v" + std::to_string(i + 1) + " [style=invis];\n";
    out += "}\n";
    return out;
}

inline std::string satake_to_text(const SatakeDiagram& s) {
    auto rs = shared_root_system(s.type);
    std::string out = s.type.str() + ":";
    for (int i = 0; i < s.rank(); ++i) out += std::string(" ") + (s.is_black(i) ? "*" : "o");
    out += "\n";
    std::string edges;
    for (int i = 0; i < s.rank(); ++i)
        for (int j = i + 1; j < s.rank(); ++j) {
            int m = detail::edge_multiplicity(*rs, i, j);
            if (m > 0)
                edges += "  a" + std::to_string(i + 1) + (m == 1 ? " - " : (m == 2 ? " = " : " == ")) +
                         "a" + std::to_string(j + 1) + "\n";
        }
    out += edges;
    for (const auto& [a, b] : s.arrows)
        out += "  p: a" + std::to_string(a + 1) + " <-> a" + std::to_string(b + 1) + "\n";
    return out;
}

inline std::string double_satake_to_text(const DoubleSatakeDiagram& d) {
    return "s1 " + satake_to_text(d.s1) + "s2 " + satake_to_text(d.s2);
}

} // namespace lietriad
