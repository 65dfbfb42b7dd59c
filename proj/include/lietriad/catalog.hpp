// Catalog of admissible Satake diagrams for the involution classes of the
// compact simple Lie algebras, generated per family so arbitrary parameters
// instantiate on demand.  k-labels use the compact grammar understood by the
// CLI parser ("so3+so5", "s(u2+u4)", "u6").
#pragma once

#include "lietriad/sigma.hpp"

namespace lietriad {

struct AlgebraLabel {
    enum class Kind { SU, SO, SP, E6, E7, E8, F4, G2 };
    Kind kind;
    int n = 0; // block size for su/so/sp

    std::string str() const {
        switch (kind) {
            case Kind::SU: return "su" + std::to_string(n);
            case Kind::SO: return "so" + std::to_string(n);
            case Kind::SP: return "sp" + std::to_string(n);
            case Kind::E6: return "e6";
            case Kind::E7: return "e7";
            case Kind::E8: return "e8";
            case Kind::F4: return "f4";
            case Kind::G2: return "g2";
        }
        return {};
    }

    std::string pretty() const {
        switch (kind) {
            case Kind::SU: return "su(" + std::to_string(n) + ")";
            case Kind::SO: return "so(" + std::to_string(n) + ")";
            case Kind::SP: return "sp(" + std::to_string(n) + ")";
            default: return str();
        }
    }

    CartanType cartan_type() const {
        switch (kind) {
            case Kind::SU: return {Series::A, n - 1};
            case Kind::SO:
                if (n % 2 == 1) return {Series::B, (n - 1) / 2};
                return {Series::D, n / 2};
            case Kind::SP: return {Series::C, n};
            case Kind::E6: return {Series::E, 6};
            case Kind::E7: return {Series::E, 7};
            case Kind::E8: return {Series::E, 8};
            case Kind::F4: return {Series::F, 4};
            case Kind::G2: return {Series::G, 2};
        }
        return {Series::A, 1};
    }

    static AlgebraLabel parse(std::string_view s) {
        auto starts = [&](const char* p) { return s.substr(0, 2) == p; };
        if (s == "e6") return {Kind::E6, 0};
        if (s == "e7") return {Kind::E7, 0};
        if (s == "e8") return {Kind::E8, 0};
        if (s == "f4") return {Kind::F4, 0};
        if (s == "g2") return {Kind::G2, 0};
        if (s.size() >= 3 && (starts("su") || starts("so") || starts("sp"))) {
            int n = 0;
            for (std::size_t i = 2; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("unknown algebra '" + std::string(s) + "'");
                n = n * 10 + (s[i] - '0');
            }
            Kind k = starts("su") ? Kind::SU : (starts("so") ? Kind::SO : Kind::SP);
            AlgebraLabel g{k, n};
            g.check_supported();
            return g;
        }
        throw std::invalid_argument("unknown algebra '" + std::string(s) + "'");
    }

    void check_supported() const {
        switch (kind) {
            case Kind::SU:
                if (n < 2) throw std::invalid_argument("su(" + std::to_string(n) + ") is not supported (need n >= 2)");
                return;
            case Kind::SO:
                if (n < 5)
                    throw std::invalid_argument("so(" + std::to_string(n) + ") is not supported (not simple or too small; so(6) is the smallest even case)");
                return;
            case Kind::SP:
                if (n < 2) throw std::invalid_argument("sp(" + std::to_string(n) + ") is not supported (sp(1) = su(2))");
                return;
            default: return;
        }
    }
};

struct InvolutionClass {
    std::string g;            // algebra string, e.g. "so8"
    CartanType ctype{Series::A, 1};
    std::string family;       // AI, AII, AIII, BDI, DIII, CI, CII, EI..EIX, FI, FII, G
    std::vector<int> params;  // family parameters, e.g. {a, b}
    std::string k_label;      // fixed-point subalgebra in compact grammar
    SatakeDiagram diagram;
    int expected_rank = 0;    // classical rank of the symmetric pair

    std::string k_pretty() const {
        std::string out;
        bool digit_run = false;
        for (char c : k_label) {
            bool d = c >= '0' && c <= '9';
            if (d && !digit_run) out += '(';
            if (!d && digit_run) out += ')';
            digit_run = d;
            out += c;
        }
        if (digit_run) out += ')';
        return out;
    }
};

namespace detail {

inline SatakeDiagram make_diagram(CartanType t, std::vector<int> black,
                                  std::vector<std::pair<int, int>> arrows) {
    SatakeDiagram s;
    s.type = t;
    s.black = std::move(black);
    s.arrows = std::move(arrows);
    s.normalize();
    s.validate_structure();
    return s;
}

} // namespace detail

// diagram generators, one per family; nodes are 0-based Bourbaki positions
inline SatakeDiagram diagram_for(const AlgebraLabel& g, const std::string& family,
                                 const std::vector<int>& params) {
    using detail::make_diagram;
    CartanType t = g.cartan_type();
    auto bad = [&](const std::string& msg) { return std::invalid_argument("diagram_for " + g.str() + " " + family + ": " + msg); };

    if (g.kind == AlgebraLabel::Kind::SU) {
        int n = g.n;
        if (family == "AI") return make_diagram(t, {}, {});
        if (family == "AII") {
            if (n % 2 != 0 || n < 4) throw bad("needs su(2m), m >= 2");
            std::vector<int> black;
            for (int i = 0; i < n - 1; i += 2) black.push_back(i);
            return make_diagram(t, black, {});
        }
        if (family == "AIII") {
            if (params.size() != 2) throw bad("needs params a, b");
            int a = params[0], b = params[1];
            if (a < 1 || a > b || a + b != n) throw bad("needs 1 <= a <= b, a + b = n");
            std::vector<int> black;
            std::vector<std::pair<int, int>> arrows;
            for (int i = a; i <= n - a - 2; ++i) black.push_back(i);
            int pairs = (a < b) ? a : a - 1;
            for (int i = 0; i < pairs; ++i) arrows.emplace_back(i, n - 2 - i);
            return make_diagram(t, black, arrows);
        }
        throw bad("unknown family");
    }
    if (g.kind == AlgebraLabel::Kind::SO) {
        int n = g.n, m = t.rank;
        if (family == "BDI") {
            if (params.size() != 2) throw bad("needs params a, b");
            int a = params[0], b = params[1];
            if (a < 1 || a > b || a + b != n) throw bad("needs 1 <= a <= b, a + b = n");
            if (t.series == Series::B || a <= m - 2) {
                std::vector<int> black;
                for (int i = a; i < m; ++i) black.push_back(i);
                return make_diagram(t, black, {});
            }
            if (a == m - 1) return make_diagram(t, {}, {{m - 2, m - 1}});
            return make_diagram(t, {}, {}); // a == m: split
        }
        if (family == "DIII") {
            if (t.series != Series::D) throw bad("u(m) needs so(2m)");
            std::vector<int> black;
            if (m % 2 == 0) {
                for (int i = 0; i <= m - 2; i += 2) black.push_back(i);
                return make_diagram(t, black, {});
            }
            for (int i = 0; i <= m - 3; i += 2) black.push_back(i);
            return make_diagram(t, black, {{m - 2, m - 1}});
        }
        throw bad("unknown family");
    }
    if (g.kind == AlgebraLabel::Kind::SP) {
        int n = g.n;
        if (family == "CI") return make_diagram(t, {}, {});
        if (family == "CII") {
            if (params.size() != 2) throw bad("needs params a, b");
            int a = params[0], b = params[1];
            if (a < 1 || a > b || a + b != n) throw bad("needs 1 <= a <= b, a + b = n");
            std::vector<int> black;
            for (int i = 0; i <= 2 * a - 2; i += 2) black.push_back(i);
            if (a < b)
                for (int i = 2 * a; i < n; ++i) black.push_back(i);
            return make_diagram(t, black, {});
        }
        throw bad("unknown family");
    }
    // exceptional families, fixed diagrams
    if (family == "EI") return make_diagram(t, {}, {});
    if (family == "EII") return make_diagram(t, {}, {{0, 5}, {2, 4}});
    if (family == "EIII") return make_diagram(t, {2, 3, 4}, {{0, 5}});
    if (family == "EIV") return make_diagram(t, {1, 2, 3, 4}, {});
    if (family == "EV") return make_diagram(t, {}, {});
    if (family == "EVI") return make_diagram(t, {1, 4, 6}, {});
    if (family == "EVII") return make_diagram(t, {1, 2, 3, 4}, {});
    if (family == "EVIII") return make_diagram(t, {}, {});
    if (family == "EIX") return make_diagram(t, {1, 2, 3, 4}, {});
    if (family == "FI") return make_diagram(t, {}, {});
    if (family == "FII") return make_diagram(t, {0, 1, 2}, {});
    if (family == "G") return make_diagram(t, {}, {});
    throw bad("unknown family");
}

// one entry per Aut(g)-conjugacy class of involutions
inline std::vector<InvolutionClass> involution_classes(const AlgebraLabel& g) {
    g.check_supported();
    std::vector<InvolutionClass> out;
    auto add = [&](const std::string& family, std::vector<int> params, const std::string& k_label,
                   int rank) {
        InvolutionClass c;
        c.g = g.str();
        c.ctype = g.cartan_type();
        c.family = family;
        c.params = params;
        c.k_label = k_label;
        c.diagram = diagram_for(g, family, params);
        c.expected_rank = rank;
        out.push_back(std::move(c));
    };
    using Kind = AlgebraLabel::Kind;
    switch (g.kind) {
        case Kind::SU: {
            int n = g.n;
            add("AI", {}, "so" + std::to_string(n), n - 1);
            if (n % 2 == 0 && n >= 4) add("AII", {}, "sp" + std::to_string(n / 2), n / 2 - 1);
            for (int a = 1; 2 * a <= n; ++a) {
                if (n == 2 && a == 1) continue; // s(u1+u1) coincides with so(2) on su(2)
                add("AIII", {a, n - a}, "s(u" + std::to_string(a) + "+u" + std::to_string(n - a) + ")", a);
            }
            break;
        }
        case Kind::SO: {
            int n = g.n;
            for (int a = 1; 2 * a <= n; ++a)
                add("BDI", {a, n - a}, "so" + std::to_string(a) + "+so" + std::to_string(n - a), a);
            // u(m) for even n, except so(8) where u(4) = so(2)+so(6) up to Aut
            if (n % 2 == 0 && n != 8) add("DIII", {}, "u" + std::to_string(n / 2), n / 4);
            break;
        }
        case Kind::SP: {
            int n = g.n;
            add("CI", {}, "u" + std::to_string(n), n);
            for (int a = 1; 2 * a <= n; ++a)
                add("CII", {a, n - a}, "sp" + std::to_string(a) + "+sp" + std::to_string(n - a), a);
            break;
        }
        case Kind::E6:
            add("EI", {}, "sp4", 6);
            add("EII", {}, "su6+su2", 4);
            add("EIII", {}, "so10+so2", 2);
            add("EIV", {}, "f4", 2);
            break;
        case Kind::E7:
            add("EV", {}, "su8", 7);
            add("EVI", {}, "so12+su2", 4);
            add("EVII", {}, "e6+so2", 3);
            break;
        case Kind::E8:
            add("EVIII", {}, "so16", 8);
            add("EIX", {}, "e7+su2", 4);
            break;
        case Kind::F4:
            add("FI", {}, "su2+sp3", 4);
            add("FII", {}, "so9", 1);
            break;
        case Kind::G2:
            add("G", {}, "su2+su2", 2);
            break;
    }
    return out;
}

// look an involution class up by its k-label (compact grammar)
inline InvolutionClass class_by_label(const AlgebraLabel& g, const std::string& k_label) {
    for (auto& c : involution_classes(g))
        if (c.k_label == k_label) return c;
    // permissive extras used by the special isomorphisms: u(4) on so(8)
    if (g.kind == AlgebraLabel::Kind::SO && g.n == 8 && k_label == "u4") {
        InvolutionClass c;
        c.g = g.str();
        c.ctype = g.cartan_type();
        c.family = "DIII";
        c.k_label = "u4";
        c.diagram = diagram_for(g, "DIII", {});
        c.expected_rank = 2;
        return c;
    }
    throw std::invalid_argument("no involution class '" + k_label + "' on " + g.str());
}

} // namespace lietriad
