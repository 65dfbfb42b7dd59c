// Command-line front end: query the catalog, classify, compute invariants,
// render diagrams, and run the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "lietriad/checks.hpp"
#include "lietriad/json_io.hpp"
#include "lietriad/render.hpp"

using namespace lietriad;

namespace {

struct KSpec {
    std::string k_label;
    std::string twist = "id";
};

// "so3+so5", "s(u2+u4)", "u6'", "kappa(so3+so5)", optionally "k:"-prefixed
KSpec parse_k_spec(std::string s) {
    KSpec out;
    if (s.rfind("k:", 0) == 0) s = s.substr(2);
    for (const char* t : {"kappa2", "kappa", "tau"}) {
        std::string prefix = std::string(t) + "(";
        if (s.rfind(prefix, 0) == 0 && s.back() == ')') {
            out.twist = t;
            out.k_label = s.substr(prefix.size(), s.size() - prefix.size() - 1);
            return out;
        }
    }
    if (!s.empty() && s.back() == '\'') {
        out.twist = "tau";
        out.k_label = s.substr(0, s.size() - 1);
        return out;
    }
    out.k_label = s;
    return out;
}

int cmd_list(const std::string& galg, const std::string& format) {
    AlgebraLabel g = AlgebraLabel::parse(galg);
    auto classes = involution_classes(g);
    if (format == "json") {
        json arr = json::array();
        for (const auto& c : classes) {
            json e;
            e["g"] = c.g;
            e["class_label"] = c.family;
            e["k_label"] = c.k_label;
            e["params"] = c.params;
            e["rank"] = c.expected_rank;
            e["diagram"] = satake_to_json(c.diagram);
            arr.push_back(e);
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    if (format == "dot") {
        for (const auto& c : classes) std::cout << satake_to_dot(c.diagram);
        return 0;
    }
    std::cout << g.str() << ": " << classes.size() << " involution classes\n";
    for (const auto& c : classes) {
        std::cout << "  " << c.family << "  k = " << c.k_pretty() << "  rank " << c.expected_rank
                  << "\n"
                  << "    " << satake_to_text(c.diagram);
    }
    return 0;
}

int cmd_classify(const std::string& galg, const std::string& format, const std::string& pair,
                 const std::string& twist, bool timestamp, int max_rank) {
    AlgebraLabel g = AlgebraLabel::parse(galg);
    if (g.cartan_type().rank > max_rank)
        throw CLI::ValidationError("algebra rank " + std::to_string(g.cartan_type().rank) +
                                   " exceeds --max-rank " + std::to_string(max_rank));
    ClassificationReport rep = classify_algebra(g);
    if (!pair.empty()) {
        auto comma = pair.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--pair expects 'k1,k2'");
        KSpec k1 = parse_k_spec(pair.substr(0, comma));
        KSpec k2 = parse_k_spec(pair.substr(comma + 1));
        std::vector<TriadClass> filtered;
        for (const auto& t : rep.classes) {
            bool match = (t.class1.k_label == k1.k_label && t.class2.k_label == k2.k_label) ||
                         (t.class1.k_label == k2.k_label && t.class2.k_label == k1.k_label);
            if (k2.twist != "id" || k1.twist != "id") {
                std::string want = k1.twist != "id" ? k1.twist : k2.twist;
                match = match && t.twist == want;
            }
            if (match) filtered.push_back(t);
        }
        rep.classes = std::move(filtered);
    }
    if (!twist.empty()) {
        std::vector<TriadClass> filtered;
        for (const auto& t : rep.classes)
            if (t.twist == twist || (twist == "id" && t.twist == "id")) filtered.push_back(t);
        rep.classes = std::move(filtered);
    }
    if (format == "json") {
        json j = report_to_json(rep);
        if (timestamp) j["generated_at"] = static_cast<long long>(std::time(nullptr));
        std::cout << j.dump(2) << "\n";
    } else if (format == "markdown") {
        std::cout << report_to_markdown(rep);
    } else {
        std::cout << report_to_text(rep);
    }
    return 0;
}

int cmd_render(const std::string& spec, const std::string& format, const std::string& outfile) {
    std::string dot, text;
    if (!spec.empty() && spec[0] == '@') { // JSON file with a diagram
        std::ifstream in(spec.substr(1));
        if (!in) throw CLI::ValidationError("cannot open " + spec.substr(1));
        json j = json::parse(in);
        if (j.contains("s1")) {
            DoubleSatakeDiagram d = double_satake_from_json(j);
            dot = double_satake_to_dot(d);
            text = double_satake_to_text(d);
        } else {
            SatakeDiagram s = satake_from_json(j);
            dot = satake_to_dot(s);
            text = satake_to_text(s);
        }
    } else {
        auto colon = spec.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("render spec must be 'algebra:k' or 'algebra:k1,k2' or '@file.json'");
        AlgebraLabel g = AlgebraLabel::parse(spec.substr(0, colon));
        std::string rest = spec.substr(colon + 1);
        auto comma = rest.find(',');
        if (comma == std::string::npos) {
            KSpec k = parse_k_spec(rest);
            SatakeDiagram s = class_by_label(g, k.k_label).diagram;
            if (k.twist != "id") {
                auto rs = shared_root_system(g.cartan_type());
                for (const auto& psi : dynkin_node_automorphisms(*rs))
                    if (detail::twist_name(g.cartan_type(), psi) == k.twist) s = apply_node_perm(s, psi);
            }
            dot = satake_to_dot(s);
            text = satake_to_text(s);
        } else {
            KSpec k1 = parse_k_spec(rest.substr(0, comma));
            KSpec k2 = parse_k_spec(rest.substr(comma + 1));
            SatakeDiagram s1 = class_by_label(g, k1.k_label).diagram;
            SatakeDiagram s2 = class_by_label(g, k2.k_label).diagram;
            auto rs = shared_root_system(g.cartan_type());
            for (const auto& psi : dynkin_node_automorphisms(*rs)) {
                if (detail::twist_name(g.cartan_type(), psi) == k1.twist) s1 = apply_node_perm(s1, psi);
                if (detail::twist_name(g.cartan_type(), psi) == k2.twist) s2 = apply_node_perm(s2, psi);
            }
            DoubleSatakeDiagram d{s1, s2};
            dot = double_satake_to_dot(d);
            text = double_satake_to_text(d);
        }
    }
    const std::string& payload = format == "text" ? text : dot;
    if (outfile.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(outfile);
        if (!out) throw CLI::ValidationError("cannot write " + outfile);
        out << payload;
    }
    return 0;
}

std::string snapshot_path(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("LIETRIAD_SNAPSHOT")) return env;
    return "data/catalog.json";
}

int cmd_verify(std::vector<std::string> scopes, long long weyl_cap, unsigned seed,
               const std::string& snapshot_flag) {
    bool all = scopes.empty();
    bool want_snapshot = all;
    std::vector<std::string> lib_scopes;
    for (const auto& s : scopes) {
        if (s == "snapshot") want_snapshot = true;
        else lib_scopes.push_back(s);
        if (s == "all") {
            all = true;
            want_snapshot = true;
        }
    }
    std::vector<CheckResult> results;
    if (all || !lib_scopes.empty()) results = run_checks(all ? std::vector<std::string>{} : lib_scopes, weyl_cap, seed);
    if (want_snapshot) {
        CheckResult r;
        r.name = "snapshot";
        auto start = std::chrono::steady_clock::now();
        std::string path = snapshot_path(snapshot_flag);
        std::ifstream in(path);
        if (!in) {
            r.pass = false;
            r.detail = "missing snapshot file " + path;
        } else {
            json want = json::parse(in);
            json got = catalog_to_json(default_algebras());
            r.pass = want == got;
            r.detail = r.pass ? "catalog matches " + path : "catalog differs from " + path;
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(r);
    }
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) std::cout << " - " << r.detail;
        std::cout << "\n";
        std::cerr << r.name << ": " << r.seconds << "s\n";
        ok = ok && r.pass;
    }
    std::cout << (ok ? "verification passed" : "verification FAILED") << "\n";
    return ok ? 0 : 1;
}

int cmd_snapshot(const std::string& outfile) {
    json j = catalog_to_json(default_algebras());
    if (outfile.empty()) {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::ofstream out(outfile);
    if (!out) throw CLI::ValidationError("cannot write " + outfile);
    out << j.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of compact symmetric triads: catalog, classification, diagrams"};
    app.require_subcommand(1);

    std::string galg, format = "text", pair, twist, render_spec, outfile, snapshot_flag;
    std::vector<std::string> scopes;
    long long weyl_cap = 200000;
    unsigned seed = 20240811u;
    int max_rank = 8;
    bool timestamp = false;

    auto* list = app.add_subcommand("list", "involution classes of an algebra with Satake diagrams");
    list->add_option("algebra", galg, "algebra, e.g. su6, so8, sp3, e6")->required();
    list->add_option("--format", format, "text | json | dot")->check(CLI::IsMember({"text", "json", "dot"}));

    auto* cls = app.add_subcommand("classify", "classification report with rank and order");
    cls->add_option("algebra", galg, "algebra, e.g. so8")->required();
    std::string cls_format = "text";
    bool table = false;
    cls->add_option("--format", cls_format, "text | json | markdown")
        ->check(CLI::IsMember({"text", "json", "markdown"}));
    cls->add_flag("--table", table, "shorthand for --format markdown");
    cls->add_option("--pair", pair, "restrict to one pair, e.g. u6,u6 or so1+so7,kappa(so3+so5)");
    cls->add_option("--twist", twist, "restrict to a twist: id | kappa | kappa2 | tau");
    cls->add_option("--max-rank", max_rank, "largest Cartan rank accepted (default 8)");
    cls->add_flag("--timestamp", timestamp, "include a generation timestamp in JSON output");

    auto* ver = app.add_subcommand("verify", "run verification suites (exit 1 on failure)");
    ver->add_option("scope", scopes,
                    "all | table2 | t515 | worked-example | oracle | roundtrip | special-iso | "
                    "self-dual | core | properties | snapshot");
    ver->add_option("--weyl-cap", weyl_cap, "Weyl enumeration cap for the rank oracle");
    ver->add_option("--seed", seed, "seed for the property twists");
    ver->add_option("--snapshot", snapshot_flag, "catalog snapshot path (or env LIETRIAD_SNAPSHOT)");

    auto* ren = app.add_subcommand("render", "render a (double) Satake diagram");
    ren->add_option("spec", render_spec, "so8:so3+so5 | so8:so1+so7,kappa(so3+so5) | @diagram.json")
        ->required();
    std::string ren_format = "dot";
    ren->add_option("--format", ren_format, "dot | text")->check(CLI::IsMember({"dot", "text"}));
    ren->add_option("-o,--output", outfile, "write to a file instead of stdout");

    auto* snap = app.add_subcommand("snapshot", "emit the frozen catalog snapshot JSON");
    snap->add_option("-o,--output", outfile, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
        if (list->parsed()) return cmd_list(galg, format);
        if (cls->parsed()) return cmd_classify(galg, table ? "markdown" : cls_format, pair, twist, timestamp, max_rank);
        if (ver->parsed()) return cmd_verify(scopes, weyl_cap, seed, snapshot_flag);
        if (ren->parsed()) return cmd_render(render_spec, ren_format, outfile);
        if (snap->parsed()) return cmd_snapshot(outfile);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
