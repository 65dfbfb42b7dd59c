#include <catch2/catch_amalgamated.hpp>

#include "lietriad/classify.hpp"

using namespace lietriad;

namespace {
SatakeDiagram cat(const char* g, const char* k) {
    return class_by_label(AlgebraLabel::parse(g), k).diagram;
}
const TriadClass* find_class(const ClassificationReport& r, const std::string& k1,
                             const std::string& k2, const std::string& twist) {
    for (const auto& t : r.classes)
        if (t.class1.k_label == k1 && t.class2.k_label == k2 && t.twist == twist) return &t;
    return nullptr;
}
} // namespace

TEST_CASE("ds_set cardinalities follow the orbit analysis") {
    // trivial Aut(Pi): always a singleton
    CHECK(ds_set(cat("so9", "so1+so8"), cat("so9", "so2+so7")).size() == 1);
    CHECK(ds_set(cat("sp3", "u3"), cat("sp3", "sp1+sp2")).size() == 1);
    CHECK(ds_set(cat("f4", "su2+sp3"), cat("f4", "so9")).size() == 1);

    // su(n): AI is Aut(Pi)-invariant
    CHECK(ds_set(cat("su6", "so6"), cat("su6", "s(u2+u4)")).size() == 1);
    CHECK(ds_set(cat("su6", "s(u1+u5)"), cat("su6", "s(u2+u4)")).size() == 1);
    CHECK(ds_set(cat("su6", "sp3"), cat("su6", "s(u1+u5)")).size() == 1);

    // so(4m), both u(2m): exactly two classes (m = 3, 4)
    CHECK(ds_set(cat("so12", "u6"), cat("so12", "u6")).size() == 2);
    CHECK(ds_set(cat("so16", "u8"), cat("so16", "u8")).size() == 2);
    // but only one on so(4m+2)
    CHECK(ds_set(cat("so10", "u5"), cat("so10", "u5")).size() == 1);
    // and only one for mixed pairs on so(12)
    CHECK(ds_set(cat("so12", "u6"), cat("so12", "so3+so9")).size() == 1);
    CHECK(ds_set(cat("so12", "so1+so11"), cat("so12", "so5+so7")).size() == 1);

    // so(8): BDI(a) x BDI(c) with a, c in {1,2,3}: exactly two classes
    for (int a = 1; a <= 3; ++a)
        for (int c = 1; c <= 3; ++c) {
            auto sa = "so" + std::to_string(a) + "+so" + std::to_string(8 - a);
            auto sc = "so" + std::to_string(c) + "+so" + std::to_string(8 - c);
            INFO("(a,c) = (" << a << "," << c << ")");
            CHECK(ds_set(cat("so8", sa.c_str()), cat("so8", sc.c_str())).size() == 2);
        }
    // so(4)+so(4) involved: singleton
    CHECK(ds_set(cat("so8", "so1+so7"), cat("so8", "so4+so4")).size() == 1);
    CHECK(ds_set(cat("so8", "so4+so4"), cat("so8", "so4+so4")).size() == 1);

    CHECK_THROWS_AS(ds_set(cat("so8", "so1+so7"), cat("so9", "so1+so8")), std::invalid_argument);
}

TEST_CASE("shortcut agrees with ds_set where applicable") {
    struct Pair { const char* g; const char* k1; const char* k2; bool applies; };
    const Pair pairs[] = {
        {"su6", "so6", "s(u2+u4)", true},      // AI invariant
        {"so8", "so4+so4", "so2+so6", true},   // split D4 invariant
        {"so8", "so1+so7", "so2+so6", false},  // both movable
        {"so12", "so2+so10", "u6", true},      // BDI(2) invariant under tau
        {"f4", "su2+sp3", "so9", true},        // Aut trivial
    };
    for (const auto& p : pairs) {
        auto s1 = cat(p.g, p.k1), s2 = cat(p.g, p.k2);
        auto fast = lemma_fixed_diagram_shortcut(s1, s2);
        auto full = ds_set(s1, s2);
        INFO(p.g << " " << p.k1 << " / " << p.k2);
        CHECK(fast.has_value() == p.applies);
        if (fast) {
            REQUIRE(full.size() == 1);
            CHECK(fast->diagram == full.front().diagram);
        }
    }
}

TEST_CASE("twist labels of the ds_set representatives") {
    auto reps = ds_set(cat("so8", "so1+so7"), cat("so8", "so2+so6"));
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].twist == "id");
    CHECK(reps[1].twist == "kappa");
    auto diii = ds_set(cat("so12", "u6"), cat("so12", "u6"));
    REQUIRE(diii.size() == 2);
    CHECK(diii[0].twist == "id");
    CHECK(diii[1].twist == "tau");
}

TEST_CASE("classify f4") {
    auto report = classify_algebra(AlgebraLabel::parse("f4"));
    CHECK(report.classes.size() == 3);
    const TriadClass* t = find_class(report, "su2+sp3", "so9", "id");
    REQUIRE(t != nullptr);
    CHECK(t->rank == 1);
    CHECK(t->order == 2);
    CHECK_FALSE(t->self_dual);
    const TriadClass* diag = find_class(report, "so9", "so9", "id");
    REQUIRE(diag != nullptr);
    CHECK(diag->rank == 1); // rank of the symmetric pair (f4, so9)
    CHECK(diag->order == 1);
    CHECK(diag->self_dual);
}

TEST_CASE("classify so8 reproduces the kappa case table") {
    auto report = classify_algebra(AlgebraLabel::parse("so8"));
    CHECK(report.classes.size() == 16);

    const TriadClass* t = find_class(report, "so1+so7", "so3+so5", "kappa");
    REQUIRE(t != nullptr);
    CHECK(t->rank == 0);
    CHECK(t->order == 6);

    struct Row { int a, c, rank, order; };
    const Row rows[] = {
        {1, 1, 0, 3}, {1, 2, 0, 4}, {1, 3, 0, 6},
        {2, 2, 1, 2}, {2, 3, 1, 4}, {3, 3, 2, 3},
    };
    for (const auto& r : rows) {
        auto k1 = "so" + std::to_string(r.a) + "+so" + std::to_string(8 - r.a);
        auto k2 = "so" + std::to_string(r.c) + "+so" + std::to_string(8 - r.c);
        const TriadClass* tc = find_class(report, k1, k2, "kappa");
        INFO("(a,c) = (" << r.a << "," << r.c << ")");
        REQUIRE(tc != nullptr);
        CHECK(tc->rank == r.rank);
        CHECK(tc->order == r.order);
        // untwisted companion has the commutative values
        const TriadClass* tu = find_class(report, k1, k2, "id");
        REQUIRE(tu != nullptr);
        CHECK(tu->rank == (r.a == r.c ? class_by_label(AlgebraLabel::parse("so8"), k1).expected_rank : std::min(r.a, r.c)));
        CHECK(tu->order == (r.a == r.c ? 1 : 2));
    }

    // display names follow the bracket convention
    CHECK(t->display_name == "(so(8), so(1)+so(7), kappa(so(3)+so(5)))");
}

TEST_CASE("classify su6 includes the Table-2 row (so(6), s(u(2)+u(4)))") {
    auto report = classify_algebra(AlgebraLabel::parse("su6"));
    const TriadClass* t = find_class(report, "so6", "s(u2+u4)", "id");
    REQUIRE(t != nullptr);
    CHECK(t->rank == 2);
    CHECK(t->order == 2);
}

TEST_CASE("classify so12: u(6)/u(6)' rows") {
    auto report = classify_algebra(AlgebraLabel::parse("so12"));
    const TriadClass* untw = find_class(report, "u6", "u6", "id");
    REQUIRE(untw != nullptr);
    CHECK(untw->rank == 3); // rank of (so(12), u(6))
    CHECK(untw->order == 1);
    const TriadClass* tw = find_class(report, "u6", "u6", "tau");
    REQUIRE(tw != nullptr);
    CHECK(tw->rank == 2); // m - 1 with m = 3
    CHECK(tw->order == 2);
    CHECK(tw->self_dual);
    CHECK(tw->k2_label() == "u6'");
    CHECK(tw->display_name == "(so(12), u(6), u(6)')");
}

TEST_CASE("special isomorphisms: eight hold, listed negatives fail") {
    auto results = verify_special_isomorphisms();
    REQUIRE(results.size() == 18);
    for (const auto& r : results) {
        INFO(r.description);
        CHECK(r.computed == r.expected);
    }
}

TEST_CASE("self-duality matches the classification") {
    auto algebras = std::vector<AlgebraLabel>{AlgebraLabel::parse("so8"), AlgebraLabel::parse("so12"),
                                              AlgebraLabel::parse("su6")};
    auto res = verify_self_duality(algebras);
    int self_dual_count = 0;
    for (const auto& [t, expected] : res) {
        INFO(t.display_name);
        CHECK(t.self_dual == expected);
        if (t.self_dual) ++self_dual_count;
    }
    // so8: the three kappa-twisted diagonal classes; so12: u6/u6'
    CHECK(self_dual_count == 4);
}

TEST_CASE("exceptional algebras: every class has order at most 2") {
    for (const char* g : {"e6", "e7", "e8", "f4", "g2"}) {
        auto report = classify_algebra(AlgebraLabel::parse(g));
        for (const auto& t : report.classes) {
            INFO(t.display_name);
            CHECK(t.order <= 2);
        }
    }
}

TEST_CASE("order-2 entries have commuting canonical factors") {
    auto report = classify_algebra(AlgebraLabel::parse("so8"));
    for (const auto& t : report.classes) {
        DoubleSigmaSystem ds = reconstruct_double(t.representative);
        Mat ab = ds.sigma1() * ds.sigma2();
        Mat ba = ds.sigma2() * ds.sigma1();
        INFO(t.display_name);
        CHECK((t.order <= 2) == (ab == ba));
    }
}

TEST_CASE("su(4) and so(6) classifications are in canonical bijection") {
    // su(4) = spin(6): single classes match by diagram isomorphism, and the
    // equivalence of class pairs transports across the two realizations
    auto su4 = involution_classes(AlgebraLabel::parse("su4"));
    auto so6 = involution_classes(AlgebraLabel::parse("so6"));
    REQUIRE(su4.size() == 4);
    REQUIRE(so6.size() == 4);

    std::vector<int> match(su4.size(), -1);
    for (std::size_t i = 0; i < su4.size(); ++i) {
        int hits = 0;
        for (std::size_t j = 0; j < so6.size(); ++j)
            if (satake_isomorphic(su4[i].diagram, so6[j].diagram)) {
                match[i] = static_cast<int>(j);
                ++hits;
            }
        INFO(su4[i].k_label);
        CHECK(hits == 1); // exactly one partner
        CHECK(su4[i].expected_rank == so6[static_cast<std::size_t>(match[i])].expected_rank);
    }

    // every ordered pair is equivalent to its partner pair and to no other
    // (the relation is order-sensitive: swapping the factors is self-duality)
    auto pair_system = [](const InvolutionClass& a, const InvolutionClass& b) {
        SigmaSystem s1 = reconstruct_sigma(a.diagram);
        SigmaSystem s2 = reconstruct_sigma(b.diagram);
        return DoubleSigmaSystem(s1.rs_ptr(), s1.sigma(), s2.sigma());
    };
    for (std::size_t i = 0; i < su4.size(); ++i)
        for (std::size_t j = 0; j < su4.size(); ++j) {
            DoubleSigmaSystem left = pair_system(su4[i], su4[j]);
            for (std::size_t a = 0; a < so6.size(); ++a)
                for (std::size_t b = 0; b < so6.size(); ++b) {
                    bool expected = static_cast<int>(a) == match[i] && static_cast<int>(b) == match[j];
                    INFO(su4[i].k_label << "," << su4[j].k_label << " vs " << so6[a].k_label << ","
                                        << so6[b].k_label);
                    CHECK(equivalent(left, pair_system(so6[a], so6[b])) == expected);
                }
        }
}

TEST_CASE("so(5) and sp(2) classifications are in canonical bijection") {
    auto so5 = involution_classes(AlgebraLabel::parse("so5"));
    auto sp2 = involution_classes(AlgebraLabel::parse("sp2"));
    REQUIRE(so5.size() == 2);
    REQUIRE(sp2.size() == 2);
    std::vector<int> match(so5.size(), -1);
    for (std::size_t i = 0; i < so5.size(); ++i) {
        int hits = 0;
        for (std::size_t j = 0; j < sp2.size(); ++j)
            if (satake_isomorphic(so5[i].diagram, sp2[j].diagram)) {
                match[i] = static_cast<int>(j);
                ++hits;
            }
        CHECK(hits == 1);
        CHECK(so5[i].expected_rank == sp2[static_cast<std::size_t>(match[i])].expected_rank);
    }
    CHECK(match[0] != match[1]);
}
