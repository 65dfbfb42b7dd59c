// Double sigma-systems (Delta, sigma1, sigma2): quasi-canonicalization via a
// chamber walk, double Satake diagrams, the equivalence decision, rank and
// order of a class, the brute-force Weyl rank oracle, and core subsets.
#pragma once

#include "lietriad/sigma.hpp"

namespace lietriad {

struct DoubleSatakeDiagram {
    SatakeDiagram s1, s2; // over the same Dynkin graph

    CartanType type() const { return s1.type; }

    void check() const {
        if (s1.type != s2.type)
            throw std::invalid_argument("double satake diagram: mismatched types");
        s1.validate_structure();
        s2.validate_structure();
    }

    std::string encode() const { return s1.encode() + "|" + s2.encode(); }

    friend bool operator==(const DoubleSatakeDiagram& a, const DoubleSatakeDiagram& b) {
        return a.s1 == b.s1 && a.s2 == b.s2;
    }
    friend bool operator!=(const DoubleSatakeDiagram& a, const DoubleSatakeDiagram& b) { return !(a == b); }
};

class DoubleSigmaSystem {
public:
    DoubleSigmaSystem(std::shared_ptr<const RootSystem> rs, OrthoMap s1, OrthoMap s2)
        : rs_(std::move(rs)), s1_(std::move(s1)), s2_(std::move(s2)) {
        // both factors must pass sigma-system validation
        (void)SigmaSystem(rs_, s1_);
        (void)SigmaSystem(rs_, s2_);
    }

    const RootSystem& rs() const { return *rs_; }
    std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }
    const OrthoMap& sigma1() const { return s1_; }
    const OrthoMap& sigma2() const { return s2_; }

    SigmaSystem first() const { return SigmaSystem(rs_, s1_); }
    SigmaSystem second() const { return SigmaSystem(rs_, s2_); }

    bool normal() const { return is_normal(first()) && is_normal(second()); }

private:
    std::shared_ptr<const RootSystem> rs_;
    OrthoMap s1_, s2_;
};

// is Pi simultaneously sigma1- and sigma2-fundamental?
inline bool is_jointly_fundamental(const DoubleSigmaSystem& ds, const FundamentalSystem& fs) {
    return is_sigma_fundamental(ds.first(), fs) && is_sigma_fundamental(ds.second(), fs);
}

struct QuasiCanonical {
    DoubleSigmaSystem ds;  // (Delta, sigma1, w sigma2 w^-1)
    FundamentalSystem pi;  // common fundamental system, Bourbaki-ordered
    OrthoMap w;            // the Weyl element used on sigma2
};

// Twist sigma2 by the unique Weyl element carrying its fundamental system
// onto that of sigma1; the result shares one fundamental system.
inline QuasiCanonical quasi_canonicalize(const DoubleSigmaSystem& ds) {
    SigmaSystem one = ds.first(), two = ds.second();
    if (!is_normal(one) || !is_normal(two))
        throw std::invalid_argument("quasi_canonicalize: double sigma system is not normal");
    FundamentalSystem pi1 = find_sigma_fundamental(one);
    FundamentalSystem pi2 = find_sigma_fundamental(two);
    OrthoMap w = weyl_map_between(ds.rs(), pi2, pi1);
    OrthoMap s2p = w * ds.sigma2() * w.transposed();
    DoubleSigmaSystem out(ds.rs_ptr(), ds.sigma1(), s2p);
    if (!is_jointly_fundamental(out, pi1))
        throw std::logic_error("quasi_canonicalize: base is not jointly fundamental");
    return QuasiCanonical{std::move(out), std::move(pi1), std::move(w)};
}

inline DoubleSatakeDiagram double_satake(const DoubleSigmaSystem& ds, const FundamentalSystem& pi) {
    if (!is_jointly_fundamental(ds, pi))
        throw std::invalid_argument("double_satake: base is not jointly fundamental");
    return DoubleSatakeDiagram{satake_diagram(ds.first(), pi), satake_diagram(ds.second(), pi)};
}

// common isomorphism psi with psi . s_i = s_i' for i = 1, 2
inline std::optional<std::vector<int>> double_satake_isomorphic(const DoubleSatakeDiagram& a,
                                                                const DoubleSatakeDiagram& b) {
    for (const auto& psi : detail::diagram_isomorphisms(a.type(), b.type()))
        if (detail::perm_respects_satake(psi, a.s1, b.s1) && detail::perm_respects_satake(psi, a.s2, b.s2))
            return psi;
    return std::nullopt;
}

// decides ~ for normal double sigma systems: quasi-canonicalize both and
// compare double Satake diagrams
inline bool equivalent(const DoubleSigmaSystem& a, const DoubleSigmaSystem& b) {
    QuasiCanonical qa = quasi_canonicalize(a);
    QuasiCanonical qb = quasi_canonicalize(b);
    DoubleSatakeDiagram da = double_satake(qa.ds, qa.pi);
    DoubleSatakeDiagram db = double_satake(qb.ds, qb.pi);
    return double_satake_isomorphic(da, db).has_value();
}

namespace detail {

// dim(t^{s1} /\ t^{s2}) inside span(Delta), for the maps as given
inline int joint_fixed_dim(const DoubleSigmaSystem& ds) {
    SigmaSystem one = ds.first(), two = ds.second();
    Mat m1 = one.span_matrix(), m2 = two.span_matrix();
    int l = ds.rs().rank();
    Mat stacked(2 * l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            stacked.at(i, j) = m1.at(i, j) - Rational(i == j ? 1 : 0);
            stacked.at(l + i, j) = m2.at(i, j) - Rational(i == j ? 1 : 0);
        }
    return l - rank(stacked);
}

} // namespace detail

// rank of the class: joint fixed dimension of the canonicalized pair
inline int class_rank(const DoubleSigmaSystem& ds) {
    QuasiCanonical q = quasi_canonicalize(ds);
    return detail::joint_fixed_dim(q.ds);
}

// order of sigma1' sigma2' on span(Delta) for the canonicalized pair
inline int class_order(const DoubleSigmaSystem& ds, int cap = 60) {
    QuasiCanonical q = quasi_canonicalize(ds);
    Mat prod = q.ds.first().span_matrix() * q.ds.second().span_matrix();
    Mat acc = prod;
    for (int k = 1; k <= cap; ++k) {
        if (acc.is_identity()) return k;
        acc = acc * prod;
    }
    throw std::logic_error("class_order: order cap exceeded (invalid construction)");
}

// ---------------------------------------------------------------------------
// Independent rank oracle: rank = max over s in W of dim(t^{s1} /\ s t^{s2}).
// Runs on the systems as given (no canonicalization), enumerating W outright.

namespace detail {

// rank of a small integer matrix by fraction-free elimination
inline int int_rank(std::vector<std::array<__int128, 16>>& m, int rows, int cols) {
    int r = 0;
    __int128 prev = 1;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r) std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(r)]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                     m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) /
                    prev;
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = 0;
        }
        prev = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        ++r;
    }
    return r;
}

// eigenspace basis in simple-root coordinates, scaled to integers
inline std::vector<std::vector<long long>> int_eigenbasis(const SigmaSystem& ss) {
    Mat m = ss.span_matrix();
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) -= Rational(1);
    std::vector<std::vector<long long>> out;
    for (const auto& v : nullspace(m)) {
        long long lcm = 1;
        for (const auto& x : v) lcm = std::lcm(lcm, x.den());
        std::vector<long long> iv;
        for (const auto& x : v) iv.push_back(x.num() * (lcm / x.den()));
        out.push_back(std::move(iv));
    }
    return out;
}

} // namespace detail

inline int weyl_max_rank(const DoubleSigmaSystem& ds, long long cap = 4000000) {
    if (!ds.normal())
        throw std::invalid_argument("weyl_max_rank: double sigma system is not normal");
    WeylEnumeration wenum = enumerate_weyl(ds.rs_ptr(), cap);
    const RootSystem& R = ds.rs();
    int l = R.rank();
    auto b1 = detail::int_eigenbasis(ds.first());
    auto b2 = detail::int_eigenbasis(ds.second());
    int k1 = static_cast<int>(b1.size()), k2 = static_cast<int>(b2.size());
    if (k1 == 0 || k2 == 0) return 0;
    int best = 0;
    std::vector<std::array<__int128, 16>> work(static_cast<std::size_t>(l));
    for (std::size_t i = 0; i < wenum.size(); ++i) {
        auto w = wenum.int_matrix(i);
        // columns: b1, then w * b2
        for (int r = 0; r < l; ++r) work[static_cast<std::size_t>(r)].fill(0);
        for (int c = 0; c < k1; ++c)
            for (int r = 0; r < l; ++r) work[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = b1[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
        for (int c = 0; c < k2; ++c)
            for (int r = 0; r < l; ++r) {
                __int128 acc = 0;
                for (int k = 0; k < l; ++k)
                    acc += static_cast<__int128>(w[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)]) * b2[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
                work[static_cast<std::size_t>(r)][static_cast<std::size_t>(k1 + c)] = acc;
            }
        int dim = k1 + k2 - detail::int_rank(work, l, k1 + k2);
        if (dim > best) best = dim;
        if (best == std::min(k1, k2)) break; // cannot improve further
    }
    return best;
}

// ---------------------------------------------------------------------------
// Cores.  For a canonical pair with joint fundamental system Pi, pr is the
// orthogonal projection onto t^{s1} /\ t^{s2}; Pi_0 collects the nodes that
// project to zero, and a core is a minimum subset of Pi - Pi_0 whose orbit
// under the two Satake involutions covers Pi - Pi_0.

struct CoreData {
    std::vector<int> pi0;       // nodes with pr = 0
    std::vector<int> core;      // lexicographically least minimum core
    std::vector<Vec> pr_images; // pr(alpha) per node of Pi
    bool independent_core_exists = false;
    std::vector<int> independent_core; // least core with independent, spanning images
};

inline CoreData core_data(const DoubleSigmaSystem& ds, const FundamentalSystem& pi) {
    if (!is_jointly_fundamental(ds, pi))
        throw std::invalid_argument("core_data: double sigma system is not canonical for this base");
    const RootSystem& R = ds.rs();
    int l = R.rank();

    // joint +1 eigenspace basis (ambient) and its orthogonal projector
    std::vector<Vec> joint;
    {
        SigmaSystem one = ds.first(), two = ds.second();
        Mat m1 = one.span_matrix(), m2 = two.span_matrix();
        Mat stacked(2 * l, l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                stacked.at(i, j) = m1.at(i, j) - Rational(i == j ? 1 : 0);
                stacked.at(l + i, j) = m2.at(i, j) - Rational(i == j ? 1 : 0);
            }
        for (const auto& c : nullspace(stacked)) {
            Vec v(static_cast<std::size_t>(R.ambient_dim));
            for (int node = 0; node < l; ++node) v = vec_add(v, vec_scale(c[static_cast<std::size_t>(node)], R.simple_root(node)));
            joint.push_back(std::move(v));
        }
    }
    Mat proj = joint.empty() ? Mat(R.ambient_dim, R.ambient_dim)
                             : orthogonal_projector(joint, R.ambient_dim);

    CoreData out;
    for (int node = 0; node < l; ++node)
        out.pr_images.push_back(proj.apply(R.roots[static_cast<std::size_t>(pi[static_cast<std::size_t>(node)])]));
    std::vector<int> live;
    for (int node = 0; node < l; ++node) {
        if (is_zero(out.pr_images[static_cast<std::size_t>(node)])) out.pi0.push_back(node);
        else live.push_back(node);
    }

    SatakeDiagram s1 = satake_diagram(ds.first(), pi);
    SatakeDiagram s2 = satake_diagram(ds.second(), pi);
    auto covers = [&](const std::vector<int>& subset) {
        std::set<int> hit;
        for (int node : subset) {
            hit.insert(node);
            if (!s1.is_black(node)) hit.insert(s1.p_of(node));
            if (!s2.is_black(node)) hit.insert(s2.p_of(node));
        }
        for (int node : live)
            if (!hit.count(node)) return false;
        return true;
    };
    auto independent_spanning = [&](const std::vector<int>& subset) {
        std::vector<Vec> imgs;
        for (int node : subset) imgs.push_back(out.pr_images[static_cast<std::size_t>(node)]);
        return span_dim(imgs) == static_cast<int>(subset.size()) &&
               static_cast<int>(subset.size()) == static_cast<int>(joint.size());
    };

    // exhaustive search in size-then-lexicographic order (|Pi| <= 8)
    int n = static_cast<int>(live.size());
    for (int size = 0; size <= n; ++size) {
        std::vector<std::vector<int>> found;
        std::vector<int> pick;
        auto rec = [&](auto&& self, int from) -> void {
            if (static_cast<int>(pick.size()) == size) {
                if (covers(pick)) found.push_back(pick);
                return;
            }
            for (int i = from; i < n; ++i) {
                pick.push_back(live[static_cast<std::size_t>(i)]);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
        if (found.empty()) continue;
        out.core = found.front(); // lexicographically least of minimum size
        for (const auto& cand : found)
            if (independent_spanning(cand)) {
                out.independent_core_exists = true;
                out.independent_core = cand;
                break;
            }
        break;
    }
    return out;
}

} // namespace lietriad
