// sigma-systems (Delta, sigma): validation, normality, sigma-fundamental
// systems, Satake diagrams, reconstruction of sigma from a diagram,
// restricted roots with multiplicities, and Satake-diagram isomorphism.
#pragma once

#include <optional>
#include <set>

#include "lietriad/weyl.hpp"

namespace lietriad {

// ---------------------------------------------------------------------------
// Satake diagram: Dynkin graph of the standard base of `type`, with a black
// subset and an involution p on the white nodes recorded as arrows (only for
// p(a) != a).  Node indices are 0-based positions in the Bourbaki base.

struct SatakeDiagram {
    CartanType type{Series::A, 1};
    std::vector<int> black;                 // sorted node indices
    std::vector<std::pair<int, int>> arrows; // sorted pairs (i, j) with i < j

    int rank() const { return type.rank; }

    bool is_black(int node) const {
        return std::binary_search(black.begin(), black.end(), node);
    }

    int p_of(int node) const {
        for (const auto& [a, b] : arrows) {
            if (a == node) return b;
            if (b == node) return a;
        }
        return node;
    }

    void normalize() {
        std::sort(black.begin(), black.end());
        for (auto& [a, b] : arrows)
            if (a > b) std::swap(a, b);
        std::sort(arrows.begin(), arrows.end());
    }

    // structural sanity: indices in range, arrows white and involutive
    void validate_structure() const {
        for (int b : black)
            if (b < 0 || b >= rank()) throw std::invalid_argument("satake diagram: black node out of range");
        std::set<int> touched;
        for (const auto& [a, b] : arrows) {
            if (a < 0 || b < 0 || a >= rank() || b >= rank() || a == b)
                throw std::invalid_argument("satake diagram: bad arrow");
            if (is_black(a) || is_black(b))
                throw std::invalid_argument("satake diagram: arrow touches a black node");
            if (!touched.insert(a).second || !touched.insert(b).second)
                throw std::invalid_argument("satake diagram: node in two arrows");
        }
    }

    std::string encode() const {
        std::string s = type.str() + ";b=";
        for (std::size_t i = 0; i < black.size(); ++i) s += (i ? "," : "") + std::to_string(black[i]);
        s += ";p=";
        for (std::size_t i = 0; i < arrows.size(); ++i)
            s += (i ? "," : "") + std::to_string(arrows[i].first) + "-" + std::to_string(arrows[i].second);
        return s;
    }

    friend bool operator==(const SatakeDiagram& a, const SatakeDiagram& b) {
        return a.type == b.type && a.black == b.black && a.arrows == b.arrows;
    }
    friend bool operator!=(const SatakeDiagram& a, const SatakeDiagram& b) { return !(a == b); }
    friend bool operator<(const SatakeDiagram& a, const SatakeDiagram& b) { return a.encode() < b.encode(); }
};

// act on a diagram by a node permutation of the underlying Dynkin graph:
// psi . S = S(psi(black), psi p psi^-1)
inline SatakeDiagram apply_node_perm(const SatakeDiagram& s, const std::vector<int>& perm) {
    SatakeDiagram out;
    out.type = s.type;
    for (int b : s.black) out.black.push_back(perm[static_cast<std::size_t>(b)]);
    for (const auto& [a, b] : s.arrows)
        out.arrows.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    out.normalize();
    return out;
}

// ---------------------------------------------------------------------------
// SigmaSystem

class SigmaSystem {
public:
    SigmaSystem(std::shared_ptr<const RootSystem> rs, OrthoMap sigma)
        : rs_(std::move(rs)), sigma_(std::move(sigma)) {
        const RootSystem& R = *rs_;
        if (!is_involution(sigma_))
            throw std::invalid_argument("sigma system: map is not involutive");
        if (!is_isometry(sigma_))
            throw std::invalid_argument("sigma system: map is not an isometry");
        if (!preserves_roots(R, sigma_))
            throw std::invalid_argument("sigma system: map does not preserve the root set");
        // sigma in simple-basis coordinates (integer entries)
        int l = R.rank();
        simple_mat_.assign(static_cast<std::size_t>(l), std::vector<long long>(static_cast<std::size_t>(l)));
        for (int j = 0; j < l; ++j) {
            int img = R.root_index(sigma_.apply(R.simple_root(j)));
            const auto& c = R.simple_coords(img);
            for (int i = 0; i < l; ++i) simple_mat_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(i)];
        }
        for (int r = 0; r < R.root_count(); ++r) {
            Vec img = sigma_.apply(R.roots[static_cast<std::size_t>(r)]);
            if (img == vec_scale(Rational(-1), R.roots[static_cast<std::size_t>(r)])) delta0_.push_back(r);
        }
    }

    const RootSystem& rs() const { return *rs_; }
    std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }
    const OrthoMap& sigma() const { return sigma_; }
    const std::vector<int>& delta0() const { return delta0_; }

    bool in_delta0(int root) const {
        return std::binary_search(delta0_.begin(), delta0_.end(), root);
    }

    // sigma restricted to span(Delta), in the simple-root basis
    Mat span_matrix() const {
        int l = rs_->rank();
        Mat m(l, l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) m.at(i, j) = Rational(simple_mat_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        return m;
    }

    // basis of the (+1 or -1)-eigenspace inside span(Delta), ambient coords
    std::vector<Vec> eigenspace_basis(int sign) const {
        Mat m = span_matrix();
        for (int i = 0; i < m.rows(); ++i) m.at(i, i) -= Rational(sign);
        std::vector<Vec> out;
        for (const auto& c : nullspace(m)) {
            Vec v(static_cast<std::size_t>(rs_->ambient_dim));
            for (int node = 0; node < rs_->rank(); ++node)
                v = vec_add(v, vec_scale(c[static_cast<std::size_t>(node)], rs_->simple_root(node)));
            out.push_back(std::move(v));
        }
        return out;
    }

    // rank(Delta, sigma) = dim t^sigma
    int rank() const { return static_cast<int>(eigenspace_basis(+1).size()); }

    Vec pr(const Vec& v) const { // orthogonal projection onto t^sigma: (v + sigma v)/2
        return vec_scale(Rational(1, 2), vec_add(v, sigma_.apply(v)));
    }

private:
    std::shared_ptr<const RootSystem> rs_;
    OrthoMap sigma_;
    std::vector<std::vector<long long>> simple_mat_;
    std::vector<int> delta0_; // sorted by construction order = ascending
};

inline SigmaSystem make_sigma(std::shared_ptr<const RootSystem> rs, OrthoMap sigma) {
    return SigmaSystem(std::move(rs), std::move(sigma));
}

// normal iff sigma(a) - a is never a root
inline bool is_normal(const SigmaSystem& ss) {
    const RootSystem& R = ss.rs();
    for (const auto& a : R.roots)
        if (R.is_root(vec_sub(ss.sigma().apply(a), a))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Fundamental-system helpers

// coordinates of every root in the (ordered) base `fs`; integers
inline Mat base_coord_matrix(const RootSystem& rs, const FundamentalSystem& fs) {
    std::vector<Vec> cols;
    for (int idx : fs) cols.push_back(rs.roots[static_cast<std::size_t>(idx)]);
    Mat b = Mat::from_columns(cols);
    Mat bt = b.transposed();
    auto g = inverse(bt * b);
    if (!g) throw std::invalid_argument("base: vectors are linearly dependent");
    return *g * bt;
}

inline bool root_positive_for(const Mat& coord, const Vec& root, bool* integral = nullptr) {
    Vec c = coord.apply(root);
    bool pos = false, neg = false, integer = true;
    for (const auto& x : c) {
        if (!x.is_integer()) integer = false;
        if (x.sign() > 0) pos = true;
        if (x.sign() < 0) neg = true;
    }
    if (integral) *integral = integer;
    if (pos == neg) throw std::invalid_argument("base: root has mixed-sign or zero coordinates");
    return pos;
}

// reorder an (unordered) base so its Cartan matrix matches the Bourbaki base
// of rs.type; lexicographically least matching is taken
inline FundamentalSystem bourbaki_order(const RootSystem& rs, std::vector<int> base_roots) {
    int l = rs.rank();
    if (static_cast<int>(base_roots.size()) != l)
        throw std::invalid_argument("bourbaki_order: wrong base size");
    std::sort(base_roots.begin(), base_roots.end());
    auto pairing = [&](int a, int b) {
        return RootSystem::cartan_pairing(rs.roots[static_cast<std::size_t>(a)], rs.roots[static_cast<std::size_t>(b)]);
    };
    // target Cartan data from the standard base
    std::vector<int> assign(static_cast<std::size_t>(l), -1);
    std::vector<bool> used(static_cast<std::size_t>(l), false);
    std::optional<FundamentalSystem> result;
    auto rec = [&](auto&& self, int node) -> bool {
        if (node == l) {
            FundamentalSystem fs;
            for (int k = 0; k < l; ++k) fs.push_back(base_roots[static_cast<std::size_t>(assign[static_cast<std::size_t>(k)])]);
            result = fs;
            return true;
        }
        for (int cand = 0; cand < l; ++cand) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            bool ok = rs.norm2(rs.simple[static_cast<std::size_t>(node)]) == rs.norm2(base_roots[static_cast<std::size_t>(cand)]);
            for (int prev = 0; ok && prev < node; ++prev) {
                int pc = assign[static_cast<std::size_t>(prev)];
                ok = RootSystem::cartan_pairing(rs.simple_root(node), rs.simple_root(prev)) ==
                         pairing(base_roots[static_cast<std::size_t>(cand)], base_roots[static_cast<std::size_t>(pc)]) &&
                     RootSystem::cartan_pairing(rs.simple_root(prev), rs.simple_root(node)) ==
                         pairing(base_roots[static_cast<std::size_t>(pc)], base_roots[static_cast<std::size_t>(cand)]);
            }
            if (!ok) continue;
            assign[static_cast<std::size_t>(node)] = cand;
            used[static_cast<std::size_t>(cand)] = true;
            if (self(self, node + 1)) return true;
            used[static_cast<std::size_t>(cand)] = false;
        }
        assign[static_cast<std::size_t>(node)] = -1;
        return false;
    };
    if (!rec(rec, 0))
        throw std::invalid_argument("bourbaki_order: base does not match the Dynkin diagram of the type");
    return *result;
}

// positive roots determined by an ordered base
inline std::vector<int> positive_roots(const RootSystem& rs, const FundamentalSystem& fs) {
    Mat coord = base_coord_matrix(rs, fs);
    std::vector<int> out;
    for (int r = 0; r < rs.root_count(); ++r)
        if (root_positive_for(coord, rs.roots[static_cast<std::size_t>(r)])) out.push_back(r);
    return out;
}

inline bool is_sigma_fundamental(const SigmaSystem& ss, const FundamentalSystem& fs) {
    const RootSystem& R = ss.rs();
    Mat coord = base_coord_matrix(R, fs);
    for (int r = 0; r < R.root_count(); ++r) {
        if (ss.in_delta0(r)) continue;
        if (!root_positive_for(coord, R.roots[static_cast<std::size_t>(r)])) continue;
        Vec img = ss.sigma().apply(R.roots[static_cast<std::size_t>(r)]);
        if (!root_positive_for(coord, img)) return false;
    }
    return true;
}

// A sigma-fundamental system, built from the lexicographic ordering of
// span(Delta) that lists t^sigma directions before t^-sigma directions.
// Leading inner products of a root and its sigma-image agree on the t^sigma
// block, so positivity off Delta_0 is sigma-stable by construction.  The
// projections of the standard dominant-regular vector head each block, which
// makes sigma = 1 reproduce the default base.
inline FundamentalSystem find_sigma_fundamental(const SigmaSystem& ss) {
    if (!is_normal(ss))
        throw std::invalid_argument("find_sigma_fundamental: sigma system is not normal");
    const RootSystem& R = ss.rs();
    // rho: the span vector with <rho, alpha_i> = 1 for every simple root
    Vec rho(static_cast<std::size_t>(R.ambient_dim));
    {
        int l = R.rank();
        Mat g(l, l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) g.at(i, j) = dot(R.simple_root(i), R.simple_root(j));
        Vec ones(static_cast<std::size_t>(l), Rational(1));
        Vec x = *solve(g, ones);
        for (int i = 0; i < l; ++i) rho = vec_add(rho, vec_scale(x[static_cast<std::size_t>(i)], R.simple_root(i)));
    }
    Vec rho_plus = ss.pr(rho);
    Vec rho_minus = vec_sub(rho, rho_plus);
    std::vector<Vec> basis;
    basis.push_back(rho_plus);
    for (auto& v : ss.eigenspace_basis(+1)) basis.push_back(v);
    basis.push_back(rho_minus);
    for (auto& v : ss.eigenspace_basis(-1)) basis.push_back(v);
    // positivity = sign of the first nonzero inner product against the basis
    auto key = [&](const Vec& root) {
        Vec k;
        k.reserve(basis.size());
        for (const auto& b : basis) k.push_back(dot(root, b));
        return k;
    };
    auto positive = [&](const Vec& root) {
        for (const auto& x : key(root)) {
            if (x.sign() > 0) return true;
            if (x.sign() < 0) return false;
        }
        throw std::logic_error("find_sigma_fundamental: root orthogonal to span basis");
    };
    std::vector<int> pos;
    for (int r = 0; r < R.root_count(); ++r)
        if (positive(R.roots[static_cast<std::size_t>(r)])) pos.push_back(r);
    std::vector<int> base;
    for (int r : pos) {
        bool decomposable = false;
        for (int s : pos) {
            if (s == r) continue;
            Vec rest = vec_sub(R.roots[static_cast<std::size_t>(r)], R.roots[static_cast<std::size_t>(s)]);
            int t = R.root_index(rest);
            if (t >= 0 && positive(rest)) { decomposable = true; break; }
        }
        if (!decomposable) base.push_back(r);
    }
    return bourbaki_order(R, base);
}

// ---------------------------------------------------------------------------
// Satake diagram of (Delta, sigma) w.r.t. a sigma-fundamental system

inline SatakeDiagram satake_diagram(const SigmaSystem& ss, const FundamentalSystem& fs) {
    const RootSystem& R = ss.rs();
    validate_fundamental_system(R, fs);
    if (!is_sigma_fundamental(ss, fs))
        throw std::invalid_argument("satake_diagram: base is not sigma-fundamental");
    int l = R.rank();
    SatakeDiagram sd;
    sd.type = R.type;
    Mat coord = base_coord_matrix(R, fs);
    std::vector<bool> black(static_cast<std::size_t>(l), false);
    for (int node = 0; node < l; ++node) {
        if (ss.in_delta0(fs[static_cast<std::size_t>(node)])) {
            black[static_cast<std::size_t>(node)] = true;
            sd.black.push_back(node);
        }
    }
    // p: white coefficient pattern of sigma(alpha) must be a single +1
    std::vector<int> p(static_cast<std::size_t>(l), -1);
    for (int node = 0; node < l; ++node) {
        if (black[static_cast<std::size_t>(node)]) continue;
        Vec img = ss.sigma().apply(R.roots[static_cast<std::size_t>(fs[static_cast<std::size_t>(node)])]);
        Vec c = coord.apply(img);
        int target = -1;
        for (int j = 0; j < l; ++j) {
            const Rational& cj = c[static_cast<std::size_t>(j)];
            if (black[static_cast<std::size_t>(j)]) continue;
            if (cj.is_zero()) continue;
            if (cj != Rational(1) || target >= 0)
                throw std::invalid_argument("satake_diagram: ambiguous Satake involution (input is not a sigma system over this base)");
            target = j;
        }
        if (target < 0)
            throw std::invalid_argument("satake_diagram: no white component for a white node");
        p[static_cast<std::size_t>(node)] = target;
    }
    for (int node = 0; node < l; ++node) {
        if (black[static_cast<std::size_t>(node)]) continue;
        int q = p[static_cast<std::size_t>(node)];
        if (p[static_cast<std::size_t>(q)] != node)
            throw std::invalid_argument("satake_diagram: extracted involution is not involutive");
        if (q > node) sd.arrows.emplace_back(node, q);
    }
    sd.normalize();
    return sd;
}

// ---------------------------------------------------------------------------
// Reconstruction: t^-sigma = span{a_i - a_p(i)} + span(black nodes), sigma =
// identity minus twice the orthogonal projection onto t^-sigma.  The result
// is validated as a normal sigma system whose diagram round-trips; failures
// reject the diagram as inadmissible.

inline SigmaSystem reconstruct_sigma(const SatakeDiagram& sd) {
    sd.validate_structure();
    auto rs = shared_root_system(sd.type);
    const RootSystem& R = *rs;
    std::vector<Vec> minus;
    for (int b : sd.black) minus.push_back(R.simple_root(b));
    for (const auto& [a, b] : sd.arrows) minus.push_back(vec_sub(R.simple_root(a), R.simple_root(b)));
    Mat proj = minus.empty() ? Mat(R.ambient_dim, R.ambient_dim)
                             : orthogonal_projector(minus, R.ambient_dim);
    Mat sigma = Mat::identity(R.ambient_dim) - (proj + proj);
    if (!preserves_roots(R, sigma))
        throw std::invalid_argument("reconstruct_sigma: diagram rejected (reconstructed map is not an automorphism of Delta)");
    SigmaSystem ss(rs, sigma);
    if (!is_normal(ss))
        throw std::invalid_argument("reconstruct_sigma: diagram rejected (reconstructed sigma system is not normal)");
    if (!is_sigma_fundamental(ss, R.simple))
        throw std::invalid_argument("reconstruct_sigma: diagram rejected (standard base is not sigma-fundamental)");
    SatakeDiagram back = satake_diagram(ss, R.simple);
    if (back != sd)
        throw std::invalid_argument("reconstruct_sigma: diagram rejected (no round trip: got " + back.encode() + ")");
    return ss;
}

// rank from diagram combinatorics: l1 + l2
inline int diagram_rank(const SatakeDiagram& sd) {
    int l2 = static_cast<int>(sd.arrows.size());
    int l1 = sd.rank() - static_cast<int>(sd.black.size()) - 2 * l2;
    return l1 + l2;
}

// ---------------------------------------------------------------------------
// Restricted root system

struct RestrictedRootSystem {
    std::vector<std::pair<Vec, int>> roots; // (vector, multiplicity), sorted
    std::string classified_type;            // e.g. "B3", "BC2", "A1+A1"
    int rank = 0;

    int multiplicity(const Vec& v) const {
        for (const auto& [u, m] : roots)
            if (u == v) return m;
        return 0;
    }
};

namespace detail {

inline std::string classify_component(const std::vector<Vec>& comp) {
    int k = span_dim(comp);
    auto contains = [&](const Vec& v) {
        for (const auto& u : comp)
            if (u == v) return true;
        return false;
    };
    for (const auto& v : comp)
        if (contains(vec_scale(Rational(2), v))) return "BC" + std::to_string(k);
    long long n = static_cast<long long>(comp.size());
    Rational minn, maxn;
    bool first = true;
    for (const auto& v : comp) {
        Rational n2 = dot(v, v);
        if (first) { minn = maxn = n2; first = false; }
        if (n2 < minn) minn = n2;
        if (maxn < n2) maxn = n2;
    }
    Rational ratio = maxn / minn;
    if (ratio == Rational(1)) {
        if (n == static_cast<long long>(k) * (k + 1)) return "A" + std::to_string(k);
        if (n == 2LL * k * (k - 1)) return "D" + std::to_string(k);
        if (k == 6 && n == 72) return "E6";
        if (k == 7 && n == 126) return "E7";
        if (k == 8 && n == 240) return "E8";
    } else if (ratio == Rational(2)) {
        if (k == 4 && n == 48) return "F4";
        long long longs = 0;
        for (const auto& v : comp)
            if (dot(v, v) == maxn) ++longs;
        if (k == 2) return "B2"; // = C2
        if (longs == 2LL * k * (k - 1)) return "B" + std::to_string(k);
        if (longs == 2LL * k) return "C" + std::to_string(k);
    } else if (ratio == Rational(3) && k == 2 && n == 12) {
        return "G2";
    }
    throw std::logic_error("restricted roots: unrecognized component");
}

} // namespace detail

inline RestrictedRootSystem restricted_roots(const SigmaSystem& ss) {
    if (!is_normal(ss))
        throw std::invalid_argument("restricted_roots: sigma system is not normal");
    const RootSystem& R = ss.rs();
    std::vector<std::pair<Vec, int>> acc;
    for (int r = 0; r < R.root_count(); ++r) {
        if (ss.in_delta0(r)) continue;
        Vec lam = ss.pr(R.roots[static_cast<std::size_t>(r)]);
        bool found = false;
        for (auto& [u, m] : acc)
            if (u == lam) { ++m; found = true; break; }
        if (!found) acc.emplace_back(lam, 1);
    }
    std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return vec_less(a.first, b.first); });

    RestrictedRootSystem out;
    out.roots = acc;
    std::vector<Vec> sigma_roots;
    for (const auto& [v, m] : acc) sigma_roots.push_back(v);
    out.rank = span_dim(sigma_roots);

    // axioms: closure under reflections and integral pairings
    auto contains = [&](const Vec& v) {
        for (const auto& u : sigma_roots)
            if (u == v) return true;
        return false;
    };
    for (const auto& a : sigma_roots)
        for (const auto& b : sigma_roots) {
            Rational c = Rational(2) * dot(a, b) / dot(a, a);
            if (!c.is_integer()) throw std::logic_error("restricted roots: non-integral pairing");
            Vec w = vec_sub(b, vec_scale(c, a));
            if (!contains(w)) throw std::logic_error("restricted roots: not reflection-closed");
        }

    // orthogonality components, classified separately
    std::vector<int> comp(sigma_roots.size(), -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < sigma_roots.size(); ++i) {
        if (comp[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < sigma_roots.size(); ++j)
                if (comp[j] < 0 && !dot(sigma_roots[cur], sigma_roots[j]).is_zero()) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
        }
        ++ncomp;
    }
    std::vector<std::string> labels;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<Vec> part;
        for (std::size_t i = 0; i < sigma_roots.size(); ++i)
            if (comp[i] == c) part.push_back(sigma_roots[i]);
        labels.push_back(detail::classify_component(part));
    }
    std::sort(labels.begin(), labels.end());
    std::string t;
    for (std::size_t i = 0; i < labels.size(); ++i) t += (i ? "+" : "") + labels[i];
    out.classified_type = t;
    return out;
}

// ---------------------------------------------------------------------------
// Satake-diagram isomorphism: a bijection of nodes preserving the Cartan
// matrices of the two (possibly different) types, the black sets, and the
// arrow involutions.  Diagrams have at most 8 nodes; exhaustive backtracking.

namespace detail {

struct DynkinData {
    int l = 0;
    std::vector<std::vector<Rational>> pairing; // n_ij = 2<a_i,a_j>/<a_j,a_j>
};

inline DynkinData dynkin_data(CartanType t) {
    auto rs = shared_root_system(t);
    DynkinData d;
    d.l = t.rank;
    d.pairing.assign(static_cast<std::size_t>(d.l), std::vector<Rational>(static_cast<std::size_t>(d.l)));
    for (int i = 0; i < d.l; ++i)
        for (int j = 0; j < d.l; ++j)
            d.pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                RootSystem::cartan_pairing(rs->simple_root(i), rs->simple_root(j));
    return d;
}

// all node bijections preserving the Cartan matrix entries
inline std::vector<std::vector<int>> diagram_isomorphisms(CartanType a, CartanType b) {
    if (a.rank != b.rank) return {};
    DynkinData da = dynkin_data(a), db = dynkin_data(b);
    int l = da.l;
    std::vector<int> perm(static_cast<std::size_t>(l), -1);
    std::vector<bool> used(static_cast<std::size_t>(l), false);
    std::vector<std::vector<int>> out;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == l) { out.push_back(perm); return; }
        for (int img = 0; img < l; ++img) {
            if (used[static_cast<std::size_t>(img)]) continue;
            bool ok = true;
            for (int j = 0; ok && j <= i; ++j) {
                int pj = (j == i) ? img : perm[static_cast<std::size_t>(j)];
                ok = da.pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == db.pairing[static_cast<std::size_t>(img)][static_cast<std::size_t>(pj)] &&
                     da.pairing[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] == db.pairing[static_cast<std::size_t>(pj)][static_cast<std::size_t>(img)];
            }
            if (!ok) continue;
            perm[static_cast<std::size_t>(i)] = img;
            used[static_cast<std::size_t>(img)] = true;
            self(self, i + 1);
            used[static_cast<std::size_t>(img)] = false;
        }
        perm[static_cast<std::size_t>(i)] = -1;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool perm_respects_satake(const std::vector<int>& psi, const SatakeDiagram& s1, const SatakeDiagram& s2) {
    std::vector<int> mapped_black;
    for (int b : s1.black) mapped_black.push_back(psi[static_cast<std::size_t>(b)]);
    std::sort(mapped_black.begin(), mapped_black.end());
    if (mapped_black != s2.black) return false;
    for (int node = 0; node < s1.rank(); ++node) {
        if (s1.is_black(node)) continue;
        if (psi[static_cast<std::size_t>(s1.p_of(node))] != s2.p_of(psi[static_cast<std::size_t>(node)])) return false;
    }
    return true;
}

} // namespace detail

inline std::optional<std::vector<int>> satake_isomorphic(const SatakeDiagram& s1, const SatakeDiagram& s2) {
    for (const auto& psi : detail::diagram_isomorphisms(s1.type, s2.type))
        if (detail::perm_respects_satake(psi, s1, s2)) return psi;
    return std::nullopt;
}

} // namespace lietriad
