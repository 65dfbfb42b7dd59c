// Weyl-group machinery: chamber-walk maps between fundamental systems,
// membership of automorphisms in W, breadth-first enumeration of W in a
// compact integer representation, and Dynkin-diagram automorphisms.
#pragma once

#include <cstdint>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "lietriad/root_system.hpp"

namespace lietriad {

// Orthogonal maps are ambient matrices acting as the identity on the
// orthogonal complement of span(Delta).
using OrthoMap = Mat;

inline bool is_involution(const OrthoMap& m) { return (m * m).is_identity(); }

inline bool is_isometry(const OrthoMap& m) {
    return (m.transposed() * m).is_identity();
}

// does m permute the root set?
inline bool preserves_roots(const RootSystem& rs, const OrthoMap& m) {
    for (const auto& r : rs.roots)
        if (!rs.is_root(m.apply(r))) return false;
    return true;
}

inline bool is_root_automorphism(const RootSystem& rs, const OrthoMap& m) {
    return preserves_roots(rs, m);
}

// reflection in a root as an ambient matrix
inline OrthoMap reflection_matrix(const RootSystem& rs, int root_idx) {
    const Vec& a = rs.roots[static_cast<std::size_t>(root_idx)];
    Rational n2 = dot(a, a);
    Mat m = Mat::identity(rs.ambient_dim);
    for (int i = 0; i < rs.ambient_dim; ++i)
        for (int j = 0; j < rs.ambient_dim; ++j)
            m.at(i, j) -= Rational(2) * a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j)] / n2;
    return m;
}

inline void validate_fundamental_system(const RootSystem& rs, const FundamentalSystem& fs) {
    if (static_cast<int>(fs.size()) != rs.rank())
        throw std::invalid_argument("fundamental system: wrong cardinality");
    // every root must be a same-sign integer combination of the candidate base
    std::vector<Vec> cols;
    for (int idx : fs) cols.push_back(rs.roots[static_cast<std::size_t>(idx)]);
    Mat b = Mat::from_columns(cols);
    for (const auto& r : rs.roots) {
        auto x = solve(b, r);
        if (!x) throw std::invalid_argument("fundamental system: roots do not lie in its span");
        int pos = 0, neg = 0;
        for (const auto& c : *x) {
            if (!c.is_integer()) throw std::invalid_argument("fundamental system: non-integer root coordinates");
            if (c.sign() > 0) ++pos;
            if (c.sign() < 0) ++neg;
        }
        if (pos > 0 && neg > 0) throw std::invalid_argument("fundamental system: mixed-sign root coordinates");
    }
}

// The unique w in W(Delta) with w(src) = dst (as sets).  Walk a src-dominant
// regular vector into the dst-dominant chamber by simple reflections; no
// group enumeration involved.
inline OrthoMap weyl_map_between(const RootSystem& rs, const FundamentalSystem& src,
                                 const FundamentalSystem& dst) {
    validate_fundamental_system(rs, src);
    validate_fundamental_system(rs, dst);
    // 2*rho of src: sum of the src-positive roots; strictly dominant for src
    Vec u(static_cast<std::size_t>(rs.ambient_dim));
    {
        std::vector<Vec> cols;
        for (int idx : src) cols.push_back(rs.roots[static_cast<std::size_t>(idx)]);
        Mat b = Mat::from_columns(cols);
        for (const auto& r : rs.roots) {
            auto x = solve(b, r);
            bool positive = true;
            for (const auto& c : *x)
                if (c.sign() < 0) { positive = false; break; }
            if (positive) u = vec_add(u, r);
        }
    }
    OrthoMap w = Mat::identity(rs.ambient_dim);
    bool progress = true;
    while (progress) {
        progress = false;
        for (int idx : dst) {
            const Vec& beta = rs.roots[static_cast<std::size_t>(idx)];
            if (dot(u, beta).sign() < 0) {
                u = reflect(rs, beta, u);
                w = reflection_matrix(rs, idx) * w;
                progress = true;
            }
        }
    }
    return w;
}

// node permutations of the Dynkin diagram of the default base: bijections
// preserving all pairwise inner products (hence norms)
inline std::vector<std::vector<int>> dynkin_node_automorphisms(const RootSystem& rs) {
    int l = rs.rank();
    Mat g(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) g.at(i, j) = dot(rs.simple_root(i), rs.simple_root(j));
    std::vector<int> perm(static_cast<std::size_t>(l), -1);
    std::vector<bool> used(static_cast<std::size_t>(l), false);
    std::vector<std::vector<int>> out;
    auto consistent = [&](int i, int img) {
        if (g.at(i, i) != g.at(img, img)) return false;
        for (int j = 0; j < i; ++j)
            if (g.at(i, j) != g.at(img, perm[static_cast<std::size_t>(j)])) return false;
        return true;
    };
    auto rec = [&](auto&& self, int i) -> void {
        if (i == l) { out.push_back(perm); return; }
        for (int img = 0; img < l; ++img) {
            if (used[static_cast<std::size_t>(img)] || !consistent(i, img)) continue;
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

// extend a node permutation to the ambient map fixing span(Delta)^perp
inline OrthoMap node_perm_to_map(const RootSystem& rs, const std::vector<int>& perm) {
    std::vector<Vec> src_cols, dst_cols;
    for (int node = 0; node < rs.rank(); ++node) {
        src_cols.push_back(rs.simple_root(node));
        dst_cols.push_back(rs.simple_root(perm[static_cast<std::size_t>(node)]));
    }
    Mat s = Mat::from_columns(src_cols);
    Mat d = Mat::from_columns(dst_cols);
    // M = I + (D - S) P  with P the simple-coordinate projector
    return Mat::identity(rs.ambient_dim) + (d - s) * rs.coord_projector();
}

inline std::vector<OrthoMap> dynkin_automorphisms(const RootSystem& rs) {
    std::vector<OrthoMap> out;
    for (const auto& p : dynkin_node_automorphisms(rs)) out.push_back(node_perm_to_map(rs, p));
    return out;
}

// phi in W(Delta)?  Map phi(Pi) back to Pi by a chamber walk; the composite
// stabilizes the chamber, and only the identity of W does that, so phi lies
// in W exactly when the composite fixes every simple root.
inline bool is_weyl_element(const RootSystem& rs, const OrthoMap& phi) {
    if (!preserves_roots(rs, phi))
        throw std::invalid_argument("is_weyl_element: map is not an automorphism of the root system");
    FundamentalSystem image;
    for (int node = 0; node < rs.rank(); ++node) {
        int idx = rs.root_index(phi.apply(rs.simple_root(node)));
        image.push_back(idx);
    }
    std::sort(image.begin(), image.end());
    OrthoMap w = weyl_map_between(rs, image, rs.simple);
    Mat g = w * phi;
    for (int node = 0; node < rs.rank(); ++node)
        if (g.apply(rs.simple_root(node)) != rs.simple_root(node)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration of W.  Elements are stored as the images of the simple roots
// (root indices packed into a uint64), with the action computed through the
// integer simple-basis coordinates of the roots.

class WeylEnumeration {
public:
    WeylEnumeration(std::shared_ptr<const RootSystem> rs, std::vector<std::uint64_t> packed)
        : rs_(std::move(rs)), packed_(std::move(packed)) {}

    std::size_t size() const { return packed_.size(); }
    const RootSystem& root_system() const { return *rs_; }

    // images of the simple roots, as root indices
    std::array<int, 8> images(std::size_t i) const {
        std::array<int, 8> img{};
        for (int k = 0; k < rs_->rank(); ++k) img[static_cast<std::size_t>(k)] = static_cast<int>((packed_[i] >> (8 * k)) & 0xff);
        return img;
    }

    // integer matrix of the element in the simple-root basis (columns = images)
    std::vector<std::array<long long, 8>> int_matrix(std::size_t i) const {
        auto img = images(i);
        int l = rs_->rank();
        std::vector<std::array<long long, 8>> m(static_cast<std::size_t>(l));
        for (int col = 0; col < l; ++col) {
            const auto& coords = rs_->simple_coords(img[static_cast<std::size_t>(col)]);
            for (int row = 0; row < l; ++row) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = coords[static_cast<std::size_t>(row)];
        }
        return m;
    }

    OrthoMap to_ortho(std::size_t i) const {
        auto img = images(i);
        std::vector<Vec> dst_cols, src_cols;
        for (int node = 0; node < rs_->rank(); ++node) {
            src_cols.push_back(rs_->simple_root(node));
            dst_cols.push_back(rs_->roots[static_cast<std::size_t>(img[static_cast<std::size_t>(node)])]);
        }
        Mat s = Mat::from_columns(src_cols);
        Mat d = Mat::from_columns(dst_cols);
        return Mat::identity(rs_->ambient_dim) + (d - s) * rs_->coord_projector();
    }

private:
    std::shared_ptr<const RootSystem> rs_;
    std::vector<std::uint64_t> packed_;
};

// complete duplicate-free BFS closure of W over the simple reflections;
// refuses when the classical order formula exceeds the cap
inline WeylEnumeration enumerate_weyl(std::shared_ptr<const RootSystem> rs, long long cap = 4000000) {
    long long order = weyl_order_formula(rs->type);
    if (order > cap)
        throw std::domain_error("enumerate_weyl: |W| = " + std::to_string(order) +
                                " exceeds cap " + std::to_string(cap));
    const RootSystem& R = *rs;
    int l = R.rank();
    int nroots = R.root_count();
    if (nroots > 255 || l > 8) throw std::logic_error("enumerate_weyl: representation limits exceeded");

    // simple-basis integer coordinates, packed per root for table lookups
    std::unordered_map<std::uint64_t, int> coord_to_root;
    auto pack_coords = [&](const std::vector<long long>& c) {
        std::uint64_t key = 0;
        for (int k = 0; k < l; ++k)
            key |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(static_cast<std::int8_t>(c[static_cast<std::size_t>(k)]))) << (8 * k);
        return key;
    };
    for (int r = 0; r < nroots; ++r) coord_to_root.emplace(pack_coords(R.simple_coords(r)), r);

    // action of each simple reflection on every root, as root indices
    std::vector<std::vector<int>> refl(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(nroots)));
    for (int s = 0; s < l; ++s)
        for (int r = 0; r < nroots; ++r)
            refl[static_cast<std::size_t>(s)][static_cast<std::size_t>(r)] =
                R.root_index(reflect(R, R.simple[static_cast<std::size_t>(s)], R.roots[static_cast<std::size_t>(r)]));

    auto pack_images = [&](const std::array<int, 8>& img) {
        std::uint64_t key = 0;
        for (int k = 0; k < l; ++k) key |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(img[static_cast<std::size_t>(k)])) << (8 * k);
        return key;
    };

    std::array<int, 8> id_img{};
    for (int k = 0; k < l; ++k) id_img[static_cast<std::size_t>(k)] = R.simple[static_cast<std::size_t>(k)];

    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> out;
    std::queue<std::array<int, 8>> frontier;
    seen.reserve(static_cast<std::size_t>(order) * 2);
    out.reserve(static_cast<std::size_t>(order));
    seen.insert(pack_images(id_img));
    out.push_back(pack_images(id_img));
    frontier.push(id_img);

    std::vector<long long> acc(static_cast<std::size_t>(l));
    while (!frontier.empty()) {
        std::array<int, 8> w = frontier.front();
        frontier.pop();
        for (int s = 0; s < l; ++s) {
            // (w s)(alpha_j) = w(s(alpha_j)), evaluated through coordinates
            std::array<int, 8> next{};
            for (int j = 0; j < l; ++j) {
                int t = refl[static_cast<std::size_t>(s)][static_cast<std::size_t>(R.simple[static_cast<std::size_t>(j)])];
                const auto& tc = R.simple_coords(t);
                std::fill(acc.begin(), acc.end(), 0);
                for (int k = 0; k < l; ++k) {
                    long long c = tc[static_cast<std::size_t>(k)];
                    if (c == 0) continue;
                    const auto& wc = R.simple_coords(w[static_cast<std::size_t>(k)]);
                    for (int d = 0; d < l; ++d) acc[static_cast<std::size_t>(d)] += c * wc[static_cast<std::size_t>(d)];
                }
                auto it = coord_to_root.find(pack_coords(acc));
                if (it == coord_to_root.end())
                    throw std::logic_error("enumerate_weyl: image of a root is not a root");
                next[static_cast<std::size_t>(j)] = it->second;
            }
            std::uint64_t key = pack_images(next);
            if (seen.insert(key).second) {
                out.push_back(key);
                frontier.push(next);
            }
        }
    }
    if (static_cast<long long>(out.size()) != order)
        throw std::logic_error("enumerate_weyl: closure size disagrees with the order formula");
    std::sort(out.begin(), out.end());
    return WeylEnumeration(rs, std::move(out));
}

} // namespace lietriad
