// Reduced root systems of types A-G in their Bourbaki coordinate
// realizations.  All coordinates are exact rationals (half-integers at
// worst), roots are stored sorted so indices are canonical, and every root
// carries its integer coordinates with respect to the default simple system.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "lietriad/linalg.hpp"

namespace lietriad {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
    Series series;
    int rank;

    bool valid() const {
        switch (series) {
            case Series::A: return rank >= 1;
            case Series::B: return rank >= 2;
            case Series::C: return rank >= 2;
            case Series::D: return rank >= 3;
            case Series::E: return rank >= 6 && rank <= 8;
            case Series::F: return rank == 4;
            case Series::G: return rank == 2;
        }
        return false;
    }

    std::string str() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }

    static CartanType parse(std::string_view s) {
        if (s.size() < 2) throw std::invalid_argument("CartanType: bad string '" + std::string(s) + "'");
        char c = s[0];
        std::string digits(s.substr(1));
        int r = std::stoi(digits);
        CartanType t{static_cast<Series>(c), r};
        if (std::string("ABCDEFG").find(c) == std::string::npos || !t.valid())
            throw std::invalid_argument("CartanType: bad type '" + std::string(s) + "'");
        return t;
    }

    friend bool operator==(const CartanType& a, const CartanType& b) {
        return a.series == b.series && a.rank == b.rank;
    }
    friend bool operator!=(const CartanType& a, const CartanType& b) { return !(a == b); }
    friend bool operator<(const CartanType& a, const CartanType& b) {
        if (a.series != b.series) return a.series < b.series;
        return a.rank < b.rank;
    }
};

// ordered list of root indices forming a base of the system
using FundamentalSystem = std::vector<int>;

inline long long weyl_order_formula(CartanType t) {
    auto fact = [](int n) { long long f = 1; for (int i = 2; i <= n; ++i) f *= i; return f; };
    switch (t.series) {
        case Series::A: return fact(t.rank + 1);
        case Series::B:
        case Series::C: return fact(t.rank) << t.rank;
        case Series::D: return fact(t.rank) << (t.rank - 1);
        case Series::E:
            if (t.rank == 6) return 51840LL;
            if (t.rank == 7) return 2903040LL;
            return 696729600LL;
        case Series::F: return 1152;
        case Series::G: return 12;
    }
    return 0;
}

class RootSystem {
public:
    CartanType type;
    int ambient_dim = 0;
    std::vector<Vec> roots;       // sorted lexicographically; index = identity of a root
    FundamentalSystem simple;     // Bourbaki default base, as root indices
    Mat gram;                     // inner product matrix (standard Euclidean here)

    int rank() const { return type.rank; }
    int root_count() const { return static_cast<int>(roots.size()); }

    int root_index(const Vec& v) const {
        auto it = std::lower_bound(roots.begin(), roots.end(), v, vec_less);
        if (it == roots.end() || *it != v) return -1;
        return static_cast<int>(it - roots.begin());
    }
    bool is_root(const Vec& v) const { return root_index(v) >= 0; }

    const Vec& simple_root(int node) const { return roots[static_cast<std::size_t>(simple[static_cast<std::size_t>(node)])]; }

    // integer coordinates of root r in the default simple basis
    const std::vector<long long>& simple_coords(int r) const { return simple_coords_[static_cast<std::size_t>(r)]; }

    // P x = coordinates of the span(Delta)-component of x in the simple basis
    const Mat& coord_projector() const { return coord_proj_; }

    // orthogonal projector onto span(Delta)
    const Mat& span_projector() const { return span_proj_; }

    Rational norm2(int r) const { return dot(roots[static_cast<std::size_t>(r)], roots[static_cast<std::size_t>(r)]); }

    // Cartan integer 2<a,b>/<b,b>
    static Rational cartan_pairing(const Vec& a, const Vec& b) {
        return Rational(2) * dot(a, b) / dot(b, b);
    }

    void finalize() {
        std::sort(roots.begin(), roots.end(), vec_less);
        gram = Mat::identity(ambient_dim);
        // locate the Bourbaki simple roots
        for (auto& s : staging_simple) {
            int idx = root_index(s);
            if (idx < 0) throw std::logic_error("root system: simple root missing from root set");
            simple.push_back(idx);
        }
        // exact pseudo-inverse of the simple-root column matrix
        std::vector<Vec> cols;
        for (int node = 0; node < rank(); ++node) cols.push_back(simple_root(node));
        Mat s = Mat::from_columns(cols);
        Mat st = s.transposed();
        Mat g = *inverse(st * s);
        coord_proj_ = g * st;
        span_proj_ = s * coord_proj_;
        // integer coordinates per root
        simple_coords_.reserve(roots.size());
        for (const auto& r : roots) {
            Vec c = coord_proj_.apply(r);
            std::vector<long long> ic;
            ic.reserve(c.size());
            for (const auto& x : c) {
                if (!x.is_integer()) throw std::logic_error("root system: non-integer simple coordinates");
                ic.push_back(x.num());
            }
            simple_coords_.push_back(std::move(ic));
        }
    }

    std::vector<Vec> staging_simple; // filled by the builder, consumed by finalize()
private:
    std::vector<std::vector<long long>> simple_coords_;
    Mat coord_proj_;
    Mat span_proj_;
};

namespace detail {

inline Vec unit(int dim, int i, Rational c = Rational(1)) {
    Vec v(static_cast<std::size_t>(dim));
    v[static_cast<std::size_t>(i)] = c;
    return v;
}

inline Vec e_minus_e(int dim, int i, int j) {
    Vec v(static_cast<std::size_t>(dim));
    v[static_cast<std::size_t>(i)] = Rational(1);
    v[static_cast<std::size_t>(j)] = Rational(-1);
    return v;
}

inline Vec e_plus_e(int dim, int i, int j) {
    Vec v(static_cast<std::size_t>(dim));
    v[static_cast<std::size_t>(i)] = Rational(1);
    v[static_cast<std::size_t>(j)] = Rational(1);
    return v;
}

inline void add_pm(std::vector<Vec>& out, const Vec& v) {
    out.push_back(v);
    Vec n(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) n[i] = -v[i];
    out.push_back(std::move(n));
}

inline std::vector<Vec> e8_roots() {
    std::vector<Vec> out;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            add_pm(out, e_minus_e(8, i, j));
            add_pm(out, e_plus_e(8, i, j));
        }
    const Rational h(1, 2);
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue; // even number of minus signs
        Vec v(8);
        for (int i = 0; i < 8; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -h : h;
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace detail

inline RootSystem build_root_system(CartanType t) {
    using namespace detail;
    if (!t.valid())
        throw std::invalid_argument("build_root_system: invalid rank " + std::to_string(t.rank) +
                                    " for series " + std::string(1, static_cast<char>(t.series)));
    RootSystem rs;
    rs.type = t;
    int r = t.rank;
    switch (t.series) {
        case Series::A: {
            rs.ambient_dim = r + 1;
            for (int i = 0; i <= r; ++i)
                for (int j = 0; j <= r; ++j)
                    if (i != j) rs.roots.push_back(e_minus_e(r + 1, i, j));
            for (int i = 0; i < r; ++i) rs.staging_simple.push_back(e_minus_e(r + 1, i, i + 1));
            break;
        }
        case Series::B: {
            rs.ambient_dim = r;
            for (int i = 0; i < r; ++i) add_pm(rs.roots, unit(r, i));
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) {
                    add_pm(rs.roots, e_minus_e(r, i, j));
                    add_pm(rs.roots, e_plus_e(r, i, j));
                }
            for (int i = 0; i + 1 < r; ++i) rs.staging_simple.push_back(e_minus_e(r, i, i + 1));
            rs.staging_simple.push_back(unit(r, r - 1));
            break;
        }
        case Series::C: {
            rs.ambient_dim = r;
            for (int i = 0; i < r; ++i) add_pm(rs.roots, unit(r, i, Rational(2)));
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) {
                    add_pm(rs.roots, e_minus_e(r, i, j));
                    add_pm(rs.roots, e_plus_e(r, i, j));
                }
            for (int i = 0; i + 1 < r; ++i) rs.staging_simple.push_back(e_minus_e(r, i, i + 1));
            rs.staging_simple.push_back(unit(r, r - 1, Rational(2)));
            break;
        }
        case Series::D: {
            rs.ambient_dim = r;
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) {
                    add_pm(rs.roots, e_minus_e(r, i, j));
                    add_pm(rs.roots, e_plus_e(r, i, j));
                }
            for (int i = 0; i + 1 < r; ++i) rs.staging_simple.push_back(e_minus_e(r, i, i + 1));
            rs.staging_simple.push_back(e_plus_e(r, r - 2, r - 1));
            break;
        }
        case Series::E: {
            rs.ambient_dim = 8;
            std::vector<Vec> all = e8_roots();
            // Bourbaki simple roots of E8; E7/E6 take the leading subsets
            std::vector<Vec> s8;
            {
                Vec a1(8);
                a1[0] = Rational(1, 2); a1[7] = Rational(1, 2);
                for (int i = 1; i <= 6; ++i) a1[static_cast<std::size_t>(i)] = Rational(-1, 2);
                s8.push_back(a1);
                s8.push_back(e_plus_e(8, 0, 1));
                s8.push_back(e_minus_e(8, 1, 0));
                for (int i = 2; i <= 7; ++i) s8.push_back(e_minus_e(8, i, i - 1));
            }
            rs.staging_simple.assign(s8.begin(), s8.begin() + r);
            // keep only roots inside the span of the chosen simple roots
            for (const auto& cand : all) {
                std::vector<Vec> rows = rs.staging_simple;
                rows.push_back(cand);
                if (span_dim(rows) == r) rs.roots.push_back(cand);
            }
            break;
        }
        case Series::F: {
            rs.ambient_dim = 4;
            for (int i = 0; i < 4; ++i) add_pm(rs.roots, unit(4, i));
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    add_pm(rs.roots, e_minus_e(4, i, j));
                    add_pm(rs.roots, e_plus_e(4, i, j));
                }
            const Rational h(1, 2);
            for (int mask = 0; mask < 16; ++mask) {
                Vec v(4);
                for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -h : h;
                rs.roots.push_back(std::move(v));
            }
            rs.staging_simple.push_back(e_minus_e(4, 1, 2));
            rs.staging_simple.push_back(e_minus_e(4, 2, 3));
            rs.staging_simple.push_back(unit(4, 3));
            Vec a4(4);
            a4[0] = h; a4[1] = -h; a4[2] = -h; a4[3] = -h;
            rs.staging_simple.push_back(a4);
            break;
        }
        case Series::G: {
            rs.ambient_dim = 3;
            auto v3 = [](int a, int b, int c) {
                Vec v(3);
                v[0] = Rational(a); v[1] = Rational(b); v[2] = Rational(c);
                return v;
            };
            add_pm(rs.roots, v3(1, -1, 0));
            add_pm(rs.roots, v3(0, 1, -1));
            add_pm(rs.roots, v3(1, 0, -1));
            add_pm(rs.roots, v3(2, -1, -1));
            add_pm(rs.roots, v3(-1, 2, -1));
            add_pm(rs.roots, v3(1, 1, -2));
            rs.staging_simple.push_back(v3(1, -1, 0));
            rs.staging_simple.push_back(v3(-2, 1, 1));
            break;
        }
    }
    rs.finalize();
    return rs;
}

// process-wide cache; root systems are immutable once built
inline std::shared_ptr<const RootSystem> shared_root_system(CartanType t) {
    static std::map<CartanType, std::shared_ptr<const RootSystem>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
    auto rs = std::make_shared<const RootSystem>(build_root_system(t));
    cache.emplace(t, rs);
    return rs;
}

// w_alpha(v) = v - 2<alpha,v>/||alpha||^2 alpha
inline Vec reflect(const RootSystem& rs, const Vec& alpha, const Vec& v) {
    if (!rs.is_root(alpha)) throw std::invalid_argument("reflect: alpha is not a root");
    Rational c = Rational(2) * dot(alpha, v) / dot(alpha, alpha);
    return vec_sub(v, vec_scale(c, alpha));
}

inline Vec reflect(const RootSystem& rs, int alpha_idx, const Vec& v) {
    return reflect(rs, rs.roots[static_cast<std::size_t>(alpha_idx)], v);
}

// simple roots of the positive system {a : <v,a> > 0}; v must be regular
inline FundamentalSystem fundamental_from_regular(const RootSystem& rs, const Vec& v) {
    std::vector<int> positive;
    for (int i = 0; i < rs.root_count(); ++i) {
        int s = dot(v, rs.roots[static_cast<std::size_t>(i)]).sign();
        if (s == 0)
            throw std::invalid_argument("fundamental_from_regular: vector is not regular (orthogonal to a root)");
        if (s > 0) positive.push_back(i);
    }
    // indecomposable positive roots
    FundamentalSystem fs;
    for (int i : positive) {
        const Vec& a = rs.roots[static_cast<std::size_t>(i)];
        bool decomposable = false;
        for (int j : positive) {
            if (j == i) continue;
            Vec rest = vec_sub(a, rs.roots[static_cast<std::size_t>(j)]);
            int k = rs.root_index(rest);
            if (k >= 0 && dot(v, rest).sign() > 0) { decomposable = true; break; }
        }
        if (!decomposable) fs.push_back(i);
    }
    std::sort(fs.begin(), fs.end());
    return fs;
}

// deterministic regular vector: descending integer weights on the simple
// basis, perturbed by 1/p_i on successive coordinates if a root is hit
inline Vec regular_vector(const RootSystem& rs) {
    int l = rs.rank();
    Vec v(static_cast<std::size_t>(rs.ambient_dim));
    auto weight_sum = [&](const Vec& base) {
        Vec acc = base;
        for (int node = 0; node < l; ++node)
            acc = vec_add(acc, vec_scale(Rational(1LL << (l - node)), rs.simple_root(node)));
        return acc;
    };
    v = weight_sum(Vec(static_cast<std::size_t>(rs.ambient_dim)));
    static const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23};
    int pi = 0, node = 0;
    auto regular = [&](const Vec& x) {
        for (const auto& root : rs.roots)
            if (dot(x, root).is_zero()) return false;
        return true;
    };
    while (!regular(v)) {
        v = vec_add(v, vec_scale(Rational(1, primes[pi % 8]), rs.simple_root(node % l)));
        ++pi;
        ++node;
    }
    return v;
}

// full verification of the root-system axioms, used by the test suites
inline bool verify_root_system_axioms(const RootSystem& rs, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    Vec zero(static_cast<std::size_t>(rs.ambient_dim));
    if (rs.is_root(zero)) return fail("zero vector among roots");
    std::vector<Vec> all(rs.roots.begin(), rs.roots.end());
    if (span_dim(all) != rs.rank()) return fail("span dimension != rank");
    for (const auto& a : rs.roots) {
        for (const auto& b : rs.roots) {
            if (!RootSystem::cartan_pairing(b, a).is_integer()) return fail("non-integral Cartan pairing");
            Vec w = reflect(rs, a, b);
            if (!rs.is_root(w)) return fail("not closed under reflection");
        }
        // reduced: only +-a proportional to a
        for (const auto& b : rs.roots) {
            if (b == a) continue;
            bool proportional = true;
            Rational ratio;
            bool ratio_set = false;
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i].is_zero() != b[i].is_zero()) { proportional = false; break; }
                if (!a[i].is_zero()) {
                    Rational q = b[i] / a[i];
                    if (!ratio_set) { ratio = q; ratio_set = true; }
                    else if (q != ratio) { proportional = false; break; }
                }
            }
            if (proportional && ratio_set && ratio != Rational(-1) && ratio != Rational(1))
                return fail("not reduced");
        }
    }
    return true;
}

} // namespace lietriad
