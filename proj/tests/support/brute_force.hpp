#ifndef SERRECHECK_TESTS_BRUTE_FORCE_HPP
#define SERRECHECK_TESTS_BRUTE_FORCE_HPP

// Test-only oracles. Nothing here touches the sparse elimination, the face
// cache, or the link code of the library: faces are bitmasks, matrices are
// dense, rational elimination runs on mpq_class fractions.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "serrecheck/complex.hpp"
#include "serrecheck/linalg.hpp"

namespace brute {

using Dense = std::vector<std::vector<std::int64_t>>;
using Mask = std::uint32_t;

inline std::size_t dense_rank_mod_p(Dense M, std::uint64_t p) {
    const auto P = static_cast<std::int64_t>(p);
    for (auto& row : M)
        for (auto& x : row) x = ((x % P) + P) % P;
    auto inv = [P](std::int64_t a) {
        std::int64_t result = 1, e = P - 2;
        while (e) {
            if (e & 1) result = result * a % P;
            a = a * a % P;
            e >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    const std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[rank], M[piv]);
        const auto iv = inv(M[rank][c]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || M[r][c] == 0) continue;
            const auto f = M[r][c] * iv % P;
            for (std::size_t k = 0; k < cols; ++k) M[r][k] = ((M[r][k] - f * M[rank][k]) % P + P) % P;
        }
        ++rank;
    }
    return rank;
}

inline std::size_t dense_rank_q(const Dense& A) {
    std::vector<std::vector<mpq_class>> M;
    for (const auto& row : A) {
        std::vector<mpq_class> r;
        for (auto x : row) r.emplace_back(static_cast<long>(x));
        M.push_back(std::move(r));
    }
    std::size_t rank = 0;
    const std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[rank], M[piv]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || M[r][c] == 0) continue;
            const mpq_class f = M[r][c] / M[rank][c];
            for (std::size_t k = 0; k < cols; ++k) M[r][k] -= f * M[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t dense_rank(const Dense& M, const serrecheck::FieldSpec& F) {
    return F.is_rational() ? dense_rank_q(M) : dense_rank_mod_p(M, F.characteristic());
}

/// Closed family of faces as bitmasks over vertex ids (< 32 vertices).
inline std::set<Mask> all_faces(const std::vector<Mask>& facets) {
    std::set<Mask> out;
    for (Mask f : facets) {
        // enumerate every submask, including 0 (the empty face)
        for (Mask s = f;; s = (s - 1) & f) {
            out.insert(s);
            if (s == 0) break;
        }
    }
    return out;
}

inline std::vector<Mask> masks_of(const serrecheck::Complex& K) {
    std::vector<Mask> out;
    for (const auto& f : K.facets()) {
        Mask m = 0;
        for (auto v : f.vertices()) m |= Mask{1} << v;
        out.push_back(m);
    }
    return out;
}

/// Reduced Betti numbers of the complex generated by `facets`, degrees -1..top.
/// Empty result for the void complex.
inline std::vector<std::size_t> betti(const std::vector<Mask>& facets, const serrecheck::FieldSpec& F) {
    if (facets.empty()) return {};
    const auto faces = all_faces(facets);
    int top = -1;
    std::map<int, std::vector<Mask>> by_dim;
    for (Mask f : faces) {
        const int d = __builtin_popcount(f) - 1;
        by_dim[d].push_back(f);
        top = std::max(top, d);
    }
    auto boundary_rank = [&](int i) -> std::size_t {
        if (i < 0 || i > top) return 0;
        const auto& lower = by_dim[i - 1];
        const auto& upper = by_dim[i];
        Dense M(lower.size(), std::vector<std::int64_t>(upper.size(), 0));
        for (std::size_t c = 0; c < upper.size(); ++c) {
            int pos = 0;
            for (int v = 0; v < 32; ++v) {
                if (!(upper[c] >> v & 1)) continue;
                const Mask below = upper[c] & ~(Mask{1} << v);
                const auto r = std::find(lower.begin(), lower.end(), below) - lower.begin();
                M[static_cast<std::size_t>(r)][c] = (pos % 2 == 0) ? 1 : -1;
                ++pos;
            }
        }
        return dense_rank(M, F);
    };
    std::vector<std::size_t> out;
    for (int i = -1; i <= top; ++i) out.push_back(by_dim[i].size() - boundary_rank(i) - boundary_rank(i + 1));
    return out;
}

inline std::vector<Mask> maximal(const std::set<Mask>& faces) {
    std::vector<Mask> out;
    for (Mask f : faces) {
        bool dominated = false;
        for (Mask g : faces)
            if (g != f && (f & g) == f) dominated = true;
        if (!dominated) out.push_back(f);
    }
    return out;
}

inline std::vector<Mask> link(const std::vector<Mask>& facets, Mask sigma) {
    std::set<Mask> parts;
    for (Mask f : facets)
        if ((f & sigma) == sigma) parts.insert(f & ~sigma);
    return maximal(parts);
}

inline int top_dim(const std::vector<Mask>& facets) {
    int d = -2;
    for (Mask f : facets) d = std::max(d, __builtin_popcount(f) - 1);
    return d;
}

inline std::size_t betti_at(const std::vector<std::size_t>& b, int i) {
    const auto idx = static_cast<std::size_t>(i + 1);
    return (i >= -1 && idx < b.size()) ? b[idx] : 0;
}

/// (S_r) by definition, degrees from -1.
inline bool serre(const std::vector<Mask>& facets, int r, const serrecheck::FieldSpec& F) {
    const int d = top_dim(facets) + 1;
    for (Mask s : all_faces(facets)) {
        const int ds = __builtin_popcount(s) - 1;
        const int bound = std::min(r - 1, d - ds - 2);
        if (bound <= -1) continue;
        const auto b = betti(link(facets, s), F);
        for (int i = -1; i < bound; ++i)
            if (betti_at(b, i) != 0) return false;
    }
    return true;
}

inline std::vector<Mask> pure_skeleton(const std::vector<Mask>& facets, int m) {
    std::set<Mask> out;
    for (Mask f : all_faces(facets))
        if (__builtin_popcount(f) == m + 1) out.insert(f);
    return {out.begin(), out.end()};
}

inline bool sequentially_serre(const std::vector<Mask>& facets, int r, const serrecheck::FieldSpec& F) {
    for (int m = 0; m <= top_dim(facets); ++m)
        if (!serre(pure_skeleton(facets, m), r, F)) return false;
    return true;
}

}  // namespace brute

#endif  // SERRECHECK_TESTS_BRUTE_FORCE_HPP
