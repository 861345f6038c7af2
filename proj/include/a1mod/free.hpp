#pragma once

// Free A(1)-modules with explicit generator bookkeeping, minimal projective
// covers, and the cheap description of hom spaces out of a free module.

#include <string>
#include <utility>
#include <vector>

#include "a1mod/hom.hpp"
#include "a1mod/morphism.hpp"

namespace a1mod {

// A direct sum of suspended copies of A(1).  The basis of `module` in degree
// n consists of pairs (generator g, basis monomial i) with deg(g) +
// deg(monomial i) = n, ordered by (g, i).
struct FreeModule {
    std::vector<int> gen_degrees;
    A1Module module;

    // Column index of (g, mono) inside degree deg(g) + deg(mono), or -1.
    int column(int g, int mono) const {
        const A1& a1 = A1::instance();
        int n = gen_degrees[static_cast<std::size_t>(g)] + a1.degree[static_cast<std::size_t>(mono)];
        int col = 0;
        for (int gg = 0; gg < static_cast<int>(gen_degrees.size()); ++gg)
            for (int i = 0; i < A1::dim; ++i) {
                if (gen_degrees[static_cast<std::size_t>(gg)] + a1.degree[static_cast<std::size_t>(i)] != n)
                    continue;
                if (gg == g && i == mono) return col;
                ++col;
            }
        return -1;
    }
};

inline FreeModule free_module(const std::vector<int>& gen_degrees, std::string name = "free") {
    const A1& a1 = A1::instance();
    FreeModule f;
    f.gen_degrees = gen_degrees;
    if (gen_degrees.empty()) {
        f.module = zero_module(std::move(name));
        return f;
    }
    int lo = gen_degrees[0], hi = gen_degrees[0];
    for (int d : gen_degrees) {
        lo = std::min(lo, d);
        hi = std::max(hi, d + 6);
    }
    std::vector<int> dims(static_cast<std::size_t>(hi - lo + 1), 0);
    for (int d : gen_degrees)
        for (int i = 0; i < A1::dim; ++i) dims[static_cast<std::size_t>(d + a1.degree[static_cast<std::size_t>(i)] - lo)]++;
    f.module = make_module(std::move(name), lo, std::move(dims));
    // Basis enumeration per degree, ordered by (generator, monomial).
    auto columns_of = [&](int n) {
        std::vector<std::pair<int, int>> cols;
        for (int g = 0; g < static_cast<int>(gen_degrees.size()); ++g)
            for (int i = 0; i < A1::dim; ++i)
                if (gen_degrees[static_cast<std::size_t>(g)] + a1.degree[static_cast<std::size_t>(i)] == n)
                    cols.emplace_back(g, i);
        return cols;
    };
    for (int n = f.module.min_deg(); n <= f.module.max_deg(); ++n) {
        auto cols = columns_of(n);
        for (int k : {1, 2}) {
            if (f.module.dim(n + k) == 0) continue;
            auto tcols = columns_of(n + k);
            gf2::BitMatrix mat(tcols.size(), cols.size());
            int gen_idx = (k == 1) ? A1::kSq1 : A1::kSq2;
            for (std::size_t c = 0; c < cols.size(); ++c) {
                auto [g, i] = cols[c];
                std::uint8_t mask = a1.product[static_cast<std::size_t>(gen_idx)][static_cast<std::size_t>(i)];
                for (int j = 0; j < A1::dim; ++j) {
                    if (!((mask >> j) & 1)) continue;
                    for (std::size_t r = 0; r < tcols.size(); ++r)
                        if (tcols[r].first == g && tcols[r].second == j) mat.set(r, c);
                }
            }
            (k == 1 ? f.module.sq1 : f.module.sq2)[static_cast<std::size_t>(n - f.module.lo)] = std::move(mat);
        }
    }
    return f;
}

// Minimal projective cover of a bounded-below module: one free generator per
// head basis vector.  The head basis in each degree is the set of standard
// basis vectors at the non-pivot columns of rad(M) = im Sq1 + im Sq2
// (deterministic lowest-degree-first choice).
struct CoverResult {
    FreeModule cover;
    Morphism onto;                         // cover.module -> M, surjective
    std::vector<std::pair<int, int>> gens; // (degree, ambient column) per generator
};

inline CoverResult projective_cover(const A1Module& m) {
    const A1& a1 = A1::instance();
    CoverResult res;
    std::vector<int> gen_degs;
    std::vector<std::pair<int, int>> gens;
    for (int n = m.min_deg(); n <= m.max_deg(); ++n) {
        if (m.dim(n) == 0) continue;
        gf2::BitMatrix rad_rows(static_cast<std::size_t>(m.dim(n - 1) + m.dim(n - 2)),
                                static_cast<std::size_t>(m.dim(n)));
        gf2::BitMatrix s1 = m.sq(1, n - 1), s2 = m.sq(2, n - 2);
        for (int j = 0; j < m.dim(n - 1); ++j) {
            gf2::BitVec v(static_cast<std::size_t>(m.dim(n - 1)));
            v.set(static_cast<std::size_t>(j));
            rad_rows.set_row(static_cast<std::size_t>(j), s1.apply(v));
        }
        for (int j = 0; j < m.dim(n - 2); ++j) {
            gf2::BitVec v(static_cast<std::size_t>(m.dim(n - 2)));
            v.set(static_cast<std::size_t>(j));
            rad_rows.set_row(static_cast<std::size_t>(m.dim(n - 1) + j), s2.apply(v));
        }
        gf2::Echelon e = gf2::rref(std::move(rad_rows));
        for (int c = 0; c < m.dim(n); ++c)
            if (e.row_of_col[static_cast<std::size_t>(c)] < 0) {
                gen_degs.push_back(n);
                gens.emplace_back(n, c);
            }
    }
    res.cover = free_module(gen_degs, "P(" + m.name + ")");
    res.gens = gens;
    res.onto = zero_morphism(res.cover.module, m, 0);
    const A1Module& fm = res.cover.module;
    for (int n = fm.min_deg(); n <= fm.max_deg(); ++n) {
        // column (g, mono) maps to monomial . e_{gens[g]}
        int col = 0;
        gf2::BitMatrix mat(static_cast<std::size_t>(m.dim(n)), static_cast<std::size_t>(fm.dim(n)));
        for (int g = 0; g < static_cast<int>(gen_degs.size()); ++g)
            for (int i = 0; i < A1::dim; ++i) {
                if (gen_degs[static_cast<std::size_t>(g)] + a1.degree[static_cast<std::size_t>(i)] != n) continue;
                gf2::BitVec e(static_cast<std::size_t>(m.dim(gens[static_cast<std::size_t>(g)].first)));
                e.set(static_cast<std::size_t>(gens[static_cast<std::size_t>(g)].second));
                gf2::BitVec img = monomial_action(m, i, gens[static_cast<std::size_t>(g)].first).apply(e);
                for (std::size_t r = 0; r < img.size(); ++r)
                    if (img.get(r)) mat.set(r, static_cast<std::size_t>(col));
                ++col;
            }
        res.onto.maps[static_cast<std::size_t>(n - fm.lo)] = std::move(mat);
    }
    return res;
}

// Basis of hom(F, B) of degree `shift` for F free: one morphism per pair
// (generator g, basis vector v of B^{deg g + shift}).  No linear solve
// involved.
inline std::vector<Morphism> free_hom_basis(const FreeModule& f, const A1Module& b, int shift = 0) {
    const A1& a1 = A1::instance();
    std::vector<Morphism> out;
    for (int g = 0; g < static_cast<int>(f.gen_degrees.size()); ++g) {
        int dg = f.gen_degrees[static_cast<std::size_t>(g)];
        for (int vb = 0; vb < b.dim(dg + shift); ++vb) {
            Morphism h = zero_morphism(f.module, b, shift);
            gf2::BitVec v(static_cast<std::size_t>(b.dim(dg + shift)));
            v.set(static_cast<std::size_t>(vb));
            for (int i = 0; i < A1::dim; ++i) {
                int n = dg + a1.degree[static_cast<std::size_t>(i)];
                int col = f.column(g, i);
                if (col < 0 || b.dim(n + shift) == 0) continue;
                gf2::BitVec img = monomial_action(b, i, dg + shift).apply(v);
                for (std::size_t r = 0; r < img.size(); ++r)
                    if (img.get(r)) h.maps[static_cast<std::size_t>(n - f.module.lo)].set(r, static_cast<std::size_t>(col));
            }
            out.push_back(std::move(h));
        }
    }
    return out;
}

}  // namespace a1mod
