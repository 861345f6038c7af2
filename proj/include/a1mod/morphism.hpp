#pragma once

// Morphisms of A(1)-modules and the submodule / quotient / kernel / image
// machinery built on them, plus free-summand splitting (reduce) and the
// E(1)-restriction analysis.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "a1mod/module.hpp"

namespace a1mod {

// f : source -> target raising degree by `shift` and commuting with the
// action.  maps[i] sends source^{source.lo+i} to target^{source.lo+i+shift}.
struct Morphism {
    A1Module source;
    A1Module target;
    int shift = 0;
    std::vector<gf2::BitMatrix> maps;

    gf2::BitMatrix map_at(int n) const {
        int i = n - source.lo;
        if (i >= 0 && i < static_cast<int>(maps.size())) return maps[static_cast<std::size_t>(i)];
        return gf2::BitMatrix(static_cast<std::size_t>(target.dim(n + shift)),
                              static_cast<std::size_t>(source.dim(n)));
    }
};

inline Morphism zero_morphism(A1Module src, A1Module tgt, int shift = 0) {
    Morphism f;
    f.shift = shift;
    f.maps.reserve(src.dims.size());
    for (std::size_t i = 0; i < src.dims.size(); ++i) {
        int n = src.lo + static_cast<int>(i);
        f.maps.emplace_back(static_cast<std::size_t>(tgt.dim(n + shift)),
                            static_cast<std::size_t>(src.dims[i]));
    }
    f.source = std::move(src);
    f.target = std::move(tgt);
    return f;
}

inline Morphism identity_morphism(const A1Module& m) {
    Morphism f = zero_morphism(m, m, 0);
    for (std::size_t i = 0; i < m.dims.size(); ++i)
        f.maps[i] = gf2::BitMatrix::identity(static_cast<std::size_t>(m.dims[i]));
    return f;
}

inline void validate_morphism(const Morphism& f) {
    const A1Module& a = f.source;
    const A1Module& b = f.target;
    for (int n = a.min_deg(); n <= a.max_deg(); ++n) {
        for (int k : {1, 2}) {
            gf2::BitMatrix lhs = f.map_at(n + k) * a.sq(k, n);
            gf2::BitMatrix rhs = b.sq(k, n + f.shift) * f.map_at(n);
            if (!(lhs == rhs))
                throw ValidationError("morphism does not commute with Sq" + std::to_string(k) +
                                      " at degree " + std::to_string(n));
        }
    }
}

inline Morphism compose(const Morphism& g, const Morphism& f) {
    Morphism h = zero_morphism(f.source, g.target, f.shift + g.shift);
    for (int n = f.source.min_deg(); n <= f.source.max_deg(); ++n)
        h.maps[static_cast<std::size_t>(n - f.source.lo)] = g.map_at(n + f.shift) * f.map_at(n);
    return h;
}

inline Morphism morphism_sum(const Morphism& f, const Morphism& g) {
    Morphism h = f;
    for (std::size_t i = 0; i < h.maps.size(); ++i) h.maps[i] = h.maps[i] + g.maps[i];
    return h;
}

inline bool is_zero(const Morphism& f) {
    for (const auto& m : f.maps)
        if (!m.is_zero()) return false;
    return true;
}

inline bool is_injective(const Morphism& f) {
    for (int n = f.source.min_deg(); n <= f.source.max_deg(); ++n)
        if (static_cast<int>(gf2::rank(f.map_at(n))) != f.source.dim(n)) return false;
    return true;
}

inline bool is_surjective(const Morphism& f) {
    for (int n = f.target.min_deg(); n <= f.target.max_deg(); ++n)
        if (static_cast<int>(gf2::rank(f.map_at(n - f.shift))) != f.target.dim(n)) return false;
    return true;
}

// Matrix of the action of a basis monomial of A(1) on M^n, as the composite
// of generator matrices along the monomial's word.
inline gf2::BitMatrix monomial_action(const A1Module& m, int mono, int n) {
    static const std::array<std::vector<int>, A1::dim> words = {
        std::vector<int>{}, {1}, {2}, {1, 2}, std::vector<int>{2, 1}, {2, 2}, {2, 1, 2}, {2, 2, 2}};
    const auto& w = words[static_cast<std::size_t>(mono)];
    gf2::BitMatrix acc = gf2::BitMatrix::identity(static_cast<std::size_t>(m.dim(n)));
    int d = n;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        acc = m.sq(*it, d) * acc;
        d += *it;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Graded subspaces and materialized subquotients

// Rows of basis[n] are vectors in M^n coordinates (kept echelonized).
using GradedSpan = std::map<int, gf2::BitMatrix>;

inline void span_insert(GradedSpan& s, int n, const gf2::BitVec& v, int ambient_dim) {
    if (v.is_zero()) return;
    auto it = s.find(n);
    if (it == s.end()) {
        gf2::BitMatrix m(1, static_cast<std::size_t>(ambient_dim));
        m.set_row(0, v);
        s.emplace(n, std::move(m));
        return;
    }
    gf2::BitMatrix stacked(it->second.rows() + 1, it->second.cols());
    for (std::size_t r = 0; r < it->second.rows(); ++r) stacked.set_row(r, it->second.row(r));
    stacked.set_row(it->second.rows(), v);
    it->second = gf2::row_space(stacked);
}

inline int span_dim(const GradedSpan& s, int n) {
    auto it = s.find(n);
    return it == s.end() ? 0 : static_cast<int>(it->second.rows());
}

// Closes a span under the action of Sq1 and Sq2.
inline void close_span(const A1Module& m, GradedSpan& s) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> degs;
        for (auto& [n, rows] : s) degs.push_back(n);
        for (int n : degs) {
            const gf2::BitMatrix rows = s[n];
            for (int k : {1, 2}) {
                gf2::BitMatrix op = m.sq(k, n);
                for (std::size_t r = 0; r < rows.rows(); ++r) {
                    gf2::BitVec img = op.apply(rows.row(r));
                    int before = span_dim(s, n + k);
                    span_insert(s, n + k, img, m.dim(n + k));
                    if (span_dim(s, n + k) != before) changed = true;
                }
            }
        }
    }
}

struct SubmoduleResult {
    A1Module module;
    Morphism inclusion;  // module -> ambient
};

// Materializes the submodule spanned by `rows` (closure applied when asked);
// basis per degree = the echelonized rows, so it is deterministic.
inline SubmoduleResult submodule(const A1Module& ambient, GradedSpan rows, bool close = true) {
    if (close) close_span(ambient, rows);
    for (auto it = rows.begin(); it != rows.end();) {
        if (it->second.rows() == 0)
            it = rows.erase(it);
        else
            ++it;
    }
    if (rows.empty()) {
        SubmoduleResult res{zero_module("sub(" + ambient.name + ")"), {}};
        res.inclusion = zero_morphism(res.module, ambient, 0);
        return res;
    }
    int lo = rows.begin()->first, hi = rows.rbegin()->first;
    std::vector<int> dims(static_cast<std::size_t>(hi - lo + 1), 0);
    for (auto& [n, r] : rows) dims[static_cast<std::size_t>(n - lo)] = static_cast<int>(r.rows());
    A1Module sub = make_module("sub(" + ambient.name + ")", lo, std::move(dims));
    // Induced action: image of each basis row must land in the span one or
    // two degrees up; express it there.
    for (int n = lo; n <= hi; ++n) {
        auto it = rows.find(n);
        if (it == rows.end()) continue;
        const gf2::BitMatrix& bn = it->second;
        for (int k : {1, 2}) {
            if (sub.dim(n + k) == 0) {
                if (!bn.rows()) continue;
                // target span empty: images must be zero
                gf2::BitMatrix op = ambient.sq(k, n);
                for (std::size_t r = 0; r < bn.rows(); ++r)
                    if (!op.apply(bn.row(r)).is_zero())
                        throw std::logic_error("submodule: span not closed under action");
                continue;
            }
            const gf2::BitMatrix& btgt = rows.at(n + k);
            gf2::BitMatrix tgt_cols = btgt.transpose();
            gf2::BitMatrix mat(static_cast<std::size_t>(sub.dim(n + k)), bn.rows());
            gf2::BitMatrix op = ambient.sq(k, n);
            for (std::size_t c = 0; c < bn.rows(); ++c) {
                gf2::BitVec img = op.apply(bn.row(c));
                auto x = gf2::solve(tgt_cols, img);
                if (!x) throw std::logic_error("submodule: span not closed under action");
                for (std::size_t r = 0; r < static_cast<std::size_t>(sub.dim(n + k)); ++r)
                    if (x->get(r)) mat.set(r, c);
            }
            (k == 1 ? sub.sq1 : sub.sq2)[static_cast<std::size_t>(n - lo)] = std::move(mat);
        }
    }
    Morphism incl = zero_morphism(sub, ambient, 0);
    for (auto& [n, r] : rows) incl.maps[static_cast<std::size_t>(n - lo)] = r.transpose();
    return {std::move(sub), std::move(incl)};
}

struct QuotientResult {
    A1Module module;
    Morphism projection;  // ambient -> module
};

// Quotient by a closed graded span.  The quotient basis in degree n consists
// of the standard basis vectors at the non-pivot columns of the echelonized
// span (deterministic).
inline QuotientResult quotient(const A1Module& ambient, GradedSpan rows, bool close = true) {
    if (close) close_span(ambient, rows);
    int lo = ambient.min_deg(), hi = ambient.max_deg();
    std::map<int, std::vector<int>> rep_cols;     // degree -> ambient columns representing Q-basis
    std::map<int, gf2::BitMatrix> proj_mats;      // degree -> matrix ambient^n -> Q^n
    std::vector<int> qdims;
    for (int n = lo; n <= hi; ++n) {
        int d = ambient.dim(n);
        auto it = rows.find(n);
        if (it == rows.end() || it->second.rows() == 0) {
            std::vector<int> reps(static_cast<std::size_t>(d));
            for (int j = 0; j < d; ++j) reps[static_cast<std::size_t>(j)] = j;
            rep_cols[n] = std::move(reps);
            proj_mats[n] = gf2::BitMatrix::identity(static_cast<std::size_t>(d));
            qdims.push_back(d);
            continue;
        }
        gf2::Echelon e = gf2::rref(it->second);
        std::vector<int> reps;
        for (int c = 0; c < d; ++c)
            if (e.row_of_col[static_cast<std::size_t>(c)] < 0) reps.push_back(c);
        gf2::BitMatrix pm(reps.size(), static_cast<std::size_t>(d));
        // class of e_c: itself if c is free; if c is a pivot, e_c = row - (free part)
        for (std::size_t qi = 0; qi < reps.size(); ++qi) pm.set(qi, static_cast<std::size_t>(reps[qi]));
        for (std::size_t r = 0; r < e.rank; ++r) {
            int pc = e.pivot_of_row[r];
            // e_pc == sum over free c of E[r][c] e_c (mod span)
            for (std::size_t qi = 0; qi < reps.size(); ++qi)
                if (e.mat.get(r, static_cast<std::size_t>(reps[qi]))) pm.set(qi, static_cast<std::size_t>(pc));
        }
        qdims.push_back(static_cast<int>(reps.size()));
        rep_cols[n] = std::move(reps);
        proj_mats[n] = std::move(pm);
    }
    A1Module q = make_module("quot(" + ambient.name + ")", lo, qdims);
    for (int n = q.min_deg(); n <= q.max_deg(); ++n) {
        for (int k : {1, 2}) {
            if (q.dim(n) == 0 || q.dim(n + k) == 0) continue;
            // action on class of representative column
            const auto& reps = rep_cols[n];
            gf2::BitMatrix op = ambient.sq(k, n);
            gf2::BitMatrix mat(static_cast<std::size_t>(q.dim(n + k)), reps.size());
            for (std::size_t c = 0; c < reps.size(); ++c) {
                gf2::BitVec v(static_cast<std::size_t>(ambient.dim(n)));
                v.set(static_cast<std::size_t>(reps[c]));
                gf2::BitVec img = proj_mats[n + k].apply(op.apply(v));
                for (std::size_t r = 0; r < img.size(); ++r)
                    if (img.get(r)) mat.set(r, c);
            }
            (k == 1 ? q.sq1 : q.sq2)[static_cast<std::size_t>(n - q.lo)] = std::move(mat);
        }
    }
    q.window = ambient.window;
    if (q.window) {
        q.window->lo = std::max(q.window->lo, q.min_deg());
        q.window->hi = std::min(q.window->hi, q.max_deg());
    }
    Morphism proj = zero_morphism(ambient, q, 0);
    for (int n = ambient.min_deg(); n <= ambient.max_deg(); ++n)
        proj.maps[static_cast<std::size_t>(n - ambient.lo)] = proj_mats[n];
    return {std::move(q), std::move(proj)};
}

inline SubmoduleResult kernel_module(const Morphism& f) {
    GradedSpan rows;
    for (int n = f.source.min_deg(); n <= f.source.max_deg(); ++n) {
        auto basis = gf2::kernel_basis(f.map_at(n));
        if (basis.empty()) continue;
        gf2::BitMatrix m(basis.size(), static_cast<std::size_t>(f.source.dim(n)));
        for (std::size_t r = 0; r < basis.size(); ++r) m.set_row(r, basis[r]);
        rows[n] = std::move(m);
    }
    SubmoduleResult res = submodule(f.source, std::move(rows), /*close=*/false);
    res.module.name = "ker";
    res.module.window = f.source.window;
    if (res.module.window && !res.module.is_zero()) {
        res.module.window->lo = std::max(res.module.window->lo, res.module.min_deg());
        res.module.window->hi = std::min(res.module.window->hi, res.module.max_deg());
    }
    return res;
}

inline GradedSpan image_span(const Morphism& f) {
    GradedSpan rows;
    for (int n = f.source.min_deg(); n <= f.source.max_deg(); ++n) {
        gf2::BitMatrix m = f.map_at(n);
        if (m.rows() == 0) continue;
        gf2::BitMatrix img = gf2::row_space(m.transpose());
        if (img.rows()) rows[n + f.shift] = std::move(img);
    }
    return rows;
}

inline SubmoduleResult image_module(const Morphism& f) {
    SubmoduleResult res = submodule(f.target, image_span(f), /*close=*/false);
    res.module.name = "im";
    return res;
}

struct SumWithMaps {
    A1Module sum;
    Morphism in_a, in_b;   // injections
    Morphism pr_a, pr_b;   // projections
};

inline SumWithMaps direct_sum_with_maps(const A1Module& a, const A1Module& b) {
    SumWithMaps s;
    s.sum = direct_sum(a, b);
    s.in_a = zero_morphism(a, s.sum, 0);
    s.in_b = zero_morphism(b, s.sum, 0);
    s.pr_a = zero_morphism(s.sum, a, 0);
    s.pr_b = zero_morphism(s.sum, b, 0);
    for (int n = s.sum.min_deg(); n <= s.sum.max_deg(); ++n) {
        int da = a.dim(n), db = b.dim(n);
        if (da + db == 0) continue;
        for (int j = 0; j < da; ++j) {
            s.in_a.maps[static_cast<std::size_t>(n - a.lo)].set(static_cast<std::size_t>(j),
                                                                static_cast<std::size_t>(j));
            s.pr_a.maps[static_cast<std::size_t>(n - s.sum.lo)].set(static_cast<std::size_t>(j),
                                                                    static_cast<std::size_t>(j));
        }
        for (int j = 0; j < db; ++j) {
            s.in_b.maps[static_cast<std::size_t>(n - b.lo)].set(static_cast<std::size_t>(da + j),
                                                                static_cast<std::size_t>(j));
            s.pr_b.maps[static_cast<std::size_t>(n - s.sum.lo)].set(static_cast<std::size_t>(j),
                                                                    static_cast<std::size_t>(da + j));
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Margolis cohomology of a morphism

// Chosen bases of H^*(M, Q_j): per degree, representative rows together with
// the echelonized image rows, so classes can be expressed deterministically.
struct MargolisBasis {
    // degree -> (representatives, image rows); representatives are honest
    // kernel vectors whose classes form a basis of H.
    std::map<int, std::pair<gf2::BitMatrix, gf2::BitMatrix>> at;

    int dim(int n) const {
        auto it = at.find(n);
        return it == at.end() ? 0 : static_cast<int>(it->second.first.rows());
    }
};

inline MargolisBasis margolis_basis(const A1Module& m, int j) {
    MargolisBasis b;
    auto [tlo, thi] = margolis_trust_range(m);
    int reach = (j == 0) ? 1 : 3;
    for (int n = std::max(m.min_deg() - reach, tlo); n <= std::min(m.max_deg() + reach, thi); ++n) {
        gf2::BitMatrix out = (j == 0) ? q0_op(m, n) : q1_op(m, n);
        gf2::BitMatrix in = (j == 0) ? q0_op(m, n - reach) : q1_op(m, n - reach);
        auto kb = gf2::kernel_basis(out);
        gf2::BitMatrix im = gf2::row_space(in.transpose());
        // pick kernel vectors independent modulo the image
        std::vector<gf2::BitVec> reps;
        gf2::BitMatrix work = im;
        for (auto& v : kb) {
            gf2::BitMatrix stacked(work.rows() + 1, work.cols());
            for (std::size_t r = 0; r < work.rows(); ++r) stacked.set_row(r, work.row(r));
            stacked.set_row(work.rows(), v);
            gf2::BitMatrix ns = gf2::row_space(stacked);
            if (ns.rows() > work.rows()) {
                reps.push_back(v);
                work = std::move(ns);
            }
        }
        if (reps.empty()) continue;
        gf2::BitMatrix rm(reps.size(), static_cast<std::size_t>(m.dim(n)));
        for (std::size_t r = 0; r < reps.size(); ++r) rm.set_row(r, reps[r]);
        b.at[n] = {std::move(rm), std::move(im)};
    }
    return b;
}

// Coordinates of the class of v in the chosen basis (v must lie in ker Q_j).
inline gf2::BitVec margolis_coords(const MargolisBasis& b, int n, const gf2::BitVec& v) {
    auto it = b.at.find(n);
    std::size_t hd = it == b.at.end() ? 0 : it->second.first.rows();
    gf2::BitVec out(hd);
    if (hd == 0) return out;  // class must be zero; caller may check
    const auto& [reps, im] = it->second;
    gf2::BitMatrix cols(v.size(), reps.rows() + im.rows());
    for (std::size_t c = 0; c < reps.rows(); ++c)
        for (std::size_t r = 0; r < v.size(); ++r)
            if (reps.get(c, r)) cols.set(r, c);
    for (std::size_t c = 0; c < im.rows(); ++c)
        for (std::size_t r = 0; r < v.size(); ++r)
            if (im.get(c, r)) cols.set(r, reps.rows() + c);
    auto x = gf2::solve(cols, v);
    if (!x) throw std::logic_error("margolis_coords: vector not in kernel+image span");
    for (std::size_t i = 0; i < hd; ++i)
        if (x->get(i)) out.set(i);
    return out;
}

// The induced map H^n(source, Q_j) -> H^{n+shift}(target, Q_j) in the chosen
// bases (which fix Q_j), for every degree where the source has classes.
inline std::map<int, gf2::BitMatrix> margolis_action(const Morphism& f,
                                                     const MargolisBasis& src_b,
                                                     const MargolisBasis& tgt_b) {
    std::map<int, gf2::BitMatrix> out;
    for (auto& [n, pr] : src_b.at) {
        const gf2::BitMatrix& reps = pr.first;
        gf2::BitMatrix mat(static_cast<std::size_t>(tgt_b.dim(n + f.shift)), reps.rows());
        gf2::BitMatrix fm = f.map_at(n);
        for (std::size_t c = 0; c < reps.rows(); ++c) {
            gf2::BitVec img = fm.apply(reps.row(c));
            gf2::BitVec cls = margolis_coords(tgt_b, n + f.shift, img);
            for (std::size_t r = 0; r < cls.size(); ++r)
                if (cls.get(r)) mat.set(r, c);
        }
        out[n] = std::move(mat);
    }
    return out;
}

// Does f induce isomorphisms on both Margolis cohomologies?
inline bool margolis_iso(const Morphism& f) {
    for (int j : {0, 1}) {
        MargolisBasis sb = margolis_basis(f.source, j);
        MargolisBasis tb = margolis_basis(f.target, j);
        // dimensions must match degreewise (after the shift)
        int stot = 0, ttot = 0;
        for (auto& [n, pr] : sb.at) stot += static_cast<int>(pr.first.rows());
        for (auto& [n, pr] : tb.at) ttot += static_cast<int>(pr.first.rows());
        if (stot != ttot) return false;
        for (auto& [n, pr] : sb.at)
            if (tb.dim(n + f.shift) != static_cast<int>(pr.first.rows())) return false;
        auto act = margolis_action(f, sb, tb);
        for (auto& [n, mat] : act) {
            if (mat.rows() != mat.cols()) return false;
            if (gf2::rank(mat) != mat.rows()) return false;
        }
    }
    return true;
}

}  // namespace a1mod
