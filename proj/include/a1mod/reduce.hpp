#pragma once

// Free-summand splitting.  A bounded-below A(1)-module splits as
// F (+) M^red with F free; a module is reduced exactly when Sq2 Sq2 Sq2 acts
// trivially, so free cyclic summands are found by scanning for a class with
// nonzero top action (lowest degree first) and split off by passing to the
// quotient, which is legitimate because free modules are injective.  The
// witness section reduced -> M is produced by one constrained solve.
//
// The E(1) analogue uses Q0 Q1 as the top class (free rank 4 per summand).

#include <utility>
#include <vector>

#include "a1mod/hom.hpp"
#include "a1mod/morphism.hpp"

namespace a1mod {

struct ReduceResult {
    int free_rank = 0;
    A1Module reduced;
    Morphism witness;  // split injection reduced -> m (zero map when reduced is zero)
};

namespace detail {

// Lowest-degree basis vector with nonzero image under `top` (degree +reach),
// or nullopt.
inline std::optional<std::pair<int, int>> find_top_survivor(const A1Module& m, int reach,
                                                            bool q0q1) {
    for (int n = m.min_deg(); n <= m.max_deg(); ++n) {
        if (m.dim(n + reach) == 0) continue;
        gf2::BitMatrix top =
            q0q1 ? q0_op(m, n + 3) * q1_op(m, n)
                 : m.sq(2, n + 4) * (m.sq(2, n + 2) * m.sq(2, n));
        for (int j = 0; j < m.dim(n); ++j) {
            gf2::BitVec v(static_cast<std::size_t>(m.dim(n)));
            v.set(static_cast<std::size_t>(j));
            if (!top.apply(v).is_zero()) return std::make_pair(n, j);
        }
    }
    return std::nullopt;
}

}  // namespace detail

inline ReduceResult reduce(const A1Module& m) {
    ReduceResult res;
    A1Module cur = m;
    Morphism proj_total = identity_morphism(m);
    bool first = true;
    while (true) {
        auto hit = detail::find_top_survivor(cur, 6, /*q0q1=*/false);
        if (!hit) break;
        auto [n, j] = *hit;
        GradedSpan rows;
        gf2::BitVec x(static_cast<std::size_t>(cur.dim(n)));
        x.set(static_cast<std::size_t>(j));
        const A1& a1 = A1::instance();
        for (int i = 0; i < A1::dim; ++i) {
            gf2::BitVec img = monomial_action(cur, i, n).apply(x);
            span_insert(rows, n + a1.degree[static_cast<std::size_t>(i)], img,
                        cur.dim(n + a1.degree[static_cast<std::size_t>(i)]));
        }
        int span_total = 0;
        for (auto& [d, r] : rows) span_total += static_cast<int>(r.rows());
        if (span_total != 8) throw std::logic_error("reduce: cyclic span with nonzero top is not free");
        QuotientResult q = quotient(cur, std::move(rows), /*close=*/false);
        proj_total = first ? q.projection : compose(q.projection, proj_total);
        first = false;
        cur = q.module;
        ++res.free_rank;
    }
    res.reduced = cur;
    res.reduced.name = m.name + "^red";
    if (res.free_rank == 0) {
        res.reduced.name = m.name;
        res.witness = identity_morphism(m);
        return res;
    }
    if (res.reduced.is_zero()) {
        res.witness = zero_morphism(res.reduced, m, 0);
        return res;
    }
    auto s = section_of(proj_total);
    if (!s) throw std::logic_error("reduce: no section of the free-quotient projection");
    res.witness = std::move(*s);
    res.witness.target = m;
    return res;
}

// The restriction of an A(1)-module along E(1) = Lambda(Q0, Q1); only the
// operators Q0 (degree +1) and Q1 (degree +3) survive.
struct E1Module {
    int lo = 0;
    std::vector<int> dims;
    std::vector<gf2::BitMatrix> q0;  // M^n -> M^{n+1}
    std::vector<gf2::BitMatrix> q1;  // M^n -> M^{n+3}

    int dim(int n) const {
        int i = n - lo;
        return (i >= 0 && i < static_cast<int>(dims.size())) ? dims[static_cast<std::size_t>(i)] : 0;
    }
    int min_deg() const { return lo; }
    int max_deg() const { return lo + static_cast<int>(dims.size()) - 1; }
    gf2::BitMatrix op(int j, int n) const {
        int i = n - lo;
        const auto& store = (j == 0) ? q0 : q1;
        int reach = (j == 0) ? 1 : 3;
        if (i >= 0 && i < static_cast<int>(store.size())) return store[static_cast<std::size_t>(i)];
        return gf2::BitMatrix(static_cast<std::size_t>(dim(n + reach)), static_cast<std::size_t>(dim(n)));
    }
};

inline E1Module restrict_e1(const A1Module& m) {
    E1Module e;
    e.lo = m.lo;
    e.dims = m.dims;
    for (std::size_t i = 0; i < m.dims.size(); ++i) {
        int n = m.lo + static_cast<int>(i);
        e.q0.push_back(q0_op(m, n));
        e.q1.push_back(q1_op(m, n));
    }
    return e;
}

struct E1ReduceResult {
    int free_rank = 0;
    std::map<int, int> reduced_dims;
    int total_margolis = 0;
    bool indecomposable = false;  // E(1)-indecomposable after reduction
};

inline E1ReduceResult restrict_e1_reduce(const A1Module& m) {
    E1ReduceResult res;
    E1Module cur = restrict_e1(m);
    while (true) {
        // lowest-degree basis vector with Q0 Q1 x != 0
        std::optional<std::pair<int, int>> hit;
        for (int n = cur.min_deg(); n <= cur.max_deg() && !hit; ++n) {
            if (cur.dim(n + 4) == 0) continue;
            gf2::BitMatrix top = cur.op(0, n + 3) * cur.op(1, n);
            for (int j = 0; j < cur.dim(n); ++j) {
                gf2::BitVec v(static_cast<std::size_t>(cur.dim(n)));
                v.set(static_cast<std::size_t>(j));
                if (!top.apply(v).is_zero()) {
                    hit = {n, j};
                    break;
                }
            }
        }
        if (!hit) break;
        auto [n, j] = *hit;
        // E(1) x = span{x, Q0 x, Q1 x, Q0 Q1 x}: free of rank one, and an
        // E(1)-submodule, so the quotient is an E(1)-module again.
        std::map<int, gf2::BitMatrix> span;
        auto put = [&](int d, const gf2::BitVec& v) {
            gf2::BitMatrix one(1, v.size());
            one.set_row(0, v);
            span[d] = std::move(one);
        };
        gf2::BitVec x(static_cast<std::size_t>(cur.dim(n)));
        x.set(static_cast<std::size_t>(j));
        put(n, x);
        put(n + 1, cur.op(0, n).apply(x));
        put(n + 3, cur.op(1, n).apply(x));
        put(n + 4, (cur.op(0, n + 3) * cur.op(1, n)).apply(x));
        for (auto& [d, rows] : span)
            if (rows.row(0).is_zero()) throw std::logic_error("restrict_e1: free span degenerate");
        // quotient degreewise by representative columns
        E1Module next;
        next.lo = cur.lo;
        std::map<int, std::vector<int>> reps;
        std::map<int, gf2::BitMatrix> proj;
        for (int d = cur.min_deg(); d <= cur.max_deg(); ++d) {
            auto it = span.find(d);
            int dd = cur.dim(d);
            if (it == span.end()) {
                std::vector<int> r(static_cast<std::size_t>(dd));
                for (int c = 0; c < dd; ++c) r[static_cast<std::size_t>(c)] = c;
                reps[d] = std::move(r);
                proj[d] = gf2::BitMatrix::identity(static_cast<std::size_t>(dd));
                next.dims.push_back(dd);
                continue;
            }
            gf2::Echelon ech = gf2::rref(it->second);
            std::vector<int> r;
            for (int c = 0; c < dd; ++c)
                if (ech.row_of_col[static_cast<std::size_t>(c)] < 0) r.push_back(c);
            gf2::BitMatrix pm(r.size(), static_cast<std::size_t>(dd));
            for (std::size_t qi = 0; qi < r.size(); ++qi) pm.set(qi, static_cast<std::size_t>(r[qi]));
            for (std::size_t row = 0; row < ech.rank; ++row)
                for (std::size_t qi = 0; qi < r.size(); ++qi)
                    if (ech.mat.get(row, static_cast<std::size_t>(r[qi])))
                        pm.set(qi, static_cast<std::size_t>(ech.pivot_of_row[row]));
            reps[d] = std::move(r);
            proj[d] = std::move(pm);
            next.dims.push_back(static_cast<int>(reps[d].size()));
        }
        for (int d = next.min_deg(); d <= next.max_deg(); ++d) {
            for (int jop : {0, 1}) {
                int reach = (jop == 0) ? 1 : 3;
                gf2::BitMatrix mat(static_cast<std::size_t>(next.dim(d + reach)),
                                   static_cast<std::size_t>(next.dim(d)));
                if (next.dim(d) && next.dim(d + reach)) {
                    gf2::BitMatrix op = cur.op(jop, d);
                    const auto& rc = reps[d];
                    for (std::size_t c = 0; c < rc.size(); ++c) {
                        gf2::BitVec v(static_cast<std::size_t>(cur.dim(d)));
                        v.set(static_cast<std::size_t>(rc[c]));
                        gf2::BitVec img = proj[d + reach].apply(op.apply(v));
                        for (std::size_t rr = 0; rr < img.size(); ++rr)
                            if (img.get(rr)) mat.set(rr, c);
                    }
                }
                (jop == 0 ? next.q0 : next.q1).push_back(std::move(mat));
            }
        }
        cur = std::move(next);
        ++res.free_rank;
    }
    for (int n = cur.min_deg(); n <= cur.max_deg(); ++n)
        if (cur.dim(n)) res.reduced_dims[n] = cur.dim(n);
    MargolisProfile p = margolis(m);  // free summands are Margolis-acyclic
    res.total_margolis = p.total();
    res.indecomposable = (res.total_margolis == 2);
    return res;
}

}  // namespace a1mod
