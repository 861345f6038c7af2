#pragma once

// Ext and Pic-graded stable-Ext charts over A(1), with the h0/h1/kappa/alpha
// module structure.
//
// All charts have source F, computed from one shared minimal resolution
// F_. -> F.  The epsilon = 1 slice of a chart for target m is Ext(F, J (x) m).
// Products act by chain-map lifts: a class c in Ext^{sigma,tau}(F, T)
// (T in {F, J}) lifts to maps L_s : F_{s+sigma} -> S^tau (T (x) F_s), and
// c . phi = (1_T (x) phi) . L_s, with the double twist J (x) J straightened
// through the splitting J (x) J -> F.  Cells with s <= 0 only exist stably
// and are computed as [F, O^{-s} S^t J^eps m] via stable homs.

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "a1mod/resolution.hpp"
#include "a1mod/stable.hpp"

namespace a1mod {

struct ChartKey {
    int s = 0;
    int t = 0;
    int eps = 0;
    auto operator<=>(const ChartKey&) const = default;
};

struct ExtChart {
    std::map<ChartKey, int> dims;                    // zero cells omitted
    std::map<ChartKey, gf2::BitMatrix> h0_action;    // keyed by source cell
    std::map<ChartKey, gf2::BitMatrix> h1_action;
    std::vector<std::string> notes;                  // per-cell window insufficiency
    int s_min = 0, s_max = 0, x_min = 0, x_max = 0;  // x = t - s

    int dim(int s, int t, int eps = 0) const {
        auto it = dims.find({s, t, eps});
        return it == dims.end() ? 0 : it->second;
    }
};

namespace ext_detail {

inline const Resolution& f_resolution() {
    static const Resolution res = [] {
        Resolution r = minimal_resolution(unit_module(), 24);
        check_resolution(r);
        return r;
    }();
    return res;
}

// Associator tensor(a, tensor(b, c)) -> tensor(tensor(a, b), c).
inline Morphism associator(const A1Module& a, const A1Module& b, const A1Module& c) {
    A1Module bc = tensor(b, c);
    A1Module ab = tensor(a, b);
    A1Module src = tensor(a, bc);
    A1Module tgt = tensor(ab, c);
    Morphism f = zero_morphism(src, tgt, 0);
    for (int n = src.min_deg(); n <= src.max_deg(); ++n) {
        auto& mat = f.maps[static_cast<std::size_t>(n - src.lo)];
        for (int p = a.min_deg(); p <= a.max_deg(); ++p)
            for (int q = b.min_deg(); q <= b.max_deg(); ++q) {
                int r = n - p - q;
                if (a.dim(p) == 0 || b.dim(q) == 0 || c.dim(r) == 0) continue;
                for (int i = 0; i < a.dim(p); ++i)
                    for (int j = 0; j < b.dim(q); ++j)
                        for (int k = 0; k < c.dim(r); ++k) {
                            int col = detail::tensor_index(a, bc, n, p, i,
                                                           detail::tensor_index(b, c, n - p, q, j, k));
                            int row = detail::tensor_index(ab, c, n, p + q,
                                                           detail::tensor_index(a, b, p + q, p, i, j), k);
                            mat.set(static_cast<std::size_t>(row), static_cast<std::size_t>(col));
                        }
            }
    }
    return f;
}

// Retarget a morphism whose target is tensor(unit, N) (layout-identical to N).
inline Morphism unwrap_unit(const Morphism& f, const A1Module& n) {
    Morphism g = f;
    g.target = n;
    return g;
}

}  // namespace ext_detail

class ChartBuilder {
public:
    enum Op { H0, H1, Kappa, Alpha };

    ChartBuilder(A1Module m, int s_max, int x_min, int x_max)
        : s_max_(s_max), x_min_(x_min), x_max_(x_max) {
        twist_[0] = std::move(m);
        twist_[1] = tensor(joker_module(), twist_[0]);
        twist_[1].name = "J(x)" + twist_[0].name;
        // J (x) J -> F splitting, a stable isomorphism
        A1Module jj = tensor(joker_module(), joker_module());
        ReduceResult r = reduce(jj);
        auto retr = retraction_of(r.witness);
        if (!retr) throw std::logic_error("chart: no retraction of J(x)J onto its reduced part");
        Morphism to_unit = zero_morphism(r.reduced, unit_module(), 0);
        to_unit.maps[0].set(0, 0);
        Morphism p = compose(to_unit, *retr);
        if (!margolis_iso(p)) throw std::logic_error("chart: J(x)J -> F is not a stable iso");
        // nu : tensor(J, tensor(J, m)) -> m
        Morphism assoc = ext_detail::associator(joker_module(), joker_module(), twist_[0]);
        Morphism pm = tensor_hom(p, identity_morphism(twist_[0]));
        nu_ = ext_detail::unwrap_unit(compose(pm, assoc), twist_[0]);
    }

    const A1Module& target(int eps) const { return twist_[static_cast<std::size_t>(eps & 1)]; }

    int dim(int s, int t, int eps = 0) { return static_cast<int>(cell(s, t, eps).reps.rows()); }

    // The unique class of a one-dimensional cell.
    gf2::BitVec generator(ChartKey c) {
        if (dim(c.s, c.t, c.eps) != 1)
            throw std::logic_error("chart: cell (" + std::to_string(c.s) + "," + std::to_string(c.t) +
                                   "," + std::to_string(c.eps) + ") is not one-dimensional");
        gf2::BitVec v(1);
        v.set(0);
        return v;
    }

    static ChartKey op_target(Op op, ChartKey c) {
        switch (op) {
            case H0: return {c.s + 1, c.t + 1, c.eps};
            case H1: return {c.s + 1, c.t + 2, c.eps};
            case Kappa: return {c.s + 1, c.t + 1, c.eps ^ 1};
            case Alpha: return {c.s + 2, c.t + 6, c.eps ^ 1};
        }
        throw std::logic_error("op_target");
    }

    // Matrix of the op action from cell c (columns = classes of c).
    gf2::BitMatrix op_matrix(Op op, ChartKey c) {
        Cell& src = cell(c.s, c.t, c.eps);
        ChartKey tc = op_target(op, c);
        gf2::BitMatrix out(static_cast<std::size_t>(dim(tc.s, tc.t, tc.eps)), src.reps.rows());
        for (std::size_t i = 0; i < src.reps.rows(); ++i) {
            gf2::BitVec cls(src.reps.rows());
            cls.set(i);
            gf2::BitVec img = apply(op, c, cls);
            for (std::size_t r = 0; r < img.size(); ++r)
                if (img.get(r)) out.set(r, i);
        }
        return out;
    }

    // Apply a single operator to a class (coordinates in the cell basis).
    gf2::BitVec apply(Op op, ChartKey c, const gf2::BitVec& cls) {
        const OpData& od = op_data(op);
        Cell& src = cell(c.s, c.t, c.eps);
        // class -> cocycle coordinates -> morphism
        gf2::BitVec cochain(src.cochain_dim);
        for (std::size_t i = 0; i < cls.size(); ++i)
            if (cls.get(i)) cochain ^= src.reps.row(i);
        Morphism phi = cochain_to_morphism(c.s, c.t, c.eps, cochain);
        const Morphism& lift = od.lifts[static_cast<std::size_t>(c.s)];
        Morphism raw = compose(tensor_hom(identity_morphism(od.t_module), phi), lift);
        ChartKey tc = op_target(op, c);
        Morphism psi;
        if (od.joker_twist) {
            if (c.eps == 0) {
                psi = raw;
                psi.target = twist_[1];  // tensor(J, m) literally
            } else {
                psi = compose(nu_, raw);
            }
        } else {
            psi = ext_detail::unwrap_unit(raw, twist_[static_cast<std::size_t>(c.eps)]);
        }
        gf2::BitVec v = morphism_to_cochain(tc.s, tc.t, tc.eps, psi);
        return coords_of(tc.s, tc.t, tc.eps, v);
    }

    gf2::BitVec apply_word(const std::vector<Op>& word, ChartKey c, gf2::BitVec cls) {
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            cls = apply(*it, c, cls);
            c = op_target(*it, c);
        }
        return cls;
    }

    // a = kappa . alpha, b = alpha . alpha
    gf2::BitVec apply_a(ChartKey c, const gf2::BitVec& cls) { return apply_word({Kappa, Alpha}, c, cls); }
    gf2::BitVec apply_b(ChartKey c, const gf2::BitVec& cls) { return apply_word({Alpha, Alpha}, c, cls); }

    // Is the cell computable from the stored data of a windowed target?  The
    // hom complex at (s, t) reads the target in degrees d - t for generator
    // degrees d of F_s and F_{s+1}, plus the reach of the action (6).
    bool cell_trusted(int s, int t, int eps) const {
        const A1Module& n = target(eps);
        if (!n.window) return true;
        int lo = n.window->lo + (n.window->lo_exact ? -100 : 6);
        int hi = n.window->hi - (n.window->hi_exact ? -100 : 6);
        const Resolution& res = ext_detail::f_resolution();
        for (int stage = s; stage <= std::min(s + 1, res.max_stage()); ++stage)
            for (int d : res.free_at(stage).gen_degrees) {
                int deg = d - t;
                if (n.dim(deg) == 0) continue;
                if (deg < lo || deg > hi) return false;
            }
        return true;
    }

    // Chart of Ext^{s,t} over the requested window (both eps slices).
    ExtChart chart(int s_min = 0) {
        ExtChart ch;
        ch.s_min = s_min;
        ch.s_max = s_max_;
        ch.x_min = x_min_;
        ch.x_max = x_max_;
        for (int eps : {0, 1})
            for (int s = std::max(0, s_min); s <= s_max_; ++s)
                for (int x = x_min_; x <= x_max_; ++x) {
                    int t = x + s;
                    if (!cell_trusted(s, t, eps)) {
                        ch.notes.push_back("insufficient window at (" + std::to_string(s) + "," +
                                           std::to_string(t) + "," + std::to_string(eps) + ")");
                        continue;
                    }
                    int d = dim(s, t, eps);
                    if (d) ch.dims[{s, t, eps}] = d;
                }
        for (auto& [key, d] : ch.dims) {
            if (key.s + 1 <= s_max_) {
                gf2::BitMatrix m0 = op_matrix(H0, key);
                if (!m0.is_zero()) ch.h0_action[key] = std::move(m0);
                if (key.t + 2 - (key.s + 1) <= x_max_) {
                    gf2::BitMatrix m1 = op_matrix(H1, key);
                    if (!m1.is_zero()) ch.h1_action[key] = std::move(m1);
                }
            }
        }
        return ch;
    }

private:
    struct Cell {
        int cochain_dim = 0;
        gf2::BitMatrix reps;     // rows: cocycle coordinates of the class basis
        gf2::BitMatrix im_rows;  // rows: coboundary span
    };

    struct OpData {
        int sigma, tau;
        bool joker_twist;
        A1Module t_module;
        std::vector<Morphism> lifts;  // lifts[s] : F_{s+sigma} -> S^tau (T (x) F_s)
    };

    int cochain_dim(int s, int t, int eps) {
        const Resolution& res = ext_detail::f_resolution();
        if (s > res.max_stage()) throw std::logic_error("chart: resolution too short");
        int d = 0;
        for (int dg : res.free_at(s).gen_degrees) d += target(eps).dim(dg - t);
        return d;
    }

    Morphism cochain_to_morphism(int s, int t, int eps, const gf2::BitVec& v) {
        const Resolution& res = ext_detail::f_resolution();
        auto basis = free_hom_basis(res.free_at(s), target(eps), -t);
        Morphism out = zero_morphism(res.free_at(s).module, target(eps), -t);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (v.get(i)) out = morphism_sum(out, basis[i]);
        return out;
    }

    gf2::BitVec morphism_to_cochain(int s, int t, int eps, const Morphism& phi) {
        const Resolution& res = ext_detail::f_resolution();
        const FreeModule& fs = res.free_at(s);
        const A1Module& n = target(eps);
        gf2::BitVec v(static_cast<std::size_t>(cochain_dim(s, t, eps)));
        std::size_t off = 0;
        for (int g = 0; g < static_cast<int>(fs.gen_degrees.size()); ++g) {
            int dg = fs.gen_degrees[static_cast<std::size_t>(g)];
            int nd = n.dim(dg - t);
            if (nd == 0) continue;
            int col = fs.column(g, 0);
            gf2::BitMatrix mat = phi.map_at(dg);
            for (int r = 0; r < nd; ++r)
                if (mat.get(static_cast<std::size_t>(r), static_cast<std::size_t>(col))) v.set(off + static_cast<std::size_t>(r));
            off += static_cast<std::size_t>(nd);
        }
        return v;
    }

    // Matrix of the cochain differential (s, t) -> (s+1, t).
    gf2::BitMatrix delta(int s, int t, int eps) {
        const Resolution& res = ext_detail::f_resolution();
        int rows = cochain_dim(s + 1, t, eps), cols = cochain_dim(s, t, eps);
        gf2::BitMatrix out(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
        if (rows == 0 || cols == 0 || s + 1 > res.max_stage()) return out;
        const FreeModule& fs = res.free_at(s);
        const FreeModule& fs1 = res.free_at(s + 1);
        const Morphism& d = res.d_at(s + 1);
        const A1Module& n = target(eps);
        const A1& a1 = A1::instance();
        std::size_t roff = 0;
        for (int h = 0; h < static_cast<int>(fs1.gen_degrees.size()); ++h) {
            int dh = fs1.gen_degrees[static_cast<std::size_t>(h)];
            int ndh = n.dim(dh - t);
            if (ndh == 0) continue;
            gf2::BitVec e(static_cast<std::size_t>(fs1.module.dim(dh)));
            e.set(static_cast<std::size_t>(fs1.column(h, 0)));
            gf2::BitVec dvec = d.map_at(dh).apply(e);
            std::size_t coff = 0;
            for (int g = 0; g < static_cast<int>(fs.gen_degrees.size()); ++g) {
                int dg = fs.gen_degrees[static_cast<std::size_t>(g)];
                int ndg = n.dim(dg - t);
                if (ndg == 0) continue;
                // operator sum over monomials i with column (g, i) set in d(h)
                gf2::BitMatrix block(static_cast<std::size_t>(ndh), static_cast<std::size_t>(ndg));
                bool any = false;
                for (int i = 0; i < A1::dim; ++i) {
                    if (dg + a1.degree[static_cast<std::size_t>(i)] != dh) continue;
                    int colidx = fs.column(g, i);
                    if (colidx < 0 || !dvec.get(static_cast<std::size_t>(colidx))) continue;
                    block = block + monomial_action(n, i, dg - t);
                    any = true;
                }
                if (any)
                    for (std::size_t r = 0; r < block.rows(); ++r)
                        for (std::size_t cc = 0; cc < block.cols(); ++cc)
                            if (block.get(r, cc)) out.set(roff + r, coff + cc);
                coff += static_cast<std::size_t>(ndg);
            }
            roff += static_cast<std::size_t>(ndh);
        }
        return out;
    }

    Cell& cell(int s, int t, int eps) {
        auto key = std::make_tuple(s, t, eps);
        auto it = cells_.find(key);
        if (it != cells_.end()) return it->second;
        Cell c;
        c.cochain_dim = cochain_dim(s, t, eps);
        gf2::BitMatrix dout = delta(s, t, eps);
        auto kb = gf2::kernel_basis(dout);
        gf2::BitMatrix im(0, 0);
        if (s >= 1) {
            gf2::BitMatrix din = delta(s - 1, t, eps);
            im = gf2::row_space(din.transpose());
        } else {
            im = gf2::BitMatrix(0, static_cast<std::size_t>(c.cochain_dim));
        }
        // class representatives: kernel vectors independent modulo the image
        std::vector<gf2::BitVec> reps;
        gf2::BitMatrix work = im;
        for (auto& v : kb) {
            gf2::BitMatrix stacked(work.rows() + 1, static_cast<std::size_t>(c.cochain_dim));
            for (std::size_t r = 0; r < work.rows(); ++r) stacked.set_row(r, work.row(r));
            stacked.set_row(work.rows(), v);
            gf2::BitMatrix ns = gf2::row_space(stacked);
            if (ns.rows() > work.rows()) {
                reps.push_back(v);
                work = std::move(ns);
            }
        }
        c.reps = gf2::BitMatrix(reps.size(), static_cast<std::size_t>(c.cochain_dim));
        for (std::size_t r = 0; r < reps.size(); ++r) c.reps.set_row(r, reps[r]);
        c.im_rows = std::move(im);
        return cells_.emplace(key, std::move(c)).first->second;
    }

    gf2::BitVec coords_of(int s, int t, int eps, const gf2::BitVec& v) {
        Cell& c = cell(s, t, eps);
        gf2::BitVec out(c.reps.rows());
        if (v.is_zero()) return out;
        if (c.reps.rows() == 0 && c.im_rows.rows() == 0) {
            if (!v.is_zero()) throw std::logic_error("chart: nonzero cocycle in empty cell");
            return out;
        }
        gf2::BitMatrix cols(static_cast<std::size_t>(c.cochain_dim), c.reps.rows() + c.im_rows.rows());
        for (std::size_t r = 0; r < c.reps.rows(); ++r)
            for (std::size_t j = 0; j < static_cast<std::size_t>(c.cochain_dim); ++j)
                if (c.reps.get(r, j)) cols.set(j, r);
        for (std::size_t r = 0; r < c.im_rows.rows(); ++r)
            for (std::size_t j = 0; j < static_cast<std::size_t>(c.cochain_dim); ++j)
                if (c.im_rows.get(r, j)) cols.set(j, c.reps.rows() + r);
        auto x = gf2::solve(cols, v);
        if (!x) throw std::logic_error("chart: vector is not a cocycle class");
        for (std::size_t i = 0; i < c.reps.rows(); ++i)
            if (x->get(i)) out.set(i);
        return out;
    }

    // Operator lifts depend only on the shared resolution of F, so they are
    // computed once per process.
    static const OpData& op_data(Op op) {
        static const std::map<Op, OpData> table = [] {
            std::map<Op, OpData> t;
            for (Op o : {H0, H1, Kappa, Alpha}) {
                OpData od;
                switch (o) {
                    case H0: od = {1, 1, false, unit_module(), {}}; break;
                    case H1: od = {1, 2, false, unit_module(), {}}; break;
                    case Kappa: od = {1, 1, true, joker_module(), {}}; break;
                    case Alpha: od = {2, 6, true, joker_module(), {}}; break;
                }
                od.lifts = build_lifts(od);
                t.emplace(o, std::move(od));
            }
            return t;
        }();
        return table.at(op);
    }

    // The cocycle of the operator class: the unique class of the cell
    // (sigma, tau) in the chart with target T.
    static Morphism op_cocycle(const OpData& od) {
        const Resolution& res = ext_detail::f_resolution();
        // miniature cell computation against target T
        const A1Module& n = od.t_module;
        auto cdim = [&](int s) {
            int d = 0;
            for (int dg : res.free_at(s).gen_degrees) d += n.dim(dg - od.tau);
            return d;
        };
        auto mini_delta = [&](int s) {
            // same as delta() but against n
            int rows = cdim(s + 1), cols = cdim(s);
            gf2::BitMatrix out(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
            if (!rows || !cols) return out;
            const FreeModule& fs = res.free_at(s);
            const FreeModule& fs1 = res.free_at(s + 1);
            const Morphism& d = res.d_at(s + 1);
            const A1& a1 = A1::instance();
            std::size_t roff = 0;
            for (int h = 0; h < static_cast<int>(fs1.gen_degrees.size()); ++h) {
                int dh = fs1.gen_degrees[static_cast<std::size_t>(h)];
                int ndh = n.dim(dh - od.tau);
                if (!ndh) continue;
                gf2::BitVec e(static_cast<std::size_t>(fs1.module.dim(dh)));
                e.set(static_cast<std::size_t>(fs1.column(h, 0)));
                gf2::BitVec dvec = d.map_at(dh).apply(e);
                std::size_t coff = 0;
                for (int g = 0; g < static_cast<int>(fs.gen_degrees.size()); ++g) {
                    int dg = fs.gen_degrees[static_cast<std::size_t>(g)];
                    int ndg = n.dim(dg - od.tau);
                    if (!ndg) continue;
                    for (int i = 0; i < A1::dim; ++i) {
                        if (dg + a1.degree[static_cast<std::size_t>(i)] != dh) continue;
                        int colidx = fs.column(g, i);
                        if (colidx < 0 || !dvec.get(static_cast<std::size_t>(colidx))) continue;
                        gf2::BitMatrix blk = monomial_action(n, i, dg - od.tau);
                        for (std::size_t r = 0; r < blk.rows(); ++r)
                            for (std::size_t cc = 0; cc < blk.cols(); ++cc)
                                if (blk.get(r, cc))
                                    out.set(roff + r, coff + cc, !out.get(roff + r, coff + cc));
                    }
                    coff += static_cast<std::size_t>(ndg);
                }
                roff += static_cast<std::size_t>(ndh);
            }
            return out;
        };
        gf2::BitMatrix dout = mini_delta(od.sigma);
        auto kb = gf2::kernel_basis(dout);
        gf2::BitMatrix im = gf2::row_space(mini_delta(od.sigma - 1).transpose());
        std::vector<gf2::BitVec> reps;
        gf2::BitMatrix work = im;
        for (auto& v : kb) {
            gf2::BitMatrix stacked(work.rows() + 1, v.size());
            for (std::size_t r = 0; r < work.rows(); ++r) stacked.set_row(r, work.row(r));
            stacked.set_row(work.rows(), v);
            gf2::BitMatrix ns = gf2::row_space(stacked);
            if (ns.rows() > work.rows()) {
                reps.push_back(v);
                work = std::move(ns);
            }
        }
        if (reps.size() != 1) throw std::logic_error("chart: operator cell is not one-dimensional");
        // cochain vector -> morphism
        auto basis = free_hom_basis(res.free_at(od.sigma), n, -od.tau);
        Morphism c = zero_morphism(res.free_at(od.sigma).module, n, -od.tau);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (reps[0].get(i)) c = morphism_sum(c, basis[i]);
        return c;
    }

    static std::vector<Morphism> build_lifts(const OpData& od) {
        const Resolution& res = ext_detail::f_resolution();
        Morphism c = op_cocycle(od);
        int depth = res.max_stage() - od.sigma;
        std::vector<Morphism> lifts;
        // augmented target complex T (x) F_. -> T
        std::vector<A1Module> tf;  // tensor(T, F_s)
        for (int s = 0; s <= depth; ++s) tf.push_back(tensor(od.t_module, res.free_at(s).module));
        Morphism prev;  // L_{s-1}
        for (int s = 0; s <= depth; ++s) {
            const FreeModule& src = res.free_at(s + od.sigma);
            Morphism rhs_map;  // generator h |-> required image in (T (x) F_{s-1}) or T
            if (s == 0) {
                rhs_map = c;
            } else {
                rhs_map = compose(prev, res.d_at(s + od.sigma));
            }
            // the chain-map square to solve against
            Morphism step = (s == 0) ? tensor_hom(identity_morphism(od.t_module), res.d_at(0))
                                     : tensor_hom(identity_morphism(od.t_module), res.d_at(s));
            // degree-wise solve per generator
            std::vector<std::pair<int, gf2::BitVec>> gen_values;
            for (int h = 0; h < static_cast<int>(src.gen_degrees.size()); ++h) {
                int dh = src.gen_degrees[static_cast<std::size_t>(h)];
                gf2::BitVec e(static_cast<std::size_t>(src.module.dim(dh)));
                e.set(static_cast<std::size_t>(src.column(h, 0)));
                gf2::BitVec need = rhs_map.map_at(dh).apply(e);
                auto x = gf2::solve(step.map_at(dh - od.tau), need);
                if (!x) throw std::logic_error("chart: operator lift unsolvable");
                gen_values.emplace_back(dh, *x);
            }
            // assemble the morphism from generator values
            Morphism L = zero_morphism(src.module, tf[static_cast<std::size_t>(s)], -od.tau);
            const A1& a1 = A1::instance();
            for (int h = 0; h < static_cast<int>(src.gen_degrees.size()); ++h) {
                auto& [dh, x] = gen_values[static_cast<std::size_t>(h)];
                for (int i = 0; i < A1::dim; ++i) {
                    int col = src.column(h, i);
                    if (col < 0) continue;
                    int n = dh + a1.degree[static_cast<std::size_t>(i)];
                    if (tf[static_cast<std::size_t>(s)].dim(n - od.tau) == 0) continue;
                    gf2::BitVec img = monomial_action(tf[static_cast<std::size_t>(s)], i, dh - od.tau).apply(x);
                    auto& mat = L.maps[static_cast<std::size_t>(n - src.module.lo)];
                    for (std::size_t r = 0; r < img.size(); ++r)
                        if (img.get(r))
                            mat.set(r, static_cast<std::size_t>(col),
                                    !mat.get(r, static_cast<std::size_t>(col)));
                }
            }
            validate_morphism(L);
            lifts.push_back(L);
            prev = std::move(L);
        }
        return lifts;
    }

    int s_max_, x_min_, x_max_;
    std::array<A1Module, 2> twist_;
    Morphism nu_;
    std::map<std::tuple<int, int, int>, Cell> cells_;
};

// ---------------------------------------------------------------------------
// Named classes of the charts of A_{k,eps}

// mu lives at Adams (-1,1) for either eps; lambda_k at (-3,k) (eps = 1
// family); nu_k at (1,k+2) (eps = 0 family).  All are classes of the eps = 0
// slice of the respective chart.
struct NamedClass {
    enum Kind { Mu, Lambda, Nu } kind;
    ChartKey cell;
    gf2::BitVec coords;  // in the cell basis of a ChartBuilder for A_{k,eps}
};

// Locates the class in the builder's chart; the builder must target
// A_{k,eps}.  Cells are one-dimensional except for nu_1, whose cell also
// contains h1^2 mu; there the class is pinned by h1 . nu != 0 (the defining
// pre-image property kills the other coset).
inline NamedClass named_class(ChartBuilder& b, NamedClass::Kind kind, int k) {
    NamedClass out;
    out.kind = kind;
    switch (kind) {
        case NamedClass::Mu: out.cell = {1, 0, 0}; break;
        case NamedClass::Lambda: out.cell = {k, k - 3, 0}; break;
        case NamedClass::Nu: out.cell = {k + 2, k + 3, 0}; break;
    }
    int d = b.dim(out.cell.s, out.cell.t, out.cell.eps);
    if (d == 1) {
        out.coords = b.generator(out.cell);
        return out;
    }
    if (kind == NamedClass::Nu && d == 2) {
        for (std::uint64_t mask = 1; mask < 4; ++mask) {
            gf2::BitVec cand(2);
            for (int i = 0; i < 2; ++i)
                if ((mask >> i) & 1) cand.set(static_cast<std::size_t>(i));
            if (!b.apply(ChartBuilder::H1, out.cell, cand).is_zero()) {
                out.coords = cand;
                return out;
            }
        }
    }
    throw std::logic_error("named_class: cell dimension " + std::to_string(d) +
                           " does not determine the class");
}

// ---------------------------------------------------------------------------
// Public chart entry points

// Ext^{s,t}(F, m): the eps = 0 slice, s >= 0.
inline ExtChart ext_dims(const A1Module& m, int s_max, int x_min, int x_max) {
    ChartBuilder b(m, s_max, x_min, x_max);
    ExtChart full = b.chart(0);
    ExtChart out;
    out.s_min = 0;
    out.s_max = s_max;
    out.x_min = x_min;
    out.x_max = x_max;
    for (auto& n : full.notes)
        if (n.find(",0)") != std::string::npos) out.notes.push_back(n);
    for (auto& [k, d] : full.dims)
        if (k.eps == 0) out.dims[k] = d;
    for (auto& [k, mat] : full.h0_action)
        if (k.eps == 0) out.h0_action[k] = mat;
    for (auto& [k, mat] : full.h1_action)
        if (k.eps == 0) out.h1_action[k] = mat;
    return out;
}

// Pic-graded stable ext of (F, m) over the window; s >= 1 via the resolution,
// s <= 0 via stable homs, with the s = 1 overlap cross-checked.
inline ExtChart stext_dims(const A1Module& m, int s_min, int s_max, int x_min, int x_max) {
    if (m.window)
        throw std::invalid_argument("stext: finite module required (trim the window first)");
    ExtChart out;
    out.s_min = s_min;
    out.s_max = s_max;
    out.x_min = x_min;
    out.x_max = x_max;
    if (s_max >= 1) {
        ChartBuilder b(m, s_max, x_min, x_max);
        ExtChart pos = b.chart(1);
        out.notes = pos.notes;
        for (auto& [k, d] : pos.dims)
            if (k.s >= 1) out.dims[k] = d;
        for (auto& [k, mat] : pos.h0_action)
            if (k.s >= 1 && k.s + 1 <= s_max) out.h0_action[k] = mat;
        for (auto& [k, mat] : pos.h1_action)
            if (k.s >= 1 && k.s + 1 <= s_max) out.h1_action[k] = mat;
    }
    for (int eps : {0, 1}) {
        A1Module n = eps ? tensor(joker_module(), m) : m;
        A1Module red = reduce(n).reduced;
        // cosyzygies O^{-s} for s <= 0, i.e. omega^{|s|}
        A1Module cur = red;
        for (int s = 0; s >= s_min; --s) {
            if (s <= std::min(0, s_max)) {
                for (int x = x_min; x <= x_max; ++x) {
                    int t = x + s;
                    int d = stable_hom_dim(unit_module(), suspend(cur, t));
                    if (d) out.dims[{s, t, eps}] = d;
                }
            }
            cur = omega(cur, 1);
        }
        // mandatory s = 1 overlap check
        if (s_max >= 1) {
            A1Module o1 = omega(red, -1);
            for (int x = x_min; x <= x_max; ++x) {
                int t = x + 1;
                int stable_d = stable_hom_dim(unit_module(), suspend(o1, t));
                int ext_d = out.dim(1, t, eps);
                if (stable_d != ext_d)
                    throw std::logic_error("stext: s=1 overlap mismatch at t=" + std::to_string(t) +
                                           " eps=" + std::to_string(eps));
            }
        }
    }
    return out;
}

}  // namespace a1mod
