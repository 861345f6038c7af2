#pragma once

// Solver for spaces of A(1)-linear maps.  A morphism f : A -> B of fixed
// degree shift is a point of a GF(2) vector space (one matrix entry per
// unknown); commuting with Sq1/Sq2 and any extra composition constraints are
// linear conditions, so hom spaces are kernels and constrained maps are
// particular solutions of one linear system.

#include <optional>
#include <vector>

#include "a1mod/morphism.hpp"

namespace a1mod {

struct HomCondition {
    enum Kind { PreCompose, PostCompose } kind;
    // PreCompose:  f . with = equals   (with : X -> A, equals : X -> B)
    // PostCompose: with . f = equals   (with : B -> Y, equals : A -> Y)
    Morphism with;
    Morphism equals;
};

namespace detail {

class HomSystem {
public:
    HomSystem(const A1Module& a, const A1Module& b, int shift) : a_(a), b_(b), shift_(shift) {
        offsets_.resize(a.dims.size() + 1, 0);
        for (std::size_t i = 0; i < a.dims.size(); ++i) {
            int n = a.lo + static_cast<int>(i);
            offsets_[i + 1] = offsets_[i] + a.dims[i] * b.dim(n + shift_);
        }
    }

    int unknowns() const { return offsets_.empty() ? 0 : offsets_.back(); }

    int var(int n, int r, int c) const {  // entry f_n[r][c]
        std::size_t i = static_cast<std::size_t>(n - a_.lo);
        return offsets_[i] + r * a_.dims[i] + c;
    }
    bool in_range(int n) const { return n >= a_.lo && n <= a_.max_deg(); }

    void add_commutation_rows() {
        for (int n = a_.min_deg(); n <= a_.max_deg(); ++n) {
            for (int k : {1, 2}) {
                gf2::BitMatrix sa = a_.sq(k, n);
                gf2::BitMatrix sb = b_.sq(k, n + shift_);
                int rows_b = b_.dim(n + k + shift_);
                int cols_a = a_.dim(n);
                for (int r = 0; r < rows_b; ++r)
                    for (int j = 0; j < cols_a; ++j) {
                        Row row;
                        // f_{n+k}[r][c] * sa[c][j]
                        if (in_range(n + k))
                            for (int c = 0; c < a_.dim(n + k); ++c)
                                if (sa.get(static_cast<std::size_t>(c), static_cast<std::size_t>(j)))
                                    row.cols.push_back(var(n + k, r, c));
                        // sb[r][c] * f_n[c][j]
                        for (int c = 0; c < b_.dim(n + shift_); ++c)
                            if (sb.get(static_cast<std::size_t>(r), static_cast<std::size_t>(c)))
                                row.cols.push_back(var(n, c, j));
                        push_row(std::move(row));
                    }
            }
        }
    }

    void add_condition(const HomCondition& cond) {
        if (cond.kind == HomCondition::PreCompose) {
            const Morphism& w = cond.with;
            const Morphism& e = cond.equals;
            for (int x = w.source.min_deg(); x <= w.source.max_deg(); ++x) {
                int n = x + w.shift;  // lands in A^n
                gf2::BitMatrix wm = w.map_at(x);
                gf2::BitMatrix em = e.map_at(x);
                int rows_b = b_.dim(n + shift_);
                for (int r = 0; r < rows_b; ++r)
                    for (int j = 0; j < w.source.dim(x); ++j) {
                        Row row;
                        if (in_range(n))
                            for (int c = 0; c < a_.dim(n); ++c)
                                if (wm.get(static_cast<std::size_t>(c), static_cast<std::size_t>(j)))
                                    row.cols.push_back(var(n, r, c));
                        row.rhs = em.get(static_cast<std::size_t>(r), static_cast<std::size_t>(j));
                        push_row(std::move(row));
                    }
            }
        } else {
            const Morphism& w = cond.with;
            const Morphism& e = cond.equals;
            for (int n = a_.min_deg(); n <= a_.max_deg(); ++n) {
                gf2::BitMatrix wm = w.map_at(n + shift_);
                gf2::BitMatrix em = e.map_at(n);
                int rows_y = w.target.dim(n + shift_ + w.shift);
                for (int r = 0; r < rows_y; ++r)
                    for (int j = 0; j < a_.dim(n); ++j) {
                        Row row;
                        for (int c = 0; c < b_.dim(n + shift_); ++c)
                            if (wm.get(static_cast<std::size_t>(r), static_cast<std::size_t>(c)))
                                row.cols.push_back(var(n, c, j));
                        row.rhs = em.get(static_cast<std::size_t>(r), static_cast<std::size_t>(j));
                        push_row(std::move(row));
                    }
            }
        }
    }

    Morphism morphism_from(const gf2::BitVec& x) const {
        Morphism f = zero_morphism(a_, b_, shift_);
        for (std::size_t i = 0; i < a_.dims.size(); ++i) {
            int n = a_.lo + static_cast<int>(i);
            int rows = b_.dim(n + shift_), cols = a_.dims[i];
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c)
                    if (x.get(static_cast<std::size_t>(var(n, r, c)))) f.maps[i].set(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
        return f;
    }

    std::vector<Morphism> kernel() const {
        gf2::BitMatrix sys = assemble();
        std::vector<Morphism> out;
        for (auto& v : gf2::kernel_basis(sys)) out.push_back(morphism_from(v));
        return out;
    }

    std::optional<Morphism> particular() const {
        gf2::BitMatrix sys = assemble();
        gf2::BitVec rhs(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (rows_[r].rhs) rhs.set(r);
        auto x = gf2::solve(sys, rhs);
        if (!x) return std::nullopt;
        return morphism_from(*x);
    }

private:
    struct Row {
        std::vector<int> cols;
        bool rhs = false;
    };
    void push_row(Row r) { rows_.push_back(std::move(r)); }
    gf2::BitMatrix assemble() const {
        gf2::BitMatrix sys(rows_.size(), static_cast<std::size_t>(unknowns()));
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (int c : rows_[r].cols) {
                std::size_t sc = static_cast<std::size_t>(c);
                sys.set(r, sc, !sys.get(r, sc));  // repeated entries cancel mod 2
            }
        return sys;
    }

    const A1Module& a_;
    const A1Module& b_;
    int shift_;
    std::vector<int> offsets_;
    std::vector<Row> rows_;
};

}  // namespace detail

// Basis of the space of degree-`shift` morphisms A -> B.
inline std::vector<Morphism> hom_space(const A1Module& a, const A1Module& b, int shift = 0) {
    detail::HomSystem sys(a, b, shift);
    sys.add_commutation_rows();
    return sys.kernel();
}

// One morphism satisfying the conditions, or nullopt.  Deterministic
// (leftmost-pivot particular solution).
inline std::optional<Morphism> solve_hom(const A1Module& a, const A1Module& b, int shift,
                                         const std::vector<HomCondition>& conds) {
    detail::HomSystem sys(a, b, shift);
    sys.add_commutation_rows();
    for (const auto& c : conds) sys.add_condition(c);
    return sys.particular();
}

// Section of a surjection q : M -> Q, i.e. s with q . s = id_Q.
inline std::optional<Morphism> section_of(const Morphism& q) {
    HomCondition c{HomCondition::PostCompose, q, identity_morphism(q.target)};
    // unknown s : Q -> M with shift -q.shift
    return solve_hom(q.target, q.source, -q.shift, {c});
}

// Retraction of an injection i : S -> M, i.e. r with r . i = id_S.
inline std::optional<Morphism> retraction_of(const Morphism& i) {
    HomCondition c{HomCondition::PreCompose, i, identity_morphism(i.source)};
    return solve_hom(i.target, i.source, -i.shift, {c});
}

}  // namespace a1mod
