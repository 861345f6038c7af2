#pragma once

// Graded modules over A(1): validation, Margolis cohomology, suspension,
// direct sums and degree truncations.
//
// Grading is cohomological: Sq^i raises degree by i.  A module stores one
// packed matrix per degree for each generator; sq1[n] maps M^n to M^{n+1}
// and sq2[n] maps M^n to M^{n+2} (column-vector convention, so the matrix
// has rows = dim of the target degree).

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "a1mod/a1.hpp"
#include "a1mod/gf2.hpp"

namespace a1mod {

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Trust window of a truncated model of an infinite module.  An edge is
// "exact" when the module is genuinely zero beyond it (a true boundedness
// edge), and inexact when degrees beyond it were chopped off.  The stored
// support may exceed the window: degrees outside it are slop from earlier
// operations and carry no guarantees.
struct Window {
    int lo = 0;
    int hi = 0;
    bool lo_exact = false;
    bool hi_exact = false;
};

struct A1Module {
    std::string name;
    int lo = 0;                        // degree of dims[0]
    std::vector<int> dims;             // dims per degree lo .. lo+dims.size()-1
    std::vector<gf2::BitMatrix> sq1;   // sq1[i] : M^{lo+i} -> M^{lo+i+1}
    std::vector<gf2::BitMatrix> sq2;   // sq2[i] : M^{lo+i} -> M^{lo+i+2}
    std::optional<Window> window;

    int min_deg() const { return lo; }
    int max_deg() const { return lo + static_cast<int>(dims.size()) - 1; }
    bool is_zero() const { return dims.empty(); }

    int dim(int n) const {
        int i = n - lo;
        if (i < 0 || i >= static_cast<int>(dims.size())) return 0;
        return dims[static_cast<std::size_t>(i)];
    }
    int total_dim() const {
        int t = 0;
        for (int d : dims) t += d;
        return t;
    }

    // Action matrix M^n -> M^{n+k}; a properly sized zero matrix outside the
    // stored range.
    gf2::BitMatrix sq(int k, int n) const {
        int i = n - lo;
        const auto& store = (k == 1) ? sq1 : sq2;
        if (i >= 0 && i < static_cast<int>(store.size())) return store[static_cast<std::size_t>(i)];
        return gf2::BitMatrix(static_cast<std::size_t>(dim(n + k)), static_cast<std::size_t>(dim(n)));
    }
};

// Allocates zeroed action matrices consistent with `dims`; callers then fill
// in entries and validate.
inline A1Module make_module(std::string name, int lo, std::vector<int> dims) {
    // Trim zero-dimensional degrees at both ends.
    std::size_t a = 0, b = dims.size();
    while (a < b && dims[a] == 0) ++a;
    while (b > a && dims[b - 1] == 0) --b;
    A1Module m;
    m.name = std::move(name);
    m.lo = (a == b) ? 0 : lo + static_cast<int>(a);
    m.dims.assign(dims.begin() + static_cast<long>(a), dims.begin() + static_cast<long>(b));
    m.sq1.reserve(m.dims.size());
    m.sq2.reserve(m.dims.size());
    for (std::size_t i = 0; i < m.dims.size(); ++i) {
        m.sq1.emplace_back(static_cast<std::size_t>(m.dim(m.lo + static_cast<int>(i) + 1)),
                           static_cast<std::size_t>(m.dims[i]));
        m.sq2.emplace_back(static_cast<std::size_t>(m.dim(m.lo + static_cast<int>(i) + 2)),
                           static_cast<std::size_t>(m.dims[i]));
    }
    return m;
}

inline A1Module zero_module(std::string name = "0") { return make_module(std::move(name), 0, {}); }

// Q1 = Sq1 Sq2 + Sq2 Sq1 as a matrix M^n -> M^{n+3}.
inline gf2::BitMatrix q1_op(const A1Module& m, int n) {
    return m.sq(1, n + 2) * m.sq(2, n) + m.sq(2, n + 1) * m.sq(1, n);
}

inline gf2::BitMatrix q0_op(const A1Module& m, int n) { return m.sq(1, n); }

inline void validate(const A1Module& m) {
    const int n0 = m.min_deg(), n1 = m.max_deg();
    if (m.is_zero()) return;
    for (std::size_t i = 0; i < m.dims.size(); ++i) {
        int n = m.lo + static_cast<int>(i);
        if (m.sq1[i].cols() != static_cast<std::size_t>(m.dims[i]) ||
            m.sq1[i].rows() != static_cast<std::size_t>(m.dim(n + 1)))
            throw ValidationError(m.name + ": sq1 shape mismatch at degree " + std::to_string(n));
        if (m.sq2[i].cols() != static_cast<std::size_t>(m.dims[i]) ||
            m.sq2[i].rows() != static_cast<std::size_t>(m.dim(n + 2)))
            throw ValidationError(m.name + ": sq2 shape mismatch at degree " + std::to_string(n));
    }
    for (int n = n0; n <= n1; ++n) {
        if (!(m.sq(1, n + 1) * m.sq(1, n)).is_zero())
            throw ValidationError(m.name + ": Sq1 Sq1 != 0 at degree " + std::to_string(n));
        gf2::BitMatrix lhs = m.sq(2, n + 2) * m.sq(2, n);
        gf2::BitMatrix rhs = m.sq(1, n + 3) * (m.sq(2, n + 1) * m.sq(1, n));
        if (!(lhs == rhs))
            throw ValidationError(m.name + ": Sq2 Sq2 != Sq1 Sq2 Sq1 at degree " + std::to_string(n));
    }
    // Windowed modules may store material outside the trust window (slop at
    // inexact edges left over from earlier operations); no containment check.
}

// ---------------------------------------------------------------------------
// Margolis cohomology

struct MargolisProfile {
    std::map<int, int> q0;
    std::map<int, int> q1;

    bool operator==(const MargolisProfile&) const = default;

    int total() const {
        int t = 0;
        for (auto& [d, k] : q0) t += k;
        for (auto& [d, k] : q1) t += k;
        return t;
    }
    MargolisProfile shifted(int dq0, int dq1) const {
        MargolisProfile p;
        for (auto& [d, k] : q0) p.q0[d + dq0] = k;
        for (auto& [d, k] : q1) p.q1[d + dq1] = k;
        return p;
    }
};

inline std::map<int, int> convolve(const std::map<int, int>& a, const std::map<int, int>& b) {
    std::map<int, int> out;
    for (auto& [da, ka] : a)
        for (auto& [db, kb] : b) out[da + db] += ka * kb;
    return out;
}

// Kuenneth for Margolis cohomology: profile(m (x) n) degreewise.
inline MargolisProfile convolve(const MargolisProfile& a, const MargolisProfile& b) {
    return MargolisProfile{convolve(a.q0, b.q0), convolve(a.q1, b.q1)};
}

// Degrees where H^n(M,Q_j) can be computed from the stored data alone.  For
// finite modules this is everything; for a windowed module the inexact edges
// are shrunk by 4 (the reach of Q1 is 3).
inline std::pair<int, int> margolis_trust_range(const A1Module& m) {
    if (!m.window) return {m.min_deg() - 4, m.max_deg() + 4};
    int lo = m.window->lo + (m.window->lo_exact ? -4 : 4);
    int hi = m.window->hi - (m.window->hi_exact ? -4 : 4);
    return {lo, hi};
}

inline MargolisProfile margolis(const A1Module& m) {
    MargolisProfile p;
    auto [tlo, thi] = margolis_trust_range(m);
    int n0 = std::max(m.min_deg() - 3, tlo), n1 = std::min(m.max_deg() + 3, thi);
    for (int n = n0; n <= n1; ++n) {
        {
            gf2::BitMatrix out = q0_op(m, n), in = q0_op(m, n - 1);
            int h = m.dim(n) - static_cast<int>(gf2::rank(out)) - static_cast<int>(gf2::rank(in));
            if (h > 0) p.q0[n] = h;
        }
        {
            gf2::BitMatrix out = q1_op(m, n), in = q1_op(m, n - 3);
            int h = m.dim(n) - static_cast<int>(gf2::rank(out)) - static_cast<int>(gf2::rank(in));
            if (h > 0) p.q1[n] = h;
        }
    }
    return p;
}

inline bool q0_acyclic(const A1Module& m) { return margolis(m).q0.empty(); }
inline bool q1_acyclic(const A1Module& m) { return margolis(m).q1.empty(); }

// ---------------------------------------------------------------------------
// Elementary constructions

inline A1Module suspend(const A1Module& m, int t) {
    A1Module out = m;
    out.lo += t;
    if (out.window) {
        out.window->lo += t;
        out.window->hi += t;
    }
    if (t != 0) out.name = (t > 0 ? "S^" + std::to_string(t) : "S^(" + std::to_string(t) + ")") + "(" + m.name + ")";
    return out;
}

inline A1Module direct_sum(const A1Module& a, const A1Module& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.min_deg(), b.min_deg());
    int hi = std::max(a.max_deg(), b.max_deg());
    std::vector<int> dims(static_cast<std::size_t>(hi - lo + 1));
    for (int n = lo; n <= hi; ++n) dims[static_cast<std::size_t>(n - lo)] = a.dim(n) + b.dim(n);
    A1Module out = make_module(a.name + "+" + b.name, lo, std::move(dims));
    auto fill = [&](int k) {
        for (int n = lo; n <= hi; ++n) {
            gf2::BitMatrix ma = a.sq(k, n), mb = b.sq(k, n);
            gf2::BitMatrix blk(static_cast<std::size_t>(out.dim(n + k)), static_cast<std::size_t>(out.dim(n)));
            for (std::size_t r = 0; r < ma.rows(); ++r)
                for (std::size_t c = 0; c < ma.cols(); ++c)
                    if (ma.get(r, c)) blk.set(r, c);
            for (std::size_t r = 0; r < mb.rows(); ++r)
                for (std::size_t c = 0; c < mb.cols(); ++c)
                    if (mb.get(r, c)) blk.set(r + static_cast<std::size_t>(a.dim(n + k)),
                                              c + static_cast<std::size_t>(a.dim(n)));
            (k == 1 ? out.sq1 : out.sq2)[static_cast<std::size_t>(n - lo)] = std::move(blk);
        }
    };
    fill(1);
    fill(2);
    if (a.window || b.window) {
        Window w;
        w.lo = lo;
        w.hi = hi;
        w.lo_exact = (!a.window || a.window->lo_exact) && (!b.window || b.window->lo_exact);
        w.hi_exact = (!a.window || a.window->hi_exact) && (!b.window || b.window->hi_exact);
        if (a.window) { w.lo = std::max(w.lo, a.window->lo); w.hi = std::min(w.hi, a.window->hi); }
        if (b.window) { w.lo = std::max(w.lo, b.window->lo); w.hi = std::min(w.hi, b.window->hi); }
        out.window = w;
    }
    return out;
}

// Quotient by the (automatically closed) span of degrees > d.
inline A1Module truncate_above(const A1Module& m, int d) {
    if (m.is_zero() || d >= m.max_deg()) return m;
    if (d < m.min_deg()) return zero_module(m.name + "<=" + std::to_string(d));
    std::size_t keep = static_cast<std::size_t>(d - m.lo + 1);
    A1Module out = make_module(m.name + "<=" + std::to_string(d), m.lo,
                               std::vector<int>(m.dims.begin(), m.dims.begin() + static_cast<long>(keep)));
    for (int n = out.min_deg(); n <= out.max_deg(); ++n) {
        std::size_t i = static_cast<std::size_t>(n - out.lo);
        for (int k : {1, 2}) {
            if (n + k > d) continue;
            gf2::BitMatrix src = m.sq(k, n);
            (k == 1 ? out.sq1 : out.sq2)[i] = src;
        }
    }
    if (m.window && !m.window->lo_exact)
        out.window = Window{m.window->lo, d, false, true};
    else
        out.window = std::nullopt;
    return out;
}

// Submodule spanned by degrees >= d (closed under the action).
inline A1Module truncate_below(const A1Module& m, int d) {
    if (m.is_zero() || d <= m.min_deg()) return m;
    if (d > m.max_deg()) return zero_module(m.name + ">=" + std::to_string(d));
    std::size_t drop = static_cast<std::size_t>(d - m.lo);
    A1Module out = make_module(m.name + ">=" + std::to_string(d), d,
                               std::vector<int>(m.dims.begin() + static_cast<long>(drop), m.dims.end()));
    for (int n = out.min_deg(); n <= out.max_deg(); ++n) {
        std::size_t i = static_cast<std::size_t>(n - out.lo);
        for (int k : {1, 2}) {
            if (out.dim(n + k) == 0) continue;
            (k == 1 ? out.sq1 : out.sq2)[i] = m.sq(k, n);
        }
    }
    if (m.window && !m.window->hi_exact)
        out.window = Window{d, m.window->hi, true, false};
    else
        out.window = std::nullopt;
    return out;
}

// Finite exact subquotient of a windowed module on [lo, hi]; the result is an
// honest finite module provided [lo, hi] lies inside the trust window.
inline A1Module trim(const A1Module& m, int lo, int hi) {
    return truncate_below(truncate_above(m, hi), lo);
}

}  // namespace a1mod
