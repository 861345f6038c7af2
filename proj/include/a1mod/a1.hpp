#pragma once

// The algebra A(1): the 8-dimensional subalgebra of the mod-2 Steenrod
// algebra generated by Sq1, Sq2 with Sq1 Sq1 = 0 and Sq2 Sq2 = Sq1 Sq2 Sq1.
//
// The monomial basis is fixed as
//   1, Sq1, Sq2, Sq1Sq2, Sq2Sq1, Sq2Sq2, Sq2Sq1Sq2, Sq2Sq2Sq2
// of degrees 0,1,2,3,3,4,5,6.  Rather than hand-coding the multiplication
// table, it is derived at startup from the action on F_2[u,v] (Sq^i on u^a
// is the binomial C(a,i) u^{a+i}, extended by the Cartan formula): words in
// Sq1, Sq2 are realized as operators on the polynomial ring through degree
// 14, where the eight basis monomials act linearly independently, so the
// structure constants can be read off.  The two defining relations and
// associativity are checked once during the derivation.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "a1mod/gf2.hpp"

namespace a1mod {

struct A1 {
    static constexpr int dim = 8;
    static constexpr int kOne = 0, kSq1 = 1, kSq2 = 2, kSq1Sq2 = 3, kSq2Sq1 = 4, kSq2Sq2 = 5,
                         kSq2Sq1Sq2 = 6, kTop = 7;  // kTop = Sq2Sq2Sq2

    std::array<int, dim> degree{0, 1, 2, 3, 3, 4, 5, 6};
    std::array<std::string, dim> name{"1",      "Sq1",    "Sq2",       "Sq1Sq2",
                                      "Sq2Sq1", "Sq2Sq2", "Sq2Sq1Sq2", "Sq2Sq2Sq2"};

    // product[i][j] = monomial expansion of b_i * b_j as an 8-bit mask.
    std::array<std::array<std::uint8_t, dim>, dim> product{};

    // Left/right multiplication by the generators, as masks per basis element.
    std::uint8_t lmul_sq1(int j) const { return product[kSq1][j]; }
    std::uint8_t lmul_sq2(int j) const { return product[kSq2][j]; }
    std::uint8_t rmul_sq1(int i) const { return product[i][kSq1]; }
    std::uint8_t rmul_sq2(int i) const { return product[i][kSq2]; }

    static const A1& instance();
};

namespace detail {

// Operators on the graded vector space F_2[u,v] in total degrees 1..max_deg.
// Basis of degree n: u^a v^{n-a}, a = 0..n.
class PolyModel {
public:
    explicit PolyModel(int max_deg) : max_deg_(max_deg) {
        offs_.assign(max_deg_ + 2, 0);
        int total = 0;
        for (int n = 1; n <= max_deg_; ++n) {
            offs_[n] = total;
            total += n + 1;  // degree n has monomials u^a v^{n-a}, a = 0..n
        }
        offs_[max_deg_ + 1] = total;
        total_ = total;
    }

    int total() const { return total_; }
    int index(int a, int b) const {  // monomial u^a v^b, a+b in [1, max_deg_]
        return offs_[a + b] + a;
    }

    // Operator matrix of Sq^k (k = 1 or 2) on the whole space; images above
    // max_deg are dropped, and compositions stay below it for the degrees
    // used here.
    gf2::BitMatrix sq(int k) const {
        gf2::BitMatrix m(total_, total_);
        for (int n = 1; n <= max_deg_; ++n) {
            for (int a = 0; a <= n; ++a) {
                int b = n - a;
                if (n + k > max_deg_) continue;
                // Cartan: Sq^k(u^a v^b) = sum_{i+j=k} C(a,i) C(b,j) u^{a+i} v^{b+j}
                for (int i = 0; i <= k; ++i) {
                    int j = k - i;
                    if (binom_mod2(a, i) && binom_mod2(b, j))
                        m.set(index(a + i, b + j), index(a, b));
                }
            }
        }
        return m;
    }

    static int binom_mod2(long long n, long long k) {
        // Lucas: C(n,k) mod 2 = 1 iff k's binary digits are covered by n's.
        // Valid for n >= 0; callers here only use n >= 0.
        if (k < 0 || k > n) return 0;
        return ((n & k) == k) ? 1 : 0;
    }

private:
    int max_deg_;
    std::vector<int> offs_;
    int total_ = 0;
};

inline A1 build_a1_table() {
    A1 a;
    // Words for the eight basis monomials, as generator sequences applied
    // right-to-left (composition order): "Sq1Sq2" = Sq1 after Sq2.
    const std::array<std::vector<int>, A1::dim> words = {
        std::vector<int>{},        {1},    {2},    {1, 2},
        std::vector<int>{2, 1},    {2, 2}, {2, 1, 2}, {2, 2, 2}};

    PolyModel model(14);
    const gf2::BitMatrix S1 = model.sq(1);
    const gf2::BitMatrix S2 = model.sq(2);
    auto op_of_word = [&](const std::vector<int>& w) {
        gf2::BitMatrix m = gf2::BitMatrix::identity(static_cast<std::size_t>(model.total()));
        // Right-to-left: word {1,2} means Sq1 o Sq2.
        for (auto it = w.rbegin(); it != w.rend(); ++it) m = (*it == 1 ? S1 : S2) * m;
        return m;
    };

    std::array<gf2::BitMatrix, A1::dim> ops;
    for (int i = 0; i < A1::dim; ++i) ops[i] = op_of_word(words[i]);

    // Check the defining relations in the model.
    if (!(S1 * S1).is_zero()) throw std::logic_error("A1 model: Sq1 Sq1 != 0");
    if (!(S2 * S2 + S1 * (S2 * S1)).is_zero())
        throw std::logic_error("A1 model: Sq2 Sq2 != Sq1 Sq2 Sq1");

    // Flatten operators to vectors and check linear independence, so the
    // model is faithful on the span of the basis monomials.
    const std::size_t N = static_cast<std::size_t>(model.total());
    auto flatten = [&](const gf2::BitMatrix& m) {
        gf2::BitVec v(N * N);
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c)
                if (m.get(r, c)) v.set(r * N + c);
        return v;
    };
    gf2::BitMatrix basis_ops(A1::dim, N * N);
    for (int i = 0; i < A1::dim; ++i) basis_ops.set_row(static_cast<std::size_t>(i), flatten(ops[i]));
    if (gf2::rank(basis_ops) != A1::dim)
        throw std::logic_error("A1 model: basis monomials not independent");

    // Express an arbitrary operator in the monomial basis.
    gf2::BitMatrix basis_cols = basis_ops.transpose();
    auto expand = [&](const gf2::BitMatrix& m) -> std::uint8_t {
        auto x = gf2::solve(basis_cols, flatten(m));
        if (!x) throw std::logic_error("A1 model: product escapes the 8-dim span");
        std::uint8_t mask = 0;
        for (int i = 0; i < A1::dim; ++i)
            if (x->get(static_cast<std::size_t>(i))) mask |= std::uint8_t(1) << i;
        return mask;
    };

    for (int i = 0; i < A1::dim; ++i)
        for (int j = 0; j < A1::dim; ++j) {
            if (a.degree[i] + a.degree[j] > 6) {
                a.product[i][j] = 0;
                continue;
            }
            a.product[i][j] = expand(ops[i] * ops[j]);
        }

    // Degree sanity: every monomial in a product has the summed degree.
    for (int i = 0; i < A1::dim; ++i)
        for (int j = 0; j < A1::dim; ++j)
            for (int k = 0; k < A1::dim; ++k)
                if ((a.product[i][j] >> k) & 1)
                    if (a.degree[k] != a.degree[i] + a.degree[j])
                        throw std::logic_error("A1 table: degree mismatch in product");

    // Associativity check on the table itself.
    auto mul_mask = [&](std::uint8_t x, std::uint8_t y) {
        std::uint8_t out = 0;
        for (int i = 0; i < A1::dim; ++i)
            if ((x >> i) & 1)
                for (int j = 0; j < A1::dim; ++j)
                    if ((y >> j) & 1) out ^= a.product[i][j];
        return out;
    };
    for (int i = 0; i < A1::dim; ++i)
        for (int j = 0; j < A1::dim; ++j)
            for (int k = 0; k < A1::dim; ++k) {
                std::uint8_t lhs = mul_mask(a.product[i][j], std::uint8_t(1) << k);
                std::uint8_t rhs = mul_mask(std::uint8_t(1) << i, a.product[j][k]);
                if (lhs != rhs) throw std::logic_error("A1 table: associativity failure");
            }

    return a;
}

}  // namespace detail

inline const A1& A1::instance() {
    static const A1 table = detail::build_a1_table();
    return table;
}

inline int binom_mod2(long long n, long long k) {
    // C(n,k) mod 2 for arbitrary integer n (negative upper index allowed),
    // via the 2-adic rule on two's-complement bit patterns: for n < 0 the
    // binary expansion is eventually all ones, and Lucas still applies
    // digitwise.
    if (k < 0) return 0;
    unsigned long long un = static_cast<unsigned long long>(n);
    unsigned long long uk = static_cast<unsigned long long>(k);
    return ((un & uk) == uk) ? 1 : 0;
}

}  // namespace a1mod
