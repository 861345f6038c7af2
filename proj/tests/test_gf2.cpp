#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>
#include <vector>

#include "a1mod/gf2.hpp"

using namespace a1mod;

namespace {

// Independent oracle: rank via enumeration of the row span (small matrices
// only).
std::size_t rank_by_enumeration(const gf2::BitMatrix& m) {
    std::set<std::vector<bool>> span;
    std::size_t rows = m.rows();
    REQUIRE(rows <= 16);
    for (std::uint32_t mask = 0; mask < (1u << rows); ++mask) {
        std::vector<bool> v(m.cols(), false);
        for (std::size_t r = 0; r < rows; ++r)
            if ((mask >> r) & 1)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    if (m.get(r, c)) v[c] = !v[c];
        span.insert(v);
    }
    std::size_t rk = 0;
    while ((std::size_t(1) << rk) < span.size()) ++rk;
    return rk;
}

gf2::BitMatrix random_matrix(std::uint64_t& state, std::size_t rows, std::size_t cols) {
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    gf2::BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (next() & 1) m.set(r, c);
    return m;
}

}  // namespace

TEST_CASE("rank on the stated examples") {
    CHECK(gf2::rank(gf2::BitMatrix(3, 3)) == 0);
    CHECK(gf2::rank(gf2::BitMatrix::identity(4)) == 4);
    gf2::BitMatrix ones(2, 2);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) ones.set(r, c);
    CHECK(gf2::rank(ones) == 1);
}

TEST_CASE("kernel_basis on the stated examples") {
    CHECK(gf2::kernel_basis(gf2::BitMatrix::identity(3)).empty());
    CHECK(gf2::kernel_basis(gf2::BitMatrix(2, 3)).size() == 3);

    gf2::BitMatrix m(1, 2);
    m.set(0, 0);
    m.set(0, 1);
    auto k = gf2::kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0].get(0));
    CHECK(k[0].get(1));
    // oracle: enumerate the four vectors of GF(2)^2
    int solutions = 0;
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1)
            if ((x0 ^ x1) == 0) ++solutions;
    CHECK(solutions == 2);  // zero and (1,1)
}

TEST_CASE("solve on the stated examples") {
    gf2::BitVec b(3);
    b.set(1);
    auto x = gf2::solve(gf2::BitMatrix::identity(3), b);
    REQUIRE(x);
    CHECK(*x == b);

    auto none = gf2::solve(gf2::BitMatrix(2, 2), b = [] {
                               gf2::BitVec v(2);
                               v.set(0);
                               return v;
                           }());
    CHECK(!none);

    gf2::BitMatrix m(1, 2);
    m.set(0, 0);
    m.set(0, 1);
    gf2::BitVec rhs(1);
    rhs.set(0);
    auto sol = gf2::solve(m, rhs);
    REQUIRE(sol);
    // deterministic by the leftmost-pivot rule: x = (1, 0)
    CHECK(sol->get(0));
    CHECK(!sol->get(1));
}

TEST_CASE("rank/kernel/solve invariants on random matrices") {
    std::uint64_t state = 12345;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + (trial % 9), cols = 1 + ((trial * 7) % 11);
        gf2::BitMatrix m = random_matrix(state, rows, cols);
        std::size_t rk = gf2::rank(m);
        CHECK(rk + gf2::kernel_basis(m).size() == cols);
        CHECK(rk == gf2::rank(m.transpose()));
        if (rows <= 12) CHECK(rk == rank_by_enumeration(m));
        // solve returns an exact solution whenever it claims one
        gf2::BitVec b(rows);
        for (std::size_t r = 0; r < rows; ++r)
            if ((trial + static_cast<int>(r)) % 3 == 0) b.set(r);
        if (auto x = gf2::solve(m, b)) CHECK(m.apply(*x) == b);
        // kernel vectors are honest solutions of m v = 0
        for (auto& v : gf2::kernel_basis(m)) CHECK(m.apply(v).is_zero());
    }
}

TEST_CASE("matrix product against direct evaluation") {
    std::uint64_t state = 999;
    gf2::BitMatrix a = random_matrix(state, 5, 7), b = random_matrix(state, 7, 4);
    gf2::BitMatrix ab = a * b;
    for (std::size_t c = 0; c < 4; ++c) {
        gf2::BitVec e(4);
        e.set(c);
        CHECK(ab.apply(e) == a.apply(b.apply(e)));
    }
}
