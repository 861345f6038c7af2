#include <catch2/catch_amalgamated.hpp>

#include "a1mod/free.hpp"
#include "a1mod/module.hpp"
#include "a1mod/morphism.hpp"
#include "a1mod/reduce.hpp"
#include "a1mod/stable.hpp"

using namespace a1mod;

namespace {

A1Module make_z() {
    A1Module z = make_module("Z", -1, {1, 1});
    z.sq1[0].set(0, 0);
    validate(z);
    return z;
}

}  // namespace

TEST_CASE("Z validates and has the stated Margolis profile") {
    A1Module z = make_z();
    MargolisProfile p = margolis(z);
    CHECK(p.q0.empty());
    CHECK(p.q1 == std::map<int, int>{{-1, 1}, {0, 1}});
}

TEST_CASE("relation violations are reported with their degree") {
    // x(0) -Sq2-> y(2) -Sq2-> z(4) with no Sq1 breaks Sq2 Sq2 = Sq1 Sq2 Sq1.
    A1Module bad = make_module("bad", 0, {1, 0, 1, 0, 1});
    bad.sq2[0].set(0, 0);
    bad.sq2[2].set(0, 0);
    REQUIRE_THROWS_AS(validate(bad), ValidationError);
    try {
        validate(bad);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("degree 0") != std::string::npos);
    }
}

TEST_CASE("joker profile") {
    A1Module j = joker_module();
    MargolisProfile p = margolis(j);
    CHECK(p.q0 == std::map<int, int>{{0, 1}});
    CHECK(p.q1 == std::map<int, int>{{0, 1}});
}

TEST_CASE("suspension behaves like a degree shift") {
    A1Module z = make_z();
    CHECK(suspend(z, 0).dims == z.dims);
    A1Module s = suspend(suspend(z, 3), -3);
    CHECK(s.lo == z.lo);
    CHECK(s.dims == z.dims);
    A1Module f5 = suspend(unit_module(), 5);
    CHECK(f5.min_deg() == 5);
    CHECK(f5.total_dim() == 1);
}

TEST_CASE("direct sums add profiles") {
    A1Module f = unit_module();
    A1Module ff = direct_sum(f, f);
    CHECK(margolis(ff).q0 == std::map<int, int>{{0, 2}});
    A1Module z = make_z();
    CHECK(direct_sum(z, zero_module()).dims == z.dims);
}

TEST_CASE("reduce splits the regular module") {
    FreeModule a1 = free_module({0}, "A(1)");
    ReduceResult r = reduce(a1.module);
    CHECK(r.free_rank == 1);
    CHECK(r.reduced.is_zero());
}

TEST_CASE("reduce on A(1) + J keeps the joker") {
    A1Module m = direct_sum(free_module({0}, "A(1)").module, joker_module());
    ReduceResult r = reduce(m);
    CHECK(r.free_rank == 1);
    CHECK(r.reduced.total_dim() == 5);
    CHECK(margolis(r.reduced) == margolis(joker_module()));
    // witness is a split injection: validates, injective, and hits a complement
    REQUIRE_NOTHROW(validate_morphism(r.witness));
    CHECK(is_injective(r.witness));
    // dimension accounting
    CHECK(m.total_dim() == 8 * r.free_rank + r.reduced.total_dim());
}

TEST_CASE("margolis is invariant under reduction") {
    A1Module j = joker_module();
    A1Module m = direct_sum(direct_sum(free_module({-2, 1}, "free2").module, j), j);
    ReduceResult r = reduce(m);
    CHECK(r.free_rank == 2);
    CHECK(margolis(m) == margolis(r.reduced));
}

TEST_CASE("E(1) restriction of Z is indecomposable") {
    E1ReduceResult e = restrict_e1_reduce(make_z());
    CHECK(e.free_rank == 0);
    CHECK(e.reduced_dims == std::map<int, int>{{-1, 1}, {0, 1}});
    CHECK(e.indecomposable);
}

TEST_CASE("E(1) restriction of A(1) is free of rank two") {
    E1ReduceResult e = restrict_e1_reduce(free_module({0}, "A(1)").module);
    CHECK(e.free_rank == 2);
    CHECK(e.reduced_dims.empty());
    CHECK(e.total_margolis == 0);
}

TEST_CASE("truncations are subquotients with the induced action") {
    A1Module j = joker_module();
    A1Module top = truncate_below(j, 0);
    CHECK(top.min_deg() == 0);
    CHECK(top.total_dim() == 3);
    REQUIRE_NOTHROW(validate(top));
    A1Module bottom = truncate_above(j, 0);
    CHECK(bottom.max_deg() == 0);
    CHECK(bottom.total_dim() == 3);
    REQUIRE_NOTHROW(validate(bottom));
}

TEST_CASE("submodule and quotient round dimension accounting") {
    A1Module j = joker_module();
    GradedSpan span;
    gf2::BitVec v(1);
    v.set(0);
    span_insert(span, -2, v, 1);
    SubmoduleResult s = submodule(j, span, /*close=*/true);
    CHECK(s.module.total_dim() == 5);  // the joker is cyclic on its bottom class
    REQUIRE_NOTHROW(validate_morphism(s.inclusion));

    GradedSpan socle;
    gf2::BitVec w(1);
    w.set(0);
    span_insert(socle, 2, w, 1);
    QuotientResult q = quotient(j, socle, /*close=*/true);
    CHECK(q.module.total_dim() == 4);
    REQUIRE_NOTHROW(validate(q.module));
    REQUIRE_NOTHROW(validate_morphism(q.projection));
}

TEST_CASE("kernel and image of a morphism") {
    // fold map J + J -> J
    A1Module j = joker_module();
    SumWithMaps s = direct_sum_with_maps(j, j);
    Morphism fold = morphism_sum(s.pr_a, s.pr_b);
    REQUIRE_NOTHROW(validate_morphism(fold));
    SubmoduleResult ker = kernel_module(fold);
    CHECK(ker.module.total_dim() == 5);
    SubmoduleResult img = image_module(fold);
    CHECK(img.module.total_dim() == 5);
}

TEST_CASE("hom spaces: [F, J] vanishes only stably") {
    // hom(F, J) in degree 0 is zero outright (no socle in degree 0)
    CHECK(hom_space(unit_module(), joker_module()).empty());
    // hom(F, F) = F
    CHECK(hom_space(unit_module(), unit_module()).size() == 1);
}
