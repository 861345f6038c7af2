#include <catch2/catch_amalgamated.hpp>

#include "a1mod/classify.hpp"

using namespace a1mod;
using namespace a1mod::families;

TEST_CASE("constructor round trips: picard elements") {
    ClassificationResult r = classify(suspend(make_J(), 2));
    REQUIRE(r.tag == ClassificationResult::Picard);
    CHECK(r.picard == PicardIndex{0, 2, 1});

    for (int s : {-2, 0, 1})
        for (int t : {-1, 0, 3})
            for (int eps : {0, 1}) {
                ClassificationResult c = classify(picard_element({s, t, eps}));
                REQUIRE(c.tag == ClassificationResult::Picard);
                CHECK(c.picard == PicardIndex{s, t, eps});
            }
}

TEST_CASE("constructor round trips: fiR") {
    for (int i : {1, 2})
        for (int d : {-2, 0, 1}) {
            ClassificationResult c = classify(suspend(make_fiR(i), d + 1));
            REQUIRE(c.tag == ClassificationResult::FiR);
            CHECK(c.d == d);
            CHECK(c.i == i);
        }
}

TEST_CASE("constructor round trips: A orbit members") {
    for (int k : {1, 2})
        for (int eps : {0, 1})
            for (int t : {0, 1, 2, 3}) {
                ClassificationResult c = classify(suspend(make_orbit_element(k, eps, t).module, 1));
                REQUIRE(c.tag == ClassificationResult::AOrbit);
                CHECK(c.d == 1);
                CHECK(c.k == k);
                CHECK(c.eps == eps);
                CHECK(c.t == t);
            }
}

TEST_CASE("the s = 1 family lands in the k = 0 convention") {
    ClassificationResult c = classify(make_Z());
    REQUIRE(c.tag == ClassificationResult::AOrbit);
    CHECK(c.k == 0);
    CHECK(c.eps == 1);
    CHECK(c.t == 0);
    CHECK(c.d == -3);  // Z = S^{-3} A_{0,1}

    ClassificationResult zz = classify(tensor(make_Z(), make_Z()));
    CHECK(zz.tag == ClassificationResult::Rejected);
    CHECK(zz.reason.find("E(1)") != std::string::npos);
}

TEST_CASE("truncated projective space P^6_1 classifies as S^{-1} A_{2,0}") {
    ClassificationResult c = classify(make_trunc_projective(1, 6));
    REQUIRE(c.tag == ClassificationResult::AOrbit);
    CHECK(c.d == -1);
    CHECK(c.k == 2);
    CHECK(c.eps == 0);
    CHECK(c.t == 0);
}

TEST_CASE("free modules and non-indecomposables are rejected") {
    CHECK(classify(make_free_A1()).tag == ClassificationResult::Rejected);
    CHECK(classify(direct_sum(make_J(), make_Z())).tag == ClassificationResult::Rejected);
}

TEST_CASE("A_{k,0} is never stably isomorphic to a twist of A_{k,1}") {
    for (int k : {1, 2})
        for (int t = 0; t < 4; ++t) {
            IsoVerdict v = is_stably_iso(make_A(k, 0), make_orbit_element(k, 1, t).module);
            CHECK(v.kind == IsoVerdict::No);
        }
}

TEST_CASE("probe_bottom_embedding on normalized A_{k,eps}") {
    // k = 1 has its Q1 classes in degrees {0, 1}, violating the H^1(Q1) = 0
    // hypothesis (the exceptional s = 2 case), so probe k >= 2
    for (int k : {2, 3})
        for (int eps : {0, 1}) {
            ProbeReport rep = probe_bottom_embedding(suspend(make_A(k, eps), -3));
            CHECK(rep.hypotheses_met);
            CHECK(rep.any());
            // the question-mark complex embeds into the module itself
            CHECK(rep.found[0][2]);
        }
}

TEST_CASE("probe_bottom_embedding: unit into P0, shifted cosyzygy into itself") {
    ProbeReport p0 = probe_bottom_embedding(make_P0_trunc(16));
    CHECK(p0.hypotheses_met);
    CHECK(p0.found[0][0]);  // F embeds into P0

    ProbeReport qf = probe_bottom_embedding(picard_element({1, 3, 0}));
    CHECK(qf.hypotheses_met);
    CHECK(qf.found[0][3]);  // S^3 O^{-1} F embeds into itself

    ProbeReport unmet = probe_bottom_embedding(suspend(unit_module(), -5));
    CHECK_FALSE(unmet.hypotheses_met);
    CHECK(!unmet.hypothesis_note.empty());
}

TEST_CASE("tensor split prediction") {
    CHECK_FALSE(predict_tensor_split(1, 1, 0, 1));
    CHECK(predict_tensor_split(1, 2, 1, 1));
    CHECK(predict_tensor_split(2, 2, 0, 0));
    CHECK(predict_tensor_split(2, 1, 1, 0) == predict_tensor_split(1, 2, 0, 1));
}

TEST_CASE("tensor split verification for k = l = 1") {
    for (int eps : {0, 1})
        for (int delta : {0, 1}) {
            TensorSplitReport rep = verify_tensor_split(1, 1, eps, delta);
            INFO("eps=" << eps << " delta=" << delta);
            CHECK(rep.consistent);
            CHECK(rep.predicted == ((eps + delta) % 2 == 0));
        }
}

TEST_CASE("tensor split verification for (1,2,1,1)") {
    TensorSplitReport rep = verify_tensor_split(1, 2, 1, 1);
    CHECK(rep.predicted);
    CHECK(rep.consistent);
}
