// Acceptance suite: one pass/fail line per criterion.  Exit code is zero
// exactly when every checked clause passes.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "a1mod/classify.hpp"
#include "a1mod/ext.hpp"
#include "a1mod/families.hpp"
#include "a1mod/verify.hpp"

using namespace a1mod;
using namespace a1mod::families;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("criterion %-38s %s%s%s\n", name.c_str(), pass ? "PASS" : "FAIL",
                detail.empty() ? "" : "  -- ", detail.c_str());
    if (!pass) ++failures;
}

bool suite_clause(const verify::SuiteResult& r, std::string* detail) {
    *detail = std::to_string(r.passed()) + "/" + std::to_string(r.cases.size()) + " cases";
    if (!r.all_pass()) {
        for (auto& c : r.cases)
            if (!c.pass) {
                *detail += "; first failure: " + c.name;
                break;
            }
    }
    return r.all_pass();
}

std::set<std::pair<int, int>> dots(const ExtChart& ch, int eps) {
    std::set<std::pair<int, int>> out;
    for (auto& [k, d] : ch.dims)
        if (k.eps == eps && d > 0) out.insert({k.t - k.s, k.s});
    return out;
}

// Expected F-chart dots in 0 <= x <= 8, 0 <= s <= 6 (towers over 1, a, b).
std::set<std::pair<int, int>> f_chart_expected() {
    std::set<std::pair<int, int>> e;
    for (int s = 0; s <= 6; ++s) e.insert({0, s});
    e.insert({1, 1});
    e.insert({2, 2});
    for (int s = 3; s <= 6; ++s) e.insert({4, s});
    for (int s = 4; s <= 6; ++s) e.insert({8, s});
    return e;
}

// Expected eps = 1 dots (target J) in the same window.
std::set<std::pair<int, int>> j_chart_expected() {
    std::set<std::pair<int, int>> e;
    for (int s = 1; s <= 6; ++s) e.insert({0, s});   // kappa tower
    for (int s = 2; s <= 6; ++s) e.insert({4, s});   // alpha tower
    e.insert({5, 3});
    e.insert({6, 4});
    e.insert({8, 5});
    e.insert({8, 6});                                // kappa b tower
    return e;
}

}  // namespace

int main() {
    std::printf("acceptance suite (fixed seed %llu)\n",
                static_cast<unsigned long long>(verify::Params{}.seed));

    // 1. Ext charts of F and J against the reference charts.
    {
        auto t0 = std::chrono::steady_clock::now();
        ChartBuilder b(unit_module(), 6, -3, 8);
        ExtChart full = b.chart(0);
        bool f_ok = dots(full, 0) == f_chart_expected();
        std::set<std::pair<int, int>> jd = dots(full, 1);
        jd.erase({-2, 0});  // the socle dot, checked separately below
        bool j_first = jd == j_chart_expected();
        bool j_socle = full.dim(0, -2, 1) == 1;
        // displayed negative block via stext
        ExtChart st = stext_dims(unit_module(), -5, -1, -9, -1);
        std::set<std::pair<int, int>> neg_exp = {{-5, -1}, {-5, -2}, {-5, -3}, {-5, -4}, {-5, -5},
                                                 {-6, -2}, {-7, -3}, {-9, -4}, {-9, -5}};
        bool f_neg = dots(st, 0) == neg_exp;
        // rotation of the J first quadrant about (-2.5,-.5), within the
        // window: the kappa and alpha towers plus the (-3,-1) partner of the
        // socle dot ((-10,-4) and (-11,-5) fall outside x >= -9)
        std::set<std::pair<int, int>> jneg_exp = {{-5, -2}, {-5, -3}, {-5, -4}, {-5, -5},
                                                  {-9, -3}, {-9, -4}, {-9, -5}, {-3, -1}};
        bool j_neg = dots(st, 1) == jneg_exp;
        ExtChart socle_blk = stext_dims(unit_module(), -1, 0, -4, -1);
        bool j_pair = socle_blk.dim(-1, -4, 1) == 1;  // (-3,-1)
        double dt = seconds_since(t0);
        report("1 ext charts F and J", f_ok && j_first && j_socle && f_neg && j_neg && j_pair && dt < 10.0,
               "runtime " + std::to_string(dt).substr(0, 5) + "s");
    }

    // 2. Ext chart of Z: dots per b-period; h0-action clause as stated.
    {
        ExtChart ch = ext_dims(make_Z(), 6, 0, 8);
        std::set<std::pair<int, int>> expect = {{0, 0}, {1, 1}, {2, 1}, {2, 2},
                                                {3, 2}, {4, 3}, {8, 4}};
        bool dots_ok = dots(ch, 0) == expect;
        report("2a ext(Z) dots per b-period", dots_ok);
        ChartBuilder b(make_Z(), 6, 0, 8);
        bool h0_zero = true;
        std::string where;
        for (auto& [x, s] : expect) {
            if (!b.op_matrix(ChartBuilder::H0, {s, x + s, 0}).is_zero()) {
                h0_zero = false;
                where = "(x=" + std::to_string(x) + ",s=" + std::to_string(s) + ")";
            }
        }
        report("2b ext(Z) h0-action zero everywhere", h0_zero,
               h0_zero ? ""
                       : "h0 is nonzero at " + where +
                             ": h0.u = h1^2 on the Adams (2,1) class, forced by the minimal "
                             "resolution and by pi_2(ko ^ S/2) = Z/4; expected red, see "
                             "README (known red criterion)");
    }

    // 3. Charts of A_{2,1} and A_{2,0} cell-for-cell in the displayed windows.
    {
        ChartBuilder b21(make_A(2, 1), 5, -3, 3);
        std::set<std::pair<int, int>> e21 = {{-3, 2}, {-2, 3}, {-1, 4}, {-1, 1}, {-1, 2},
                                             {-1, 3}, {0, 2},  {1, 3},  {3, 4},  {3, 5}};
        bool ok21 = dots(b21.chart(1), 0) == e21;
        ChartBuilder b20(make_A(2, 0), 6, -1, 3);
        std::set<std::pair<int, int>> e20 = {{-1, 1}, {-1, 2}, {-1, 3}, {0, 2}, {1, 3},
                                             {1, 4},  {2, 5},  {3, 4},  {3, 5}, {3, 6}};
        bool ok20 = dots(b20.chart(1), 0) == e20;
        report("3 stext charts A21 and A20", ok21 && ok20);
    }

    // 4. calculate_stext_Ake relation suite, 1 <= k <= 4, both eps.
    {
        auto t0 = std::chrono::steady_clock::now();
        verify::Params p;
        p.kmax = 4;
        std::string detail;
        bool ok = suite_clause(verify::suite_calculate_stext_Ake(p), &detail);
        double dt = seconds_since(t0);
        report("4 calculate_stext_Ake relations", ok && dt < 60.0,
               detail + ", runtime " + std::to_string(dt).substr(0, 5) + "s");
    }

    // 5. tensor_decomp, all 24 cases.
    {
        verify::Params p;
        std::string detail;
        bool ok = suite_clause(verify::suite_tensor_decomp(p), &detail);
        report("5 tensor_decomp 24 cases", ok, detail);
    }

    // 6. identify_A_trunc for 1 <= m < n <= 8.
    {
        verify::Params p;
        p.nmax = 8;
        std::string detail;
        bool ok = suite_clause(verify::suite_identify_A_trunc(p), &detail);
        report("6 identify_A_trunc", ok, detail);
    }

    // 7. identify_BG for 1 <= n <= 16.
    {
        verify::Params p;
        p.nmax = 16;
        p.weight_max = 32;
        std::string detail;
        bool ok = suite_clause(verify::suite_identify_BG(p), &detail);
        report("7 identify_BG n <= 16", ok, detail);
    }

    // 8. wfour_picard_gp (i <= 3) and Margolis profiles for weights <= 32.
    {
        verify::Params p;
        p.weight_max = 32;
        std::string detail;
        bool ok = suite_clause(verify::suite_wfour_picard_gp(p), &detail);
        report("8 wfour_picard_gp and profiles", ok, detail);
    }

    // 9. duality_A and orbit fixed-point counts (0,2,0,2).
    {
        verify::Params p;
        p.kmax = 4;
        std::string d1, d2;
        bool ok1 = suite_clause(verify::suite_duality_A(p), &d1);
        bool ok2 = suite_clause(verify::suite_orbit_duality(p), &d2);
        report("9 duality_A and orbit counts", ok1 && ok2, d1 + "; " + d2);
    }

    // 10. unicity_st_map_A.
    {
        verify::Params p;
        std::string detail;
        bool ok = suite_clause(verify::suite_unicity_st_map_A(p), &detail);
        report("10 unicity_st_map_A", ok, detail);
    }

    // 11. Picard/periodicity property suite + Margolis shift law on 50
    // corpus modules.
    {
        verify::Params p;
        std::string detail;
        bool ok = suite_clause(verify::suite_picard_periodicity(p), &detail);
        auto corpus = verify::module_corpus(200, p.seed);
        int checked = 0;
        bool shift_ok = true;
        for (auto& m : corpus) {
            if (checked >= 50) break;
            if (m.total_dim() > 24) continue;
            ++checked;
            if (margolis(omega(m, 1)) != margolis(m).shifted(1, 3)) shift_ok = false;
        }
        report("11 picard periodicity + shift law", ok && shift_ok && checked >= 50,
               detail + "; shift law on " + std::to_string(checked) + " modules");
    }

    // 12. Classification round trips (k <= 4, |s|,|t| <= 4) and Z (x) Z.
    {
        verify::Params p;
        p.kmax = 4;
        std::string detail;
        bool ok = suite_clause(verify::suite_classification(p), &detail);
        report("12 classification round trips", ok, detail);
    }

    // 13. Toda suite: exactness through n <= 8 and the re-indexing iso.
    {
        verify::Params p;
        p.nmax = 8;
        std::string detail;
        bool ok = suite_clause(verify::suite_toda(p), &detail);
        report("13 toda exactness + reindexing", ok, detail);
    }

    // 14. Property-based invariants on the seeded corpus of >= 200 modules.
    {
        verify::Params p;
        std::string detail;
        bool ok = suite_clause(verify::suite_properties(p), &detail);
        report("14 property corpus", ok, detail);
    }

    std::printf("%s (%d clause%s failed)\n", failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT",
                failures, failures == 1 ? "" : "s");
    return failures == 0 ? 0 : 1;
}
