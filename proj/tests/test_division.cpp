#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "origon/critical.hpp"
#include "origon/division.hpp"
#include "origon/validator.hpp"
#include "reference_values.hpp"
#include "test_util.hpp"

using namespace origon;
using tu::almost_equal;
using tu::pt_close;

namespace {

DivisionSpec make_spec(std::vector<double> ratios, std::vector<double> phi_levels,
                       std::vector<int> inverted = {}) {
    DivisionSpec s;
    s.d = static_cast<int>(ratios.size());
    s.ratios = std::move(ratios);
    s.phi_l_levels = std::move(phi_levels);
    s.inverted_levels = std::move(inverted);
    return s;
}

struct DivCase {
    const char* name;
    GadgetParams params;
    DivisionSpec spec;
};

std::vector<DivCase> division_cases() {
    GadgetParams rem = tu::remark_params();
    GadgetParams cube = tu::cube_params();
    double crit = 2 * zeta_closed(rem, Side::Left);
    double f45 = 45 * DEG, f18 = 18 * DEG, f16 = 16 * DEG;
    return {
        {"rem18", rem, make_spec({1, 1, 1}, {f18, f18, f18})},
        {"remCrit", rem, make_spec({1, 1, 1}, {crit, crit, crit})},
        {"cube_d2", cube, make_spec({1, 1}, {f45, f45})},
        {"cube_d4", cube, make_spec({0.5, 1, 1.5, 1}, {f45, f45, f45, f45})},
        {"cube_d2_15", cube, make_spec({1, 5}, {f45, f45})},
        {"rem_d2_13", rem, make_spec({1, 3}, {f18, f18})},
        {"remCrit_d2_13", rem, make_spec({1, 3}, {crit, crit})},
        {"vphi", rem, make_spec({1, 1, 1}, {f18, f16, f16})},
        {"trivial_d1", rem, make_spec({5}, {f18})},
    };
}

bool constant_phi(const DivisionGeometry& dv) {
    for (double ph : dv.spec.phi_l_levels)
        if (std::abs(ph - dv.spec.phi_l_levels[0]) > 1e-15) return false;
    return true;
}

}  // namespace

TEST_CASE("tongue-edge identities across levels") {
    // Intent: the tongue ray from A^(n) meets E-line n at F'^(n) with
    // |A^(n)F'| = Dcoef*p_n, one gadget width past A^(n-1)'s own distance;
    // the tongue tip D^(n) exists exactly when the apex ladder stays short of
    // F', and then reflects across the E-line onto D'^(n-1) (onto C at n=1).
    for (const DivCase& c : division_cases()) {
        CAPTURE(c.name);
        DivisionGeometry dv = build_division(c.params, c.spec);
        for (int n = 1; n <= dv.d; ++n) {
            CAPTURE(n);
            double pn = dv.spec.ratios[n - 1];
            double at_n = dist(dv.a[n], dv.fp[n]);
            double at_prev = dist(dv.a[n - 1], dv.fp[n]);
            double tol = 1e-9 * dv.d;
            CHECK(almost_equal(at_n, dv.dcoef[n] * pn, tol));
            CHECK(almost_equal(at_prev, (dv.dcoef[n] - 1.0) * pn, tol));
            CHECK(almost_equal(at_n - dv.q[n], at_prev - dv.q[n - 1], tol));
            CHECK(almost_equal(dv.dcoef[n], division_dcoef(c.params, dv.phi[0][n]), 1e-12));
            std::optional<Point2> lower =
                n == 1 ? std::optional<Point2>(dv.a[0]) : dv.dprime[n - 1];
            if (dv.dd[n] && lower) {
                Point2 el = dv.eline(Side::Left, n), er = dv.eline(Side::Right, n);
                Point2 refl = reflect_point(*dv.dd[n], el, normalize(er - el));
                CHECK(dist(refl, *lower) < 1e-9);
            }
            if (n >= 2) {
                bool predicted = dv.q[n] < dv.dcoef[n] * pn;
                CHECK(predicted == dv.dd[n].has_value());
                CHECK(dv.dd[n].has_value() == dv.dprime[n - 1].has_value());
            }
        }
    }
}

TEST_CASE("ear existence and companion points") {
    // Intent: per side, G^(n) exists while the apex ladder stays short of the
    // side's own coefficient; otherwise the pleat ray overshoots to J^(n) on
    // the hem line. M and K land on the E-line and admit independent
    // constructions that must agree.
    for (const DivCase& c : division_cases()) {
        CAPTURE(c.name);
        DivisionGeometry dv = build_division(c.params, c.spec);
        for (Side s : kSides) {
            int i = static_cast<int>(s);
            for (int n = 2; n <= dv.d; ++n) {
                CAPTURE(side_name(s));
                CAPTURE(n);
                double pn = dv.spec.ratios[n - 1];
                Point2 el = dv.eline(Side::Left, n), er = dv.eline(Side::Right, n);
                double gcoef = division_gcoef(c.params, s, dv.phi[i][n]);
                bool predicted = dv.q[n] < gcoef * pn - 1e-9;
                bool off_e = dv.g[i][n] && dist(*dv.g[i][n], dv.e[i][n]) > 1e-9;
                bool any_g = dv.g[i][n].has_value();
                CHECK((predicted == off_e ||
                       (std::abs(dv.q[n] - gcoef * pn) < 1e-7 && any_g)));
                CHECK(any_g == dv.gprime[i][n - 1].has_value());
                CHECK(!(dv.g[i][n] && dv.j[i][n]));
                if (dv.j[i][n]) {
                    auto hit = intersect_lines(dv.b[i][n - 1], dv.jdir[i],
                                               dv.e[i][n], dv.armdir[i]);
                    REQUIRE(hit);
                    CHECK(dist(hit->point, *dv.j[i][n]) < 1e-9);
                }
                if (dv.m[i][n]) {
                    // M exists only when exactly one of D, G does; its pleat
                    // line also passes through the primed point one level down.
                    CHECK(dv.dd[n].has_value() != dv.g[i][n].has_value());
                    std::optional<Point2> src =
                        dv.dd[n] ? dv.dprime[n - 1] : dv.gprime[i][n - 1];
                    REQUIRE(src);
                    Point2 dray = reflect_dir(dv.jdir[i], dv.e[i][n] - dv.a[n - 1]);
                    auto hit = intersect_lines(*src, dray, el, er - el);
                    REQUIRE(hit);
                    CHECK(dist(hit->point, *dv.m[i][n]) < 1e-8);
                }
                if (dv.k[i][n]) {
                    CHECK(dv.dd[n].has_value());
                    // Concurrency: the parallel through D'^(n-1) along the
                    // unit gadget's C->E direction hits the same point.
                    const ImprovedGeometry& ug = dv.unit_gadget[n];
                    auto hit = intersect_lines(*dv.dprime[n - 1], ug.e[i] - ug.c,
                                               el, er - el);
                    REQUIRE(hit);
                    CHECK(dist(hit->point, *dv.k[i][n]) < 1e-9);
                    if (constant_phi(dv)) {
                        // With one opening angle everywhere, K also lies on the
                        // parallel through D^(n) to the level-1 D->E direction.
                        auto hit2 = intersect_lines(*dv.dd[n], dv.e[i][1] - *dv.dd[1],
                                                    el, er - el);
                        REQUIRE(hit2);
                        CHECK(dist(hit2->point, *dv.k[i][n]) < 1e-9);
                    }
                    bool crit = std::abs(dv.phi[i][n] / 2 - zeta_closed(c.params, s)) < 1e-12;
                    if (crit && dv.m[i][n]) {
                        CHECK(dist(*dv.k[i][n], *dv.m[i][n]) < 1e-9);
                        CHECK(dv.km_merged(s, n));
                    }
                }
            }
        }
    }
}

TEST_CASE("ratio normalization") {
    GadgetParams rem = tu::remark_params();
    DivisionGeometry raw = build_division(rem, make_spec({1, 3}, {18 * DEG, 18 * DEG}));
    DivisionGeometry pre = build_division(rem, make_spec({0.5, 1.5}, {18 * DEG, 18 * DEG}));
    DivisionGeometry scaled = build_division(rem, make_spec({2, 6}, {18 * DEG, 18 * DEG}));
    CHECK(almost_equal(raw.spec.ratios[0], 0.5, 1e-12));
    CHECK(almost_equal(raw.spec.ratios[1], 1.5, 1e-12));
    CHECK(almost_equal(raw.q[2], 2.0, 1e-12));
    for (const DivisionGeometry* other : {&pre, &scaled}) {
        CHECK(pt_close(raw.a[2], other->a[2], 1e-12));
        CHECK(pt_close(raw.fp[2], other->fp[2], 1e-12));
        CHECK(pt_close(raw.eline(Side::Left, 1), other->eline(Side::Left, 1), 1e-12));
    }
}

TEST_CASE("existence coefficient freezes") {
    GadgetParams rem = tu::remark_params();
    double crit = 2 * zeta_closed(rem, Side::Left);
    CHECK(almost_equal(division_dcoef(rem, 18 * DEG), refs::rem18_dcoef, 1e-12));
    CHECK(almost_equal(division_gcoef(rem, Side::Left, 18 * DEG),
                       refs::rem18_gcoef_l, 1e-12));
    CHECK(almost_equal(division_gcoef(rem, Side::Right, rem.gamma() - 18 * DEG),
                       refs::rem18_gcoef_r, 1e-12));
    CHECK(almost_equal(division_dcoef(rem, crit), refs::rem_crit_dcoef, 1e-12));
    // At the critical opening the left coefficient collapses to exactly 1:
    // the ear budget of a level equals one gadget width, so stacked equal
    // levels can never keep their left ears.
    CHECK(almost_equal(division_gcoef(rem, Side::Left, crit),
                       refs::rem_crit_gcoef_l, 1e-12));
    CHECK(almost_equal(division_gcoef(rem, Side::Right, rem.gamma() - crit),
                       refs::rem_crit_gcoef_r, 1e-12));
}

TEST_CASE("existence patterns of the worked cases") {
    GadgetParams rem = tu::remark_params();
    GadgetParams cube = tu::cube_params();
    double crit = 2 * zeta_closed(rem, Side::Left);
    SUBCASE("three equal levels at 18 deg") {
        DivisionGeometry dv =
            build_division(rem, make_spec({1, 1, 1}, {18 * DEG, 18 * DEG, 18 * DEG}));
        CHECK(dv.dd[1].has_value());
        CHECK(dv.dd[2].has_value());
        CHECK(!dv.dd[3].has_value());
        CHECK(dv.g[0][2].has_value());
        CHECK(dv.g[0][3].has_value());
        CHECK(!dv.g[1][2].has_value());
        CHECK(!dv.g[1][3].has_value());
        CHECK(dv.j[1][2].has_value());
        CHECK(dv.j[1][3].has_value());
        CHECK(dv.m[1][2].has_value());
        CHECK(!dv.m[0][2].has_value());
        CHECK(!dv.km_merged(Side::Right, 2));
    }
    SUBCASE("three equal levels at the critical opening") {
        DivisionGeometry dv = build_division(rem, make_spec({1, 1, 1}, {crit, crit, crit}));
        CHECK(!dv.dd[2].has_value());
        CHECK(!dv.dd[3].has_value());
        REQUIRE(dv.g[0][1].has_value());
        CHECK(dist(*dv.g[0][1], dv.e[0][1]) < 1e-7);
    }
    SUBCASE("lopsided cube split keeps everything on the wide level") {
        DivisionGeometry dv = build_division(cube, make_spec({1, 5}, {45 * DEG, 45 * DEG}));
        CHECK(dv.dd[2].has_value());
        CHECK(dv.g[0][2].has_value());
        CHECK(dv.g[1][2].has_value());
    }
    SUBCASE("critical lopsided split merges K and M on the critical side") {
        DivisionGeometry dv = build_division(rem, make_spec({1, 3}, {crit, crit}));
        CHECK(dv.dd[2].has_value());
        CHECK(dv.g[1][2].has_value());
        CHECK(!dv.g[0][2].has_value());
        REQUIRE(dv.k[0][2].has_value());
        REQUIRE(dv.m[0][2].has_value());
        CHECK(dist(*dv.k[0][2], *dv.m[0][2]) < 1e-9);
        CHECK(dv.km_merged(Side::Left, 2));
        CHECK(!dv.km_merged(Side::Right, 2));
        // Frozen from a run with raw (1, 3) ratios; normalization halves the frame.
        CHECK(pt_close(*dv.k[0][2], refs::rem_crit13_k_l2 * 0.5));
        CHECK(pt_close(*dv.k[1][2], refs::rem_crit13_k_r2 * 0.5));
    }
}

TEST_CASE("frozen coordinates for the 18 deg three-level division") {
    DivisionGeometry dv = build_division(
        tu::remark_params(), make_spec({1, 1, 1}, {18 * DEG, 18 * DEG, 18 * DEG}));
    CHECK(pt_close(dv.a[3], refs::rem18_a3));
    CHECK(pt_close(dv.b[0][3], refs::rem18_b_l3));
    CHECK(pt_close(dv.e[0][1], refs::rem18_e_l1));
    CHECK(pt_close(dv.e[1][1], refs::rem18_e_r1));
    CHECK(pt_close(dv.e[0][2], refs::rem18_e_l2));
    CHECK(pt_close(dv.fp[1], refs::rem18_fp1));
    CHECK(pt_close(dv.fp[2], refs::rem18_fp2));
    REQUIRE(dv.dd[1]);
    REQUIRE(dv.dd[2]);
    REQUIRE(dv.dprime[1]);
    CHECK(pt_close(*dv.dd[1], refs::rem18_d1));
    CHECK(pt_close(*dv.dd[2], refs::rem18_d2));
    CHECK(pt_close(*dv.dprime[1], refs::rem18_dp1));
    REQUIRE(dv.g[0][1]);
    REQUIRE(dv.g[0][2]);
    REQUIRE(dv.gprime[0][1]);
    CHECK(pt_close(*dv.g[0][1], refs::rem18_g_l1));
    CHECK(pt_close(*dv.g[0][2], refs::rem18_g_l2));
    CHECK(pt_close(*dv.gprime[0][1], refs::rem18_gp_l1));
    REQUIRE(dv.j[1][2]);
    REQUIRE(dv.m[1][2]);
    REQUIRE(dv.k[0][2]);
    REQUIRE(dv.k[1][2]);
    CHECK(pt_close(*dv.j[1][2], refs::rem18_j_r2));
    CHECK(pt_close(*dv.m[1][2], refs::rem18_m_r2));
    CHECK(pt_close(*dv.k[0][2], refs::rem18_k_l2));
    CHECK(pt_close(*dv.k[1][2], refs::rem18_k_r2));
}

TEST_CASE("crease patterns fold flat") {
    for (const DivCase& c : division_cases()) {
        CAPTURE(c.name);
        DivisionGeometry dv = build_division(c.params, c.spec);
        CreasePattern cp = division_cp(dv);
        CHECK(cp.construction == "division");
        FoldabilityReport rep = kawasaki_check(cp);
        CHECK(rep.pass);
        CHECK(rep.crossings == 0);
    }
}

TEST_CASE("crease pattern labels and metadata") {
    DivisionGeometry dv = build_division(
        tu::remark_params(), make_spec({1, 1, 1}, {18 * DEG, 18 * DEG, 18 * DEG}));
    CreasePattern cp = division_cp(dv);
    CHECK(cp.parameters.at("d") == 3.0);
    CHECK(almost_equal(cp.parameters.at("p_2"), 1.0, 1e-12));
    CHECK(almost_equal(cp.parameters.at("phi_l_3"), 18 * DEG, 1e-12));
    CHECK(cp.parameters.at("inverted_2") == 0.0);
    for (const char* lbl : {"A(2)", "A(3)", "B_L(3)", "E_L(1)", "F'(2)", "D(1)", "D'(1)",
                            "G_L(2)", "G'_L(1)", "J_R(2)", "K_L(2)", "M_R(2)"}) {
        CAPTURE(lbl);
        CHECK(tu::vertex_with_label(cp, lbl) >= 0);
    }
    // Upper tongue-edge creases are mountains by default, E-line pieces valleys.
    CHECK(tu::kind_along(cp, dv.a[1], *dv.gprime[0][1]) == EdgeKind::Mountain);
    CHECK(tu::kind_along(cp, dv.eline(Side::Left, 2), dv.eline(Side::Right, 2)) ==
          EdgeKind::Valley);
}

TEST_CASE("level ordering violations") {
    GadgetParams rem = tu::remark_params();
    // Dropping from 18 to 10 degrees between levels 1 and 2 undercuts the bound.
    double bound2 =
        2 * std::atan(1.0 / (1.0 / std::tan(9 * DEG) + 2.0 / std::tan(rem.gamma() / 2)));
    CHECK(bound2 > 10 * DEG);
    CHECK(bound2 < 16 * DEG);
    DivisionGeometry dv =
        build_division(rem, make_spec({1, 1, 1}, {18 * DEG, 10 * DEG, 10 * DEG}));
    try {
        division_cp(dv);
        FAIL("expected a domain_error for the ordering violation");
    } catch (const std::domain_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("ordering inequality") != std::string::npos);
        CHECK(msg.find("level 2") != std::string::npos);
    }
}

TEST_CASE("inverted levels") {
    GadgetParams rem = tu::remark_params();
    DivisionSpec bad = make_spec({1.6, 0.4, 1}, {18 * DEG, 10 * DEG, 10 * DEG});
    CHECK_THROWS_AS(division_cp(build_division(rem, bad)), std::domain_error);
    // Inverting level 2 flips its creases and lifts the inequality there.
    DivisionSpec inv = make_spec({1.6, 0.4, 1}, {18 * DEG, 10 * DEG, 10 * DEG}, {2});
    DivisionGeometry dv = build_division(rem, inv);
    CHECK(!dv.dd[2].has_value());
    CHECK(dv.dd[3].has_value());
    CreasePattern cp = division_cp(dv);
    CHECK(cp.parameters.at("inverted_2") == 1.0);
    FoldabilityReport rep = kawasaki_check(cp);
    CHECK(rep.pass);
    CHECK(rep.crossings == 0);
    // Inverted level 2: E-line pieces mountain, upper tongue-edge creases
    // valley; non-inverted level 3 keeps the default orientation.
    CHECK(tu::kind_along(cp, dv.eline(Side::Left, 2), dv.eline(Side::Right, 2)) ==
          EdgeKind::Mountain);
    CHECK(tu::kind_along(cp, dv.eline(Side::Left, 3), dv.eline(Side::Right, 3)) ==
          EdgeKind::Valley);
    REQUIRE(dv.gprime[0][1]);
    CHECK(tu::kind_along(cp, dv.a[1], *dv.gprime[0][1]) == EdgeKind::Valley);
    // A level whose tongue tip exists cannot be inverted.
    DivisionSpec with_d = make_spec({1, 1, 1}, {18 * DEG, 18 * DEG, 18 * DEG}, {2});
    CHECK_THROWS_AS(division_cp(build_division(rem, with_d)), std::domain_error);
}

TEST_CASE("input validation") {
    GadgetParams rem = tu::remark_params();
    CHECK_THROWS_AS(build_division(rem, make_spec({}, {})), std::domain_error);
    CHECK_THROWS_AS(build_division(rem, make_spec({1, 1}, {18 * DEG})), std::domain_error);
    CHECK_THROWS_AS(build_division(rem, make_spec({1, -1}, {18 * DEG, 18 * DEG})),
                    std::domain_error);
    CHECK_THROWS_AS(build_division(rem, make_spec({1, 1}, {18 * DEG, 120 * DEG})),
                    std::domain_error);
    CHECK_THROWS_AS(build_division(rem, make_spec({1, 1}, {50 * DEG, 18 * DEG})),
                    std::domain_error);
    CHECK_THROWS_AS(build_division(rem, make_spec({1, 1}, {18 * DEG, 18 * DEG}, {1})),
                    std::domain_error);
    CHECK_THROWS_AS(build_division(rem, make_spec({1, 1}, {18 * DEG, 18 * DEG}, {3})),
                    std::domain_error);
    CHECK_THROWS_AS(build_division(tu::delta_params(),
                                   make_spec({1, 1}, {40 * DEG, 40 * DEG})),
                    std::domain_error);
}
