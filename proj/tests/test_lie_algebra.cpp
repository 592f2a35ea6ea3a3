#include <catch2/catch_amalgamated.hpp>

#include "liecoh/lie_algebra.hpp"
#include "oracles.hpp"

using namespace liecoh;

TEST_CASE("parse_algebra reads the Maurer-Cartan notation") {
    LieAlgebra g = parse_algebra("[-23,0,0,0,0,0]");  // g3.1 + 3R
    CHECK(g.dim() == 6);
    CHECK(g.d_alpha(1) == Form::blade_form(6, blade_of({2, 3}), -1));
    for (int k = 2; k <= 6; ++k) CHECK(g.d_alpha(k).is_zero());

    LieAlgebra abelian = parse_algebra("[0,0,0,0,0,0]");
    for (int k = 1; k <= 6; ++k) CHECK(abelian.d_alpha(k).is_zero());

    LieAlgebra g613 = parse_algebra("[-23+1/2*16,-1/2*26,36,-46,0,0]");  // g6.13^{1/2,-1,0}
    CHECK(g613.d_alpha(1).coefficient(blade_of({1, 6})) == Rational(1, 2));
    CHECK(g613.d_alpha(1).coefficient(blade_of({2, 3})) == -1);
    CHECK(g613.d_alpha(3) == Form::blade_form(6, blade_of({3, 6})));

    // whitespace and decimals
    LieAlgebra ws = parse_algebra(" [ -23 + 0.5*16, -0.5*26, 36, -46, 0, 0 ] ");
    CHECK(ws.d_alpha(1) == g613.d_alpha(1));
}

TEST_CASE("parse_algebra reports positions and reasons") {
    CHECK_THROWS_AS(parse_algebra("23,0]"), ParseError);
    CHECK_THROWS_AS(parse_algebra("[32,0,0]"), NonAscendingPair);
    CHECK_THROWS_AS(parse_algebra("[0]"), DimensionOutOfRange);
    CHECK_THROWS_AS(parse_algebra("[0,0,0,0,0,0,0,0,0,0]"), DimensionOutOfRange);
    CHECK_THROWS_AS(parse_algebra("[17,0,0]"), ParseError);    // index exceeds dimension
    CHECK_THROWS_AS(parse_algebra("[1/0*12,0]"), ParseError);  // zero denominator
    CHECK_THROWS_AS(parse_algebra("[123,0,0]"), ParseError);   // three digits
    CHECK_THROWS_AS(parse_algebra("[12 34,0,0,0]"), ParseError);

    try {
        parse_algebra("[0,32,0]");
        FAIL("expected NonAscendingPair");
    } catch (const NonAscendingPair& e) {
        CHECK(e.pos == 3);
    }

    // d^2 != 0 surfaces as JacobiViolation unless deferred
    CHECK_THROWS_AS(parse_algebra("[-23,-24,0,0]"), JacobiViolation);
    CHECK_NOTHROW(parse_algebra("[-23,-24,0,0]", /*defer_jacobi=*/true));
}

TEST_CASE("printing is canonical and round-trips") {
    CHECK(to_text(parse_algebra("[-23+1/2*16,-1/2*26,36,-46,0,0]")) == "[1/2*16-23,-1/2*26,36,-46,0,0]");
    CHECK(to_text(parse_algebra("[0,0,0,0,0,0]")) == "[0,0,0,0,0,0]");
    const char* canon = "[1/2*16-23,-1/2*26,36,-46,0,0]";
    CHECK(to_text(parse_algebra(canon)) == canon);  // fixed point
}

TEST_CASE("ce_d is the antiderivation extending the dual differentials") {
    LieAlgebra abelian = parse_algebra("[0,0,0,0,0,0]");
    Form a = Form::blade_form(6, blade_of({1, 4})) + Form::blade_form(6, blade_of({2, 3, 5}));
    CHECK(ce_d(abelian, a).is_zero());

    // g3.4^{-1} = (-13, 23, 0): d(alpha_12) = (-a13)^a2 - a1^(a23) = 0
    LieAlgebra g34 = parse_algebra("[-13,23,0]");
    CHECK(ce_d(g34, Form::blade_form(3, blade_of({1, 2}))).is_zero());

    // g3.1: d(alpha_1) = -a23 and d^2 alpha_1 = 0
    LieAlgebra g31 = parse_algebra("[-23,0,0]");
    Form da1 = ce_d(g31, Form::blade_form(3, blade_of({1})));
    CHECK(da1 == Form::blade_form(3, blade_of({2, 3}), -1));
    CHECK(ce_d(g31, da1).is_zero());

    CHECK_THROWS_AS(ce_d(g31, Form::blade_form(4, blade_of({1}))), AmbientMismatch);
}

TEST_CASE("unimodularity is the vanishing of every adjoint trace") {
    CHECK(is_unimodular(parse_algebra("[0,0,0,0,0,0]")));
    CHECK(is_unimodular(parse_algebra("[-13,23,0]")));   // g3.4^{-1}
    CHECK_FALSE(is_unimodular(parse_algebra("[-12,0]")));  // tr ad_X2 = -1
}

TEST_CASE("derived series and solvable step") {
    LieAlgebra abelian = parse_algebra("[0,0,0,0,0,0]");
    CHECK(solvable_step(abelian) == 1);

    LieAlgebra g621 = parse_algebra("[-23,0,-26,-46,56,0]");  // g6.21^0
    CHECK(solvable_step(g621) == 2);

    LieAlgebra g613 = parse_algebra("[-23+1/2*16,-1/2*26,36,-46,0,0]");
    CHECK(solvable_step(g613) == 3);

    // brute-force oracle agreement
    CHECK(oracles::naive_solvable_step(abelian) == 1);
    CHECK(oracles::naive_solvable_step(g621) == 2);
    CHECK(oracles::naive_solvable_step(g613) == 3);

    SeriesReport r = derived_series(g613);
    for (std::size_t i = 1; i < r.terms.size(); ++i) CHECK(r.terms[i].dim() < r.terms[i - 1].dim());
}

TEST_CASE("lower central series and nilpotency") {
    LieAlgebra g31 = parse_algebra("[-23,0,0]");  // Heisenberg
    SeriesReport r = lower_central_series(g31);
    REQUIRE(r.step.has_value());
    CHECK(*r.step == 2);
    CHECK(is_nilpotent(g31));

    LieAlgebra g34 = parse_algebra("[-13,23,0]");
    SeriesReport rr = lower_central_series(g34);
    CHECK_FALSE(rr.step.has_value());
    CHECK_FALSE(is_nilpotent(g34));
    // stabilizes at span{X1, X2}
    CHECK(rr.terms.back() == Subspace::span_of({Vector{1, 0, 0}, Vector{0, 1, 0}}, 3));

    LieAlgebra abelian = parse_algebra("[0,0]");
    CHECK(*lower_central_series(abelian).step == 1);
}

TEST_CASE("non-solvable inputs are detected, not mangled") {
    // so(3): [X1,X2] = X3, [X2,X3] = X1, [X3,X1] = X2
    LieAlgebra so3 = parse_algebra("[-23,13,-12]");
    CHECK_FALSE(is_solvable(so3));
    CHECK_THROWS_AS(solvable_step(so3), NotSolvable);
    CHECK_THROWS_AS(nilradical(so3), NotSolvable);
    CHECK_FALSE(derived_series_report(so3).step.has_value());
}

TEST_CASE("nilradical by the associative-radical method") {
    LieAlgebra abelian = parse_algebra("[0,0,0,0,0,0]");
    CHECK(nilradical(abelian) == Subspace::full(6));

    // g3.4 + 3R: ad_X3 is invertible on span{X1,X2}; everything else is ad-nilpotent
    LieAlgebra g34_3r = parse_algebra("[-13,23,0,0,0,0]");
    Subspace n = nilradical(g34_3r);
    CHECK(n.dim() == 5);
    Subspace expected = Subspace::span_of(
        {Vector{1, 0, 0, 0, 0, 0}, Vector{0, 1, 0, 0, 0, 0}, Vector{0, 0, 0, 1, 0, 0},
         Vector{0, 0, 0, 0, 1, 0}, Vector{0, 0, 0, 0, 0, 1}},
        6);
    CHECK(n == expected);

    std::vector<Vector> rows;
    for (int i = 0; i < n.dim(); ++i) rows.push_back(n.basis_row(i));
    CHECK(oracles::naive_is_nilradical(g34_3r, rows));

    // g6.101^{a,b,c,e} at (-2,1,1,-2): codimension-2 nilradical
    LieAlgebra g6101 = parse_algebra("[-2*15+16,25-2*26,36,45,0,0]");
    Subspace n2 = nilradical(g6101);
    CHECK(g6101.dim() - n2.dim() == 2);
    rows.clear();
    for (int i = 0; i < n2.dim(); ++i) rows.push_back(n2.basis_row(i));
    CHECK(oracles::naive_is_nilradical(g6101, rows));
}

TEST_CASE("almost abelian detection") {
    // g6.1 at a generic constraint point: span{X1..X5} is a codim-1 abelian ideal
    LieAlgebra g61 = parse_algebra("[-16,4/5*26,3/5*36,-1/5*46,-1/5*56,0]");
    CHECK(is_almost_abelian(g61));

    LieAlgebra g613 = parse_algebra("[-23+1/2*16,-1/2*26,36,-46,0,0]");
    CHECK_FALSE(is_almost_abelian(g613));  // [X2,X3] != 0 inside the nilradical

    LieAlgebra g34_3r = parse_algebra("[-13,23,0,0,0,0]");
    CHECK(is_almost_abelian(g34_3r));

    CHECK_THROWS_AS(is_almost_abelian(parse_algebra("[-23,0,0]")), NilpotentInput);
}

TEST_CASE("bracket kernel dimension") {
    CHECK(bracket_kernel_dim(parse_algebra("[0,0,0,0,0,0]")) == 15);
    CHECK(bracket_kernel_dim(parse_algebra("[-23,0,0]")) == 2);
    CHECK(bracket_kernel_dim(parse_algebra("[-13,23,0]")) == 1);
}
