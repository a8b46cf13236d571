#include "tanaka/prolong.hpp"

#include <stdexcept>

#include "doctest.h"
#include "tanaka/chevalley.hpp"
#include "tanaka/extension.hpp"
#include "tanaka/graded_cr.hpp"

using namespace tanaka;

namespace {

RootSystem a1() { return root_system_from_cartan({{2}}); }

/// Heisenberg algebra on x, y, z = [x, y], degrees (-1, -1, -2); when
/// with_j is set, J rotates the degree -1 plane: Jx = y, Jy = -x (and then
/// [Jx, Jy] = [y, -x] = z = [x, y]).
LieTable heisenberg(bool with_j) {
    LieTable t;
    t.field = "Q";
    t.basis = {"x", "y", "z"};
    t.grading = std::vector<long>{-1, -1, -2};
    t.set_bracket(0, 1, {{2, Scalar(1)}});
    if (with_j) {
        Mat j(3, 3);
        j(1, 0) = Scalar(1);
        j(0, 1) = Scalar(-1);
        t.J = j;
    }
    return t;
}

/// Abelian algebra concentrated in degree -1.
LieTable abelian(long n) {
    LieTable t;
    t.field = "Q";
    for (long i = 0; i < n; ++i) t.basis.push_back("t" + std::to_string(i + 1));
    t.grading = std::vector<long>(n, -1);
    return t;
}

long total_dim(const Prolongation& g) { return g.table.dim(); }

}  // namespace

TEST_CASE("assemble_m validation") {
    LieTable bare;
    bare.field = "Q";
    bare.basis = {"x"};
    CHECK_THROWS_WITH_AS(assemble_m(bare), doctest::Contains("no grading"), std::invalid_argument);

    LieTable pos;
    pos.field = "Q";
    pos.basis = {"x"};
    pos.grading = std::vector<long>{1};
    CHECK_THROWS_WITH_AS(assemble_m(pos), doctest::Contains("no negative part"),
                         std::invalid_argument);

    // A degree -3 direction that no bracket of the degree -1 layer reaches.
    LieTable gap;
    gap.field = "Q";
    gap.basis = {"x", "w"};
    gap.grading = std::vector<long>{-1, -3};
    CHECK_THROWS_WITH_AS(assemble_m(gap), doctest::Contains("not fundamental"),
                         std::invalid_argument);

    // J entries must pair two degree -1 directions.
    LieTable off = heisenberg(false);
    Mat j(3, 3);
    j(2, 0) = Scalar(1);
    off.J = j;
    CHECK_THROWS_WITH_AS(assemble_m(off), doctest::Contains("off the degree -1 layer"),
                         std::invalid_argument);

    // J^2 = -Id fails for a reflection.
    LieTable refl = heisenberg(false);
    Mat jr(3, 3);
    jr(1, 0) = Scalar(1);
    jr(0, 1) = Scalar(1);
    refl.J = jr;
    CHECK_THROWS_WITH_AS(assemble_m(refl), doctest::Contains("square to -Id"),
                         std::invalid_argument);

    // J^2 = -Id holds but J swaps the two symplectic planes, whose areas
    // have opposite signs: [Jx, Jy] = [p, q] = -z while [x, y] = +z.
    LieTable five;
    five.field = "Q";
    five.basis = {"x", "y", "p", "q", "z"};
    five.grading = std::vector<long>{-1, -1, -1, -1, -2};
    five.set_bracket(0, 1, {{4, Scalar(1)}});   // [x, y] = z
    five.set_bracket(2, 3, {{4, Scalar(-1)}});  // [p, q] = -z
    Mat j5(5, 5);
    j5(2, 0) = Scalar(1);
    j5(0, 2) = Scalar(-1);  // Jx = p, Jp = -x
    j5(3, 1) = Scalar(1);
    j5(1, 3) = Scalar(-1);  // Jy = q, Jq = -y
    five.J = j5;
    CHECK_THROWS_WITH_AS(assemble_m(five), doctest::Contains("[JX, JY] = [X, Y]"),
                         std::invalid_argument);

    // Restriction drops the nonnegative part and keeps the rest verbatim.
    // ([e, z] = z is forced by Jacobi from [e, x] = x and [x, y] = z.)
    LieTable padded;
    padded.field = "Q";
    padded.basis = {"e", "x", "y", "z"};
    padded.grading = std::vector<long>{0, -1, -1, -2};
    padded.set_bracket(1, 2, {{3, Scalar(1)}});
    padded.set_bracket(0, 1, {{1, Scalar(1)}});
    padded.set_bracket(0, 3, {{3, Scalar(1)}});
    GradedNilpotent m = assemble_m(padded);
    CHECK(m.table.dim() == 3);
    CHECK(m.mu == 2);
    CHECK(m.source_index == std::vector<long>{1, 2, 3});
    CHECK(m.table.basis == std::vector<std::string>{"x", "y", "z"});
    CHECK(m.table.bracket(0, 1) == SVec{{2, Scalar(1)}});
    CHECK_FALSE(m.J.has_value());
}

// [DERIVED] Degree 0 derivations of the Heisenberg algebra: any A in gl(2)
// on span(x, y) extends uniquely by z -> tr(A) z (checked on the only pair:
// A[x,y] = [Ax,y] + [x,Ay] = tr(A) z), so the space is 4-dimensional.
// Requiring AJ = JA cuts gl(2) to the invertible-complex-scalar plane
// a*Id + b*J, dimension 2.
TEST_CASE("degree zero derivations of the Heisenberg algebra") {
    GradedNilpotent plain = assemble_m(heisenberg(false));
    CHECK(degree_zero_derivations(plain).size() == 4);

    GradedNilpotent cr = assemble_m(heisenberg(true));
    const auto ders = degree_zero_derivations(cr);
    REQUIRE(ders.size() == 2);
    // Every solution must commute with J on the degree -1 block and scale z
    // by its degree -1 trace.
    for (const Mat& d : ders) {
        CHECK(d(0, 0) == d(1, 1));   // a*Id + b*J shape
        CHECK(d(0, 1) == Scalar() - d(1, 0));
        CHECK(d(2, 2) == d(0, 0) + d(1, 1));
        CHECK(d(2, 0).is_zero());  // degree 0: block diagonal
        CHECK(d(0, 2).is_zero());
    }
}

// [DERIVED] Without J the Heisenberg algebra prolongs to the full contact
// algebra, which is infinite-dimensional: identifying m with polynomials via
// z -> 1, x, y of weights 2, 1, 1, the layer of degree p consists of the
// monomials x^a y^b z^c with a + b + 2c = p + 2, of dimension
// (p+3) + (p+1) + (p-1) + ... down to 1 or 2.  Degrees 0..3 give 4, 6, 9, 12
// and the chain never dies, so any cap truncates.
TEST_CASE("contact prolongation grows forever") {
    GradedNilpotent m = assemble_m(heisenberg(false));
    Prolongation g = tanaka_prolongation(m, 3);
    CHECK(g.truncated);
    CHECK(g.layer_dim == std::map<long, long>{{-2, 1}, {-1, 2}, {0, 4}, {1, 6}, {2, 9}, {3, 12}});
    CHECK(g.mu == 2);
    CHECK(g.m_dim == 3);
}

// [DERIVED] With J the prolongation is finite.  Layer 1 by hand: u is fixed
// by u(x) = a_x Id + b_x J and u(y) = a_y Id + b_y J in layer 0, and
// u(z) = [u(x), y] + [x, u(y)] = (-b_x - a_y) x + (a_x - b_y) y.  The pair
// (x, z) forces 2 a_x + (a_x - b_y) = 0, the pair (y, z) forces
// -b_x - a_y = 2 a_y, leaving the 2 parameters (a_x, a_y).  Layer 2 is
// 1-dimensional and layer 3 empty, so the algebra closes at
// 3 + 2 + 2 + 1 = 8 with layers (1, 2, 2, 2, 1); its Killing form is
// nondegenerate (radical zero).
TEST_CASE("CR Heisenberg prolongs to an eight-dimensional simple algebra") {
    GradedNilpotent m = assemble_m(heisenberg(true));
    Prolongation g = tanaka_prolongation(m);
    CHECK_FALSE(g.truncated);
    CHECK(total_dim(g) == 8);
    CHECK(g.layer_dim == std::map<long, long>{{-2, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 1}});
    CHECK(g.table.basis[3] == "d0.1");
    CHECK(g.table.basis[7] == "d2.1");
    CHECK_FALSE(jacobi_witness(g.table).has_value());
    CHECK_FALSE(grading_witness(g.table).has_value());
    REQUIRE(g.table.J.has_value());
    CHECK((*g.table.J)(1, 0) == Scalar(1));

    StructureSummary s = classify_structure(g.table);
    CHECK(s.classification == "semisimple");
    CHECK(s.radical_dim == 0);

    // The grading derivation (p*Id on each layer) sits in layer 0: ad of its
    // solved representative must scale every basis direction by its degree.
    Mat minus_id(2, 2);
    minus_id(0, 0) = Scalar(-1);
    minus_id(1, 1) = Scalar(-1);
    const auto e = degree_zero_with_action(g, minus_id);
    REQUIRE(e.has_value());
    CHECK(integer_spectrum(g.table, *e) ==
          std::map<long, long>{{-2, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 1}});

    // diag(1, 0) is not complex-linear, so no layer 0 element realizes it,
    // and the projection solve for the same flag pattern fails at the same
    // step.
    Mat split(2, 2);
    split(0, 0) = Scalar(1);
    CHECK_FALSE(degree_zero_with_action(g, split).has_value());
    CHECK_THROWS_WITH_AS(projection_element(g, {true, false, false}),
                         doctest::Contains("not a derivation"), std::runtime_error);
}

// [DERIVED] In the J-free prolongation, layer 0 is all of gl(2), so the flag
// pattern diag(1, 0) on (x, y) does solve -- as the derivation scaling z by
// tr = 1.  The projection verification then rejects it because the flag asks
// for z -> 0.
TEST_CASE("projection_element rejects derivations that move unflagged vectors") {
    GradedNilpotent m = assemble_m(heisenberg(false));
    Prolongation g = tanaka_prolongation(m, 1);
    CHECK_THROWS_WITH_AS(projection_element(g, {true, false, false}),
                         doctest::Contains("acts wrongly"), std::runtime_error);
}

// [DERIVED] The abelian algebra in degree -1 prolongs to polynomial vector
// fields: layer p holds the fields with coefficients of degree p+1, of
// dimension n * C(n + p, p + 1).  For n = 1 every layer is a line (t^{p+1} d/dt)
// and for n = 2 the layers grow as 2, 4, 6, 8, ...
TEST_CASE("abelian prolongations are polynomial vector fields") {
    GradedNilpotent line = assemble_m(abelian(1));
    Prolongation g1 = tanaka_prolongation(line);  // default cap mu + 4 = 5
    CHECK(g1.truncated);
    CHECK(g1.layer_dim ==
          std::map<long, long>{{-1, 1}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}});

    GradedNilpotent plane = assemble_m(abelian(2));
    Prolongation g2 = tanaka_prolongation(plane, 1);
    CHECK(g2.truncated);
    CHECK(g2.layer_dim == std::map<long, long>{{-1, 2}, {0, 4}, {1, 6}});
}

// [DERIVED] ad(x) on the Heisenberg algebra is nilpotent of rank 1, so its
// kernel scan collects only 2 of 3 dimensions at eigenvalue 0.
TEST_CASE("integer_spectrum rejects non-semisimple elements") {
    LieTable t = heisenberg(false);
    Vec x(3, Scalar());
    x[0] = Scalar(1);
    CHECK_THROWS_WITH_AS(integer_spectrum(t, x), doctest::Contains("not semisimple"),
                         std::runtime_error);
}

// [DERIVED] The extension of the rank-one algebra by its 2-dimensional
// module at shift -3/2 (k = -1/2) realifies to the 6-dimensional CR algebra
// with layers (2, 4): one complex Heisenberg relation.  Its prolongation is
// the full complex special linear algebra in rank 3, real dimension 16 with
// layers (2, 4, 4, 4, 2): the negative part, a 4-dimensional layer 0 (the
// complex span of the grading element and the complex structure element
// glued to pi and i*pi), and the transposed copy on top.  The projection
// element acts by +1 on the module copy, -1 on the prolonged dual copy and
// 0 on the embedded rank-one algebra and itself: spectrum 4 + 8 + 4.
TEST_CASE("module chain of length two closes to a semisimple algebra") {
    ChevalleyBasis cb = chevalley(a1());
    CRAlgebra alg = attach_cr(a1(), {1}, {1});
    Extension ext = build_extension(cb, alg, {{{1}, Rational(-3) / 2, Rational(-1) / 2}});
    ExtensionAnalysis an = analyze_extension(ext);

    CHECK_FALSE(an.prolongation.truncated);
    CHECK(an.prolongation.table.dim() == 16);
    CHECK(an.prolongation.layer_dim ==
          std::map<long, long>{{-2, 2}, {-1, 4}, {0, 4}, {1, 4}, {2, 2}});
    CHECK_FALSE(jacobi_witness(an.prolongation.table).has_value());
    CHECK_FALSE(grading_witness(an.prolongation.table).has_value());

    CHECK(an.structure.classification == "semisimple");
    CHECK(an.structure.radical_dim == 0);
    CHECK(an.structure.semisimple_ideal_dim == 16);

    CHECK(an.pi_spectrum == std::map<long, long>{{-1, 4}, {0, 8}, {1, 4}});
    CHECK(an.b1_equals_l);
    REQUIRE(an.j_element.has_value());
    CHECK(an.k_values == std::vector<Rational>{Rational(-1) / 2});

    // The embedding is faithful and maps the s part onto a 6-dimensional
    // subalgebra meeting the l image only in zero.
    CHECK(an.s_image.size() == 6);
    CHECK(an.l_image.size() == 4);
    CHECK(subspace_intersect(an.s_image, an.l_image, 16).empty());

    // ad(j_element) realizes J on the degree -1 layer of m.
    const Mat ad = an.prolongation.table.ad(*an.j_element);
    const Mat& j = *an.prolongation.table.J;
    for (long c = 0; c < an.prolongation.m_dim; ++c) {
        if ((*an.prolongation.table.grading)[c] != -1) continue;
        for (long r = 0; r < an.prolongation.table.dim(); ++r) CHECK(ad(r, c) == j(r, c));
    }
}

// [DERIVED] The chain one step longer (3-dimensional module at shift -2,
// k = 0) is the second coincidence with a Borel pattern.  Write the complex
// basis as f; v2, v0, v-2 with degrees -1; -1, -2, -3, brackets
// [f, v2] = c v0, [f, v0] = c' v-2 (c, c' nonzero) and the module abelian.
// Mapping f, v2, v0, v-2 to root vectors for -a1, -a2, -a1-a2, -2a1-a2 of
// the rank-2 symplectic algebra matches every bracket (the only nonzero
// negative-root sums are -a1-a2 = -a1 + -a2 and -2a1-a2 = -a1 + (-a1-a2)),
// so m is its full lower triangular part and the prolongation closes to the
// realified 10-complex-dimensional symplectic algebra: total 20 with layers
// (2,2,4 | 4 | 4,2,2) and zero radical.
//
// Layer 1 by hand (u(f) = D(a1,b1), u(v2) = D(a3,b3) with D(a,b) the complex
// diagonal scaling f by a and v2 by b, the only layer 0 shape): the pairs
// (v2, v0) and (v2, v-2) both reduce to b3 = -2*a3, and (f, v-2) forces
// b1 = -a1, leaving a3 and a1 free over C -- 4 real dimensions, of which the
// a3-plane (v0 -> f-line maps) is exactly the closure direction that a
// longer chain kills.
TEST_CASE("module chain of length three closes to the symplectic algebra") {
    ChevalleyBasis cb = chevalley(a1());
    CRAlgebra alg = attach_cr(a1(), {1}, {1});
    Extension ext = build_extension(cb, alg, {{{2}, Rational(-2), Rational(0)}});
    ExtensionAnalysis an = analyze_extension(ext);

    CHECK_FALSE(an.prolongation.truncated);
    CHECK(an.prolongation.table.dim() == 20);
    CHECK(an.prolongation.layer_dim == std::map<long, long>{{-3, 2},
                                                            {-2, 2},
                                                            {-1, 4},
                                                            {0, 4},
                                                            {1, 4},
                                                            {2, 2},
                                                            {3, 2}});
    CHECK(an.structure.classification == "semisimple");
    CHECK(an.structure.radical_dim == 0);
    CHECK(an.structure.semisimple_ideal_dim == 20);

    CHECK(an.pi_spectrum == std::map<long, long>{{-1, 6}, {0, 8}, {1, 6}});
    CHECK(an.b1_equals_l);
    REQUIRE(an.j_element.has_value());
    // ad(J_s) is zero on the degree -2 line (the zero weight), so the
    // projection correction vanishes.
    CHECK(an.k_values == std::vector<Rational>{Rational(0)});
    CHECK_FALSE(jacobi_witness(an.prolongation.table).has_value());
    CHECK_FALSE(grading_witness(an.prolongation.table).has_value());
}

// [DERIVED] From length four on, no Borel pattern fits (rank-2 lower
// triangular parts have depths 1, 2, 3 and 5; the depth-5 one has
// [m_{-2}, m_{-3}] nonzero, impossible for an abelian module) and the
// prolongation stops at layer 1 = the raising half of the rank-one algebra.
// Layer 1 by hand for the chain f; w3, w1, w-1, w-3 (degrees -1; -1..-4):
// with u(f) = D(a1,b1) and u(w3) = D(a3,b3) as above, the pair (w3, w1)
// forces b3 = -2*a3 and the pair (w3, w-3) forces 3*a3 + b3 = 0, so a3 = 0;
// (f, w-3) leaves one complex parameter: 2 real dimensions.  Totals:
// 2(n+1) + 4 + 2 = 2n + 8.  The radical is the module plus the pi plane,
// the nilradical is the module, and ad(J_s) scales the degree -2 weight
// line (weight n-3) by i(n-3)/2, so k = (n-3)/2.
TEST_CASE("module chains of length four and five are proper") {
    ChevalleyBasis cb = chevalley(a1());
    CRAlgebra alg = attach_cr(a1(), {1}, {1});
    for (long n : {4L, 5L}) {
        CAPTURE(n);
        Extension ext = build_extension(
            cb, alg,
            {{{n - 1}, Rational(-(n + 1)) / Rational(2), Rational(n - 3) / Rational(2)}});
        ExtensionAnalysis an = analyze_extension(ext);

        CHECK_FALSE(an.prolongation.truncated);
        CHECK(an.prolongation.table.dim() == 2 * n + 8);
        std::map<long, long> expect{{-1, 4}, {0, 4}, {1, 2}};
        for (long d = 2; d <= n; ++d) expect[-d] = 2;
        CHECK(an.prolongation.layer_dim == expect);
        CHECK(an.structure.classification == "proper");
        CHECK(an.structure.radical_dim == 2 * n + 2);
        CHECK(an.structure.nilradical_dim == 2 * n);
        CHECK(an.structure.toral_dim == 2);
        CHECK(an.structure.semisimple_ideal_dim == 0);

        CHECK(an.pi_spectrum == std::map<long, long>{{0, 8}, {1, 2 * n}});
        CHECK(an.b1_equals_l);
        REQUIRE(an.j_element.has_value());
        CHECK(an.k_values == std::vector<Rational>{Rational(n - 3) / Rational(2)});
        CHECK_FALSE(jacobi_witness(an.prolongation.table).has_value());
    }
}
