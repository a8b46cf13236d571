#include "tanaka/extension.hpp"

#include <stdexcept>

#include "doctest.h"
#include "tanaka/chevalley.hpp"
#include "tanaka/graded_cr.hpp"
#include "tanaka/realify.hpp"

using namespace tanaka;

namespace {

RootSystem a1() { return root_system_from_cartan({{2}}); }
RootSystem a2() { return root_system_from_cartan({{2, -1}, {-1, 2}}); }

}  // namespace

// [DERIVED] s = rank-one algebra, l = two-dimensional module at shift -3/2:
// the negative part is the three-dimensional Heisenberg algebra (degrees
// -1, -1, -2 before adding x[-1]'s partner... m has x[-1], v0[1] in degree
// -1 and v0[-1] in degree -2).  With k = -1/2 the highest weight vector
// (J-value 1/2) lands in the +i eigenspace: 1/2 - (-1/2) = 1.
TEST_CASE("rank-one extension table") {
    ChevalleyBasis cb = chevalley(a1());
    CRAlgebra alg = attach_cr(a1(), {1}, {1});
    Extension ext = build_extension(cb, alg, {{{1}, Rational(-3) / 2, Rational(-1) / 2}});

    CHECK(ext.s_dim == 3);
    CHECK(ext.l_dim == 2);
    CHECK(ext.table.dim() == 5);
    CHECK(ext.table.field == "Qi");
    CHECK(ext.table.basis ==
          std::vector<std::string>{"h1", "x[1]", "x[-1]", "v0[1]", "v0[-1]"});
    REQUIRE(ext.table.grading.has_value());
    CHECK(*ext.table.grading == std::vector<long>{0, 1, -1, -1, -2});

    // Module brackets: h.v = (weight)v, e and f walk the weight string.
    CHECK(ext.table.bracket(0, 3) == SVec{{3, Scalar(1)}});
    CHECK(ext.table.bracket(0, 4) == SVec{{4, Scalar(-1)}});
    CHECK(ext.table.bracket(1, 4) == SVec{{3, Scalar(1)}});
    CHECK(ext.table.bracket(2, 3) == SVec{{4, Scalar(1)}});
    CHECK(ext.table.bracket(3, 4).empty());  // [l, l] = 0

    REQUIRE(ext.table.J.has_value());
    const Mat& J = *ext.table.J;
    CHECK(J(2, 2) == -Scalar::i());  // x[-1] spans R^{0,1}
    CHECK(J(3, 3) == Scalar::i());   // highest weight vector is +i
    CHECK(J(1, 1).is_zero());        // degree +1: no J
    CHECK(J(4, 4).is_zero());        // degree -2: no J

    CHECK_FALSE(jacobi_witness(ext.table).has_value());
    CHECK_FALSE(grading_witness(ext.table).has_value());
    LieTable real = realify_table(ext.table);
    CHECK_FALSE(jacobi_witness(real).has_value());
    CHECK_FALSE(grading_witness(real).has_value());

    ModuleVerdict v = module_level_compatible(ext);
    CHECK(v.compatible);
    CHECK(v.reason.empty());
    CHECK(v.p10 == std::vector<std::pair<long, IntVec>>{{0, {1}}});
    CHECK(v.p01.empty());
}

TEST_CASE("build_extension input validation") {
    ChevalleyBasis cb = chevalley(a1());
    CRAlgebra alg = attach_cr(a1(), {1}, {1});
    CHECK_THROWS_WITH_AS(build_extension(cb, attach_cr(a2(), {1, 1}, {1, -1}), {{{1, 0}, Rational(-1), {}}}),
                         doctest::Contains("root systems"), std::invalid_argument);
    CHECK_THROWS_AS(build_extension(cb, alg, {}), std::invalid_argument);
    // Weights of the two-dimensional module have E-values +-1/2; an integer
    // shift cannot produce an integer grading.
    CHECK_THROWS_WITH_AS(build_extension(cb, alg, {{{1}, Rational(-1), {}}}),
                         doctest::Contains("non-integral"), std::invalid_argument);
    // k = 0 would give the degree -1 weight the J-eigenvalue 1/2.
    CHECK_THROWS_WITH_AS(build_extension(cb, alg, {{{1}, Rational(-3) / 2, Rational(0)}}),
                         doctest::Contains("eigenspace"), std::invalid_argument);
}

// [DERIVED] The three-dimensional rank-one module V(2) (weights 2, 0, -2).
// At shift -2 it is compatible: nothing sits in degree 0 and the single
// degree -1 vector (the highest one) is killed by the empty family R^{1,0}.
// At shift -1 the weight-2 vector sits in degree 0 and its bracket with
// x[-1] (all of R^{0,1}) is the whole degree -1 layer, which would have to
// lie in a -i eigenspace killed by x[-1] -- but x[-1] kills nothing there.
TEST_CASE("module-level oracle on the rank-one chain") {
    ChevalleyBasis cb = chevalley(a1());
    CRAlgebra alg = attach_cr(a1(), {1}, {1});

    Extension good = build_extension(cb, alg, {{{2}, Rational(-2), Rational(0)}});
    ModuleVerdict okv = module_level_compatible(good);
    CHECK(okv.compatible);
    CHECK(okv.p10 == std::vector<std::pair<long, IntVec>>{{0, {2}}});

    Extension bad = build_extension(cb, alg, {{{2}, Rational(-1), {}}});
    CHECK_FALSE(bad.table.J.has_value());  // no k given, no J filled
    ModuleVerdict badv = module_level_compatible(bad);
    CHECK_FALSE(badv.compatible);
    CHECK(badv.reason ==
          "degree 0 brackets with R^{0,1} leave the -i eigenspace");
}

// [DERIVED] Rank-two checks against the admissibility tables.  The defining
// module at shift -1 splits with P^{0,1} = {L2}; the symmetric square at
// shift -2 leaves no room for a split: its only degree -1 weight L1+L2 is
// killed by neither lowering operator (both L1+L2-alpha_1 = 2L2 and
// L1+L2-alpha_2 = L1+L3 stay in the diagram).
TEST_CASE("module-level oracle on rank two") {
    ChevalleyBasis cb = chevalley(a2());
    CRAlgebra alg = attach_cr(a2(), {1, 1}, {1, -1});

    Extension def = build_extension(cb, alg, {{{1, 0}, Rational(-1), Rational(1) / 3}});
    ModuleVerdict defv = module_level_compatible(def);
    CHECK(defv.compatible);
    CHECK(defv.p10.empty());
    CHECK(defv.p01 == std::vector<std::pair<long, IntVec>>{{0, {-1, 1}}});

    Extension sym = build_extension(cb, alg, {{{2, 0}, Rational(-2), {}}});
    ModuleVerdict symv = module_level_compatible(sym);
    CHECK_FALSE(symv.compatible);
    CHECK(symv.reason ==
          "no compatible complex structure: the degree -1 layer does not split into "
          "vectors killed by R^{1,0} plus vectors killed by R^{0,1}");
}

// [DERIVED] Two summands at once: the defining module at shift -2 (k = -2/3)
// and its dual at shift -1 (k = -1/3).  Degrees run from -3 (bottom of the
// first summand) to 0 (top of the second); the degree -1 layer is spanned by
// v0[L1] and v1[-L2], both killed by the lowering operator f_2 (their
// weights minus alpha_2 leave the diagrams), so both are +i directions.
TEST_CASE("two summands share one table") {
    ChevalleyBasis cb = chevalley(a2());
    CRAlgebra alg = attach_cr(a2(), {1, 1}, {1, -1});
    Extension ext = build_extension(cb, alg, {{{1, 0}, Rational(-2), Rational(-2) / 3},
                                              {{0, 1}, Rational(-1), Rational(-1) / 3}});
    CHECK(ext.table.dim() == 14);
    CHECK(ext.l_offset == std::vector<long>{0, 3});
    CHECK(ext.l_degree == std::vector<long>{-1, -2, -3, 0, -1, -2});
    REQUIRE(ext.table.J.has_value());
    CHECK_FALSE(jacobi_witness(ext.table).has_value());
    CHECK_FALSE(grading_witness(ext.table).has_value());

    ModuleVerdict v = module_level_compatible(ext);
    CHECK(v.compatible);
    CHECK(v.p10 == std::vector<std::pair<long, IntVec>>{{0, {1, 0}}, {1, {1, -1}}});
    CHECK(v.p01.empty());
}

// Multiplicity-two weights get disambiguated labels.
TEST_CASE("adjoint summand labels and split") {
    ChevalleyBasis cb = chevalley(a2());
    CRAlgebra alg = attach_cr(a2(), {1, 1}, {1, -1});
    Extension ext = build_extension(cb, alg, {{{1, 1}, Rational(-2), Rational(0)}});
    long zeros = 0;
    for (const std::string& label : ext.table.basis)
        if (label == "v0[0,0].1" || label == "v0[0,0].2") ++zeros;
    CHECK(zeros == 2);

    ModuleVerdict v = module_level_compatible(ext);
    CHECK(v.compatible);
    CHECK(v.p10 == std::vector<std::pair<long, IntVec>>{{0, {2, -1}}});   // alpha_1
    CHECK(v.p01 == std::vector<std::pair<long, IntVec>>{{0, {-1, 2}}});   // alpha_2
}
