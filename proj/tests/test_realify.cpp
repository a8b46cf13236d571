#include "tanaka/realify.hpp"

#include <stdexcept>

#include "doctest.h"
#include "tanaka/chevalley.hpp"
#include "tanaka/root_system.hpp"
#include "tanaka/structure.hpp"

using namespace tanaka;

namespace {

SVec sv(std::initializer_list<std::pair<int, long>> entries) {
    SVec out;
    for (const auto& [k, c] : entries) out.emplace_back(k, Scalar(c));
    return out;
}

ChevalleyBasis sl2() { return chevalley(root_system_from_cartan({{2}})); }

}  // namespace

TEST_CASE("realify_vec and realify_mat split real and imaginary parts") {
    Vec v{Scalar(Rational(1), Rational(2)), Scalar(3)};
    Vec r = realify_vec(v);
    CHECK(r == Vec{Scalar(1), Scalar(3), Scalar(2), Scalar(0)});

    Mat m(1, 1);
    m(0, 0) = Scalar::i();
    CHECK(realify_mat(m) == multiplication_by_i(1));

    Mat j = multiplication_by_i(2);
    CHECK((j * j) == Mat::identity(4) * Scalar(-1));
}

TEST_CASE("realify_table: sl2 over C becomes a six-dimensional real table") {
    ChevalleyBasis cb = sl2();
    LieTable t = cb.table;  // basis h, e = x[1], f = x[-1]
    t.grading = std::vector<long>{0, 1, -1};
    LieTable r = realify_table(t);
    CHECK(r.dim() == 6);
    CHECK(r.field == "Q");
    CHECK(r.basis == std::vector<std::string>{"h1", "x[1]", "x[-1]", "i*h1", "i*x[1]", "i*x[-1]"});
    CHECK(r.grading == std::vector<long>{0, 1, -1, 0, 1, -1});
    // [e, i*f] = i*h, [i*e, i*f] = -h, [h, i*e] = 2 i*e, [i*h, i*e] = -2e.
    CHECK(r.bracket(1, 5) == sv({{3, 1}}));
    CHECK(r.bracket(4, 5) == sv({{0, -1}}));
    CHECK(r.bracket(0, 4) == sv({{4, 2}}));
    CHECK(r.bracket(3, 4) == sv({{1, -2}}));
    CHECK(jacobi_witness(r) == std::nullopt);
    CHECK(grading_witness(r) == std::nullopt);
}

// [DERIVED] For sl2 with the unit-matrix defining realization, -X^dagger maps
// h -> -h, e -> -f, f -> -e.
TEST_CASE("involution_su: compact involution matrix of sl2") {
    ChevalleyBasis cb = sl2();
    Mat s = involution_su(cb, 2, 0);
    Mat expect(3, 3);
    expect(0, 0) = Scalar(-1);
    expect(2, 1) = Scalar(-1);
    expect(1, 2) = Scalar(-1);
    CHECK(s == expect);
    CHECK(involution_sl_real(cb) == Mat::identity(3));
}

// [DERIVED] Killing signatures (noncompact, compact): su(2) is negative
// definite (0,3); sl(2,R) and su(1,1) are isomorphic with signature (2,1).
TEST_CASE("real_form_fixed_points: rank-one real forms and their signatures") {
    ChevalleyBasis cb = sl2();
    SUBCASE("su(2)") {
        RealForm rf = real_form_fixed_points(cb.table, involution_su(cb, 2, 0));
        CHECK(rf.table.dim() == 3);
        CHECK(jacobi_witness(rf.table) == std::nullopt);
        auto [pos, neg, zero] = signature(killing_form(rf.table));
        CHECK(pos == 0);
        CHECK(neg == 3);
        CHECK(zero == 0);
        CHECK(classify_structure(rf.table).classification == "semisimple");
    }
    SUBCASE("sl(2,R)") {
        RealForm rf = real_form_fixed_points(cb.table, involution_sl_real(cb));
        auto [pos, neg, zero] = signature(killing_form(rf.table));
        CHECK(pos == 2);
        CHECK(neg == 1);
        CHECK(zero == 0);
    }
    SUBCASE("su(1,1)") {
        RealForm rf = real_form_fixed_points(cb.table, involution_su(cb, 1, 1));
        auto [pos, neg, zero] = signature(killing_form(rf.table));
        CHECK(pos == 2);
        CHECK(neg == 1);
        CHECK(zero == 0);
    }
}

TEST_CASE("real_form_fixed_points: input validation") {
    ChevalleyBasis cb = sl2();
    CHECK_THROWS_AS(real_form_fixed_points(cb.table, Mat::identity(2)), std::invalid_argument);
    CHECK_THROWS_AS(real_form_fixed_points(cb.table, Mat::identity(3) * Scalar(2)),
                    std::invalid_argument);
    // diag(1, 1, -1) squares to the identity but breaks [e, f] = h.
    Mat bad = Mat::identity(3);
    bad(2, 2) = Scalar(-1);
    CHECK_THROWS_AS(real_form_fixed_points(cb.table, bad), std::runtime_error);
    CHECK_THROWS_AS(involution_su(cb, 1, 2), std::invalid_argument);
}

TEST_CASE("real_form_fixed_points: fixed vectors are genuinely fixed") {
    ChevalleyBasis cb = sl2();
    Mat s = involution_su(cb, 2, 0);
    RealForm rf = real_form_fixed_points(cb.table, s);
    Mat conj_real(6, 6);
    for (int k = 0; k < 3; ++k) {
        conj_real(k, k) = Scalar(1);
        conj_real(3 + k, 3 + k) = Scalar(-1);
    }
    Mat sigma_real = realify_mat(s) * conj_real;
    for (const Vec& v : rf.basis_realified) CHECK(sigma_real.apply(v) == v);
}
