#include "tanaka/presets.hpp"

#include <stdexcept>

#include "doctest.h"
#include "tanaka/prolong.hpp"
#include "tanaka/root_system.hpp"
#include "tanaka/structure.hpp"

using namespace tanaka;

namespace {

Vec embedded(const ExtensionAnalysis& an, const Vec& coords) {
    Vec img(an.prolongation.table.dim(), Scalar());
    for (long r = 0; r < static_cast<long>(coords.size()); ++r) {
        if (coords[r].is_zero()) continue;
        for (long i = 0; i < an.prolongation.table.dim(); ++i)
            img[i] = img[i] + coords[r] * an.embedding(i, r);
    }
    return img;
}

}  // namespace

// The preset tables are hand-entered structure constants, so the machine
// recheck of the axioms is the first line of defense: Jacobi, the grading,
// and the J axioms on the negative part (the latter run inside assemble_m).
TEST_CASE("preset tables satisfy the Lie algebra axioms") {
    for (const auto& name : preset_names()) {
        const PresetCase pc = preset_by_name(name);
        CAPTURE(name);
        CHECK(pc.name == name);
        CHECK_FALSE(jacobi_witness(pc.table).has_value());
        CHECK_FALSE(grading_witness(pc.table).has_value());
        CHECK(pc.table.J.has_value());
        CHECK(pc.l_marker.size() == static_cast<size_t>(pc.table.dim()));
        CHECK_NOTHROW(assemble_m(pc.table));
    }
    CHECK_THROWS_WITH_AS(preset_by_name("nope"), doctest::Contains("unknown preset"),
                         std::invalid_argument);
}

TEST_CASE("anti-Hermitian module preset prolongs to the split hyperquadric algebra") {
    // [DERIVED] By hand, the negative part m of the preset is the 5-dim real
    // Heisenberg algebra with basis f, if, p, q | z, brackets
    // [f, q] = [if, p] = -2z, and J f = -if, J p = q.  The complex structure
    // turns m_{-1} into C^2 and the Levi form [X, JY] into a Hermitian form
    // h with h(f, f) = [f, Jf] = [f, -if] = 0, i.e. f spans an isotropic
    // line, so h is the split form of signature (1,1).  The CR automorphism
    // algebra of the nondegenerate hyperquadric Im w = h(zeta, zeta) on C^2+1
    // with split h is the classical su(2,2), of real dimension 15.  Its
    // contact grading puts dim 1 in degrees +-2 and dim 4 in degrees +-1,
    // leaving 15 - 10 = 5 in degree 0 (explicitly: the derivations of m
    // commuting with J are c u(1,1) acting on C^2 plus nothing else, and
    // dim_R u(1,1) + 1 = 5).
    const PresetCase pc = preset_sl2c1();
    const ExtensionAnalysis an = analyze_table(pc.table, pc.l_marker);
    CHECK_FALSE(an.prolongation.truncated);
    CHECK(an.prolongation.table.dim() == 15);
    const std::map<long, long> want = {{-2, 1}, {-1, 4}, {0, 5}, {1, 4}, {2, 1}};
    CHECK(an.prolongation.layer_dim == want);
    CHECK(an.structure.classification == "semisimple");
    CHECK(an.structure.radical_dim == 0);
    CHECK(an.structure.semisimple_ideal_dim == 15);

    // [DERIVED] ad(pi) eigenvalues: the embedded s (6 real dims) commutes
    // with the projection, pi itself is fixed, and Killing duality pairs the
    // 4-dim module copy in eigenvalue +1 with a 4-dim partner in -1; the
    // remaining 0-eigenvector count is 15 - 4 - 4 = 7.
    const std::map<long, long> spec = {{-1, 4}, {0, 7}, {1, 4}};
    CHECK(an.pi_spectrum == spec);
    CHECK(an.b1_equals_l);

    // [DERIVED] The module is of real type (anti-Hermitian matrices form a
    // real irreducible s-module), so the structure element of the extension
    // is the structure element of s itself: no i*k*pi correction, k = 0.
    REQUIRE(an.j_element.has_value());
    CHECK(*an.j_element == embedded(an, pc.j_s));
    CHECK(pc.k_expected == std::vector<Rational>{Rational(0)});
}

TEST_CASE("doubling the module adds exactly the intertwiner pair") {
    // [DERIVED] With two isomorphic module copies l' and l'' carrying the
    // same gradation and J, the identity intertwiners e12 : l'' -> l' and
    // e21 : l' -> l'' are degree-0 derivations of m: they kill s_{-1}, the
    // module is abelian, and the s-action is identical on the two copies, so
    // the Leibniz rule reduces to equivariance.  They commute with J because
    // J is the same matrix on both copies.  Together with h, ih, the two
    // projections pi', pi'' this gives a degree-0 layer of dimension 8, and
    // the degree +1 layer holds only the image of e, ie (dimension 2): the
    // per-copy positive prolongation directions of the single-copy case
    // would have to act into a single shared s_0, and the solver finds none.
    // Totals: m (2+6) + g_0 (8) + g_1 (2) = 18.
    const PresetCase pc = preset_two_copies();
    const ExtensionAnalysis an = analyze_table(pc.table, pc.l_marker);
    CHECK_FALSE(an.prolongation.truncated);
    CHECK(an.prolongation.table.dim() == 18);
    const std::map<long, long> want = {{-2, 2}, {-1, 6}, {0, 8}, {1, 2}};
    CHECK(an.prolongation.layer_dim == want);

    // [DERIVED] The mixing pair is not an ideal ([e12, l] lands back in l,
    // not in the pair), so no semisimple ideal appears: the algebra is
    // proper.  The radical is l plus the central ray pi' + pi''
    // (dimension 9), the nilradical is l itself (dimension 8), and the
    // complementary sl(2,R) = span(pi' - pi'', e12, e21) survives in a Levi
    // factor that is not an ideal.
    CHECK(an.structure.classification == "proper");
    CHECK(an.structure.radical_dim == 9);
    CHECK(an.structure.nilradical_dim == 8);
    CHECK(an.structure.toral_dim == 1);
    CHECK(an.structure.semisimple_ideal_dim == 0);

    // [DERIVED] pi = pi' + pi'' fixes all 8 module directions and kills the
    // embedded s (6), the projections, and the intertwiners (the latter
    // commute with pi because they preserve l).
    const std::map<long, long> spec = {{0, 10}, {1, 8}};
    CHECK(an.pi_spectrum == spec);
    CHECK(an.b1_equals_l);
    REQUIRE(an.j_element.has_value());
    CHECK(*an.j_element == embedded(an, pc.j_s));
    CHECK(pc.k_expected == std::vector<Rational>(2, Rational(0)));
}

TEST_CASE("module presets expand to explicit weights") {
    const RootSystem a2 = root_system_from_cartan({{2, -1}, {-1, 2}});
    CHECK(module_preset("standard", a2).highest == IntVec{1, 0});
    CHECK_FALSE(module_preset("standard", a2).shift.has_value());
    CHECK(module_preset("dual", a2).highest == IntVec{0, 1});

    // [TRIVIAL] The adjoint weight of A2 is the highest root, (1,1) in
    // fundamental coordinates; the natural gradation needs no shift and the
    // shifted one lowers every degree by 2.
    const ModulePreset adj = module_preset("adjoint", a2);
    CHECK(adj.highest == IntVec{1, 1});
    REQUIRE(adj.shift.has_value());
    CHECK(*adj.shift == Rational(0));
    const ModulePreset shifted = module_preset("adjoint-shifted", a2);
    CHECK(shifted.highest == IntVec{1, 1});
    REQUIRE(shifted.shift.has_value());
    CHECK(*shifted.shift == Rational(-2));

    CHECK_THROWS_AS(module_preset("mystery", a2), std::invalid_argument);
    const RootSystem sum = root_system_from_cartan(cartan_from_label("A1+A1"));
    CHECK_THROWS_WITH_AS(module_preset("adjoint", sum), doctest::Contains("connected"),
                         std::invalid_argument);
}

TEST_CASE("type labels expand to Cartan matrices") {
    // [TRIVIAL] Spot checks against the standard matrices.
    CHECK(cartan_from_label("A1") == std::vector<IntVec>{{2}});
    CHECK(cartan_from_label("A2") == std::vector<IntVec>{{2, -1}, {-1, 2}});
    CHECK(cartan_from_label("G2") == std::vector<IntVec>{{2, -1}, {-3, 2}});
    const auto b3 = cartan_from_label("B3");
    CHECK(b3[2][1] == -2);
    CHECK(b3[1][2] == -1);
    const auto c3 = cartan_from_label("C3");
    CHECK(c3[1][2] == -2);
    CHECK(c3[2][1] == -1);

    // Every label must pass the finite-type validation of the root-system
    // builder; the positive-root counts are the classical ones.
    CHECK(root_system_from_cartan(cartan_from_label("D4")).positive_roots.size() == 12);
    CHECK(root_system_from_cartan(cartan_from_label("F4")).positive_roots.size() == 24);
    CHECK(root_system_from_cartan(cartan_from_label("E6")).positive_roots.size() == 36);
    const RootSystem mixed = root_system_from_cartan(cartan_from_label("A2+B2"));
    CHECK(mixed.rank == 4);
    CHECK(mixed.components.size() == 2);

    CHECK_THROWS_AS(cartan_from_label(""), std::invalid_argument);
    CHECK_THROWS_AS(cartan_from_label("A"), std::invalid_argument);
    CHECK_THROWS_AS(cartan_from_label("Q3"), std::invalid_argument);
    CHECK_THROWS_AS(cartan_from_label("E9"), std::invalid_argument);
    CHECK_THROWS_AS(cartan_from_label("A2-B2"), std::invalid_argument);
}
