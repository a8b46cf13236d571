#include <map>
#include <stdexcept>

#include "doctest.h"
#include "tanaka/chevalley.hpp"
#include "tanaka/realify.hpp"
#include "tanaka/root_system.hpp"
#include "tanaka/structure.hpp"
#include "tanaka/weights.hpp"

using namespace tanaka;

namespace {

ChevalleyBasis sl3() { return chevalley(root_system_from_cartan({{2, -1}, {-1, 2}})); }

std::map<IntVec, long> character_of(const RootSystem& rs, const IntVec& highest, long copies = 1) {
    std::map<IntVec, long> out;
    for (const auto& [w, m] : weight_system(rs, highest).multiplicity) out[w] += copies * m;
    return out;
}

void merge_into(std::map<IntVec, long>& acc, const std::map<IntVec, long>& extra) {
    for (const auto& [w, m] : extra) {
        acc[w] += m;
        if (acc[w] == 0) acc.erase(w);
    }
}

}  // namespace

// [DERIVED] Killing signatures (noncompact, compact) of the real forms of
// sl(3,C): su(3) is compact (0,8); su(1,2) has maximal compact subalgebra
// u(2), giving (4,4); sl(3,R) has maximal compact so(3), giving (5,3).
TEST_CASE("real forms of sl3: Killing signatures") {
    ChevalleyBasis cb = sl3();
    SUBCASE("su(3)") {
        RealForm rf = real_form_fixed_points(cb.table, involution_su(cb, 3, 0));
        CHECK(rf.table.dim() == 8);
        auto [pos, neg, zero] = signature(killing_form(rf.table));
        CHECK(pos == 0);
        CHECK(neg == 8);
        CHECK(zero == 0);
    }
    SUBCASE("su(1,2)") {
        RealForm rf = real_form_fixed_points(cb.table, involution_su(cb, 1, 2));
        auto [pos, neg, zero] = signature(killing_form(rf.table));
        CHECK(pos == 4);
        CHECK(neg == 4);
        CHECK(zero == 0);
        CHECK(classify_structure(rf.table).classification == "semisimple");
        CHECK(jacobi_witness(rf.table) == std::nullopt);
    }
    SUBCASE("sl(3,R)") {
        RealForm rf = real_form_fixed_points(cb.table, involution_sl_real(cb));
        auto [pos, neg, zero] = signature(killing_form(rf.table));
        CHECK(pos == 5);
        CHECK(neg == 3);
        CHECK(zero == 0);
    }
}

TEST_CASE("decompose_character: single irreducibles come back unchanged") {
    RootSystem a2 = root_system_from_cartan({{2, -1}, {-1, 2}});
    auto adj = decompose_character(a2, character_of(a2, {1, 1}));
    REQUIRE(adj.size() == 1);
    CHECK(adj[0].first == IntVec{1, 1});
    CHECK(adj[0].second == 1);

    RootSystem a1 = root_system_from_cartan({{2}});
    auto v2 = decompose_character(a1, {{{2}, 1}, {{0}, 1}, {{-2}, 1}});
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].first == IntVec{2});
}

TEST_CASE("decompose_character: multiplicities and mixtures") {
    RootSystem a1 = root_system_from_cartan({{2}});
    auto two = decompose_character(a1, {{{1}, 2}, {{-1}, 2}});
    REQUIRE(two.size() == 1);
    CHECK(two[0] == std::pair<IntVec, long>{{1}, 2});

    RootSystem a2 = root_system_from_cartan({{2, -1}, {-1, 2}});
    std::map<IntVec, long> mix = character_of(a2, {2, 0});
    merge_into(mix, character_of(a2, {0, 2}));
    merge_into(mix, character_of(a2, {1, 1}, 2));
    auto out = decompose_character(a2, mix);
    REQUIRE(out.size() == 3);
    // Peeling order: equal heights resolved lexicographically.
    CHECK(out[0] == std::pair<IntVec, long>{{2, 0}, 1});
    CHECK(out[1] == std::pair<IntVec, long>{{1, 1}, 2});
    CHECK(out[2] == std::pair<IntVec, long>{{0, 2}, 1});

    std::map<IntVec, long> funds = character_of(a2, {1, 0});
    merge_into(funds, character_of(a2, {0, 1}, 2));
    auto fd = decompose_character(a2, funds);
    REQUIRE(fd.size() == 2);
    CHECK(fd[0] == std::pair<IntVec, long>{{1, 0}, 1});
    CHECK(fd[1] == std::pair<IntVec, long>{{0, 1}, 2});
}

TEST_CASE("decompose_character: rejections carry the offending weight") {
    RootSystem a1 = root_system_from_cartan({{2}});
    CHECK_THROWS_WITH_AS(decompose_character(a1, {{{1}, 1}, {{-1}, 2}}),
                         doctest::Contains("(-1)"), std::runtime_error);
    CHECK_THROWS_AS(decompose_character(a1, {{{2}, 1}}), std::runtime_error);
    CHECK_THROWS_AS(decompose_character(a1, {{{0}, -1}}), std::runtime_error);
    CHECK(decompose_character(a1, {}).empty());
}
