#pragma once

#include "tanaka/matrix.hpp"

#include "json.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tanaka {

/// A Lie algebra presented by structure constants over an exact field:
/// rationals ("Q") or Gaussian rationals ("Qi").  Brackets are stored
/// sparsely for index pairs i < j only; antisymmetry supplies the rest.
/// An optional integer grading assigns a degree to every basis element and
/// an optional square matrix J records a partial complex structure
/// (supported on the degree -1 subspace of real tables).
struct LieTable {
    std::vector<std::string> basis;
    std::string field = "Q";
    std::map<std::pair<int, int>, SVec> table;
    std::optional<std::vector<long>> grading;
    std::optional<Mat> J;

    long dim() const { return static_cast<long>(basis.size()); }

    void set_bracket(int i, int j, SVec value);
    SVec bracket(int i, int j) const;
    SVec bracket(const SVec& x, int j) const;
    Vec bracket(const Vec& x, const Vec& y) const;
    Mat ad(const Vec& x) const;
    Mat ad_basis(int i) const;

    /// Indices of basis elements of the given degree (requires grading).
    std::vector<long> degree_indices(long p) const;
};

/// First failing Jacobi triple (i < j < k), if any.
std::optional<std::array<int, 3>> jacobi_witness(const LieTable& t);

/// First bracket leaving its expected degree, reported as (i, j, bad index),
/// if the table carries a grading.
std::optional<std::array<int, 3>> grading_witness(const LieTable& t);

nlohmann::json table_to_json(const LieTable& t);
LieTable table_from_json(const nlohmann::json& j);

}  // namespace tanaka
