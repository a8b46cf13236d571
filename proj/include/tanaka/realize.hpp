#pragma once

#include "tanaka/matrix.hpp"
#include "tanaka/root_system.hpp"
#include "tanaka/weights.hpp"

#include <vector>

namespace tanaka {

/// A concrete matrix realization of the irreducible highest-weight module
/// V(highest).  All matrices act on column vectors of length `dim` and have
/// rational entries.  Basis vectors are weight vectors, listed level by level
/// starting from the highest weight vector.
struct ModuleRealization {
    RootSystem rs;
    IntVec highest;               ///< fundamental coordinates
    long dim = 0;                 ///< complex dimension
    std::vector<Mat> e;           ///< raising operators, one per simple root
    std::vector<Mat> f;           ///< lowering operators, one per simple root
    std::vector<Mat> h;           ///< Cartan generators (diagonal)
    std::vector<IntVec> basis_weight;  ///< weight of each basis vector

    /// Matrix of the action of x_gamma for an arbitrary element expressed
    /// through the generators is assembled by callers; here we expose the
    /// generator matrices only.
    long weight_multiplicity(const IntVec& w) const;
};

/// Build V(highest) by lowering from the highest weight vector.  New vectors
/// f_i . u are tested for linear dependence through their images under all
/// raising operators; a vector of positive level vanishes exactly when all
/// of its raising images do.  Throws std::invalid_argument on a non-dominant
/// weight and std::runtime_error if the Weyl dimension exceeds `dim_cap` or
/// an internal consistency check fails.
ModuleRealization realize_module(const RootSystem& rs, const IntVec& highest,
                                 long dim_cap = 200);

/// Check the defining relations [e_i,f_j] = delta_ij h_i,
/// [h_i,e_j] = C_ij e_j, [h_i,f_j] = -C_ij f_j, [h_i,h_j] = 0 and that the
/// weight multiset agrees with weight_system().  Returns an explanatory
/// message for the first failure, or an empty string when everything holds.
std::string verify_realization(const ModuleRealization& mr);

}  // namespace tanaka
