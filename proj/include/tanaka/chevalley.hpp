#pragma once

#include "tanaka/lie_table.hpp"
#include "tanaka/realize.hpp"
#include "tanaka/root_system.hpp"

#include <string>
#include <vector>

namespace tanaka {

/// Chevalley-style basis of the complex semisimple Lie algebra with the given
/// root system: Cartan generators h_1..h_r followed by the positive and the
/// negative root vectors in the deterministic positive-root order.  All
/// structure constants are integers.  The basis is realized faithfully on
/// the direct sum of all fundamental modules; `rep[k]` is the block matrix
/// of basis element k on that space.
struct ChevalleyBasis {
    RootSystem rs;
    LieTable table;                    // field "Qi"
    std::vector<Mat> rep;              // aligned with table.basis
    long rep_dim = 0;
    std::vector<ModuleRealization> fundamental;  // one per simple root
    std::vector<long> block_offset;              // start row of each block

    // Construction recipe, replayable inside any module realization:
    // for non-simple positive roots, x_g = [x_{a_i}, x_{g-a_i}] / pos_div and
    // x_{-g} = [x_{-a_i}, x_{-(g-a_i)}] / neg_div with i = chain_simple.
    std::vector<int> chain_simple;     // aligned with rs.positive_roots; -1 for simples
    std::vector<Rational> pos_div;
    std::vector<Rational> neg_div;

    long dim() const { return table.dim(); }
    long h_index(int i) const { return i; }
    long pos_index(long k) const { return rs.rank + k; }
    long neg_index(long k) const { return rs.rank + static_cast<long>(rs.positive_roots.size()) + k; }
    /// Index of the root vector for gamma (root coordinates, either sign);
    /// -1 when gamma is not a root.
    long index_of_root(const IntVec& gamma) const;
    /// Integer coroot coefficients c with h_gamma = sum c_j h_j.
    IntVec coroot(const IntVec& gamma) const;
};

/// Deterministic construction; throws std::runtime_error when a fundamental
/// module exceeds `dim_cap` or an internal consistency check fails.
ChevalleyBasis chevalley(const RootSystem& rs, long dim_cap = 200);

/// Matrices of the action of every Chevalley basis element on the module
/// `mr`, obtained by replaying the chain recipe through the generators.
std::vector<Mat> module_action(const ChevalleyBasis& cb, const ModuleRealization& mr);

}  // namespace tanaka
