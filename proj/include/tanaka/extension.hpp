#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tanaka/chevalley.hpp"
#include "tanaka/graded_cr.hpp"
#include "tanaka/lie_table.hpp"
#include "tanaka/realize.hpp"
#include "tanaka/structure.hpp"

namespace tanaka {

/// One irreducible summand of the abelian part: the module V(highest) graded
/// by degree(mu) = mu(E) + shift.  When the summand comes from an admissible
/// structure, `k` carries its J-scalar and the complex structure matrix of
/// the extension gets filled on this block.
struct Summand {
    IntVec highest;
    Rational shift;
    std::optional<Rational> k;
};

/// The extension g = s + l of the graded algebra s by the abelian module
/// l = sum of the summands: [s,s] from the Chevalley table, [x, v] through
/// the realized module action, [l, l] = 0.  The table is complex (field Qi)
/// and graded; when every summand carries its J-scalar the table's J matrix
/// holds the complex structure on the degree -1 part (the +-i diagonal).
struct Extension {
    ChevalleyBasis cb;
    CRAlgebra alg;
    std::vector<Summand> summands;
    std::vector<ModuleRealization> modules;
    /// actions[t][b]: matrix of the b-th Chevalley basis element on summand t.
    std::vector<std::vector<Mat>> actions;
    LieTable table;
    long s_dim = 0;                  ///< basis indices [0, s_dim) hold s
    long l_dim = 0;                  ///< total module dimension
    std::vector<long> l_offset;      ///< flat l-coordinate start per summand
    std::vector<long> l_degree;      ///< degree per flat l coordinate

    long table_index(long summand, long vector_index) const;
};

/// Assemble the extension table.  Throws std::invalid_argument when the CR
/// data lives on a different root system, a shift does not produce an
/// integral grading, or a provided J-scalar fails to put the degree -1
/// weight vectors into the +-i eigenspaces.
Extension build_extension(const ChevalleyBasis& cb, const CRAlgebra& alg,
                          const std::vector<Summand>& summands, long dim_cap = 200);

/// Module-level compatibility oracle.  Works directly on the realized action
/// matrices, with no weight combinatorics: l must be fundamental in negative
/// degrees, transitive in degrees >= 0, and the degree -1 layer must split
/// as V+ (killed by the R^{1,0} root actions) plus V- (killed by R^{0,1}),
/// with the degree 0 layer mapped into V+ by R^{1,0} and into V- by R^{0,1}
/// so that the +-i eigenspace decomposition extends the one of s.  `reason`
/// explains the first obstruction; the recovered eigenspaces and their
/// weights (tagged by summand) are reported for cross-checking.
struct ModuleVerdict {
    bool compatible = false;
    std::string reason;
    Subspace v_plus, v_minus;  ///< flat l coordinates, supported on degree -1
    std::vector<std::pair<long, IntVec>> p10, p01;
};
ModuleVerdict module_level_compatible(const Extension& ext);

}  // namespace tanaka
