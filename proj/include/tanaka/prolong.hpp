#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tanaka/extension.hpp"
#include "tanaka/lie_table.hpp"
#include "tanaka/matrix.hpp"
#include "tanaka/structure.hpp"

namespace tanaka {

/// Fundamental graded nilpotent algebra m = m_{-mu} + ... + m_{-1}, cut out
/// of the negative part of a graded table, with an optional complex
/// structure on the degree -1 layer (indexed by the m basis).
struct GradedNilpotent {
    LieTable table;
    long mu = 0;                     ///< kind: the lowest degree is -mu
    std::vector<long> source_index;  ///< original table index per m basis vector
    std::optional<Mat> J;
};

/// Extract the negative part of a graded table and verify the axioms:
/// Jacobi, fundamentality (every layer below -1 is spanned by brackets of
/// the degree -1 layer with the layer above), and, when the input carries J,
/// that its restriction squares to -Id on the degree -1 block, vanishes
/// elsewhere, and satisfies [JX, JY] = [X, Y].  Throws std::invalid_argument
/// naming the failed axiom.
GradedNilpotent assemble_m(const LieTable& graded);

/// Degree 0 derivations of m as matrices on the m basis; when m carries J
/// they are required to commute with it on the degree -1 layer.
std::vector<Mat> degree_zero_derivations(const GradedNilpotent& m);

/// Prolongation of (m, J): the maximal graded extension
/// g = m + g_0 + g_1 + ... whose nonnegative layers act faithfully on m.
/// g_0 is the (J-commuting) derivation algebra in degree 0 and each higher
/// g_p is the space of degree p maps u : m -> g with
/// u([X, Y]) = [u(X), Y] + [X, u(Y)].  Construction stops at the first zero
/// layer (all higher layers then vanish) or at the degree cap.
struct Prolongation {
    LieTable table;     ///< graded table; J carried over on the degree -1 block
    long m_dim = 0;     ///< indices [0, m_dim) are m, in input order
    long mu = 0;
    bool truncated = false;  ///< cap reached with a nonzero top layer
    std::map<long, long> layer_dim;

    std::vector<long> layer_indices(long degree) const;
};

/// max_degree < 0 selects the default cap mu + 4.  A truncated result keeps
/// only brackets landing inside the cap: it is a filtered snapshot, not a
/// closed algebra, and is flagged as such.
Prolongation tanaka_prolongation(const GradedNilpotent& m, long max_degree = -1);

/// The unique degree 0 element whose bracket action on the degree -1 layer
/// is the given matrix (indexed by the degree -1 block of m); nullopt when
/// the map is not realized by any derivation.
std::optional<Vec> degree_zero_with_action(const Prolongation& g, const Mat& action_on_m1);

/// The degree 0 element acting as the identity on the flagged m directions
/// and as zero on the rest.  Solved from the degree -1 block, then verified
/// on all of m; throws std::runtime_error when no such derivation exists.
Vec projection_element(const Prolongation& g, const std::vector<bool>& flag);

/// Eigenvalue -> multiplicity for ad(v), which must be semisimple with
/// integer spectrum: kernels of ad(v) - h are scanned over integer h and
/// must exhaust the space (std::runtime_error otherwise).
std::map<long, long> integer_spectrum(const LieTable& t, const Vec& v);

/// Structural invariants of the prolongation of an extension g = s + l:
/// realify, cut out m, prolong, embed the extension back, and read off the
/// projection element and the complex-structure element.
struct ExtensionAnalysis {
    LieTable real_table;  ///< realified extension (basis b_0..b_{n-1}, i*b_0..)
    GradedNilpotent m;
    Prolongation prolongation;
    Mat embedding;        ///< column r: image of realified basis vector r
    Subspace s_image, l_image;
    Vec pi;               ///< projection element onto the l part
    std::map<long, long> pi_spectrum;
    /// The +1 eigenspace of ad(pi) on the Killing-orthogonal complement of
    /// the s image coincides with the l image.
    bool b1_equals_l = false;
    std::optional<Vec> j_element;  ///< degree 0 element realizing J on m_{-1}
    /// Per summand: the scalar k_i with J = J_s - k_i * i on the summand,
    /// read off the complex table (only when the extension carries J).
    std::vector<Rational> k_values;
    StructureSummary structure;
};

/// Throws std::invalid_argument when the extension has no degree -1 part and
/// std::runtime_error when an internal identity fails (non-transitive
/// extensions have no faithful embedding, J off the span of the derivation
/// algebra, a non-scalar J defect on a summand).
ExtensionAnalysis analyze_extension(const Extension& ext, long max_degree = -1);

/// Same pipeline for an extension given directly as a real graded table
/// (field "Q") whose basis is split into subalgebra and module vectors by
/// `l_marker` (true = module).  Used by the built-in presets, whose modules
/// are of real type and are not realized from a highest weight; k values are
/// not extracted on this path, so `k_values` stays empty.
ExtensionAnalysis analyze_table(const LieTable& real_table, const std::vector<bool>& l_marker,
                                long max_degree = -1);

}  // namespace tanaka
