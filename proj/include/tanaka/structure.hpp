#pragma once

#include <string>
#include <vector>

#include "tanaka/lie_table.hpp"
#include "tanaka/matrix.hpp"

namespace tanaka {

/// Subspace of the algebra, stored as a canonical (RREF) basis; an empty
/// vector is the zero subspace.
using Subspace = std::vector<Vec>;

/// Canonical basis of the span of the generators.
Subspace rref_span(const std::vector<Vec>& gens);
Subspace full_space(long n);
bool subspace_contains(const Subspace& s, const Vec& v);
bool subspace_equal(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Intersection; `n` is the ambient dimension.
Subspace subspace_intersect(const Subspace& a, const Subspace& b, long n);
/// Span of all brackets [a_i, b_j].
Subspace bracket_span(const LieTable& t, const Subspace& a, const Subspace& b);

/// Killing form matrix k(x_i, x_j) = tr(ad x_i ad x_j) on the table basis.
Mat killing_form(const LieTable& t);

Subspace derived_subalgebra(const LieTable& t);
/// Solvable radical: the Killing-orthogonal complement of [g, g].
Subspace radical(const LieTable& t);
/// Radical of the Killing form: {x : k(x, g) = 0}.
Subspace killing_radical(const LieTable& t);
/// Centralizer {x : [x, s] = 0 for all s in the subspace}.
Subspace centralizer(const LieTable& t, const Subspace& s);

bool is_subalgebra(const LieTable& t, const Subspace& s);
bool is_ideal(const LieTable& t, const Subspace& s);
/// True when ad(v) is nilpotent on the whole algebra.
bool ad_nilpotent(const LieTable& t, const Vec& v);
/// Lower central series of the subalgebra s: s, [s,s], [s,[s,s]], ...
/// (strictly decreasing, last entry repeated-free).
std::vector<Subspace> lower_central_series(const LieTable& t, const Subspace& s);
bool is_nilpotent_subalgebra(const LieTable& t, const Subspace& s);

/// Maximal semisimple ideal, computed as the derived subalgebra of the
/// centralizer of the radical.  The result is verified to be an ideal with
/// nondegenerate restricted Killing form; throws std::runtime_error otherwise.
Subspace max_semisimple_ideal(const LieTable& t);

/// Nilradical (maximal nilpotent ideal), computed as radical(g)
/// intersect killing_radical(g) and then verified: it must be a nilpotent
/// ideal all of whose elements are ad-nilpotent, and every complementary
/// basis direction of the radical must fail ad-nilpotency.  Throws
/// std::runtime_error when the candidate cannot be certified.
Subspace nilradical(const LieTable& t);

struct StructureSummary {
    long dim = 0;
    long radical_dim = 0;
    long nilradical_dim = 0;
    long toral_dim = 0;           // radical_dim - nilradical_dim
    long semisimple_ideal_dim = 0;
    std::string classification;   // "semisimple" | "proper" | "mixed"
};

/// Dimension summary and coarse classification: "semisimple" when the
/// radical vanishes, "proper" when the radical is nonzero but the maximal
/// semisimple ideal vanishes, "mixed" otherwise.
StructureSummary classify_structure(const LieTable& t);

}  // namespace tanaka
