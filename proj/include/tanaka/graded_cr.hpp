#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tanaka/chevalley.hpp"
#include "tanaka/root_system.hpp"
#include "tanaka/weights.hpp"

namespace tanaka {

/// Semisimple graded algebra with a CR structure, described at the root
/// level: the grading element E has alpha_i(E) = e_i and the structure
/// element J has alpha_i(J) = i * j_i on the simple roots.
struct CRAlgebra {
    RootSystem rs;
    IntVec e;  // in {0, 1}: the grading is fundamental and transitive
    IntVec j;  // in {-1, +1} exactly on the graded simples, 0 elsewhere
    /// Every component has kind >= 2 (highest root E-value at least 2).
    bool levi_tanaka = false;
    /// Degree -1 roots and their split by J-eigenvalue (+i / -i).
    std::vector<IntVec> r_m1, r10, r01;
    /// Negatives of simple roots: ungraded (b0), graded with j = -1 (b10,
    /// these lie in r10), graded with j = +1 (b01).
    std::vector<IntVec> b0, b10, b01;
};

/// Validates and assembles the CR data.  Checks, with witnesses in the
/// exception message: e_i in {0,1}; at least one graded simple per component;
/// j_i = 0 on ungraded simples; j_i in {-1,+1} on graded simples; and the
/// compatibility axiom [JX, JY] = [X, Y] on the degree -1 layer, i.e. no two
/// roots in the same J-eigenspace may sum to a root.
CRAlgebra attach_cr(const RootSystem& rs, const IntVec& e, const IntVec& j);

/// lambda(E) and lambda(J)/i for a weight in m-coordinates.
Rational weight_E_value(const CRAlgebra& alg, const IntVec& fund);
Rational weight_J_value(const CRAlgebra& alg, const IntVec& fund);

/// Degrees for a Chevalley table under the grading alpha_i(E) = e_i:
/// Cartan generators sit in degree 0, root vectors in degree gamma(E).
/// Lenient: any integer e is accepted, including zero.
std::vector<long> algebra_grading(const ChevalleyBasis& cb, const IntVec& e);

/// Coordinates (in the Chevalley basis) of the Cartan element with the given
/// values on the simple roots; for E the values are e, for J they are i*j.
Vec grading_element(const ChevalleyBasis& cb, const Vec& values_on_simples);

/// Shift candidates k: for every E-value v of a weight of the module, the
/// shift k = -1 - v puts that weight in degree -1.  Deduplicated, ascending;
/// only shifts with nonempty degree -1 and degree -2 layers survive
/// (a module with no degree -2 part cannot be nondegenerate).
std::vector<Rational> enumerate_shifts(const CRAlgebra& alg, const WeightSystem& ws);

/// Distinct weights per degree (degree = lambda(E) + shift, always integral
/// for enumerated shifts), each list sorted.
std::map<long, std::vector<IntVec>> weights_by_degree(const CRAlgebra& alg, const WeightSystem& ws,
                                                      const Rational& shift);

/// Condition on the degree 0 and -2 layers: ad(J) must act by one common
/// scalar k*i there.  On failure `witness` names two weights with different
/// values.
struct ConditionII {
    bool ok = false;
    Rational k;
    std::string witness;
};
ConditionII check_condition_ii(const CRAlgebra& alg, const WeightSystem& ws, const Rational& shift);

/// Degree -2 layer must not reach the weight diagram by the four forbidden
/// root combinations (-a-a', -b-b', -a+b, +a-b with a in R^{1,0}, b in
/// R^{0,1}), whose J-eigenvalues would shift by +-2i.  Returns one message
/// per violation; empty means the condition holds.
std::vector<std::string> check_condition_iii(const CRAlgebra& alg, const WeightSystem& ws,
                                             const Rational& shift);

/// The same scan in structured form, as (degree -2 weight, reached weight)
/// pairs, deduplicated and sorted; used for diagram overlays.
std::vector<std::pair<IntVec, IntVec>> condition_iii_pairs(const CRAlgebra& alg,
                                                           const WeightSystem& ws,
                                                           const Rational& shift);

/// Splits the degree -1 layer into P^{1,0} = (P_{-2} - R^{0,1}) and
/// P^{0,1} = (P_{-2} - R^{1,0}) intersected with the diagram, then checks
/// that the split is a partition, that it is stable under the ungraded
/// simple directions, and that the four graded-simple closure products
/// vanish.  On failure `witness` explains the first obstruction.
struct PartitionIV {
    bool ok = false;
    std::vector<IntVec> p10, p01;
    std::string witness;
};
PartitionIV build_partition_iv(const CRAlgebra& alg, const WeightSystem& ws, const Rational& shift);

struct AdmissibleStructure {
    Rational shift;
    Rational k;  // common J-scalar on degrees 0 and -2
    std::map<long, std::vector<IntVec>> by_degree;
    std::vector<IntVec> p10, p01;
};

struct ShiftRejection {
    Rational shift;
    std::string reason;
};

struct AdmissibilityReport {
    IntVec highest;
    std::vector<AdmissibleStructure> structures;
    std::vector<ShiftRejection> rejections;
};

/// Runs the shift enumeration and all three conditions for the irreducible
/// module with the given highest weight.  Internal cross-checks (multiplicity
/// one on the partitioned layer, J-eigenvalues k+1 on P^{1,0} and k-1 on
/// P^{0,1}) throw std::runtime_error; condition failures land in
/// `rejections`.
AdmissibilityReport admissible_structures(const CRAlgebra& alg, const IntVec& highest,
                                          long dim_cap = 100000);

/// Verdict for a module of a real form of the algebra.  The conjugate of the
/// irreducible with highest weight lambda is the dual module; complex-type
/// modules pair with their conjugate, self-conjugate ones carry a real or
/// quaternionic structure and then force k = 0.
struct RealModuleVerdict {
    IntVec highest;
    IntVec conjugate;   // dual weight -w0(lambda)
    std::string type;   // "real" | "quaternionic" | "complex"
    AdmissibilityReport report;  // for complex type: structures of the lambda side
    /// Structures dropped from the self-conjugate case because k != 0.
    std::vector<ShiftRejection> dropped;
};

/// `type_hint` overrides the type for self-conjugate weights; without a hint
/// the compact-form parity indicator (-1)^{<lambda, sum of positive coroots>}
/// decides between "real" and "quaternionic".  For complex type the
/// conjugate side is recomputed and must mirror the lambda side with negated
/// k; disagreement throws std::runtime_error naming the weight.
RealModuleVerdict real_form_admissible(const CRAlgebra& alg, const IntVec& highest,
                                       const std::string& type_hint = "", long dim_cap = 100000);

}  // namespace tanaka
