#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tanaka/chevalley.hpp"
#include "tanaka/lie_table.hpp"
#include "tanaka/weights.hpp"

namespace tanaka {

/// Realification of a complex table (field "Qi", complex dimension n) as a
/// real table (field "Q", dimension 2n) on the basis
/// b_0, ..., b_{n-1}, i*b_0, ..., i*b_{n-1}.
LieTable realify_table(const LieTable& t);
/// n complex coordinates -> 2n real coordinates (real parts then imaginary).
Vec realify_vec(const Vec& v);
/// Real 2n x 2n matrix of a complex-linear map A + iB: [[A, -B], [B, A]].
Mat realify_mat(const Mat& m);
/// The complex structure of the realification (multiplication by i).
Mat multiplication_by_i(long n);

struct RealForm {
    LieTable table;                    // field "Q", real dimension n
    std::vector<Vec> basis_realified;  // coordinates inside the realified algebra
};

/// Fixed points of the antilinear involution sigma(x) = S * conj(x), with S
/// and conj taken in basis coordinates of the complex table.  Verifies that
/// S * conj(S) = Id and that sigma preserves brackets, and that the fixed
/// subspace has real dimension n and closes under the bracket; throws
/// std::invalid_argument / std::runtime_error otherwise.
RealForm real_form_fixed_points(const LieTable& complex_table, const Mat& S);

/// Involution matrices for real forms of sl(n, C) in Chevalley-basis
/// coordinates, computed through the defining module V(omega_1):
///   su(p, q):  X -> -I_{p,q} X^dagger I_{p,q}   (p + q = n)
///   su(n):     involution_su(cb, n, 0)
///   sl(n, R):  X -> conj(X), the identity on the integer Chevalley basis.
Mat involution_su(const ChevalleyBasis& cb, int p, int q);
Mat involution_sl_real(const ChevalleyBasis& cb);

/// Decomposes a weight multiset (m-coordinates -> multiplicity) into
/// irreducible characters by repeatedly peeling the dominance-maximal weight.
/// Returns (highest weight, multiplicity) pairs in peeling order.  Throws
/// std::runtime_error naming the offending weight when the multiset is not a
/// nonnegative sum of irreducible characters.
std::vector<std::pair<IntVec, long>> decompose_character(const RootSystem& rs,
                                                         const std::map<IntVec, long>& weights);

}  // namespace tanaka
