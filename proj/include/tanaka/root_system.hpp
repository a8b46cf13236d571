#ifndef TANAKA_ROOT_SYSTEM_HPP
#define TANAKA_ROOT_SYSTEM_HPP

#include <set>
#include <vector>

#include "tanaka/matrix.hpp"

namespace tanaka {

/// Integer coordinate vector (root coordinates, fundamental-weight coordinates).
using IntVec = std::vector<long>;
/// Rational coordinate vector (weights that need not be integral).
using RatVec = std::vector<Rational>;

/// Root system of a finite-dimensional semisimple Lie algebra, built from its
/// Cartan matrix. Conventions:
///   - cartan[i][j] = <alpha_j, alpha_i^vee>, so [h_i, e_j] = cartan[i][j] e_j;
///   - roots are stored in simple-root coordinates (integer vectors);
///   - the fundamental-weight ("m") coordinates of a root c are C*c;
///   - the invariant form is normalized so short roots have squared length 2
///     in each component.
struct RootSystem {
  std::vector<IntVec> cartan;
  int rank = 0;
  /// Symmetrizer d_i = (alpha_i, alpha_i)/2; min over each component is 1.
  std::vector<Rational> sym;
  /// Positive roots in root coordinates, sorted by (height, lex).
  std::vector<IntVec> positive_roots;
  /// All roots (positive and negative) for membership tests.
  std::set<IntVec> root_set;
  /// Connected components of the Dynkin diagram, each a sorted list of nodes.
  std::vector<std::vector<int>> components;
  /// component_of[i] = index into `components` of the component containing node i.
  std::vector<int> component_of;

  bool is_root(const IntVec& root_coords) const { return root_set.count(root_coords) > 0; }

  /// m-coordinates of a vector given in root coordinates (m = C * c).
  IntVec to_fund(const IntVec& root_coords) const;

  /// Root coordinates of a weight given in m-coordinates (rational in general).
  RatVec to_root_coords(const RatVec& fund) const;

  /// Invariant scalar product of two weights in m-coordinates.
  Rational pairing(const RatVec& fund1, const RatVec& fund2) const;

  /// <mu, gamma^vee> = 2(mu, gamma)/(gamma, gamma) for a root gamma.
  Rational pair_coroot(const RatVec& fund, const IntVec& root_coords) const;

  /// Highest root of one component, in root coordinates.
  IntVec highest_root(int component) const;

  /// Simple reflection s_i acting on m-coordinates.
  RatVec reflect_fund(int i, const RatVec& fund) const;

  /// The dominant Weyl-chamber representative of a weight in m-coordinates.
  IntVec dominant_representative(const IntVec& fund) const;
};

/// Builds and validates the root system. Throws std::invalid_argument for
/// matrices that are not Cartan matrices of finite type (diagonal 2, nonpositive
/// integers off the diagonal, symmetrizable, positive definite after
/// symmetrization). `max_roots` guards the reflection closure.
RootSystem root_system_from_cartan(const std::vector<IntVec>& cartan, std::size_t max_roots = 10000);

/// Height (coordinate sum) helper for root coordinates.
long height(const IntVec& root_coords);

RatVec rat_vec(const IntVec& v);

}  // namespace tanaka

#endif
