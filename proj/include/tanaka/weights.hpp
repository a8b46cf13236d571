#ifndef TANAKA_WEIGHTS_HPP
#define TANAKA_WEIGHTS_HPP

#include <map>

#include "tanaka/root_system.hpp"

namespace tanaka {

/// Weight diagram of an irreducible highest-weight module, weights in
/// m-coordinates with their multiplicities.
struct WeightSystem {
  IntVec highest;
  std::map<IntVec, long> multiplicity;
  long dim = 0;

  bool contains(const IntVec& fund) const { return multiplicity.count(fund) > 0; }
  long mult(const IntVec& fund) const {
    auto it = multiplicity.find(fund);
    return it == multiplicity.end() ? 0 : it->second;
  }
};

/// Dimension of the irreducible module with the given dominant highest weight
/// (Weyl dimension formula; exact).
long weyl_dim(const RootSystem& rs, const IntVec& highest);

/// All weights of the irreducible module with their multiplicities
/// (Freudenthal recursion on dominant weights, Weyl-invariance elsewhere).
/// Throws std::invalid_argument for non-dominant input and std::runtime_error
/// if the dimension exceeds `dim_cap`. The total is cross-checked against the
/// Weyl dimension formula.
WeightSystem weight_system(const RootSystem& rs, const IntVec& highest, long dim_cap = 100000);

}  // namespace tanaka

#endif
