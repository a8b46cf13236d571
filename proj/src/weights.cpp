#include "tanaka/weights.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace tanaka {

namespace {

void check_dominant(const RootSystem& rs, const IntVec& highest) {
  if (static_cast<int>(highest.size()) != rs.rank)
    throw std::invalid_argument("highest weight has wrong rank");
  for (long m : highest)
    if (m < 0) throw std::invalid_argument("highest weight is not dominant");
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

/// lambda - mu expressed in root coordinates if it lies in the nonnegative
/// root lattice, nullopt otherwise.
std::optional<IntVec> cone_coords(const RootSystem& rs, const IntVec& lambda, const IntVec& mu) {
  RatVec diff = rs.to_root_coords(rat_vec(sub(lambda, mu)));
  IntVec out(diff.size());
  for (std::size_t k = 0; k < diff.size(); ++k) {
    if (!is_integer(diff[k]) || diff[k] < 0) return std::nullopt;
    out[k] = rational_to_long(diff[k]);
  }
  return out;
}

}  // namespace

long weyl_dim(const RootSystem& rs, const IntVec& highest) {
  check_dominant(rs, highest);
  RatVec lam_rho(static_cast<std::size_t>(rs.rank));
  RatVec rho(static_cast<std::size_t>(rs.rank));
  for (int i = 0; i < rs.rank; ++i) {
    rho[static_cast<std::size_t>(i)] = Rational(1);
    lam_rho[static_cast<std::size_t>(i)] = Rational(highest[static_cast<std::size_t>(i)] + 1);
  }
  Rational prod(1);
  for (const auto& alpha : rs.positive_roots) {
    RatVec a = rat_vec(rs.to_fund(alpha));
    prod *= rs.pairing(lam_rho, a) / rs.pairing(rho, a);
  }
  return rational_to_long(prod);
}

WeightSystem weight_system(const RootSystem& rs, const IntVec& highest, long dim_cap) {
  check_dominant(rs, highest);
  long expected_dim = weyl_dim(rs, highest);
  if (expected_dim > dim_cap)
    throw std::runtime_error("module dimension " + std::to_string(expected_dim) +
                             " exceeds cap " + std::to_string(dim_cap));

  // Weight set: everything whose dominant representative lies under `highest`,
  // found by walking down simple roots from the top.
  std::set<IntVec> seen;
  std::queue<IntVec> work;
  seen.insert(highest);
  work.push(highest);
  // level = height of (highest - mu); grouped for the Freudenthal pass.
  std::map<long, std::vector<IntVec>> by_level;
  while (!work.empty()) {
    IntVec mu = work.front();
    work.pop();
    auto cc = cone_coords(rs, highest, mu);
    by_level[height(*cc)].push_back(mu);
    for (int i = 0; i < rs.rank; ++i) {
      // mu - alpha_i in m-coordinates: subtract column i of the Cartan matrix.
      IntVec next(mu);
      for (int j = 0; j < rs.rank; ++j)
        next[static_cast<std::size_t>(j)] -= rs.cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (seen.count(next)) continue;
      IntVec dom = rs.dominant_representative(next);
      if (!cone_coords(rs, highest, dom)) continue;
      seen.insert(next);
      work.push(next);
    }
  }

  RatVec rho(static_cast<std::size_t>(rs.rank), Rational(1));
  RatVec lam_rho = rat_vec(highest);
  for (auto& x : lam_rho) x += 1;
  Rational top_norm = rs.pairing(lam_rho, lam_rho);

  WeightSystem ws;
  ws.highest = highest;
  for (const auto& [level, mus] : by_level) {
    for (const auto& mu : mus) {
      if (level == 0) {
        ws.multiplicity[mu] = 1;
        continue;
      }
      bool dominant = true;
      for (long m : mu)
        if (m < 0) dominant = false;
      if (!dominant) {
        IntVec dom = rs.dominant_representative(mu);
        ws.multiplicity[mu] = ws.multiplicity.at(dom);
        continue;
      }
      // Freudenthal: (|l+rho|^2 - |mu+rho|^2) m_mu = 2 sum_{a>0} sum_{k>=1} m_{mu+ka} (mu+ka, a).
      Rational num(0);
      for (const auto& alpha : rs.positive_roots) {
        IntVec am = rs.to_fund(alpha);
        RatVec af = rat_vec(am);
        IntVec nu = mu;
        for (long k = 1;; ++k) {
          nu = add(nu, am);
          auto it = ws.multiplicity.find(nu);
          if (it == ws.multiplicity.end()) break;
          num += Rational(2 * it->second) * rs.pairing(rat_vec(nu), af);
        }
      }
      RatVec mu_rho = rat_vec(mu);
      for (auto& x : mu_rho) x += 1;
      Rational den = top_norm - rs.pairing(mu_rho, mu_rho);
      Rational m = num / den;
      long mult = rational_to_long(m);
      if (mult <= 0) throw std::logic_error("Freudenthal produced nonpositive multiplicity");
      ws.multiplicity[mu] = mult;
    }
  }
  for (const auto& [mu, m] : ws.multiplicity) ws.dim += m;
  if (ws.dim != expected_dim)
    throw std::logic_error("weight system dimension disagrees with the Weyl dimension formula");
  return ws;
}

}  // namespace tanaka
