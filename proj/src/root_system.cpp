#include "tanaka/root_system.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace tanaka {

long height(const IntVec& root_coords) {
  long h = 0;
  for (long c : root_coords) h += c;
  return h;
}

RatVec rat_vec(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) r[k] = Rational(v[k]);
  return r;
}

IntVec RootSystem::to_fund(const IntVec& c) const {
  IntVec m(static_cast<std::size_t>(rank), 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) m[static_cast<std::size_t>(i)] += cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(j)];
  return m;
}

RatVec RootSystem::to_root_coords(const RatVec& fund) const {
  Mat c(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) c(i, j) = Scalar(Rational(cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
  Vec b(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) b[static_cast<std::size_t>(i)] = Scalar(fund[static_cast<std::size_t>(i)]);
  auto sol = solve(c, b);
  if (!sol) throw std::logic_error("Cartan matrix is singular");
  RatVec r(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) r[static_cast<std::size_t>(i)] = (*sol)[static_cast<std::size_t>(i)].as_rational();
  return r;
}

Rational RootSystem::pairing(const RatVec& f1, const RatVec& f2) const {
  // (mu, alpha_j) = m_j(mu) * d_j; expand the second argument in simple roots.
  RatVec c2 = to_root_coords(f2);
  Rational acc(0);
  for (int j = 0; j < rank; ++j) acc += c2[static_cast<std::size_t>(j)] * f1[static_cast<std::size_t>(j)] * sym[static_cast<std::size_t>(j)];
  return acc;
}

Rational RootSystem::pair_coroot(const RatVec& fund, const IntVec& root_coords) const {
  RatVec g = rat_vec(to_fund(root_coords));
  Rational num = pairing(fund, g) * 2;
  Rational den = pairing(g, g);
  return num / den;
}

IntVec RootSystem::highest_root(int component) const {
  const auto& nodes = components[static_cast<std::size_t>(component)];
  std::set<int> node_set(nodes.begin(), nodes.end());
  const IntVec* best = nullptr;
  for (const auto& r : positive_roots) {
    bool in_component = true;
    for (int j = 0; j < rank && in_component; ++j) {
      if (r[static_cast<std::size_t>(j)] != 0 && !node_set.count(j)) in_component = false;
    }
    if (!in_component) continue;
    if (!best || height(r) > height(*best)) best = &r;
  }
  if (!best) throw std::logic_error("component without roots");
  return *best;
}

RatVec RootSystem::reflect_fund(int i, const RatVec& fund) const {
  // s_i(mu) = mu - <mu, alpha_i^vee> alpha_i; <mu, alpha_i^vee> = fund[i].
  RatVec r = fund;
  Rational mi = fund[static_cast<std::size_t>(i)];
  for (int j = 0; j < rank; ++j)
    r[static_cast<std::size_t>(j)] -= mi * Rational(cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
  return r;
}

IntVec RootSystem::dominant_representative(const IntVec& fund) const {
  RatVec m = rat_vec(fund);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank; ++i) {
      if (m[static_cast<std::size_t>(i)] < 0) {
        m = reflect_fund(i, m);
        changed = true;
      }
    }
  }
  IntVec out(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) out[static_cast<std::size_t>(i)] = rational_to_long(m[static_cast<std::size_t>(i)]);
  return out;
}

RootSystem root_system_from_cartan(const std::vector<IntVec>& cartan, std::size_t max_roots) {
  RootSystem rs;
  rs.cartan = cartan;
  rs.rank = static_cast<int>(cartan.size());
  const int n = rs.rank;
  if (n == 0) throw std::invalid_argument("empty Cartan matrix");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cartan[static_cast<std::size_t>(i)].size()) != n)
      throw std::invalid_argument("Cartan matrix is not square");
    if (cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 2)
      throw std::invalid_argument("Cartan matrix diagonal entries must equal 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      long cij = cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      long cji = cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (cij > 0) throw std::invalid_argument("Cartan matrix off-diagonal entries must be <= 0");
      if ((cij == 0) != (cji == 0))
        throw std::invalid_argument("Cartan matrix zero pattern must be symmetric");
    }
  }

  // Connected components of the Dynkin diagram.
  rs.component_of.assign(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (rs.component_of[static_cast<std::size_t>(start)] >= 0) continue;
    int id = static_cast<int>(rs.components.size());
    std::vector<int> nodes;
    std::queue<int> q;
    q.push(start);
    rs.component_of[static_cast<std::size_t>(start)] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      nodes.push_back(v);
      for (int w = 0; w < n; ++w) {
        if (w != v && cartan[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] != 0 &&
            rs.component_of[static_cast<std::size_t>(w)] < 0) {
          rs.component_of[static_cast<std::size_t>(w)] = id;
          q.push(w);
        }
      }
    }
    std::sort(nodes.begin(), nodes.end());
    rs.components.push_back(std::move(nodes));
  }

  // Symmetrizer: propagate d_j = d_i * C_ij / C_ji along diagram edges, then
  // scale each component so its minimum is 1.
  rs.sym.assign(static_cast<std::size_t>(n), Rational(0));
  for (const auto& nodes : rs.components) {
    std::queue<int> q;
    q.push(nodes[0]);
    rs.sym[static_cast<std::size_t>(nodes[0])] = Rational(1);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w = 0; w < n; ++w) {
        if (w == v || cartan[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] == 0) continue;
        if (rs.sym[static_cast<std::size_t>(w)] != 0) continue;
        rs.sym[static_cast<std::size_t>(w)] =
            rs.sym[static_cast<std::size_t>(v)] * Rational(cartan[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) /
            Rational(cartan[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)]);
        q.push(w);
      }
    }
    Rational mn = rs.sym[static_cast<std::size_t>(nodes[0])];
    for (int v : nodes) mn = std::min(mn, rs.sym[static_cast<std::size_t>(v)]);
    for (int v : nodes) rs.sym[static_cast<std::size_t>(v)] /= mn;
  }
  // Symmetrizability check: d_i C_ij must be symmetric (fails e.g. for cycles
  // with inconsistent multiplicities).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational lhs = rs.sym[static_cast<std::size_t>(i)] * Rational(cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      Rational rhs = rs.sym[static_cast<std::size_t>(j)] * Rational(cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
      if (lhs != rhs) throw std::invalid_argument("Cartan matrix is not symmetrizable");
    }

  // Positive definiteness of the symmetrized matrix (leading principal minors),
  // which is exactly finiteness of the root system.
  {
    Mat b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        b(i, j) = Scalar(rs.sym[static_cast<std::size_t>(i)] * Rational(cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    for (int k = 1; k <= n; ++k) {
      Mat lead(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) lead(i, j) = b(i, j);
      Scalar d = det(lead);
      if (d.as_rational() <= 0)
        throw std::invalid_argument("Cartan matrix is not of finite type");
    }
  }

  // Roots: close the simple roots under all simple reflections.
  std::set<IntVec> roots;
  std::queue<IntVec> work;
  for (int i = 0; i < n; ++i) {
    IntVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    roots.insert(e);
    work.push(e);
  }
  while (!work.empty()) {
    IntVec c = work.front();
    work.pop();
    IntVec m = rs.to_fund(c);
    for (int i = 0; i < n; ++i) {
      IntVec refl = c;
      refl[static_cast<std::size_t>(i)] -= m[static_cast<std::size_t>(i)];
      if (roots.insert(refl).second) {
        if (roots.size() > max_roots) throw std::invalid_argument("root closure exceeded bound");
        work.push(refl);
      }
    }
  }
  rs.root_set = roots;
  for (const auto& r : roots) {
    bool nonneg = true;
    for (long c : r)
      if (c < 0) nonneg = false;
    if (nonneg) rs.positive_roots.push_back(r);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const IntVec& a, const IntVec& b) {
    long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return rs;
}

}  // namespace tanaka
