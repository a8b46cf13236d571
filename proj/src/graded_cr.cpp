#include "tanaka/graded_cr.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tanaka {
namespace {

std::string ivec_string(const IntVec& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

std::string rat_string(const Rational& r) { return rational_to_string(r); }

IntVec negate(const IntVec& v) {
    IntVec out(v);
    for (auto& x : out) x = -x;
    return out;
}

IntVec add(const IntVec& a, const IntVec& b) {
    IntVec out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

/// m-coordinates of a root given in root coordinates.
IntVec root_fund(const RootSystem& rs, const IntVec& root_coords) { return rs.to_fund(root_coords); }

Rational root_value(const IntVec& root_coords, const IntVec& weights_on_simples) {
    Rational v;
    for (std::size_t i = 0; i < root_coords.size(); ++i) v += Rational(root_coords[i] * weights_on_simples[i]);
    return v;
}

/// Permutation p with -w0(omega_i) = omega_{p(i)}; the induced conjugation
/// on m-coordinates sends m to m', m'[p[i]] = m[i].
std::vector<int> duality_permutation(const RootSystem& rs) {
    std::vector<int> p(static_cast<std::size_t>(rs.rank), -1);
    for (int i = 0; i < rs.rank; ++i) {
        IntVec unit(static_cast<std::size_t>(rs.rank), 0);
        unit[static_cast<std::size_t>(i)] = 1;
        IntVec img = rs.dominant_representative(negate(unit));
        int j = -1;
        for (int t = 0; t < rs.rank; ++t) {
            if (img[static_cast<std::size_t>(t)] == 1)
                j = j == -1 ? t : -2;
            else if (img[static_cast<std::size_t>(t)] != 0)
                j = -2;
        }
        if (j < 0) throw std::runtime_error("duality_permutation: -w0 does not permute the fundamentals");
        p[static_cast<std::size_t>(i)] = j;
    }
    return p;
}

IntVec permute_weight(const std::vector<int>& p, const IntVec& m) {
    IntVec out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[static_cast<std::size_t>(p[i])] = m[i];
    return out;
}

}  // namespace

CRAlgebra attach_cr(const RootSystem& rs, const IntVec& e, const IntVec& j) {
    if (static_cast<int>(e.size()) != rs.rank || static_cast<int>(j.size()) != rs.rank)
        throw std::invalid_argument("attach_cr: e and j must have one entry per simple root");
    CRAlgebra alg;
    alg.rs = rs;
    alg.e = e;
    alg.j = j;
    for (int i = 0; i < rs.rank; ++i) {
        if (e[static_cast<std::size_t>(i)] != 0 && e[static_cast<std::size_t>(i)] != 1)
            throw std::invalid_argument("attach_cr: fundamental gradation needs alpha_" + std::to_string(i + 1) +
                                        " in degree 0 or 1, got " + std::to_string(e[static_cast<std::size_t>(i)]));
        if (e[static_cast<std::size_t>(i)] == 0 && j[static_cast<std::size_t>(i)] != 0)
            throw std::invalid_argument("attach_cr: ungraded simple alpha_" + std::to_string(i + 1) +
                                        " must carry J-value 0, got " + std::to_string(j[static_cast<std::size_t>(i)]));
        if (e[static_cast<std::size_t>(i)] == 1 && j[static_cast<std::size_t>(i)] != 1 &&
            j[static_cast<std::size_t>(i)] != -1)
            throw std::invalid_argument("attach_cr: graded simple alpha_" + std::to_string(i + 1) +
                                        " needs J-value +1 or -1, got " + std::to_string(j[static_cast<std::size_t>(i)]));
    }
    for (std::size_t c = 0; c < rs.components.size(); ++c) {
        bool graded = false;
        for (int node : rs.components[c]) graded = graded || e[static_cast<std::size_t>(node)] == 1;
        if (!graded)
            throw std::invalid_argument("attach_cr: component " + std::to_string(c + 1) +
                                        " has no graded simple root (grading is not transitive)");
    }

    for (const IntVec& root : rs.root_set) {
        if (root_value(root, e) != Rational(-1)) continue;
        alg.r_m1.push_back(root);
        Rational jv = root_value(root, j);
        if (jv == 1)
            alg.r10.push_back(root);
        else if (jv == -1)
            alg.r01.push_back(root);
        else
            throw std::logic_error("attach_cr: degree -1 root with J-value outside {+1,-1}");
    }
    auto same_space_sum = [&](const std::vector<IntVec>& part, const char* name) {
        for (std::size_t a = 0; a < part.size(); ++a)
            for (std::size_t b = a + 1; b < part.size(); ++b)
                if (rs.is_root(add(part[a], part[b])))
                    throw std::invalid_argument(std::string("attach_cr: roots ") + ivec_string(part[a]) + " and " +
                                                ivec_string(part[b]) + " lie in " + name +
                                                " but their sum is a root (breaks [JX,JY]=[X,Y])");
    };
    same_space_sum(alg.r10, "R^{1,0}");
    same_space_sum(alg.r01, "R^{0,1}");

    for (int i = 0; i < rs.rank; ++i) {
        IntVec neg(static_cast<std::size_t>(rs.rank), 0);
        neg[static_cast<std::size_t>(i)] = -1;
        if (e[static_cast<std::size_t>(i)] == 0)
            alg.b0.push_back(neg);
        else if (j[static_cast<std::size_t>(i)] == -1)
            alg.b10.push_back(neg);
        else
            alg.b01.push_back(neg);
    }

    alg.levi_tanaka = true;
    for (std::size_t c = 0; c < rs.components.size(); ++c) {
        if (root_value(rs.highest_root(static_cast<int>(c)), e) < Rational(2)) alg.levi_tanaka = false;
    }
    return alg;
}

Rational weight_E_value(const CRAlgebra& alg, const IntVec& fund) {
    RatVec rc = alg.rs.to_root_coords(rat_vec(fund));
    Rational v;
    for (int i = 0; i < alg.rs.rank; ++i) v += rc[static_cast<std::size_t>(i)] * Rational(alg.e[static_cast<std::size_t>(i)]);
    return v;
}

Rational weight_J_value(const CRAlgebra& alg, const IntVec& fund) {
    RatVec rc = alg.rs.to_root_coords(rat_vec(fund));
    Rational v;
    for (int i = 0; i < alg.rs.rank; ++i) v += rc[static_cast<std::size_t>(i)] * Rational(alg.j[static_cast<std::size_t>(i)]);
    return v;
}

std::vector<long> algebra_grading(const ChevalleyBasis& cb, const IntVec& e) {
    if (static_cast<int>(e.size()) != cb.rs.rank)
        throw std::invalid_argument("algebra_grading: one entry per simple root required");
    std::vector<long> deg(static_cast<std::size_t>(cb.dim()), 0);
    for (std::size_t k = 0; k < cb.rs.positive_roots.size(); ++k) {
        long d = 0;
        for (int i = 0; i < cb.rs.rank; ++i)
            d += cb.rs.positive_roots[k][static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(i)];
        deg[static_cast<std::size_t>(cb.pos_index(static_cast<long>(k)))] = d;
        deg[static_cast<std::size_t>(cb.neg_index(static_cast<long>(k)))] = -d;
    }
    return deg;
}

Vec grading_element(const ChevalleyBasis& cb, const Vec& values_on_simples) {
    const int r = cb.rs.rank;
    if (static_cast<int>(values_on_simples.size()) != r)
        throw std::invalid_argument("grading_element: one value per simple root required");
    // [sum t_i h_i, x_{alpha_j}] = (sum_i t_i C_{ij}) x_{alpha_j}; solve C^T t = values.
    Mat ct(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) ct(j, i) = Scalar(Rational(cb.rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    std::optional<Vec> t = solve(ct, values_on_simples);
    if (!t) throw std::runtime_error("grading_element: Cartan matrix is singular");
    Vec out(static_cast<std::size_t>(cb.dim()));
    for (int i = 0; i < r; ++i) out[static_cast<std::size_t>(cb.h_index(i))] = (*t)[static_cast<std::size_t>(i)];
    return out;
}

std::vector<Rational> enumerate_shifts(const CRAlgebra& alg, const WeightSystem& ws) {
    std::set<Rational> values;
    for (const auto& [m, mult] : ws.multiplicity) values.insert(weight_E_value(alg, m));
    std::vector<Rational> out;
    for (const Rational& v : values) {
        Rational k = Rational(-1) - v;
        bool deg1 = false, deg2 = false;
        for (const Rational& w : values) {
            if (w + k == Rational(-1)) deg1 = true;
            if (w + k == Rational(-2)) deg2 = true;
        }
        if (deg1 && deg2) out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<long, std::vector<IntVec>> weights_by_degree(const CRAlgebra& alg, const WeightSystem& ws,
                                                      const Rational& shift) {
    std::map<long, std::vector<IntVec>> out;
    for (const auto& [m, mult] : ws.multiplicity) {
        Rational d = weight_E_value(alg, m) + shift;
        if (!is_integer(d))
            throw std::invalid_argument("weights_by_degree: weight " + ivec_string(m) +
                                        " lands in non-integral degree " + rat_string(d));
        out[rational_to_long(d)].push_back(m);
    }
    for (auto& [d, list] : out) std::sort(list.begin(), list.end());
    return out;
}

ConditionII check_condition_ii(const CRAlgebra& alg, const WeightSystem& ws, const Rational& shift) {
    ConditionII res;
    auto by_degree = weights_by_degree(alg, ws, shift);
    bool have = false;
    IntVec ref;
    for (long d : {0L, -2L}) {
        auto it = by_degree.find(d);
        if (it == by_degree.end()) continue;
        for (const IntVec& m : it->second) {
            Rational v = weight_J_value(alg, m);
            if (!have) {
                res.k = v;
                ref = m;
                have = true;
            } else if (v != res.k) {
                res.ok = false;
                res.witness = "condition (ii): weight " + ivec_string(ref) + " has J-value " + rat_string(res.k) +
                              " but " + ivec_string(m) + " has " + rat_string(v) +
                              " (ad J is not scalar on degrees 0 and -2)";
                return res;
            }
        }
    }
    res.ok = true;
    return res;
}

std::vector<std::string> check_condition_iii(const CRAlgebra& alg, const WeightSystem& ws,
                                             const Rational& shift) {
    std::vector<std::string> violations;
    auto by_degree = weights_by_degree(alg, ws, shift);
    auto it = by_degree.find(-2);
    if (it == by_degree.end()) return violations;
    auto emit = [&](const IntVec& lambda, const char* combo, const IntVec& r1, const IntVec& r2, const IntVec& hit) {
        violations.push_back("condition (iii): " + ivec_string(lambda) + " " + combo + " with roots " +
                             ivec_string(r1) + ", " + ivec_string(r2) + " lands on weight " + ivec_string(hit));
    };
    for (const IntVec& lambda : it->second) {
        for (std::size_t a = 0; a < alg.r10.size(); ++a)
            for (std::size_t b = a; b < alg.r10.size(); ++b) {
                IntVec target = add(lambda, negate(root_fund(alg.rs, add(alg.r10[a], alg.r10[b]))));
                if (ws.contains(target)) emit(lambda, "- a - a'", alg.r10[a], alg.r10[b], target);
            }
        for (std::size_t a = 0; a < alg.r01.size(); ++a)
            for (std::size_t b = a; b < alg.r01.size(); ++b) {
                IntVec target = add(lambda, negate(root_fund(alg.rs, add(alg.r01[a], alg.r01[b]))));
                if (ws.contains(target)) emit(lambda, "- b - b'", alg.r01[a], alg.r01[b], target);
            }
        for (const IntVec& a : alg.r10)
            for (const IntVec& b : alg.r01) {
                IntVec diff = root_fund(alg.rs, add(negate(a), b));
                IntVec t1 = add(lambda, diff);
                if (ws.contains(t1)) emit(lambda, "- a + b", a, b, t1);
                IntVec t2 = add(lambda, negate(diff));
                if (ws.contains(t2)) emit(lambda, "+ a - b", a, b, t2);
            }
    }
    return violations;
}

std::vector<std::pair<IntVec, IntVec>> condition_iii_pairs(const CRAlgebra& alg,
                                                           const WeightSystem& ws,
                                                           const Rational& shift) {
    std::set<std::pair<IntVec, IntVec>> pairs;
    auto by_degree = weights_by_degree(alg, ws, shift);
    auto it = by_degree.find(-2);
    if (it == by_degree.end()) return {};
    for (const IntVec& lambda : it->second) {
        auto probe = [&](const IntVec& step) {
            IntVec target = add(lambda, step);
            if (ws.contains(target)) pairs.emplace(lambda, target);
        };
        for (std::size_t a = 0; a < alg.r10.size(); ++a)
            for (std::size_t b = a; b < alg.r10.size(); ++b)
                probe(negate(root_fund(alg.rs, add(alg.r10[a], alg.r10[b]))));
        for (std::size_t a = 0; a < alg.r01.size(); ++a)
            for (std::size_t b = a; b < alg.r01.size(); ++b)
                probe(negate(root_fund(alg.rs, add(alg.r01[a], alg.r01[b]))));
        for (const IntVec& a : alg.r10)
            for (const IntVec& b : alg.r01) {
                const IntVec diff = root_fund(alg.rs, add(negate(a), b));
                probe(diff);
                probe(negate(diff));
            }
    }
    return {pairs.begin(), pairs.end()};
}

PartitionIV build_partition_iv(const CRAlgebra& alg, const WeightSystem& ws, const Rational& shift) {
    PartitionIV res;
    auto by_degree = weights_by_degree(alg, ws, shift);
    std::set<IntVec> p10, p01, pm1;
    if (by_degree.count(-1))
        pm1.insert(by_degree.at(-1).begin(), by_degree.at(-1).end());
    if (by_degree.count(-2)) {
        for (const IntVec& lambda : by_degree.at(-2)) {
            for (const IntVec& b : alg.r01) {
                IntVec m = add(lambda, negate(root_fund(alg.rs, b)));
                if (ws.contains(m)) p10.insert(m);
            }
            for (const IntVec& a : alg.r10) {
                IntVec m = add(lambda, negate(root_fund(alg.rs, a)));
                if (ws.contains(m)) p01.insert(m);
            }
        }
    }
    for (const IntVec& m : p10)
        if (p01.count(m)) {
            res.witness = "condition (iv): weight " + ivec_string(m) + " falls in both eigenspaces";
            return res;
        }
    for (const IntVec& m : pm1)
        if (!p10.count(m) && !p01.count(m)) {
            res.witness = "condition (iv): degree -1 weight " + ivec_string(m) +
                          " is not reached from the degree -2 layer (module is degenerate)";
            return res;
        }
    auto stable = [&](const std::set<IntVec>& part, const char* name) -> bool {
        for (const IntVec& m : part) {
            for (const IntVec& b : alg.b0) {
                for (int sign : {+1, -1}) {
                    IntVec t = add(m, sign > 0 ? root_fund(alg.rs, b) : negate(root_fund(alg.rs, b)));
                    if (ws.contains(t) && !part.count(t)) {
                        res.witness = std::string("condition (iv): ") + name + " weight " + ivec_string(m) +
                                      " moves to " + ivec_string(t) + " outside " + name +
                                      " along an ungraded simple direction";
                        return false;
                    }
                }
            }
        }
        return true;
    };
    if (!stable(p10, "P^{1,0}") || !stable(p01, "P^{0,1}")) return res;
    auto empty_product = [&](const std::set<IntVec>& part, const std::vector<IntVec>& roots, int sign,
                             const char* label) -> bool {
        for (const IntVec& m : part) {
            for (const IntVec& b : roots) {
                IntVec t = add(m, sign > 0 ? root_fund(alg.rs, b) : negate(root_fund(alg.rs, b)));
                if (ws.contains(t)) {
                    res.witness = std::string("condition (iv): ") + label + " reaches weight " + ivec_string(t) +
                                  " from " + ivec_string(m);
                    return false;
                }
            }
        }
        return true;
    };
    if (!empty_product(p10, alg.b10, +1, "P^{1,0} + B^{1,0}")) return res;
    if (!empty_product(p10, alg.b01, -1, "P^{1,0} - B^{0,1}")) return res;
    if (!empty_product(p01, alg.b01, +1, "P^{0,1} + B^{0,1}")) return res;
    if (!empty_product(p01, alg.b10, -1, "P^{0,1} - B^{1,0}")) return res;

    res.ok = true;
    res.p10.assign(p10.begin(), p10.end());
    res.p01.assign(p01.begin(), p01.end());
    return res;
}

AdmissibilityReport admissible_structures(const CRAlgebra& alg, const IntVec& highest, long dim_cap) {
    AdmissibilityReport report;
    report.highest = highest;
    WeightSystem ws = weight_system(alg.rs, highest, dim_cap);
    for (const Rational& shift : enumerate_shifts(alg, ws)) {
        ConditionII ii = check_condition_ii(alg, ws, shift);
        if (!ii.ok) {
            report.rejections.push_back({shift, ii.witness});
            continue;
        }
        std::vector<std::string> iii = check_condition_iii(alg, ws, shift);
        if (!iii.empty()) {
            std::string reason = iii.front();
            for (std::size_t i = 1; i < iii.size(); ++i) reason += "; " + iii[i];
            report.rejections.push_back({shift, reason});
            continue;
        }
        PartitionIV iv = build_partition_iv(alg, ws, shift);
        if (!iv.ok) {
            report.rejections.push_back({shift, iv.witness});
            continue;
        }
        // Internal consistency required by the theory: the partitioned layer
        // has multiplicity one and J-eigenvalues k+1 / k-1.
        for (const IntVec& m : iv.p10) {
            if (ws.mult(m) != 1)
                throw std::runtime_error("admissible_structures: P^{1,0} weight " + ivec_string(m) +
                                         " has multiplicity > 1");
            if (weight_J_value(alg, m) != ii.k + 1)
                throw std::runtime_error("admissible_structures: P^{1,0} weight " + ivec_string(m) +
                                         " has J-value != k+1");
        }
        for (const IntVec& m : iv.p01) {
            if (ws.mult(m) != 1)
                throw std::runtime_error("admissible_structures: P^{0,1} weight " + ivec_string(m) +
                                         " has multiplicity > 1");
            if (weight_J_value(alg, m) != ii.k - 1)
                throw std::runtime_error("admissible_structures: P^{0,1} weight " + ivec_string(m) +
                                         " has J-value != k-1");
        }
        AdmissibleStructure s;
        s.shift = shift;
        s.k = ii.k;
        s.by_degree = weights_by_degree(alg, ws, shift);
        s.p10 = iv.p10;
        s.p01 = iv.p01;
        report.structures.push_back(std::move(s));
    }
    return report;
}

RealModuleVerdict real_form_admissible(const CRAlgebra& alg, const IntVec& highest,
                                       const std::string& type_hint, long dim_cap) {
    std::vector<int> p = duality_permutation(alg.rs);
    for (int i = 0; i < alg.rs.rank; ++i) {
        if (alg.e[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] != alg.e[static_cast<std::size_t>(i)])
            throw std::invalid_argument("real_form_admissible: grading is not conjugation symmetric");
        if (alg.j[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] != -alg.j[static_cast<std::size_t>(i)])
            throw std::invalid_argument(
                "real_form_admissible: J-values are not conjugation antisymmetric");
    }

    RealModuleVerdict verdict;
    verdict.highest = highest;
    verdict.conjugate = permute_weight(p, highest);

    if (verdict.conjugate != highest) {
        if (!type_hint.empty() && type_hint != "complex")
            throw std::invalid_argument("real_form_admissible: weight " + ivec_string(highest) +
                                        " is not self-conjugate; its type is complex");
        verdict.type = "complex";
        verdict.report = admissible_structures(alg, highest, dim_cap);
        AdmissibilityReport mirror = admissible_structures(alg, verdict.conjugate, dim_cap);
        if (mirror.structures.size() != verdict.report.structures.size())
            throw std::runtime_error("real_form_admissible: conjugate constituents of " + ivec_string(highest) +
                                     " disagree on the number of admissible shifts");
        for (std::size_t s = 0; s < mirror.structures.size(); ++s) {
            const AdmissibleStructure& a = verdict.report.structures[s];
            const AdmissibleStructure& b = mirror.structures[s];
            std::set<IntVec> expect_p10;
            for (const IntVec& m : a.p01) expect_p10.insert(permute_weight(p, m));
            if (a.shift != b.shift || b.k != -a.k ||
                std::set<IntVec>(b.p10.begin(), b.p10.end()) != expect_p10)
                throw std::runtime_error("real_form_admissible: conjugate constituents of " + ivec_string(highest) +
                                         " do not mirror each other");
        }
        return verdict;
    }

    if (!type_hint.empty()) {
        if (type_hint != "real" && type_hint != "quaternionic")
            throw std::invalid_argument("real_form_admissible: weight " + ivec_string(highest) +
                                        " is self-conjugate; its type must be real or quaternionic");
        verdict.type = type_hint;
    } else {
        Rational sum;
        for (const IntVec& gamma : alg.rs.positive_roots) sum += alg.rs.pair_coroot(rat_vec(highest), gamma);
        if (!is_integer(sum))
            throw std::runtime_error("real_form_admissible: non-integral coroot pairing for " +
                                     ivec_string(highest));
        verdict.type = rational_to_long(sum) % 2 == 0 ? "real" : "quaternionic";
    }

    AdmissibilityReport full = admissible_structures(alg, highest, dim_cap);
    verdict.report.highest = highest;
    verdict.report.rejections = full.rejections;
    for (AdmissibleStructure& s : full.structures) {
        if (s.k == 0) {
            verdict.report.structures.push_back(std::move(s));
        } else {
            verdict.dropped.push_back({s.shift, "J-scalar k = " + rat_string(s.k) + " must vanish on a " +
                                                    verdict.type + "-type module"});
        }
    }
    return verdict;
}

}  // namespace tanaka
