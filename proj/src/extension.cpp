#include "tanaka/extension.hpp"

#include <algorithm>
#include <map>
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

Rational root_value(const IntVec& root_coords, const IntVec& weights_on_simples) {
    Rational v;
    for (std::size_t i = 0; i < root_coords.size(); ++i)
        v += Rational(root_coords[i] * weights_on_simples[i]);
    return v;
}

std::vector<Vec> unit_vectors(const std::vector<long>& idx, long n) {
    std::vector<Vec> out;
    for (long i : idx) {
        Vec v(static_cast<std::size_t>(n));
        v[static_cast<std::size_t>(i)] = Scalar(1);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

long Extension::table_index(long summand, long vector_index) const {
    return s_dim + l_offset[static_cast<std::size_t>(summand)] + vector_index;
}

Extension build_extension(const ChevalleyBasis& cb, const CRAlgebra& alg,
                          const std::vector<Summand>& summands, long dim_cap) {
    if (cb.rs.cartan != alg.rs.cartan)
        throw std::invalid_argument(
            "build_extension: CR data and Chevalley basis use different root systems");
    if (summands.empty()) throw std::invalid_argument("build_extension: no module summands");

    Extension ext;
    ext.cb = cb;
    ext.alg = alg;
    ext.summands = summands;
    ext.s_dim = cb.dim();

    bool all_k = true;
    for (const Summand& s : summands) {
        ModuleRealization mr = realize_module(cb.rs, s.highest, dim_cap);
        ext.l_offset.push_back(ext.l_dim);
        ext.l_dim += mr.dim;
        for (const IntVec& w : mr.basis_weight) {
            Rational d = weight_E_value(alg, w) + s.shift;
            if (!is_integer(d))
                throw std::invalid_argument("build_extension: shift " + rational_to_string(s.shift) +
                                            " gives weight " + ivec_string(w) +
                                            " the non-integral degree " + rational_to_string(d));
            ext.l_degree.push_back(rational_to_long(d));
        }
        ext.actions.push_back(module_action(cb, mr));
        ext.modules.push_back(std::move(mr));
        all_k = all_k && s.k.has_value();
    }

    const long n = ext.s_dim + ext.l_dim;

    LieTable t;
    t.field = "Qi";
    t.basis = cb.table.basis;
    for (std::size_t si = 0; si < summands.size(); ++si) {
        std::map<IntVec, long> seen;
        for (const IntVec& w : ext.modules[si].basis_weight) {
            std::string label = "v" + std::to_string(si) + "[";
            for (std::size_t i = 0; i < w.size(); ++i)
                label += (i ? "," : "") + std::to_string(w[i]);
            label += "]";
            long occurrence = ++seen[w];
            if (ext.modules[si].weight_multiplicity(w) > 1)
                label += "." + std::to_string(occurrence);
            t.basis.push_back(label);
        }
    }

    t.table = cb.table.table;  // [s, s] from the Chevalley constants
    for (std::size_t si = 0; si < summands.size(); ++si) {
        const long dim = ext.modules[si].dim;
        for (long b = 0; b < ext.s_dim; ++b) {
            const Mat& a = ext.actions[si][static_cast<std::size_t>(b)];
            for (long j = 0; j < dim; ++j) {
                Vec column(static_cast<std::size_t>(n));
                bool nonzero = false;
                for (long r = 0; r < dim; ++r) {
                    const Scalar& c = a(static_cast<int>(r), static_cast<int>(j));
                    if (c.is_zero()) continue;
                    column[static_cast<std::size_t>(ext.table_index(static_cast<long>(si), r))] = c;
                    nonzero = true;
                }
                if (nonzero)
                    t.set_bracket(static_cast<int>(b),
                                  static_cast<int>(ext.table_index(static_cast<long>(si), j)),
                                  svec_from_dense(column));
            }
        }
    }
    // [l, l] = 0: absent entries of the sparse table.

    std::vector<long> grading = algebra_grading(cb, alg.e);
    grading.insert(grading.end(), ext.l_degree.begin(), ext.l_degree.end());
    t.grading = grading;

    if (all_k) {
        Mat J(static_cast<int>(n), static_cast<int>(n));
        for (std::size_t r = 0; r < alg.rs.positive_roots.size(); ++r) {
            const IntVec& gamma = alg.rs.positive_roots[r];
            if (root_value(gamma, alg.e) != 1) continue;  // only degree -1 carries J
            Rational jv = -root_value(gamma, alg.j);
            int idx = static_cast<int>(cb.neg_index(static_cast<long>(r)));
            J(idx, idx) = Scalar(Rational(0), jv);
        }
        for (std::size_t si = 0; si < summands.size(); ++si) {
            const ModuleRealization& mr = ext.modules[si];
            for (long j = 0; j < mr.dim; ++j) {
                long flat = ext.l_offset[si] + j;
                if (ext.l_degree[static_cast<std::size_t>(flat)] != -1) continue;
                Rational jv = weight_J_value(alg, mr.basis_weight[static_cast<std::size_t>(j)]) -
                              *summands[si].k;
                if (jv != 1 && jv != -1)
                    throw std::invalid_argument(
                        "build_extension: J-scalar " + rational_to_string(*summands[si].k) +
                        " does not put weight " + ivec_string(mr.basis_weight[static_cast<std::size_t>(j)]) +
                        " into a +-i eigenspace");
                int idx = static_cast<int>(ext.table_index(static_cast<long>(si), j));
                J(idx, idx) = Scalar(Rational(0), jv);
            }
        }
        t.J = std::move(J);
    }

    ext.table = std::move(t);
    return ext;
}

ModuleVerdict module_level_compatible(const Extension& ext) {
    ModuleVerdict out;
    const long n = ext.l_dim;
    const CRAlgebra& alg = ext.alg;

    // Action of a Chevalley basis element on the whole of l, block by block.
    auto flat_action = [&](long b) {
        Mat m(static_cast<int>(n), static_cast<int>(n));
        for (std::size_t si = 0; si < ext.summands.size(); ++si) {
            const Mat& a = ext.actions[si][static_cast<std::size_t>(b)];
            int off = static_cast<int>(ext.l_offset[si]);
            for (int r = 0; r < a.rows(); ++r)
                for (int c = 0; c < a.cols(); ++c)
                    if (!a(r, c).is_zero()) m(off + r, off + c) = a(r, c);
        }
        return m;
    };

    // s basis elements sorted into the degree -1 eigenfamilies and s_0.
    std::vector<Mat> plus_actions, minus_actions, all_m1, zero_actions;
    for (std::size_t r = 0; r < alg.rs.positive_roots.size(); ++r) {
        const IntVec& gamma = alg.rs.positive_roots[r];
        Rational deg = root_value(gamma, alg.e);
        if (deg == 0) {
            zero_actions.push_back(flat_action(ext.cb.pos_index(static_cast<long>(r))));
            zero_actions.push_back(flat_action(ext.cb.neg_index(static_cast<long>(r))));
        } else if (deg == 1) {
            Mat a = flat_action(ext.cb.neg_index(static_cast<long>(r)));
            all_m1.push_back(a);
            if (-root_value(gamma, alg.j) == 1)
                plus_actions.push_back(std::move(a));
            else
                minus_actions.push_back(std::move(a));
        }
    }
    for (int i = 0; i < alg.rs.rank; ++i) zero_actions.push_back(flat_action(ext.cb.h_index(i)));

    std::map<long, std::vector<long>> layer;
    for (long i = 0; i < n; ++i) layer[ext.l_degree[static_cast<std::size_t>(i)]].push_back(i);
    static const std::vector<long> no_indices;
    auto layer_at = [&](long p) -> const std::vector<long>& {
        auto it = layer.find(p);
        return it == layer.end() ? no_indices : it->second;
    };

    if (layer_at(-1).empty() || layer_at(-2).empty()) {
        out.reason = "the module has nothing in degree " +
                     std::string(layer_at(-1).empty() ? "-1" : "-2");
        return out;
    }

    // Joint kernel of the listed actions on the coordinate subspace spanned
    // by `cols`; an empty list of actions kills nothing.
    auto joint_kernel = [&](const std::vector<Mat>& acts, const std::vector<long>& cols) {
        if (acts.empty()) return rref_span(unit_vectors(cols, n));
        Mat stacked(static_cast<int>(acts.size() * static_cast<std::size_t>(n)),
                    static_cast<int>(cols.size()));
        for (std::size_t a = 0; a < acts.size(); ++a)
            for (int r = 0; r < n; ++r)
                for (std::size_t c = 0; c < cols.size(); ++c)
                    stacked(static_cast<int>(a * static_cast<std::size_t>(n)) + r,
                            static_cast<int>(c)) = acts[a](r, static_cast<int>(cols[c]));
        std::vector<Vec> expanded;
        for (const Vec& local : kernel_basis(stacked)) {
            Vec v(static_cast<std::size_t>(n));
            for (std::size_t c = 0; c < cols.size(); ++c) v[static_cast<std::size_t>(cols[c])] = local[c];
            expanded.push_back(std::move(v));
        }
        return rref_span(expanded);
    };

    // Fundamental: every negative degree is reached from the one above it.
    long min_deg = *std::min_element(ext.l_degree.begin(), ext.l_degree.end());
    for (long p = -1; p >= min_deg; --p) {
        std::vector<Vec> gens;
        for (const Mat& a : all_m1)
            for (long idx : layer_at(p)) gens.push_back(a.col(static_cast<int>(idx)));
        if (!subspace_equal(rref_span(gens), rref_span(unit_vectors(layer_at(p - 1), n)))) {
            out.reason = "the module is not fundamental: brackets of the degree -1 layer of s with degree " +
                         std::to_string(p) + " do not fill degree " + std::to_string(p - 1);
            return out;
        }
    }

    // Transitive: nothing in degree >= 0 is annihilated by s_{-1}.
    for (const auto& [p, idxs] : layer) {
        if (p < 0) continue;
        if (!joint_kernel(all_m1, idxs).empty()) {
            out.reason = "the module is not transitive: a degree " + std::to_string(p) +
                         " element is annihilated by the degree -1 layer of s";
            return out;
        }
    }

    Subspace v_plus = joint_kernel(plus_actions, layer_at(-1));
    Subspace v_minus = joint_kernel(minus_actions, layer_at(-1));

    if (!subspace_intersect(v_plus, v_minus, n).empty()) {
        out.reason =
            "the module is degenerate: a degree -1 element is annihilated by the degree -1 layer of s";
        return out;
    }
    if (static_cast<long>(subspace_sum(v_plus, v_minus).size()) !=
        static_cast<long>(layer_at(-1).size())) {
        out.reason = "no compatible complex structure: the degree -1 layer does not split into "
                     "vectors killed by R^{1,0} plus vectors killed by R^{0,1}";
        return out;
    }

    // Degree 0 elements must be bracketed into the matching eigenspace, so
    // that the split extends the one of s_{-1} equivariantly.
    for (std::size_t side = 0; side < 2; ++side) {
        const std::vector<Mat>& acts = side == 0 ? plus_actions : minus_actions;
        const Subspace& target = side == 0 ? v_plus : v_minus;
        for (const Mat& a : acts)
            for (long idx : layer_at(0)) {
                Vec w = a.col(static_cast<int>(idx));
                if (!subspace_contains(target, w)) {
                    out.reason = std::string("degree 0 brackets with R^{") +
                                 (side == 0 ? "1,0" : "0,1") + "} leave the " +
                                 (side == 0 ? "+i" : "-i") + " eigenspace";
                    return out;
                }
            }
    }

    // s_0 preserves both eigenspaces; with validated CR data this is a
    // theorem, so a failure here is an engine fault, not a property of the
    // input.
    for (const Mat& a : zero_actions)
        for (const Subspace* sp : {&v_plus, &v_minus})
            for (const Vec& v : *sp)
                if (!subspace_contains(*sp, a.apply(v)))
                    throw std::runtime_error(
                        "module_level_compatible: s_0 does not preserve the recovered eigenspaces");

    std::set<std::pair<long, IntVec>> p10, p01;
    for (std::size_t si = 0; si < ext.summands.size(); ++si) {
        const ModuleRealization& mr = ext.modules[si];
        for (long j = 0; j < mr.dim; ++j) {
            long flat = ext.l_offset[si] + j;
            if (ext.l_degree[static_cast<std::size_t>(flat)] != -1) continue;
            Vec e(static_cast<std::size_t>(n));
            e[static_cast<std::size_t>(flat)] = Scalar(1);
            if (subspace_contains(v_plus, e))
                p10.insert({static_cast<long>(si), mr.basis_weight[static_cast<std::size_t>(j)]});
            else if (subspace_contains(v_minus, e))
                p01.insert({static_cast<long>(si), mr.basis_weight[static_cast<std::size_t>(j)]});
        }
    }

    out.compatible = true;
    out.v_plus = std::move(v_plus);
    out.v_minus = std::move(v_minus);
    out.p10.assign(p10.begin(), p10.end());
    out.p01.assign(p01.begin(), p01.end());
    return out;
}

}  // namespace tanaka
