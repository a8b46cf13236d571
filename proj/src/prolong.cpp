#include "tanaka/prolong.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tanaka/graded_cr.hpp"
#include "tanaka/realify.hpp"

namespace tanaka {

namespace {

std::vector<long> indices_with_degree(const std::vector<long>& deg, long d) {
    std::vector<long> out;
    for (long i = 0; i < static_cast<long>(deg.size()); ++i)
        if (deg[i] == d) out.push_back(i);
    return out;
}

Vec unit_vec(long n, long i) {
    Vec v(n, Scalar());
    v[i] = Scalar(Rational(1));
    return v;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

/// Flat offsets of the nonnegative layers: off[t] is the index of the first
/// layer-t element, off[0] = dim m, off.back() the dimension so far.
std::vector<long> layer_offsets(long dm, const std::vector<std::vector<Mat>>& layers) {
    std::vector<long> off(layers.size() + 1);
    off[0] = dm;
    for (size_t t = 0; t < layers.size(); ++t)
        off[t + 1] = off[t] + static_cast<long>(layers[t].size());
    return off;
}

/// One prolongation layer.  An element of layer p is a degree p map
/// u : m -> m + g_0 + ... + g_{p-1} obeying u([X,Y]) = [u(X),Y] + [X,u(Y)];
/// it is stored as its action matrix (flat-so-far rows, m columns).  Since m
/// is generated by its degree -1 layer, imposing the rule on pairs with one
/// factor of degree -1 already forces it on all pairs.  Layer 0 additionally
/// commutes with J on the degree -1 block when J is present.
std::vector<Mat> solve_layer(const GradedNilpotent& m,
                             const std::vector<std::vector<Mat>>& layers, long p) {
    const long dm = m.table.dim();
    const std::vector<long>& deg = *m.table.grading;
    const std::vector<long> off = layer_offsets(dm, layers);
    const long flat = off[p];

    // Flat positions available to u(b_j), all of degree deg[j] + p.
    std::vector<std::vector<long>> target(dm);
    for (long j = 0; j < dm; ++j) {
        const long t = deg[j] + p;
        if (t < 0) {
            target[j] = indices_with_degree(deg, t);
        } else if (t < static_cast<long>(layers.size())) {
            for (long s = 0; s < static_cast<long>(layers[t].size()); ++s)
                target[j].push_back(off[t] + s);
        }
    }
    std::vector<long> var_off(dm + 1, 0);
    for (long j = 0; j < dm; ++j)
        var_off[j + 1] = var_off[j] + static_cast<long>(target[j].size());
    const long nv = var_off[dm];
    if (nv == 0) return {};

    // [f_r, b_x] in flat coordinates for a known basis direction f_r.
    auto known_bracket = [&](long r, long x) -> Vec {
        Vec out(flat, Scalar());
        if (r < dm) {
            for (const auto& [k, c] : m.table.bracket(static_cast<int>(r), static_cast<int>(x)))
                out[k] = c;
        } else {
            long t = 0;
            while (t + 1 < static_cast<long>(off.size()) && off[t + 1] <= r) ++t;
            const Mat& a = layers[t][r - off[t]];
            for (long i = 0; i < a.rows(); ++i) out[i] = a(i, x);
        }
        return out;
    };
    auto block_positions = [&](long d) -> std::vector<long> {
        if (d < 0) return indices_with_degree(deg, d);
        std::vector<long> out;
        if (d < static_cast<long>(layers.size()))
            for (long s = 0; s < static_cast<long>(layers[d].size()); ++s) out.push_back(off[d] + s);
        return out;
    };

    std::vector<Vec> rows;
    const std::vector<long> m1 = indices_with_degree(deg, -1);
    for (long i : m1) {
        for (long j = 0; j < dm; ++j) {
            if (j == i || (deg[j] == -1 && j < i)) continue;
            const std::vector<long> blk = block_positions(deg[i] + deg[j] + p);
            if (blk.empty()) continue;
            std::map<long, long> pos;
            for (size_t a = 0; a < blk.size(); ++a) pos[blk[a]] = static_cast<long>(a);
            std::vector<Vec> eq(blk.size(), Vec(nv, Scalar()));
            // u([b_i, b_j])
            for (const auto& [k, c] : m.table.bracket(static_cast<int>(i), static_cast<int>(j)))
                for (size_t s = 0; s < target[k].size(); ++s) {
                    Scalar& cell = eq[pos.at(target[k][s])][var_off[k] + s];
                    cell = cell + c;
                }
            // -[u(b_i), b_j]
            for (size_t s = 0; s < target[i].size(); ++s) {
                const Vec k = known_bracket(target[i][s], j);
                for (long r = 0; r < flat; ++r)
                    if (!k[r].is_zero()) {
                        Scalar& cell = eq[pos.at(r)][var_off[i] + s];
                        cell = cell - k[r];
                    }
            }
            // -[b_i, u(b_j)] = +[u(b_j), b_i]
            for (size_t s = 0; s < target[j].size(); ++s) {
                const Vec k = known_bracket(target[j][s], i);
                for (long r = 0; r < flat; ++r)
                    if (!k[r].is_zero()) {
                        Scalar& cell = eq[pos.at(r)][var_off[j] + s];
                        cell = cell + k[r];
                    }
            }
            for (auto& r : eq)
                if (!vec_is_zero(r)) rows.push_back(std::move(r));
        }
    }

    if (p == 0 && m.J) {
        const Mat& jm = *m.J;
        std::map<long, long> m1pos;
        for (size_t s = 0; s < m1.size(); ++s) m1pos[m1[s]] = static_cast<long>(s);
        for (long a : m1)
            for (long b : m1) {
                Vec row(nv, Scalar());
                for (long c : m1) {
                    // (A J - J A)(a, b) = sum_c A(a,c) J(c,b) - J(a,c) A(c,b)
                    Scalar& u1 = row[var_off[c] + m1pos.at(a)];
                    u1 = u1 + jm(c, b);
                    Scalar& u2 = row[var_off[b] + m1pos.at(c)];
                    u2 = u2 - jm(a, c);
                }
                if (!vec_is_zero(row)) rows.push_back(std::move(row));
            }
    }

    std::vector<Vec> kernel;
    if (rows.empty()) {
        for (long v = 0; v < nv; ++v) kernel.push_back(unit_vec(nv, v));
    } else {
        Mat sys(static_cast<long>(rows.size()), nv);
        for (size_t r = 0; r < rows.size(); ++r) sys.set_row(static_cast<long>(r), rows[r]);
        kernel = kernel_basis(sys);
    }

    std::vector<Mat> out;
    for (const Vec& z : kernel) {
        Mat a(flat, dm);
        for (long j = 0; j < dm; ++j)
            for (size_t s = 0; s < target[j].size(); ++s) a(target[j][s], j) = z[var_off[j] + s];
        out.push_back(std::move(a));
    }
    return out;
}

/// Element of the given nonnegative layer whose action matches `want` on the
/// m columns listed in `cols` (rows in full table coordinates).
std::optional<Vec> solve_in_layer(const Prolongation& g, long p, const std::vector<long>& cols,
                                  const Mat& want) {
    const std::vector<long> lay = g.layer_indices(p);
    const long n = g.table.dim();
    const long nc = static_cast<long>(cols.size());
    Mat sys(n * nc, static_cast<long>(lay.size()));
    for (size_t e = 0; e < lay.size(); ++e)
        for (long c = 0; c < nc; ++c)
            for (const auto& [k, v] : g.table.bracket(static_cast<int>(cols[c]),
                                                      static_cast<int>(lay[e])))
                sys(k * nc + c, static_cast<long>(e)) = -v;  // u(b_x) = -[b_x, u]
    Vec rhs(n * nc, Scalar());
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < nc; ++c) rhs[r * nc + c] = want(r, c);
    const auto z = solve(sys, rhs);
    if (!z) return std::nullopt;
    Vec out(n, Scalar());
    for (size_t e = 0; e < lay.size(); ++e) out[lay[e]] = (*z)[e];
    return out;
}

std::string label_of(const LieTable& t, long i) { return t.basis[i]; }

}  // namespace

GradedNilpotent assemble_m(const LieTable& graded) {
    if (!graded.grading)
        throw std::invalid_argument("assemble_m: the table carries no grading");
    if (auto w = grading_witness(graded))
        throw std::invalid_argument("assemble_m: the grading is violated at [" +
                                    label_of(graded, (*w)[0]) + ", " + label_of(graded, (*w)[1]) +
                                    "]");
    if (auto w = jacobi_witness(graded))
        throw std::invalid_argument("assemble_m: Jacobi fails at (" + label_of(graded, (*w)[0]) +
                                    ", " + label_of(graded, (*w)[1]) + ", " +
                                    label_of(graded, (*w)[2]) + ")");

    GradedNilpotent m;
    std::vector<long> back(graded.dim(), -1);
    for (long i = 0; i < graded.dim(); ++i)
        if ((*graded.grading)[i] < 0) {
            back[i] = static_cast<long>(m.source_index.size());
            m.source_index.push_back(i);
        }
    if (m.source_index.empty())
        throw std::invalid_argument("assemble_m: the table has no negative part");

    const long dm = static_cast<long>(m.source_index.size());
    m.table.field = graded.field;
    std::vector<long> deg(dm);
    for (long k = 0; k < dm; ++k) {
        m.table.basis.push_back(graded.basis[m.source_index[k]]);
        deg[k] = (*graded.grading)[m.source_index[k]];
        m.mu = std::max(m.mu, -deg[k]);
    }
    m.table.grading = deg;
    for (long a = 0; a < dm; ++a)
        for (long b = a + 1; b < dm; ++b) {
            SVec v;
            for (const auto& [k, c] : graded.bracket(static_cast<int>(m.source_index[a]),
                                                     static_cast<int>(m.source_index[b])))
                v.push_back({back[k], c});
            if (!v.empty()) m.table.set_bracket(static_cast<int>(a), static_cast<int>(b), v);
        }

    // Fundamentality: [m_{-1}, m_{p+1}] spans m_p for every p < -1.
    const std::vector<long> m1 = indices_with_degree(deg, -1);
    Subspace span_m1;
    for (long i : m1) span_m1.push_back(unit_vec(dm, i));
    for (long d = -2; d >= -m.mu; --d) {
        Subspace above, here;
        for (long i : indices_with_degree(deg, d + 1)) above.push_back(unit_vec(dm, i));
        for (long i : indices_with_degree(deg, d)) here.push_back(unit_vec(dm, i));
        if (!subspace_equal(bracket_span(m.table, span_m1, above), rref_span(here)))
            throw std::invalid_argument("assemble_m: not fundamental, the degree " +
                                        std::to_string(d) +
                                        " layer is not spanned by brackets with degree -1");
    }

    if (graded.J) {
        const Mat& j = *graded.J;
        Mat jm(dm, dm);
        for (long a = 0; a < graded.dim(); ++a)
            for (long b = 0; b < graded.dim(); ++b) {
                if (j(a, b).is_zero()) continue;
                const bool in_m1 = back[a] >= 0 && back[b] >= 0 && (*graded.grading)[a] == -1 &&
                                   (*graded.grading)[b] == -1;
                if (!in_m1)
                    throw std::invalid_argument(
                        "assemble_m: J is supported off the degree -1 layer at (" +
                        label_of(graded, a) + ", " + label_of(graded, b) + ")");
                jm(back[a], back[b]) = j(a, b);
            }
        const Mat sq = jm * jm;
        for (long a : m1)
            for (long b : m1) {
                const Scalar want = (a == b) ? Scalar(Rational(-1)) : Scalar();
                if (!(sq(a, b) == want))
                    throw std::invalid_argument(
                        "assemble_m: J does not square to -Id on the degree -1 layer");
            }
        for (size_t x = 0; x < m1.size(); ++x)
            for (size_t y = x + 1; y < m1.size(); ++y) {
                const Vec lhs = m.table.bracket(jm.col(m1[x]), jm.col(m1[y]));
                const Vec rhs = m.table.bracket(unit_vec(dm, m1[x]), unit_vec(dm, m1[y]));
                for (long r = 0; r < dm; ++r)
                    if (!(lhs[r] == rhs[r]))
                        throw std::invalid_argument("assemble_m: J breaks [JX, JY] = [X, Y] at (" +
                                                    m.table.basis[m1[x]] + ", " +
                                                    m.table.basis[m1[y]] + ")");
            }
        m.J = jm;
    }
    return m;
}

std::vector<Mat> degree_zero_derivations(const GradedNilpotent& m) {
    return solve_layer(m, {}, 0);
}

std::vector<long> Prolongation::layer_indices(long degree) const {
    return indices_with_degree(*table.grading, degree);
}

Prolongation tanaka_prolongation(const GradedNilpotent& m, long max_degree) {
    const long cap = max_degree < 0 ? m.mu + 4 : max_degree;
    const long dm = m.table.dim();
    const std::vector<long>& deg = *m.table.grading;

    std::vector<std::vector<Mat>> layers;
    Prolongation g;
    g.m_dim = dm;
    g.mu = m.mu;
    for (long p = 0;; ++p) {
        if (p > cap) {
            g.truncated = true;
            break;
        }
        auto layer = solve_layer(m, layers, p);
        if (layer.empty()) break;
        layers.push_back(std::move(layer));
    }

    const std::vector<long> off = layer_offsets(dm, layers);
    const long n = off.back();
    LieTable& t = g.table;
    t.field = m.table.field;
    t.basis = m.table.basis;
    std::vector<long> grading(deg);
    for (size_t p = 0; p < layers.size(); ++p)
        for (size_t s = 0; s < layers[p].size(); ++s) {
            t.basis.push_back("d" + std::to_string(p) + "." + std::to_string(s + 1));
            grading.push_back(static_cast<long>(p));
        }
    t.grading = grading;

    for (long a = 0; a < dm; ++a)
        for (long b = a + 1; b < dm; ++b) {
            const SVec v = m.table.bracket(static_cast<int>(a), static_cast<int>(b));
            if (!v.empty()) t.set_bracket(static_cast<int>(a), static_cast<int>(b), v);
        }
    for (size_t p = 0; p < layers.size(); ++p)
        for (size_t s = 0; s < layers[p].size(); ++s) {
            const long f = off[p] + static_cast<long>(s);
            const Mat& a = layers[p][s];
            for (long x = 0; x < dm; ++x) {
                SVec v;
                for (long r = 0; r < a.rows(); ++r)
                    if (!a(r, x).is_zero()) v.push_back({r, Scalar() - a(r, x)});
                if (!v.empty()) t.set_bracket(static_cast<int>(x), static_cast<int>(f), v);
            }
        }

    // [u, w] for w in flat coordinates, using the entries filled so far.
    auto brk = [&](long f, const Vec& w) -> Vec {
        Vec out(n, Scalar());
        for (long j = 0; j < n; ++j) {
            if (w[j].is_zero()) continue;
            for (const auto& [k, c] : t.bracket(static_cast<int>(f), static_cast<int>(j)))
                out[k] = out[k] + w[j] * c;
        }
        return out;
    };
    auto pad_col = [&](const Mat& a, long x) -> Vec {
        Vec w(n, Scalar());
        for (long r = 0; r < a.rows(); ++r) w[r] = a(r, x);
        return w;
    };

    const long top = static_cast<long>(layers.size()) - 1;
    for (long total = 0; total <= 2 * top; ++total) {
        if (total > top && g.truncated) break;
        // Flattened actions of the target layer, for identification.
        Mat basis_actions(0, 0);
        if (total <= top) {
            basis_actions = Mat(off[total] * dm, static_cast<long>(layers[total].size()));
            for (size_t e = 0; e < layers[total].size(); ++e)
                for (long r = 0; r < off[total]; ++r)
                    for (long x = 0; x < dm; ++x)
                        basis_actions(r * dm + x, static_cast<long>(e)) = layers[total][e](r, x);
        }
        for (long p = 0; p <= top; ++p) {
            const long q = total - p;
            if (q < p || q > top) continue;
            for (size_t a = 0; a < layers[p].size(); ++a)
                for (size_t b = (p == q ? a + 1 : 0); b < layers[q].size(); ++b) {
                    const long fa = off[p] + static_cast<long>(a);
                    const long fb = off[q] + static_cast<long>(b);
                    // [[u,v], X] = [u, [v, X]] - [v, [u, X]]
                    Mat w(n, dm);
                    for (long x = 0; x < dm; ++x) {
                        const Vec lhs = brk(fa, pad_col(layers[q][b], x));
                        const Vec rhs = brk(fb, pad_col(layers[p][a], x));
                        for (long r = 0; r < n; ++r) w(r, x) = lhs[r] - rhs[r];
                    }
                    if (total > top) {
                        if (!w.is_zero())
                            throw std::runtime_error(
                                "tanaka_prolongation: a bracket leaves the computed layers");
                        continue;
                    }
                    for (long r = off[total]; r < n; ++r)
                        for (long x = 0; x < dm; ++x)
                            if (!w(r, x).is_zero())
                                throw std::runtime_error(
                                    "tanaka_prolongation: a bracket action has wrong degree");
                    Vec rhs(off[total] * dm, Scalar());
                    for (long r = 0; r < off[total]; ++r)
                        for (long x = 0; x < dm; ++x) rhs[r * dm + x] = w(r, x);
                    const auto z = solve(basis_actions, rhs);
                    if (!z)
                        throw std::runtime_error(
                            "tanaka_prolongation: a bracket is not realized in its layer");
                    SVec v;
                    for (size_t e = 0; e < layers[total].size(); ++e)
                        if (!(*z)[e].is_zero())
                            v.push_back({off[total] + static_cast<long>(e), (*z)[e]});
                    if (!v.empty()) t.set_bracket(static_cast<int>(fa), static_cast<int>(fb), v);
                }
        }
    }

    if (m.J) {
        Mat j(n, n);
        for (long a = 0; a < dm; ++a)
            for (long b = 0; b < dm; ++b) j(a, b) = (*m.J)(a, b);
        t.J = j;
    }
    for (long i = 0; i < n; ++i) ++g.layer_dim[grading[i]];
    return g;
}

std::optional<Vec> degree_zero_with_action(const Prolongation& g, const Mat& action_on_m1) {
    std::vector<long> m1;
    for (long i = 0; i < g.m_dim; ++i)
        if ((*g.table.grading)[i] == -1) m1.push_back(i);
    const long sz = static_cast<long>(m1.size());
    if (action_on_m1.rows() != sz || action_on_m1.cols() != sz)
        throw std::invalid_argument("degree_zero_with_action: the matrix must match the degree -1 layer");
    Mat want(g.table.dim(), sz);
    for (long r = 0; r < sz; ++r)
        for (long c = 0; c < sz; ++c) want(m1[r], c) = action_on_m1(r, c);
    return solve_in_layer(g, 0, m1, want);
}

Vec projection_element(const Prolongation& g, const std::vector<bool>& flag) {
    if (static_cast<long>(flag.size()) != g.m_dim)
        throw std::invalid_argument("projection_element: one flag per m basis vector");
    std::vector<long> m1;
    for (long i = 0; i < g.m_dim; ++i)
        if ((*g.table.grading)[i] == -1) m1.push_back(i);
    Mat a1(static_cast<long>(m1.size()), static_cast<long>(m1.size()));
    for (size_t r = 0; r < m1.size(); ++r)
        if (flag[m1[r]]) a1(static_cast<long>(r), static_cast<long>(r)) = Scalar(Rational(1));
    const auto pi = degree_zero_with_action(g, a1);
    if (!pi)
        throw std::runtime_error("projection_element: the flag pattern is not a derivation");
    const Mat ad = g.table.ad(*pi);
    for (long x = 0; x < g.m_dim; ++x)
        for (long r = 0; r < g.table.dim(); ++r) {
            const Scalar want =
                (r == x && flag[x]) ? Scalar(Rational(1)) : Scalar();
            if (!(ad(r, x) == want))
                throw std::runtime_error("projection_element: the candidate acts wrongly on " +
                                         g.table.basis[x]);
        }
    return *pi;
}

std::map<long, long> integer_spectrum(const LieTable& t, const Vec& v) {
    const long n = t.dim();
    const Mat a = t.ad(v);
    std::map<long, long> out;
    long found = 0;
    for (long h = 0; h <= n && found < n; ++h) {
        for (const long sign : {1L, -1L}) {
            if (h == 0 && sign < 0) continue;
            Mat b = a;
            for (long i = 0; i < n; ++i) b(i, i) = b(i, i) - Scalar(Rational(sign * h));
            const long d = static_cast<long>(kernel_basis(b).size());
            if (d > 0) {
                out[sign * h] = d;
                found += d;
            }
            if (found == n) break;
        }
    }
    if (found != n)
        throw std::runtime_error("integer_spectrum: ad is not semisimple with integer eigenvalues (" +
                                 std::to_string(found) + " of " + std::to_string(n) +
                                 " dimensions found)");
    return out;
}

namespace {

/// Shared pipeline on a realified table with a subalgebra/module split:
/// cut out m, prolong, embed the table back, and read off the projection
/// element, the structure element, and the structure summary.
void analyze_assembled(ExtensionAnalysis& out, const std::vector<bool>& l_marker,
                       long max_degree) {
    out.m = assemble_m(out.real_table);
    out.prolongation = tanaka_prolongation(out.m, max_degree);
    if (out.prolongation.truncated) return;

    const long nr = out.real_table.dim();
    const long np = out.prolongation.table.dim();
    const long dm = out.m.table.dim();
    const std::vector<long>& rdeg = *out.real_table.grading;

    // Embed the realified extension: negative degrees onto m, the rest by
    // matching actions degree by degree.
    std::vector<long> back(nr, -1);
    for (size_t k = 0; k < out.m.source_index.size(); ++k)
        back[out.m.source_index[k]] = static_cast<long>(k);
    Mat emb(np, nr);
    std::vector<long> order(nr);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](long a, long b) { return rdeg[a] < rdeg[b]; });
    for (long r : order) {
        if (rdeg[r] < 0) {
            emb(back[r], r) = Scalar(Rational(1));
            continue;
        }
        Mat want(np, dm);
        for (long x = 0; x < dm; ++x)
            for (const auto& [k, c] : out.real_table.bracket(
                     static_cast<int>(r), static_cast<int>(out.m.source_index[x])))
                for (long i = 0; i < np; ++i) {
                    if (emb(i, k).is_zero()) continue;
                    want(i, x) = want(i, x) + c * emb(i, k);
                }
        std::vector<long> cols(dm);
        std::iota(cols.begin(), cols.end(), 0);
        const auto z = solve_in_layer(out.prolongation, rdeg[r], cols, want);
        if (!z)
            throw std::runtime_error("analyze_extension: the degree " + std::to_string(rdeg[r]) +
                                     " element " + out.real_table.basis[r] +
                                     " does not embed into the prolongation");
        emb.set_col(r, *z);
    }
    if (rank(emb) != nr)
        throw std::runtime_error(
            "analyze_extension: the extension does not act faithfully on its negative part");
    out.embedding = emb;

    std::vector<Vec> s_cols, l_cols;
    for (long r = 0; r < nr; ++r) (l_marker[r] ? l_cols : s_cols).push_back(emb.col(r));
    out.s_image = rref_span(s_cols);
    out.l_image = rref_span(l_cols);

    std::vector<bool> flag(dm, false);
    for (long k = 0; k < dm; ++k) flag[k] = l_marker[out.m.source_index[k]];
    out.pi = projection_element(out.prolongation, flag);
    out.pi_spectrum = integer_spectrum(out.prolongation.table, out.pi);

    // b = Killing-orthogonal complement of the s image; its +1 eigenspace
    // under ad(pi) must be exactly the l image.
    const Mat kappa = killing_form(out.prolongation.table);
    Mat pairing(static_cast<long>(out.s_image.size()), np);
    for (size_t r = 0; r < out.s_image.size(); ++r) {
        Vec row(np, Scalar());
        for (long j = 0; j < np; ++j)
            for (long i = 0; i < np; ++i) row[j] = row[j] + out.s_image[r][i] * kappa(i, j);
        pairing.set_row(static_cast<long>(r), row);
    }
    const Subspace b = rref_span(kernel_basis(pairing));
    Mat shifted = out.prolongation.table.ad(out.pi);
    for (long i = 0; i < np; ++i) shifted(i, i) = shifted(i, i) - Scalar(Rational(1));
    const Subspace b1 =
        subspace_intersect(b, rref_span(kernel_basis(shifted)), np);
    out.b1_equals_l = subspace_equal(b1, out.l_image);

    if (out.m.J) {
        std::vector<long> m1;
        for (long i = 0; i < dm; ++i)
            if ((*out.m.table.grading)[i] == -1) m1.push_back(i);
        Mat a1(static_cast<long>(m1.size()), static_cast<long>(m1.size()));
        for (size_t r = 0; r < m1.size(); ++r)
            for (size_t c = 0; c < m1.size(); ++c)
                a1(static_cast<long>(r), static_cast<long>(c)) = (*out.m.J)(m1[r], m1[c]);
        out.j_element = degree_zero_with_action(out.prolongation, a1);
    }

    out.structure = classify_structure(out.prolongation.table);
}

}  // namespace

ExtensionAnalysis analyze_table(const LieTable& real_table, const std::vector<bool>& l_marker,
                                long max_degree) {
    if (static_cast<long>(l_marker.size()) != real_table.dim())
        throw std::invalid_argument(
            "analyze_table: the module marker must flag every basis vector");
    ExtensionAnalysis out;
    out.real_table = real_table;
    analyze_assembled(out, l_marker, max_degree);
    return out;
}

ExtensionAnalysis analyze_extension(const Extension& ext, long max_degree) {
    ExtensionAnalysis out;
    out.real_table = realify_table(ext.table);
    const long nc = ext.table.dim();
    std::vector<bool> marker(out.real_table.dim(), false);
    for (long r = 0; r < out.real_table.dim(); ++r) marker[r] = (r % nc) >= ext.s_dim;
    analyze_assembled(out, marker, max_degree);
    if (out.prolongation.truncated) return out;

    if (ext.table.J) {
        // k per summand, read off the complex table: on a degree -1 weight
        // vector of summand t, ad(J_s) - J acts by the scalar i*k_t, and on
        // the semisimple part the two agree.
        Vec jvals(ext.cb.rs.rank, Scalar());
        for (long i = 0; i < ext.cb.rs.rank; ++i)
            jvals[i] = Scalar::i() * Scalar(Rational(ext.alg.j[i]));
        Vec js(nc, Scalar());
        {
            const Vec in_s = grading_element(ext.cb, jvals);
            for (size_t i = 0; i < in_s.size(); ++i) js[i] = in_s[i];
        }
        const std::vector<long>& cdeg = *ext.table.grading;
        for (long c = 0; c < ext.s_dim; ++c) {
            if (cdeg[c] != -1) continue;
            const Vec act = ext.table.bracket(js, unit_vec(nc, c));
            if (!(act[c] == (*ext.table.J)(c, c)))
                throw std::runtime_error(
                    "analyze_extension: J disagrees with the structure element on " +
                    ext.table.basis[c]);
        }
        for (size_t t = 0; t < ext.summands.size(); ++t) {
            std::optional<Rational> kt;
            for (long v = 0; v < ext.modules[t].dim; ++v) {
                const long c = ext.table_index(static_cast<long>(t), v);
                if (cdeg[c] != -1) continue;
                const Vec act = ext.table.bracket(js, unit_vec(nc, c));
                const Scalar defect = act[c] - (*ext.table.J)(c, c);
                const Scalar k = Scalar(Rational(0), Rational(-1)) * defect;  // divide by i
                if (!k.is_rational())
                    throw std::runtime_error("analyze_extension: non-real J defect on summand " +
                                             std::to_string(t));
                if (!kt)
                    kt = k.as_rational();
                else if (!(*kt == k.as_rational()))
                    throw std::runtime_error(
                        "analyze_extension: the J defect is not scalar on summand " +
                        std::to_string(t));
            }
            if (!kt) kt = ext.summands[t].k;
            out.k_values.push_back(*kt);
        }
    }

    return out;
}

}  // namespace tanaka
