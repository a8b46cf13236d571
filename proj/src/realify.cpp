#include "tanaka/realify.hpp"

#include <sstream>
#include <stdexcept>

#include "tanaka/structure.hpp"

namespace tanaka {
namespace {

Scalar times_i(const Scalar& s) { return s * Scalar::i(); }

Vec scale_vec(const Vec& v, const Scalar& c) {
    Vec out(v);
    for (auto& x : out) x *= c;
    return out;
}

Mat conj_mat(const Mat& m) {
    Mat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).conj();
    return out;
}

Vec conj_vec(const Vec& v) {
    Vec out(v);
    for (auto& x : out) x = x.conj();
    return out;
}

std::string weight_string(const IntVec& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

Vec realify_vec(const Vec& v) {
    const std::size_t n = v.size();
    Vec out(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = Scalar(v[k].re());
        out[n + k] = Scalar(v[k].im());
    }
    return out;
}

Mat realify_mat(const Mat& m) {
    const int n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("realify_mat: square matrix required");
    Mat out(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out(i, j) = Scalar(m(i, j).re());
            out(i, n + j) = Scalar(-m(i, j).im());
            out(n + i, j) = Scalar(m(i, j).im());
            out(n + i, n + j) = Scalar(m(i, j).re());
        }
    return out;
}

Mat multiplication_by_i(long n) {
    Mat out(static_cast<int>(2 * n), static_cast<int>(2 * n));
    for (int k = 0; k < n; ++k) {
        out(k, static_cast<int>(n) + k) = Scalar(-1);
        out(static_cast<int>(n) + k, k) = Scalar(1);
    }
    return out;
}

LieTable realify_table(const LieTable& t) {
    const int n = static_cast<int>(t.dim());
    LieTable out;
    out.field = "Q";
    out.basis.reserve(static_cast<std::size_t>(2 * n));
    for (const auto& name : t.basis) out.basis.push_back(name);
    for (const auto& name : t.basis) out.basis.push_back("i*" + name);
    if (t.grading) {
        std::vector<long> g(*t.grading);
        g.insert(g.end(), t.grading->begin(), t.grading->end());
        out.grading = g;
    }
    if (t.J) out.J = realify_mat(*t.J);

    auto put = [&](int a, int b, const Vec& complex_coeffs) {
        SVec s = svec_from_dense(realify_vec(complex_coeffs));
        if (!s.empty()) out.set_bracket(a, b, s);
    };
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            Vec c = svec_to_dense(t.bracket(j, k), n);
            put(j, k, c);                                      // [b_j, b_k]
            put(j, n + k, scale_vec(c, Scalar::i()));          // [b_j, i b_k]
            put(k, n + j, scale_vec(c, -Scalar::i()));         // [b_k, i b_j]
            put(n + j, n + k, scale_vec(c, Scalar(-1)));       // [i b_j, i b_k]
        }
    }
    return out;
}

RealForm real_form_fixed_points(const LieTable& complex_table, const Mat& S) {
    const int n = static_cast<int>(complex_table.dim());
    if (S.rows() != n || S.cols() != n)
        throw std::invalid_argument("real_form_fixed_points: involution matrix has wrong shape");
    if (!(S * conj_mat(S) == Mat::identity(n)))
        throw std::invalid_argument("real_form_fixed_points: S * conj(S) is not the identity");
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            Vec lhs = complex_table.bracket(S.col(j), S.col(k));
            Vec rhs = S.apply(conj_vec(svec_to_dense(complex_table.bracket(j, k), n)));
            if (lhs != rhs)
                throw std::runtime_error("real_form_fixed_points: sigma is not a bracket automorphism");
        }
    }

    // Fixed points of the realified antilinear map x -> realify(S) * conj(x).
    Mat conj_real(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        conj_real(k, k) = Scalar(1);
        conj_real(n + k, n + k) = Scalar(-1);
    }
    Mat sigma_real = realify_mat(S) * conj_real;
    Subspace fixed = rref_span(kernel_basis(sigma_real - Mat::identity(2 * n)));
    if (static_cast<int>(fixed.size()) != n)
        throw std::runtime_error("real_form_fixed_points: fixed subspace has wrong dimension");

    LieTable realified = realify_table(complex_table);
    Mat basis_cols(2 * n, n);
    for (int k = 0; k < n; ++k) basis_cols.set_col(k, fixed[static_cast<std::size_t>(k)]);

    RealForm rf;
    rf.basis_realified = fixed;
    rf.table.field = "Q";
    for (int k = 0; k < n; ++k) rf.table.basis.push_back("u" + std::to_string(k + 1));
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            Vec w = realified.bracket(fixed[static_cast<std::size_t>(j)], fixed[static_cast<std::size_t>(k)]);
            std::optional<Vec> coords = solve(basis_cols, w);
            if (!coords)
                throw std::runtime_error("real_form_fixed_points: fixed subspace does not close under bracket");
            for (const auto& c : *coords)
                if (!c.is_rational())
                    throw std::runtime_error("real_form_fixed_points: non-real structure constant");
            SVec s = svec_from_dense(*coords);
            if (!s.empty()) rf.table.set_bracket(j, k, s);
        }
    }
    return rf;
}

namespace {

/// Defining-block matrices of all basis elements and the antilinear image
/// solver shared by the involution presets.
Mat solve_involution(const ChevalleyBasis& cb, const std::vector<Mat>& images) {
    const long d = cb.fundamental.front().dim;
    const long n = cb.dim();
    auto flatten = [&](const Mat& m, Mat& into, int col) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) into(static_cast<int>(i * d) + j, col) = m(i, j);
    };
    Mat basis_flat(static_cast<int>(d * d), static_cast<int>(n));
    for (long k = 0; k < n; ++k) {
        Mat block(static_cast<int>(d), static_cast<int>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) block(i, j) = cb.rep[static_cast<std::size_t>(k)](i, j);
        flatten(block, basis_flat, static_cast<int>(k));
    }
    if (rank(basis_flat) != static_cast<int>(n))
        throw std::runtime_error("involution preset: defining module is not faithful");
    Mat rhs(static_cast<int>(d * d), static_cast<int>(n));
    for (long k = 0; k < n; ++k) flatten(images[static_cast<std::size_t>(k)], rhs, static_cast<int>(k));
    std::optional<Mat> sol = solve_matrix(basis_flat, rhs);
    if (!sol) throw std::runtime_error("involution preset: image leaves the algebra");
    return *sol;
}

Mat defining_block(const ChevalleyBasis& cb, long k) {
    const long d = cb.fundamental.front().dim;
    Mat block(static_cast<int>(d), static_cast<int>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) block(i, j) = cb.rep[static_cast<std::size_t>(k)](i, j);
    return block;
}

}  // namespace

Mat involution_su(const ChevalleyBasis& cb, int p, int q) {
    const long d = cb.fundamental.front().dim;
    if (p < 0 || q < 0 || p + q != d)
        throw std::invalid_argument("involution_su: signature does not match the defining dimension");
    Mat ipq(static_cast<int>(d), static_cast<int>(d));
    for (int i = 0; i < d; ++i) ipq(i, i) = Scalar(i < p ? 1 : -1);
    std::vector<Mat> images;
    for (long k = 0; k < cb.dim(); ++k) {
        Mat x = defining_block(cb, k);
        images.push_back(-(ipq * conj_mat(x).transpose() * ipq));
    }
    return solve_involution(cb, images);
}

Mat involution_sl_real(const ChevalleyBasis& cb) {
    std::vector<Mat> images;
    for (long k = 0; k < cb.dim(); ++k) images.push_back(conj_mat(defining_block(cb, k)));
    return solve_involution(cb, images);
}

std::vector<std::pair<IntVec, long>> decompose_character(const RootSystem& rs,
                                                         const std::map<IntVec, long>& weights) {
    std::map<IntVec, long> rem = weights;
    for (const auto& [w, c] : rem)
        if (c <= 0) throw std::runtime_error("decompose_character: nonpositive multiplicity at " + weight_string(w));

    std::vector<std::pair<IntVec, long>> out;
    while (!rem.empty()) {
        // Dominance-maximal weight: largest root-coordinate height, ties by lex.
        auto best = rem.begin();
        Rational best_h;
        bool first = true;
        for (auto it = rem.begin(); it != rem.end(); ++it) {
            RatVec rc = rs.to_root_coords(rat_vec(it->first));
            Rational h;
            for (const auto& x : rc) h += x;
            if (first || h > best_h || (h == best_h && it->first > best->first)) {
                best = it;
                best_h = h;
                first = false;
            }
        }
        IntVec top = best->first;
        long count = best->second;
        for (long m : top)
            if (m < 0)
                throw std::runtime_error("decompose_character: maximal weight " + weight_string(top) +
                                         " is not dominant");
        WeightSystem ws = weight_system(rs, top);
        for (const auto& [mu, mult] : ws.multiplicity) {
            auto it = rem.find(mu);
            long have = it == rem.end() ? 0 : it->second;
            long left = have - count * mult;
            if (left < 0)
                throw std::runtime_error("decompose_character: multiplicity of " + weight_string(mu) +
                                         " drops below zero");
            if (left == 0) {
                if (it != rem.end()) rem.erase(it);
            } else {
                rem[mu] = left;
            }
        }
        out.emplace_back(top, count);
    }
    return out;
}

}  // namespace tanaka
