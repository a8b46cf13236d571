#include "tanaka/chevalley.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tanaka {
namespace {

Mat comm(const Mat& a, const Mat& b) { return a * b - b * a; }

std::string root_label(const IntVec& coords, int sign) {
    std::ostringstream os;
    os << "x[";
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (j) os << ",";
        os << sign * coords[j];
    }
    os << "]";
    return os.str();
}

IntVec scaled(const IntVec& v, long c) {
    IntVec out(v);
    for (auto& x : out) x *= c;
    return out;
}

IntVec minus_simple(const IntVec& gamma, int i, long times) {
    IntVec out(gamma);
    out[i] -= times;
    return out;
}

IntVec simple_root(int rank, int i) {
    IntVec v(static_cast<std::size_t>(rank), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

/// Lex-min simple i with gamma - alpha_i a (positive) root; gamma non-simple positive.
int chain_parent(const RootSystem& rs, const IntVec& gamma) {
    for (int i = 0; i < rs.rank; ++i) {
        if (gamma[i] > 0 && rs.is_root(minus_simple(gamma, i, 1))) return i;
    }
    throw std::runtime_error("chevalley: positive root with no simple-root predecessor");
}

/// Length of the alpha_i-string below beta: max q with beta - q*alpha_i a root.
long string_below(const RootSystem& rs, const IntVec& beta, int i) {
    long p = 0;
    while (rs.is_root(minus_simple(beta, i, p + 1))) ++p;
    return p;
}

Mat flatten_columns(const std::vector<Mat>& mats, long rep_dim) {
    Mat out(static_cast<int>(rep_dim * rep_dim), static_cast<int>(mats.size()));
    for (std::size_t k = 0; k < mats.size(); ++k) {
        const Mat& m = mats[k];
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                out(i * static_cast<int>(rep_dim) + j, static_cast<int>(k)) = m(i, j);
    }
    return out;
}

}  // namespace

long ChevalleyBasis::index_of_root(const IntVec& gamma) const {
    const auto& pos = rs.positive_roots;
    for (std::size_t k = 0; k < pos.size(); ++k) {
        if (pos[k] == gamma) return pos_index(static_cast<long>(k));
        if (scaled(pos[k], -1) == gamma) return neg_index(static_cast<long>(k));
    }
    return -1;
}

IntVec ChevalleyBasis::coroot(const IntVec& gamma) const {
    RatVec m = rat_vec(rs.to_fund(gamma));
    Rational len = rs.pairing(m, m);
    if (len == 0) throw std::invalid_argument("coroot: zero vector");
    IntVec c(rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
        Rational cj = Rational(2 * gamma[j]) * rs.sym[j] / len;
        if (!is_integer(cj)) throw std::runtime_error("chevalley: non-integral coroot coefficient");
        c[j] = rational_to_long(cj);
    }
    return c;
}

ChevalleyBasis chevalley(const RootSystem& rs, long dim_cap) {
    ChevalleyBasis cb;
    cb.rs = rs;

    // Faithful realization: direct sum of all fundamental modules.
    cb.block_offset.assign(rs.rank, 0);
    for (int k = 0; k < rs.rank; ++k) {
        IntVec highest(rs.rank, 0);
        highest[k] = 1;
        cb.fundamental.push_back(realize_module(rs, highest, dim_cap));
        cb.block_offset[k] = cb.rep_dim;
        cb.rep_dim += cb.fundamental.back().dim;
    }
    const int n = static_cast<int>(cb.rep_dim);
    auto block_diag = [&](const std::vector<Mat> ModuleRealization::* gen, int i) {
        Mat out(n, n);
        for (int k = 0; k < rs.rank; ++k) {
            const Mat& b = (cb.fundamental[k].*gen)[i];
            long off = cb.block_offset[k];
            for (int r = 0; r < b.rows(); ++r)
                for (int c = 0; c < b.cols(); ++c)
                    out(static_cast<int>(off) + r, static_cast<int>(off) + c) = b(r, c);
        }
        return out;
    };

    const auto& pos = rs.positive_roots;
    const long npos = static_cast<long>(pos.size());
    const long dim = rs.rank + 2 * npos;
    cb.rep.assign(static_cast<std::size_t>(dim), Mat(n, n));
    cb.chain_simple.assign(static_cast<std::size_t>(npos), -1);
    cb.pos_div.assign(static_cast<std::size_t>(npos), Rational(1));
    cb.neg_div.assign(static_cast<std::size_t>(npos), Rational(1));

    std::vector<std::string> labels(static_cast<std::size_t>(dim));
    for (int i = 0; i < rs.rank; ++i) {
        labels[static_cast<std::size_t>(cb.h_index(i))] = "h" + std::to_string(i + 1);
        cb.rep[static_cast<std::size_t>(cb.h_index(i))] = block_diag(&ModuleRealization::h, i);
    }

    std::map<IntVec, long> pos_of;  // root coords -> index into positive_roots
    for (long k = 0; k < npos; ++k) pos_of[pos[static_cast<std::size_t>(k)]] = k;

    for (long k = 0; k < npos; ++k) {
        const IntVec& gamma = pos[static_cast<std::size_t>(k)];
        labels[static_cast<std::size_t>(cb.pos_index(k))] = root_label(gamma, +1);
        labels[static_cast<std::size_t>(cb.neg_index(k))] = root_label(gamma, -1);

        if (height(gamma) == 1) {
            int i = 0;
            while (gamma[i] == 0) ++i;
            cb.rep[static_cast<std::size_t>(cb.pos_index(k))] = block_diag(&ModuleRealization::e, i);
            cb.rep[static_cast<std::size_t>(cb.neg_index(k))] = block_diag(&ModuleRealization::f, i);
            continue;
        }

        int i = chain_parent(rs, gamma);
        IntVec beta = minus_simple(gamma, i, 1);
        long kb = pos_of.at(beta);
        long p = string_below(rs, beta, i);
        cb.chain_simple[static_cast<std::size_t>(k)] = i;
        cb.pos_div[static_cast<std::size_t>(k)] = Rational(p + 1);
        long ia = pos_of.at(simple_root(rs.rank, i));

        Scalar inv_div(Rational(1, static_cast<unsigned long>(p + 1)));
        Mat xg = comm(cb.rep[static_cast<std::size_t>(cb.pos_index(ia))],
                      cb.rep[static_cast<std::size_t>(cb.pos_index(kb))]) * inv_div;
        Mat yg = comm(cb.rep[static_cast<std::size_t>(cb.neg_index(ia))],
                      cb.rep[static_cast<std::size_t>(cb.neg_index(kb))]) * inv_div;
        if (xg.is_zero() || yg.is_zero())
            throw std::runtime_error("chevalley: chain bracket vanished");

        // Rescale the negative vector so [x_gamma, x_{-gamma}] is exactly the coroot.
        IntVec c = cb.coroot(gamma);
        Mat h_gamma(n, n);
        for (int j = 0; j < rs.rank; ++j)
            h_gamma = h_gamma + cb.rep[static_cast<std::size_t>(cb.h_index(j))] * Scalar(Rational(c[j]));
        Mat t = comm(xg, yg);
        Scalar rho;
        bool found = false;
        for (int r = 0; r < n && !found; ++r) {
            if (!h_gamma(r, r).is_zero()) {
                rho = t(r, r) / h_gamma(r, r);
                found = true;
            }
        }
        if (!found || rho.is_zero())
            throw std::runtime_error("chevalley: degenerate coroot pairing");
        if (!(t == h_gamma * rho))
            throw std::runtime_error("chevalley: [x_gamma, x_-gamma] not proportional to the coroot");
        cb.neg_div[static_cast<std::size_t>(k)] = Rational(p + 1) * rho.as_rational();
        cb.rep[static_cast<std::size_t>(cb.pos_index(k))] = xg;
        cb.rep[static_cast<std::size_t>(cb.neg_index(k))] = yg * (Scalar(1) / rho);
    }

    // Structure constants: express every commutator over the basis matrices.
    Mat basis_flat = flatten_columns(cb.rep, cb.rep_dim);
    if (rank(basis_flat) != static_cast<int>(dim))
        throw std::runtime_error("chevalley: realization is not faithful");

    std::vector<Mat> comms;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b) {
            comms.push_back(comm(cb.rep[static_cast<std::size_t>(a)], cb.rep[static_cast<std::size_t>(b)]));
            pairs.emplace_back(a, b);
        }
    Mat rhs = flatten_columns(comms, cb.rep_dim);
    std::optional<Mat> coef = solve_matrix(basis_flat, rhs);
    if (!coef) throw std::runtime_error("chevalley: commutator left the spanned algebra");

    cb.table.basis = labels;
    cb.table.field = "Qi";
    for (std::size_t q = 0; q < pairs.size(); ++q) {
        Vec col = coef->col(static_cast<int>(q));
        for (const auto& entry : svec_from_dense(col)) {
            if (!entry.second.is_rational() || !is_integer(entry.second.as_rational()))
                throw std::runtime_error("chevalley: non-integral structure constant");
        }
        cb.table.set_bracket(pairs[q].first, pairs[q].second, svec_from_dense(col));
    }

    // Construction self-checks: Cartan action and coroot brackets.
    for (long k = 0; k < npos; ++k) {
        const IntVec& gamma = pos[static_cast<std::size_t>(k)];
        IntVec m = rs.to_fund(gamma);
        for (int i = 0; i < rs.rank; ++i) {
            SVec want;
            if (m[i] != 0) want.emplace_back(static_cast<int>(cb.pos_index(k)), Scalar(Rational(m[i])));
            if (cb.table.bracket(static_cast<int>(cb.h_index(i)), static_cast<int>(cb.pos_index(k))) != want)
                throw std::runtime_error("chevalley: Cartan action mismatch");
        }
        IntVec c = cb.coroot(gamma);
        SVec want;
        for (int j = 0; j < rs.rank; ++j)
            if (c[j] != 0) want.emplace_back(static_cast<int>(cb.h_index(j)), Scalar(Rational(c[j])));
        if (cb.table.bracket(static_cast<int>(cb.pos_index(k)), static_cast<int>(cb.neg_index(k))) != want)
            throw std::runtime_error("chevalley: coroot bracket mismatch");
    }
    return cb;
}

std::vector<Mat> module_action(const ChevalleyBasis& cb, const ModuleRealization& mr) {
    if (mr.rs.cartan != cb.rs.cartan)
        throw std::invalid_argument("module_action: module built over a different root system");
    const RootSystem& rs = cb.rs;
    const auto& pos = rs.positive_roots;
    const long npos = static_cast<long>(pos.size());
    std::vector<Mat> act(static_cast<std::size_t>(cb.dim()));
    for (int i = 0; i < rs.rank; ++i) act[static_cast<std::size_t>(cb.h_index(i))] = mr.h[i];

    std::map<IntVec, long> pos_of;
    for (long k = 0; k < npos; ++k) pos_of[pos[static_cast<std::size_t>(k)]] = k;

    for (long k = 0; k < npos; ++k) {
        const IntVec& gamma = pos[static_cast<std::size_t>(k)];
        if (height(gamma) == 1) {
            int i = 0;
            while (gamma[i] == 0) ++i;
            act[static_cast<std::size_t>(cb.pos_index(k))] = mr.e[i];
            act[static_cast<std::size_t>(cb.neg_index(k))] = mr.f[i];
            continue;
        }
        int i = cb.chain_simple[static_cast<std::size_t>(k)];
        long kb = pos_of.at(minus_simple(gamma, i, 1));
        long ia = pos_of.at(simple_root(rs.rank, i));
        act[static_cast<std::size_t>(cb.pos_index(k))] =
            comm(act[static_cast<std::size_t>(cb.pos_index(ia))], act[static_cast<std::size_t>(cb.pos_index(kb))]) *
            Scalar(Rational(1) / cb.pos_div[static_cast<std::size_t>(k)]);
        act[static_cast<std::size_t>(cb.neg_index(k))] =
            comm(act[static_cast<std::size_t>(cb.neg_index(ia))], act[static_cast<std::size_t>(cb.neg_index(kb))]) *
            Scalar(Rational(1) / cb.neg_div[static_cast<std::size_t>(k)]);
    }
    return act;
}

}  // namespace tanaka
