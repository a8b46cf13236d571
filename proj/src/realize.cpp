#include "tanaka/realize.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace tanaka {

namespace {

// Dense coordinates (over the basis accepted so far, padded with zeros) of
// the images of a candidate vector under all raising operators, concatenated
// into a single column used for the dependence test.
Vec raising_profile(const std::vector<Vec>& e_images, size_t width) {
    Vec out;
    out.reserve(e_images.size() * width);
    for (const Vec& img : e_images) {
        for (size_t k = 0; k < width; ++k)
            out.push_back(k < img.size() ? img[k] : Scalar());
    }
    return out;
}

}  // namespace

long ModuleRealization::weight_multiplicity(const IntVec& w) const {
    long n = 0;
    for (const IntVec& bw : basis_weight)
        if (bw == w) ++n;
    return n;
}

ModuleRealization realize_module(const RootSystem& rs, const IntVec& highest,
                                 long dim_cap) {
    const int rank = rs.rank;
    if (static_cast<int>(highest.size()) != rank)
        throw std::invalid_argument("realize_module: weight has wrong rank");
    for (long c : highest)
        if (c < 0)
            throw std::invalid_argument("realize_module: weight is not dominant");

    const Rational total = weyl_dim(rs, highest);
    if (total > Rational(dim_cap))
        throw std::runtime_error("realize_module: dimension exceeds cap");

    ModuleRealization mr;
    mr.rs = rs;
    mr.highest = highest;

    // Per-basis-vector data gathered during the lowering sweep.
    std::vector<IntVec> weights{highest};
    std::vector<int> level_of{0};
    // e_img[b][j] = coordinates of e_j . b over the basis (previous level).
    std::vector<std::vector<Vec>> e_img{{std::vector<Vec>(rank)}};
    // f_img[b][j] = coordinates of f_j . b, filled while processing level+1.
    std::vector<std::vector<Vec>> f_img;

    std::vector<long> level_start{0};  // first basis index of each level
    long level = 0;
    while (true) {
        const long begin = level_start[level];
        const long end = static_cast<long>(weights.size());
        if (begin == end) break;  // previous sweep accepted nothing
        f_img.resize(weights.size(), std::vector<Vec>(rank));
        level_start.push_back(end);

        // Profiles of the vectors accepted on the new level, as columns.
        std::vector<Vec> profiles;
        const size_t width = static_cast<size_t>(end);

        for (long u = begin; u < end; ++u) {
            for (int i = 0; i < rank; ++i) {
                // Candidate w = f_i . u.  Its raising images follow from
                // e_j(f_i u) = f_i(e_j u) + delta_ij <wt(u), alpha_j^v> u.
                std::vector<Vec> cand(rank);
                for (int j = 0; j < rank; ++j) {
                    Vec img(width, Scalar());
                    const Vec& eu = e_img[u][j];  // lives on level-1 basis
                    for (size_t k = 0; k < eu.size(); ++k) {
                        if (eu[k].is_zero()) continue;
                        const Vec& fk = f_img[k][i];
                        for (size_t t = 0; t < fk.size(); ++t)
                            img[t] = img[t] + eu[k] * fk[t];
                    }
                    if (i == j) {
                        img[u] = img[u] + Scalar(Rational(weights[u][j]));
                    }
                    cand[j] = img;
                }
                Vec prof = raising_profile(cand, width);
                bool vanishes = true;
                for (const Scalar& s : prof)
                    if (!s.is_zero()) { vanishes = false; break; }
                if (vanishes) {
                    f_img[u][i] = Vec();  // f_i u = 0
                    continue;
                }
                // Try to express prof over the accepted profiles.
                Mat sys(prof.size(), profiles.size());
                for (size_t c = 0; c < profiles.size(); ++c)
                    for (size_t r = 0; r < prof.size(); ++r)
                        sys(r, c) = profiles[c][r];
                std::optional<Vec> sol;
                if (!profiles.empty()) sol = solve(sys, prof);
                if (sol) {
                    Vec dep(weights.size(), Scalar());
                    for (size_t c = 0; c < sol->size(); ++c)
                        dep[end + c] = (*sol)[c];
                    f_img[u][i] = dep;
                } else {
                    // m-coordinates of alpha_i are <alpha_i, alpha_j^v> = C_ji.
                    IntVec w = weights[u];
                    for (int j = 0; j < rank; ++j) w[j] -= rs.cartan[j][i];
                    weights.push_back(w);
                    level_of.push_back(level + 1);
                    e_img.push_back(cand);
                    profiles.push_back(prof);
                    Vec unit(weights.size(), Scalar());
                    unit.back() = Scalar(Rational(1));
                    f_img[u][i] = unit;
                    if (Rational(static_cast<long>(weights.size())) > total)
                        throw std::runtime_error(
                            "realize_module: accepted more vectors than the Weyl dimension");
                }
            }
        }
        ++level;
    }

    mr.dim = static_cast<long>(weights.size());
    if (Rational(mr.dim) != total)
        throw std::runtime_error("realize_module: dimension disagrees with the Weyl formula");
    mr.basis_weight = weights;

    const size_t n = weights.size();
    mr.e.assign(rank, Mat(n, n));
    mr.f.assign(rank, Mat(n, n));
    mr.h.assign(rank, Mat(n, n));
    for (size_t b = 0; b < n; ++b) {
        for (int j = 0; j < rank; ++j) {
            mr.h[j](b, b) = Scalar(Rational(weights[b][j]));
            const Vec& ej = e_img[b][j];
            for (size_t r = 0; r < ej.size(); ++r)
                if (!ej[r].is_zero()) mr.e[j](r, b) = ej[r];
            if (b < f_img.size()) {
                const Vec& fj = f_img[b][j];
                for (size_t r = 0; r < fj.size(); ++r)
                    if (!fj[r].is_zero()) mr.f[j](r, b) = fj[r];
            }
        }
    }
    return mr;
}

std::string verify_realization(const ModuleRealization& mr) {
    const int rank = mr.rs.rank;
    auto comm = [](const Mat& a, const Mat& b) { return a * b - b * a; };
    std::ostringstream err;
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            Mat ef = comm(mr.e[i], mr.f[j]);
            Mat want(mr.dim, mr.dim);
            if (i == j) want = mr.h[i];
            if (!(ef == want)) {
                err << "[e_" << i << ", f_" << j << "] differs from "
                    << (i == j ? "h" : "0");
                return err.str();
            }
            Mat he = comm(mr.h[i], mr.e[j]);
            Mat hf = comm(mr.h[i], mr.f[j]);
            Scalar cij{Rational(mr.rs.cartan[i][j])};
            if (!(he == mr.e[j] * cij)) {
                err << "[h_" << i << ", e_" << j << "] is not C_ij e_j";
                return err.str();
            }
            Mat want_hf = mr.f[j] * cij * Scalar(Rational(-1));
            if (!(hf == want_hf)) {
                err << "[h_" << i << ", f_" << j << "] is not -C_ij f_j";
                return err.str();
            }
            if (!(comm(mr.h[i], mr.h[j]) == Mat(mr.dim, mr.dim))) {
                err << "[h_" << i << ", h_" << j << "] is not 0";
                return err.str();
            }
        }
    }
    WeightSystem ws = weight_system(mr.rs, mr.highest);
    if (ws.dim != mr.dim) return "dimension disagrees with the weight system";
    std::map<IntVec, long> seen;
    for (const IntVec& w : mr.basis_weight) ++seen[w];
    if (seen != ws.multiplicity)
        return "weight multiset disagrees with the weight system";
    return "";
}

}  // namespace tanaka
