#include "tanaka/structure.hpp"

#include <stdexcept>

namespace tanaka {
namespace {

Mat rows_matrix(const std::vector<Vec>& rows, long n) {
    Mat m(static_cast<int>(rows.size()), static_cast<int>(n));
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(static_cast<int>(i), rows[i]);
    return m;
}

Scalar trace_product(const Mat& a, const Mat& b) {
    Scalar s;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * b(j, i);
    return s;
}

}  // namespace

Subspace rref_span(const std::vector<Vec>& gens) {
    if (gens.empty()) return {};
    auto [r, pivots] = rref(rows_matrix(gens, static_cast<long>(gens.front().size())));
    Subspace out;
    for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(r.row(static_cast<int>(i)));
    return out;
}

Subspace full_space(long n) {
    Subspace out;
    for (long i = 0; i < n; ++i) {
        Vec v(static_cast<std::size_t>(n));
        v[static_cast<std::size_t>(i)] = Scalar(1);
        out.push_back(v);
    }
    return out;
}

bool subspace_contains(const Subspace& s, const Vec& v) {
    // Echelon reduction against the canonical basis rows (leading columns
    // strictly increase for rref_span output), O(|s| * n).
    Vec r = v;
    for (const Vec& row : s) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead].is_zero()) ++lead;
        if (lead == row.size()) continue;
        if (r[lead].is_zero()) continue;
        Scalar c = r[lead] / row[lead];
        for (std::size_t j = lead; j < r.size(); ++j) r[j] -= c * row[j];
    }
    for (const auto& c : r)
        if (!c.is_zero()) return false;
    return true;
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
    return rref_span(a) == rref_span(b);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    std::vector<Vec> gens(a);
    gens.insert(gens.end(), b.begin(), b.end());
    return rref_span(gens);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b, long n) {
    if (a.empty() || b.empty()) return {};
    // x in both spans: x = sum l_i a_i = sum m_j b_j; kernel of [A^T | -B^T].
    Mat sys(static_cast<int>(n), static_cast<int>(a.size() + b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (long r = 0; r < n; ++r) sys(static_cast<int>(r), static_cast<int>(i)) = a[i][static_cast<std::size_t>(r)];
    for (std::size_t j = 0; j < b.size(); ++j)
        for (long r = 0; r < n; ++r)
            sys(static_cast<int>(r), static_cast<int>(a.size() + j)) = -b[j][static_cast<std::size_t>(r)];
    std::vector<Vec> gens;
    for (const Vec& k : kernel_basis(sys)) {
        Vec x(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (long r = 0; r < n; ++r) x[static_cast<std::size_t>(r)] += k[i] * a[i][static_cast<std::size_t>(r)];
        gens.push_back(x);
    }
    return rref_span(gens);
}

Subspace bracket_span(const LieTable& t, const Subspace& a, const Subspace& b) {
    std::vector<Vec> gens;
    for (const Vec& x : a)
        for (const Vec& y : b) gens.push_back(t.bracket(x, y));
    return rref_span(gens);
}

Mat killing_form(const LieTable& t) {
    const int n = static_cast<int>(t.dim());
    std::vector<Mat> ad(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ad[static_cast<std::size_t>(i)] = t.ad_basis(i);
    Mat k(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Scalar v = trace_product(ad[static_cast<std::size_t>(i)], ad[static_cast<std::size_t>(j)]);
            k(i, j) = v;
            k(j, i) = v;
        }
    return k;
}

Subspace derived_subalgebra(const LieTable& t) {
    Subspace g = full_space(t.dim());
    return bracket_span(t, g, g);
}

Subspace radical(const LieTable& t) {
    Subspace d = derived_subalgebra(t);
    if (d.empty()) return full_space(t.dim());  // abelian
    Mat k = killing_form(t);
    Mat sys = rows_matrix(d, t.dim()) * k;  // rows: x -> k(d_i, x)
    return rref_span(kernel_basis(sys));
}

Subspace killing_radical(const LieTable& t) {
    return rref_span(kernel_basis(killing_form(t)));
}

Subspace centralizer(const LieTable& t, const Subspace& s) {
    if (s.empty()) return full_space(t.dim());
    Mat sys(0, static_cast<int>(t.dim()));
    for (const Vec& gen : s) sys = sys.vstack(t.ad(gen));
    return rref_span(kernel_basis(sys));
}

bool is_subalgebra(const LieTable& t, const Subspace& s) {
    for (const Vec& x : s)
        for (const Vec& y : s)
            if (!subspace_contains(s, t.bracket(x, y))) return false;
    return true;
}

bool is_ideal(const LieTable& t, const Subspace& s) {
    for (int i = 0; i < t.dim(); ++i) {
        Mat ad = t.ad_basis(i);
        for (const Vec& x : s)
            if (!subspace_contains(s, ad.apply(x))) return false;
    }
    return true;
}

bool ad_nilpotent(const LieTable& t, const Vec& v) {
    Mat a = t.ad(v);
    Mat p = a;
    for (long k = 1; k <= t.dim(); ++k) {
        if (p.is_zero()) return true;
        p = p * a;
    }
    return p.is_zero();
}

std::vector<Subspace> lower_central_series(const LieTable& t, const Subspace& s) {
    std::vector<Subspace> series{rref_span(s)};
    while (!series.back().empty()) {
        Subspace next = bracket_span(t, series.front(), series.back());
        if (subspace_equal(next, series.back())) break;
        series.push_back(next);
    }
    return series;
}

bool is_nilpotent_subalgebra(const LieTable& t, const Subspace& s) {
    return lower_central_series(t, s).back().empty();
}

Subspace max_semisimple_ideal(const LieTable& t) {
    Subspace c = centralizer(t, radical(t));
    Subspace sigma = bracket_span(t, c, c);
    if (!is_ideal(t, sigma))
        throw std::runtime_error("max_semisimple_ideal: candidate is not an ideal");
    if (!sigma.empty()) {
        Mat b = rows_matrix(sigma, t.dim());
        Mat restricted = b * killing_form(t) * b.transpose();
        if (rank(restricted) != static_cast<int>(sigma.size()))
            throw std::runtime_error("max_semisimple_ideal: restricted Killing form is degenerate");
    }
    return sigma;
}

Subspace nilradical(const LieTable& t) {
    Subspace rad = radical(t);
    Subspace cand = subspace_intersect(rad, killing_radical(t), t.dim());
    if (!is_ideal(t, cand))
        throw std::runtime_error("nilradical: candidate is not an ideal");
    for (const Vec& v : cand)
        if (!ad_nilpotent(t, v))
            throw std::runtime_error("nilradical: candidate contains a non-nilpotent element");
    if (!is_nilpotent_subalgebra(t, cand))
        throw std::runtime_error("nilradical: candidate is not nilpotent");
    // Maximality: every direction of the radical beyond the candidate must
    // fail ad-nilpotency, otherwise the candidate undershoots.
    Subspace extended = cand;
    for (const Vec& v : rad) {
        if (subspace_contains(extended, v)) continue;
        if (ad_nilpotent(t, v))
            throw std::runtime_error("nilradical: candidate is not maximal");
        extended = subspace_sum(extended, {v});
    }
    return cand;
}

StructureSummary classify_structure(const LieTable& t) {
    StructureSummary s;
    s.dim = t.dim();
    Subspace rad = radical(t);
    Subspace nil = nilradical(t);
    Subspace sigma = max_semisimple_ideal(t);
    s.radical_dim = static_cast<long>(rad.size());
    s.nilradical_dim = static_cast<long>(nil.size());
    s.toral_dim = s.radical_dim - s.nilradical_dim;
    s.semisimple_ideal_dim = static_cast<long>(sigma.size());
    if (s.radical_dim == 0)
        s.classification = "semisimple";
    else if (s.semisimple_ideal_dim == 0)
        s.classification = "proper";
    else
        s.classification = "mixed";
    return s;
}

}  // namespace tanaka
