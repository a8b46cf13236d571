#include "tanaka/lie_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace tanaka {

void LieTable::set_bracket(int i, int j, SVec value) {
    if (i == j) {
        for (const auto& [k, c] : value)
            if (!c.is_zero())
                throw std::invalid_argument("set_bracket: [x,x] must vanish");
        return;
    }
    if (i > j) {
        std::swap(i, j);
        value = svec_scale(value, Scalar(Rational(-1)));
    }
    // Normalize: sorted indices, combined duplicates, no explicit zeros.
    std::sort(value.begin(), value.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SVec norm;
    for (const auto& [k, c] : value) {
        if (!norm.empty() && norm.back().first == k)
            norm.back().second = norm.back().second + c;
        else
            norm.emplace_back(k, c);
    }
    norm.erase(std::remove_if(norm.begin(), norm.end(),
                              [](const auto& e) { return e.second.is_zero(); }),
               norm.end());
    if (norm.empty())
        table.erase({i, j});
    else
        table[{i, j}] = std::move(norm);
}

SVec LieTable::bracket(int i, int j) const {
    if (i == j) return {};
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = table.find({i, j});
    if (it == table.end()) return {};
    return flip ? svec_scale(it->second, Scalar(Rational(-1))) : it->second;
}

SVec LieTable::bracket(const SVec& x, int j) const {
    SVec acc;
    for (const auto& [i, c] : x)
        acc = svec_axpy(acc, c, bracket(i, j));
    return acc;
}

Vec LieTable::bracket(const Vec& x, const Vec& y) const {
    const long n = dim();
    Vec out(n, Scalar());
    for (long i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (long j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Scalar c = x[i] * y[j];
            for (const auto& [k, v] : bracket(static_cast<int>(i), static_cast<int>(j)))
                out[k] = out[k] + c * v;
        }
    }
    return out;
}

Mat LieTable::ad(const Vec& x) const {
    const long n = dim();
    Mat m(n, n);
    for (long j = 0; j < n; ++j) {
        for (long i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (const auto& [k, v] : bracket(static_cast<int>(i), static_cast<int>(j)))
                m(k, j) = m(k, j) + x[i] * v;
        }
    }
    return m;
}

Mat LieTable::ad_basis(int i) const {
    const long n = dim();
    Mat m(n, n);
    for (long j = 0; j < n; ++j)
        for (const auto& [k, v] : bracket(i, static_cast<int>(j)))
            m(k, j) = v;
    return m;
}

std::vector<long> LieTable::degree_indices(long p) const {
    std::vector<long> out;
    if (!grading) return out;
    for (long i = 0; i < dim(); ++i)
        if ((*grading)[i] == p) out.push_back(i);
    return out;
}

std::optional<std::array<int, 3>> jacobi_witness(const LieTable& t) {
    const int n = static_cast<int>(t.dim());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const SVec bij = t.bracket(i, j);
            for (int k = j + 1; k < n; ++k) {
                SVec acc = t.bracket(bij, k);
                acc = svec_axpy(acc, Scalar(Rational(1)), t.bracket(t.bracket(j, k), i));
                acc = svec_axpy(acc, Scalar(Rational(1)), t.bracket(t.bracket(k, i), j));
                if (!svec_is_zero(acc)) return std::array<int, 3>{i, j, k};
            }
        }
    return std::nullopt;
}

std::optional<std::array<int, 3>> grading_witness(const LieTable& t) {
    if (!t.grading) return std::nullopt;
    const auto& g = *t.grading;
    for (const auto& [ij, v] : t.table)
        for (const auto& [k, c] : v)
            if (!c.is_zero() && g[k] != g[ij.first] + g[ij.second])
                return std::array<int, 3>{ij.first, ij.second, k};
    return std::nullopt;
}

nlohmann::json table_to_json(const LieTable& t) {
    nlohmann::json j;
    j["basis"] = t.basis;
    j["field"] = t.field;
    nlohmann::json brs = nlohmann::json::array();
    for (const auto& [ij, v] : t.table) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [k, c] : v)
            terms.push_back({k, c.to_string()});
        brs.push_back({ij.first, ij.second, terms});
    }
    j["brackets"] = brs;
    if (t.grading) j["grading"] = *t.grading;
    if (t.J) {
        nlohmann::json rows = nlohmann::json::array();
        for (long r = 0; r < t.J->rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (long c = 0; c < t.J->cols(); ++c)
                row.push_back((*t.J)(r, c).to_string());
            rows.push_back(row);
        }
        j["J"] = rows;
    }
    return j;
}

LieTable table_from_json(const nlohmann::json& j) {
    LieTable t;
    t.basis = j.at("basis").get<std::vector<std::string>>();
    t.field = j.at("field").get<std::string>();
    if (t.field != "Q" && t.field != "Qi")
        throw std::invalid_argument("table_from_json: field must be Q or Qi");
    const long n = t.dim();
    for (const auto& entry : j.at("brackets")) {
        if (!entry.is_array() || entry.size() != 3)
            throw std::invalid_argument("table_from_json: malformed bracket entry");
        const int a = entry[0].get<int>();
        const int b = entry[1].get<int>();
        if (a < 0 || b < 0 || a >= n || b >= n || a >= b)
            throw std::invalid_argument("table_from_json: bracket indices out of range");
        SVec v;
        for (const auto& term : entry[2]) {
            const int k = term[0].get<int>();
            if (k < 0 || k >= n)
                throw std::invalid_argument("table_from_json: coefficient index out of range");
            Scalar c = Scalar::from_string(term[1].get<std::string>());
            if (t.field == "Q" && !c.is_rational())
                throw std::invalid_argument("table_from_json: complex entry in rational table");
            if (!c.is_zero()) v.emplace_back(k, c);
        }
        t.set_bracket(a, b, v);
    }
    if (j.contains("grading")) {
        auto g = j.at("grading").get<std::vector<long>>();
        if (static_cast<long>(g.size()) != n)
            throw std::invalid_argument("table_from_json: grading size mismatch");
        t.grading = g;
    }
    if (j.contains("J")) {
        const auto& rows = j.at("J");
        if (static_cast<long>(rows.size()) != n)
            throw std::invalid_argument("table_from_json: J size mismatch");
        Mat m(n, n);
        for (long r = 0; r < n; ++r) {
            if (static_cast<long>(rows[r].size()) != n)
                throw std::invalid_argument("table_from_json: J row size mismatch");
            for (long c = 0; c < n; ++c)
                m(r, c) = Scalar::from_string(rows[r][c].get<std::string>());
        }
        t.J = m;
    }
    return t;
}

}  // namespace tanaka
