#include "tanaka/presets.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tanaka {

namespace {

// Realified sl(2,C) on the basis f, if, h, ih, e, ie (degrees -1,-1,0,0,1,1),
// from the complex brackets [h,e] = 2e, [h,f] = -2f, [e,f] = h extended
// complex-bilinearly.
void fill_sl2c(LieTable& t) {
    t.set_bracket(0, 2, {{0, Scalar(2)}});    // [f, h] = 2f
    t.set_bracket(0, 3, {{1, Scalar(2)}});    // [f, ih] = 2if
    t.set_bracket(0, 4, {{2, Scalar(-1)}});   // [f, e] = -h
    t.set_bracket(0, 5, {{3, Scalar(-1)}});   // [f, ie] = -ih
    t.set_bracket(1, 2, {{1, Scalar(2)}});    // [if, h] = 2if
    t.set_bracket(1, 3, {{0, Scalar(-2)}});   // [if, ih] = -2f
    t.set_bracket(1, 4, {{3, Scalar(-1)}});   // [if, e] = -ih
    t.set_bracket(1, 5, {{2, Scalar(1)}});    // [if, ie] = h
    t.set_bracket(2, 4, {{4, Scalar(2)}});    // [h, e] = 2e
    t.set_bracket(2, 5, {{5, Scalar(2)}});    // [h, ie] = 2ie
    t.set_bracket(3, 4, {{5, Scalar(2)}});    // [ih, e] = 2ie
    t.set_bracket(3, 5, {{4, Scalar(-2)}});   // [ih, ie] = -2e
}

// One copy of the anti-Hermitian module l = {A : A + A^* = 0} under
// X.A = -(A X + X^* A), on the basis (at offset o)
//   z = i E11 (degree -2),  p = E12 - E21 (-1),  q = i(E12 + E21) (-1),
//   w = i E22 (degree 0).
// The action matrices follow by direct multiplication; for example
// f.q = -(q f + e q) = -2 iE11 = -2z for f = E21, and the degree of each
// basis vector is its ad(E_s)-eigenvalue minus 1.
void fill_module_copy(LieTable& t, int o) {
    const int z = o, p = o + 1, q = o + 2, w = o + 3;
    t.set_bracket(0, q, {{z, Scalar(-2)}});   // [f, q] = -2z
    t.set_bracket(0, w, {{q, Scalar(-1)}});   // [f, w] = -q
    t.set_bracket(1, p, {{z, Scalar(-2)}});   // [if, p] = -2z
    t.set_bracket(1, w, {{p, Scalar(-1)}});   // [if, w] = -p
    t.set_bracket(2, z, {{z, Scalar(-2)}});   // [h, z] = -2z
    t.set_bracket(2, w, {{w, Scalar(2)}});    // [h, w] = 2w
    t.set_bracket(3, p, {{q, Scalar(2)}});    // [ih, p] = 2q
    t.set_bracket(3, q, {{p, Scalar(-2)}});   // [ih, q] = -2p
    t.set_bracket(4, z, {{q, Scalar(-1)}});   // [e, z] = -q
    t.set_bracket(4, q, {{w, Scalar(-2)}});   // [e, q] = -2w
    t.set_bracket(5, z, {{p, Scalar(1)}});    // [ie, z] = p
    t.set_bracket(5, p, {{w, Scalar(2)}});    // [ie, p] = 2w
}

// J on the degree -1 block: J = ad(J_s) with J_s = ih/2, so
// f -> -if, if -> f on s and p -> q, q -> -p on each module copy.
void fill_j(LieTable& t, const std::vector<int>& module_offsets) {
    Mat J(static_cast<int>(t.dim()), static_cast<int>(t.dim()));
    J(1, 0) = Scalar(-1);
    J(0, 1) = Scalar(1);
    for (int o : module_offsets) {
        J(o + 2, o + 1) = Scalar(1);
        J(o + 1, o + 2) = Scalar(-1);
    }
    t.J = J;
}

PresetCase build_anti_hermitian_case(int copies) {
    PresetCase out;
    LieTable t;
    t.field = "Q";
    t.basis = {"f", "if", "h", "ih", "e", "ie"};
    std::vector<long> deg = {-1, -1, 0, 0, 1, 1};
    std::vector<int> offsets;
    for (int c = 0; c < copies; ++c) {
        const std::string tag = copies == 1 ? "" : std::to_string(c + 1);
        offsets.push_back(static_cast<int>(t.basis.size()));
        for (const char* n : {"z", "p", "q", "w"}) t.basis.push_back(n + tag);
        for (long d : {-2, -1, -1, 0}) deg.push_back(d);
    }
    t.grading = deg;
    fill_sl2c(t);
    for (int o : offsets) fill_module_copy(t, o);
    fill_j(t, offsets);

    out.table = std::move(t);
    out.l_marker.assign(out.table.basis.size(), true);
    for (int i = 0; i < 6; ++i) out.l_marker[i] = false;
    out.j_s.assign(out.table.basis.size(), Scalar());
    out.j_s[3] = Scalar(Rational(1) / Rational(2));  // J_s = ih / 2
    out.k_expected.assign(copies, Rational(0));
    return out;
}

}  // namespace

PresetCase preset_sl2c1() {
    PresetCase out = build_anti_hermitian_case(1);
    out.name = "sl2c1";
    out.summary =
        "sl(2,C) acting on the real-type module of anti-Hermitian 2x2 "
        "matrices; m has real degree dims (4, 1)";
    return out;
}

PresetCase preset_two_copies() {
    PresetCase out = build_anti_hermitian_case(2);
    out.name = "two-copies";
    out.summary =
        "sl(2,C) acting diagonally on two copies of the anti-Hermitian "
        "module, same gradation and structure on each";
    return out;
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"sl2c1", "two-copies"};
    return names;
}

PresetCase preset_by_name(const std::string& name) {
    if (name == "sl2c1") return preset_sl2c1();
    if (name == "two-copies") return preset_two_copies();
    throw std::invalid_argument("preset_by_name: unknown preset '" + name +
                                "' (available: sl2c1, two-copies)");
}

ModulePreset module_preset(const std::string& name, const RootSystem& rs) {
    ModulePreset out;
    if (name == "standard") {
        out.highest.assign(rs.rank, 0);
        out.highest[0] = 1;
        return out;
    }
    if (name == "dual") {
        out.highest.assign(rs.rank, 0);
        out.highest[rs.rank - 1] = 1;
        return out;
    }
    if (name == "adjoint" || name == "adjoint-shifted") {
        if (rs.components.size() != 1)
            throw std::invalid_argument(
                "module_preset: the adjoint presets need a connected root system");
        out.highest = rs.to_fund(rs.highest_root(0));
        out.shift = Rational(name == "adjoint" ? 0 : -2);
        return out;
    }
    throw std::invalid_argument("module_preset: unknown preset '" + name +
                                "' (available: standard, dual, adjoint, adjoint-shifted)");
}

namespace {

std::vector<IntVec> cartan_single(char series, int n) {
    auto bad = [&](const std::string& why) {
        std::ostringstream os;
        os << "cartan_from_label: " << series << n << " " << why;
        throw std::invalid_argument(os.str());
    };
    auto chain = [](int n) {
        std::vector<IntVec> c(n, IntVec(n, 0));
        for (int i = 0; i < n; ++i) {
            c[i][i] = 2;
            if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
        }
        return c;
    };
    switch (series) {
        case 'A':
            if (n < 1) bad("needs rank >= 1");
            return chain(n);
        case 'B': {
            if (n < 2) bad("needs rank >= 2");
            auto c = chain(n);
            c[n - 1][n - 2] = -2;  // short last root
            return c;
        }
        case 'C': {
            if (n < 2) bad("needs rank >= 2");
            auto c = chain(n);
            c[n - 2][n - 1] = -2;  // long last root
            return c;
        }
        case 'D': {
            if (n < 3) bad("needs rank >= 3");
            auto c = chain(n);
            c[n - 1][n - 2] = c[n - 2][n - 1] = 0;
            c[n - 1][n - 3] = c[n - 3][n - 1] = -1;
            return c;
        }
        case 'E': {
            if (n < 6 || n > 8) bad("exists for rank 6, 7, 8 only");
            // Nodes 1..n-1 form a chain; node n attaches to node 3
            // (Bourbaki numbering, node indices here are 0-based).
            auto c = chain(n - 1);
            for (auto& row : c) row.push_back(0);
            c.emplace_back(n, 0);
            c[n - 1][n - 1] = 2;
            c[n - 1][2] = c[2][n - 1] = -1;
            return c;
        }
        case 'F': {
            if (n != 4) bad("exists for rank 4 only");
            auto c = chain(4);
            c[1][2] = -2;
            c[2][1] = -1;
            return c;
        }
        case 'G': {
            if (n != 2) bad("exists for rank 2 only");
            return {{2, -1}, {-3, 2}};
        }
        default:
            bad("unknown series");
    }
    return {};
}

}  // namespace

std::vector<IntVec> cartan_from_label(const std::string& label) {
    std::vector<std::vector<IntVec>> blocks;
    std::size_t pos = 0;
    while (pos < label.size()) {
        const char series = label[pos++];
        std::size_t len = 0;
        while (pos + len < label.size() && std::isdigit(label[pos + len]) != 0) ++len;
        if (len == 0)
            throw std::invalid_argument("cartan_from_label: malformed label '" + label + "'");
        const int n = std::stoi(label.substr(pos, len));
        pos += len;
        blocks.push_back(cartan_single(series, n));
        if (pos < label.size()) {
            if (label[pos] != '+')
                throw std::invalid_argument("cartan_from_label: malformed label '" + label + "'");
            ++pos;
        }
    }
    if (blocks.empty())
        throw std::invalid_argument("cartan_from_label: empty label");
    int total = 0;
    for (const auto& b : blocks) total += static_cast<int>(b.size());
    std::vector<IntVec> cartan(total, IntVec(total, 0));
    int at = 0;
    for (const auto& b : blocks) {
        const int n = static_cast<int>(b.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cartan[at + i][at + j] = b[i][j];
        at += n;
    }
    return cartan;
}

}  // namespace tanaka
