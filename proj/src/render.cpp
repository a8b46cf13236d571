#include "tanaka/render.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tanaka/root_system.hpp"

namespace tanaka {

namespace {

struct RatPoint {
    Rational x, y;
};

/// Integer direction vectors for the simple roots of a rank <= 2 system,
/// chosen so lengths and angles approximate the Euclidean picture of the
/// invariant form: a short root maps to length 24, and the four possible
/// angles (90, 120, 135, 150 degrees) use the nearest integer vectors.
std::vector<RatPoint> direction_vectors(const RootSystem& rs) {
    auto pt = [](long x, long y) { return RatPoint{Rational(x), Rational(y)}; };
    if (rs.rank == 1) return {pt(24, 0)};
    const long product = rs.cartan[0][1] * rs.cartan[1][0];
    const bool second_long = rs.sym[1] > rs.sym[0];
    switch (product) {
        case 0:
            return {pt(24, 0), pt(0, 24)};
        case 1:
            return {pt(24, 0), pt(-12, 21)};
        case 2:
            return second_long ? std::vector<RatPoint>{pt(24, 0), pt(-24, 24)}
                               : std::vector<RatPoint>{pt(34, 0), pt(-17, 17)};
        case 3:
            return second_long ? std::vector<RatPoint>{pt(24, 0), pt(-36, 21)}
                               : std::vector<RatPoint>{pt(42, 0), pt(-21, 12)};
        default:
            throw std::invalid_argument("direction_vectors: not a rank-2 Cartan matrix");
    }
}

RatPoint project(const RootSystem& rs, const std::vector<RatPoint>& dirs, const RatVec& fund) {
    const RatVec coords = rs.to_root_coords(fund);
    RatPoint out{Rational(0), Rational(0)};
    for (int i = 0; i < rs.rank; ++i) {
        out.x += coords[i] * dirs[i].x;
        out.y += coords[i] * dirs[i].y;
    }
    return out;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

long denominator(const Rational& r) {
    return static_cast<long>(mpz_get_si(r.get_den().get_mpz_t()));
}

/// v * scale, which the caller arranges to be an exact integer.
long scaled(const Rational& r, long scale) {
    const Rational v = r * Rational(scale);
    return static_cast<long>(mpz_get_si(Rational(v).get_num().get_mpz_t()));
}

/// Exact floor of v * scale, for decorative coordinates whose denominators
/// are not controlled.
long scaled_floor(const Rational& r, long scale) {
    Rational v = r * Rational(scale);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return static_cast<long>(mpz_get_si(q.get_mpz_t()));
}

}  // namespace

DiagramSpec empty_diagram(int rank) {
    DiagramSpec spec;
    spec.rank = rank;
    return spec;
}

DiagramSpec build_diagram(const CRAlgebra& alg, const WeightSystem& ws,
                          const AdmissibilityReport& rpt) {
    DiagramSpec spec;
    spec.rank = alg.rs.rank;
    const bool planar = alg.rs.rank <= 2;
    const std::vector<RatPoint> dirs = planar ? direction_vectors(alg.rs) : std::vector<RatPoint>();

    std::map<Rational, bool> line_classes;
    for (const auto& [w, mult] : ws.multiplicity) {
        DiagramSpec::Dot dot;
        dot.weight = w;
        dot.mult = mult;
        dot.e_value = weight_E_value(alg, w);
        if (planar) {
            const RatPoint p = project(alg.rs, dirs, rat_vec(w));
            dot.x = p.x;
            dot.y = p.y;
        }
        line_classes.emplace(dot.e_value, false);
        spec.dots.push_back(std::move(dot));
    }
    // A line is marked when its class lands in degree -1 under the shift of
    // some admissible structure.
    for (const AdmissibleStructure& st : rpt.structures) {
        const Rational v = Rational(-1) - st.shift;
        auto it = line_classes.find(v);
        if (it != line_classes.end()) it->second = true;
    }
    for (const auto& [v, marked] : line_classes) spec.lines.push_back({v, marked});

    std::set<std::pair<IntVec, IntVec>> overlays;
    for (const ShiftRejection& rej : rpt.rejections)
        for (const auto& pr : condition_iii_pairs(alg, ws, rej.shift)) overlays.insert(pr);
    spec.overlays.assign(overlays.begin(), overlays.end());

    if (alg.rs.rank == 2) {
        // All degree lines are level sets of the E-functional, so they share
        // the projection of its kernel direction.
        IntVec u1{1, 0}, u2{0, 1};
        const Rational f1 = weight_E_value(alg, u1), f2 = weight_E_value(alg, u2);
        const RatPoint d = project(alg.rs, dirs, RatVec{f2, -f1});
        spec.dir_x = d.x;
        spec.dir_y = d.y;
    }
    return spec;
}

namespace {

std::string weight_text(const IntVec& w) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i > 0) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

std::string render_svg(const DiagramSpec& spec) {
    if (spec.rank > 2)
        throw std::invalid_argument("render_svg: planar rendering needs rank <= 2");
    std::ostringstream svg;
    if (spec.dots.empty()) {
        svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"240\" height=\"240\" "
               "viewBox=\"0 0 240 240\">\n"
            << "  <!-- empty weight diagram -->\n</svg>\n";
        return svg.str();
    }

    // Exact integer pixel transform: all dot coordinates times the least
    // common denominator, shifted by a margin.
    long lcm = 1;
    Rational xmin = spec.dots[0].x, xmax = xmin, ymin = spec.dots[0].y, ymax = ymin;
    for (const auto& d : spec.dots) {
        lcm = lcm_long(lcm, lcm_long(denominator(d.x), denominator(d.y)));
        xmin = std::min(xmin, d.x);
        xmax = std::max(xmax, d.x);
        ymin = std::min(ymin, d.y);
        ymax = std::max(ymax, d.y);
    }
    const long margin = 40, pad = 18;
    auto px = [&](const Rational& x) { return scaled(x - xmin, lcm) + margin; };
    auto py = [&](const Rational& y) { return scaled(ymax - y, lcm) + margin; };
    auto px_floor = [&](const Rational& x) { return scaled_floor(x - xmin, lcm) + margin; };
    auto py_floor = [&](const Rational& y) { return scaled_floor(ymax - y, lcm) + margin; };
    const long width = scaled(xmax - xmin, lcm) + 2 * margin + 30;
    const long height = scaled(ymax - ymin, lcm) + 2 * margin;

    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "  <g font-family=\"monospace\" font-size=\"11\">\n";

    // Degree lines: through the dots of each E-value class, clipped to the
    // padded bounding box (endpoints are decorative and use exact floor).
    for (const auto& line : spec.lines) {
        std::vector<const DiagramSpec::Dot*> on_line;
        for (const auto& d : spec.dots)
            if (d.e_value == line.e_value) on_line.push_back(&d);
        if (on_line.empty()) continue;
        const Rational x0 = on_line.front()->x, y0 = on_line.front()->y;
        const Rational dx = spec.dir_x, dy = spec.dir_y;
        // Clip the parametrized line to [xmin-pad, xmax+pad] x [ymin-pad, ymax+pad].
        Rational tlo, thi;
        bool first = true;
        auto clip_axis = [&](const Rational& p0, const Rational& d, const Rational& lo,
                             const Rational& hi) {
            if (d == 0) return;
            Rational a = (lo - p0) / d, b = (hi - p0) / d;
            if (a > b) std::swap(a, b);
            if (first) {
                tlo = a;
                thi = b;
                first = false;
            } else {
                tlo = std::max(tlo, a);
                thi = std::min(thi, b);
            }
        };
        clip_axis(x0, dx, xmin - pad, xmax + pad);
        clip_axis(y0, dy, ymin - pad, ymax + pad);
        if (first) continue;
        const Rational ax = x0 + tlo * dx, ay = y0 + tlo * dy;
        const Rational bx = x0 + thi * dx, by = y0 + thi * dy;
        svg << "    <line x1=\"" << px_floor(ax) << "\" y1=\"" << py_floor(ay) << "\" x2=\""
            << px_floor(bx) << "\" y2=\"" << py_floor(by)
            << "\" stroke=\"#555555\" stroke-dasharray=\"4 3\"/>\n";
        // Mark on the right of the line when some admissible structure puts
        // this class in degree -1.
        if (line.marked) {
            const bool b_right = bx > ax || (bx == ax && by < ay);
            const long mx = (b_right ? px_floor(bx) : px_floor(ax)) + 6;
            const long my = b_right ? py_floor(by) : py_floor(ay);
            svg << "    <path d=\"M " << mx << " " << my << " l 10 -5 l 0 10 z\"/>\n";
        }
    }

    // Forbidden-configuration overlays between exact dot positions.
    if (!spec.overlays.empty()) {
        std::map<IntVec, const DiagramSpec::Dot*> at;
        for (const auto& d : spec.dots) at[d.weight] = &d;
        for (const auto& [from, to] : spec.overlays) {
            const auto* a = at.at(from);
            const auto* b = at.at(to);
            svg << "    <line x1=\"" << px(a->x) << "\" y1=\"" << py(a->y) << "\" x2=\""
                << px(b->x) << "\" y2=\"" << py(b->y)
                << "\" stroke=\"#cc0000\" stroke-width=\"2\"/>\n";
        }
    }

    for (const auto& d : spec.dots) {
        svg << "    <circle cx=\"" << px(d.x) << "\" cy=\"" << py(d.y) << "\" r=\"4\"/>\n";
        if (d.mult > 1)
            svg << "    <text x=\"" << px(d.x) + 6 << "\" y=\"" << py(d.y) - 6 << "\">x"
                << d.mult << "</text>\n";
    }

    svg << "  </g>\n</svg>\n";
    return svg.str();
}

std::string render_ascii(const DiagramSpec& spec) {
    std::ostringstream out;
    out << "weight diagram (rank " << spec.rank << ")\n";
    // Top class first, matching the planar picture.
    for (auto it = spec.lines.rbegin(); it != spec.lines.rend(); ++it) {
        out << "E = " << rational_to_string(it->e_value) << (it->marked ? "  [-1 line]" : "")
            << " :";
        for (const auto& d : spec.dots) {
            if (!(d.e_value == it->e_value)) continue;
            out << " " << weight_text(d.weight);
            if (d.mult > 1) out << "x" << d.mult;
        }
        out << "\n";
    }
    if (spec.dots.empty()) out << "(empty)\n";
    for (const auto& [from, to] : spec.overlays)
        out << "forbidden: " << weight_text(from) << " reaches " << weight_text(to) << "\n";
    return out.str();
}

}  // namespace tanaka
