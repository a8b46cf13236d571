#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tanaka/graded_cr.hpp"
#include "tanaka/weights.hpp"

namespace tanaka {

/// Planar weight diagram of a module under a grading functional.  The
/// projection sends a weight to exact rational plane coordinates through
/// integer direction vectors for the simple roots that approximate the
/// Euclidean picture of the symmetrized invariant form (lengths and angles
/// accurate to a few percent); because the map is linear and exact, weights
/// with equal E-value are exactly collinear, and the output never needs
/// floating point.
struct DiagramSpec {
    int rank = 0;

    struct Dot {
        IntVec weight;
        long mult = 1;
        Rational e_value;
        Rational x, y;  ///< projected position (rank <= 2 only)
    };
    std::vector<Dot> dots;  ///< one per distinct weight, sorted by weight

    /// One line per E-value class, ascending; `marked` when the class is the
    /// degree -1 layer of some admissible structure.
    struct Line {
        Rational e_value;
        bool marked = false;
    };
    std::vector<Line> lines;

    /// Forbidden-configuration overlays: weight pairs connected by a
    /// combination that rejects some candidate shift.
    std::vector<std::pair<IntVec, IntVec>> overlays;

    /// Common direction of all degree lines: the projected kernel of the
    /// E-functional (rank 2), or vertical (rank <= 1).
    Rational dir_x = Rational(0), dir_y = Rational(1);
};

/// Assemble the diagram from an admissibility scan.  Projections are filled
/// for rank <= 2; higher ranks still get dots, lines, and overlays for the
/// text rendering.
DiagramSpec build_diagram(const CRAlgebra& alg, const WeightSystem& ws,
                          const AdmissibilityReport& rpt);

/// An empty diagram (no module).
DiagramSpec empty_diagram(int rank);

/// Deterministic SVG: fixed margins, integer coordinates only, dots with
/// multiplicity labels, dotted degree lines with a mark right of the line
/// when admissible, red overlay segments.  Throws std::invalid_argument for
/// rank > 2.
std::string render_svg(const DiagramSpec& spec);

/// Text fallback for any rank: weights grouped by E-value, top line first,
/// with multiplicities and admissibility marks.
std::string render_ascii(const DiagramSpec& spec);

}  // namespace tanaka
