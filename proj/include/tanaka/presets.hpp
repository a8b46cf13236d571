#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanaka/lie_table.hpp"
#include "tanaka/matrix.hpp"
#include "tanaka/root_system.hpp"
#include "tanaka/scalar.hpp"

namespace tanaka {

/// A built-in extension presented as an explicit real graded table: the
/// realified semisimple part followed by the module part, with the partial
/// complex structure stored on the degree -1 block.  These presets cover
/// module types the weight-module constructor cannot produce, namely
/// real-type modules realized on spaces of matrices.
struct PresetCase {
    std::string name;
    std::string summary;
    LieTable table;              ///< graded real table of the extension s + l
    std::vector<bool> l_marker;  ///< true exactly on module basis vectors
    Vec j_s;                     ///< structure element of s, in table coordinates
    /// Declared J-scalar per module summand; a real-type summand forces 0.
    std::vector<Rational> k_expected;
};

/// s = sl(2,C) graded by E_s = diag(1/2,-1/2) with structure element
/// J_s = diag(i/2,-i/2), acting on the real-type module l of anti-Hermitian
/// 2x2 matrices by X.A = -(A X + X^* A), graded by ad(E_s) - 1.  The module
/// splits over the grading as real dims (1, 2, 1) in degrees (-2, -1, 0);
/// the negative part m has real dims (4, 1).
PresetCase preset_sl2c1();

/// The same semisimple part acting diagonally on two copies of the
/// anti-Hermitian module, each carrying the same gradation and the same
/// partial complex structure.
PresetCase preset_two_copies();

const std::vector<std::string>& preset_names();
/// Lookup by name; throws std::invalid_argument for an unknown name.
PresetCase preset_by_name(const std::string& name);

/// Expansion of a named module preset over the given root system:
/// "standard" is the first fundamental weight, "dual" the last, "adjoint"
/// the highest root with the natural gradation (shift 0), "adjoint-shifted"
/// the highest root with every degree lowered by 2 (l_d isomorphic to
/// s_{d+2}).  The adjoint presets require a connected root system; unknown
/// names and disconnected adjoints throw std::invalid_argument.
struct ModulePreset {
    IntVec highest;
    std::optional<Rational> shift;
};
ModulePreset module_preset(const std::string& name, const RootSystem& rs);

/// Cartan matrix for a type label: "A3", "B2", "C4", "D5", "E6"-"E8", "F4",
/// "G2", or a sum such as "A1+A2".  Throws std::invalid_argument for
/// malformed labels or ranks outside the type's range.
std::vector<IntVec> cartan_from_label(const std::string& label);

}  // namespace tanaka
