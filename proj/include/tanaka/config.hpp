#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tanaka/lie_table.hpp"
#include "tanaka/root_system.hpp"
#include "tanaka/scalar.hpp"

namespace tanaka {

/// One module of the abelian part, either by explicit highest weight or by
/// a named preset ("standard", "dual", "adjoint", "adjoint-shifted").  An
/// explicit shift pins one admissible structure when several exist.
struct ModuleSpec {
    std::optional<IntVec> highest;
    std::string preset;
    std::optional<Rational> shift;
};

/// The graded algebra: a Cartan matrix (given directly or expanded from a
/// type label like "A2" or "A1+A2"), the 0/1 grading vector E and the +-1
/// structure vector J on the simple roots.
struct AlgebraSpec {
    std::string type_label;  ///< the label, or "custom" for an explicit matrix
    std::vector<IntVec> cartan;
    IntVec e, j;
    bool real_form = false;  ///< classify: merge conjugate weights
};

struct Bounds {
    long max_weight_sum = 4;       ///< classify: dominant weight coordinate sum
    long max_module_dim = 100000;  ///< admissibility scan dimension cap
    long max_prolong_degree = -1;  ///< prolongation cap; -1 = default (kind + 4)
};

/// A parsed job file (schema 1).  The input source is exactly one of:
/// algebra + modules, a named extension preset, or a raw graded table.
struct JobConfig {
    std::string command;  ///< check | classify | prolong | render
    std::optional<AlgebraSpec> algebra;
    std::vector<ModuleSpec> modules;
    std::string preset;  ///< built-in extension preset (prolong only)
    std::optional<LieTable> table;
    Bounds bounds;
};

/// Validates shape, types, and key spelling; every failure throws
/// std::invalid_argument naming the offending field path.
JobConfig parse_config(const nlohmann::json& j);

/// Reads and parses a job file; errors carry the file path.
JobConfig load_config(const std::string& path);

}  // namespace tanaka
