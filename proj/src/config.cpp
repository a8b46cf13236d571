#include "tanaka/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tanaka/presets.hpp"

namespace tanaka {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw std::invalid_argument("config: " + path + ": " + message);
}

void expect_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) fail(path + "." + it.key(), "unknown key");
}

const json& require(const json& j, const std::string& path, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing");
    return *it;
}

long get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long>();
}

IntVec get_int_vec(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of integers");
    IntVec out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(get_int(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

/// A rational is an integer or a "p/q" string; fractional JSON numbers are
/// rejected so no float can slip in through a config.
Rational get_rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return rational_from_string(j.get<std::string>());
        } catch (const std::exception& e) {
            fail(path, e.what());
        }
    }
    fail(path, "expected an integer or a \"p/q\" string");
}

AlgebraSpec parse_algebra(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    expect_keys(j, path, {"type", "cartan", "E", "J", "real_form"});
    AlgebraSpec out;
    const bool has_type = j.count("type"), has_cartan = j.count("cartan");
    if (has_type == has_cartan) fail(path, "give exactly one of \"type\" and \"cartan\"");
    if (has_type) {
        if (!j["type"].is_string()) fail(path + ".type", "expected a string label like \"A2\"");
        out.type_label = j["type"].get<std::string>();
        try {
            out.cartan = cartan_from_label(out.type_label);
        } catch (const std::exception& e) {
            fail(path + ".type", e.what());
        }
    } else {
        out.type_label = "custom";
        const json& c = j["cartan"];
        if (!c.is_array() || c.empty()) fail(path + ".cartan", "expected a nonempty matrix");
        for (size_t i = 0; i < c.size(); ++i)
            out.cartan.push_back(get_int_vec(c[i], path + ".cartan[" + std::to_string(i) + "]"));
    }
    out.e = get_int_vec(require(j, path, "E"), path + ".E");
    out.j = get_int_vec(require(j, path, "J"), path + ".J");
    if (j.count("real_form")) {
        if (!j["real_form"].is_boolean()) fail(path + ".real_form", "expected a boolean");
        out.real_form = j["real_form"].get<bool>();
    }
    return out;
}

ModuleSpec parse_module(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    expect_keys(j, path, {"highest", "preset", "shift"});
    ModuleSpec out;
    const bool has_weight = j.count("highest"), has_preset = j.count("preset");
    if (has_weight == has_preset) fail(path, "give exactly one of \"highest\" and \"preset\"");
    if (has_weight) {
        out.highest = get_int_vec(j["highest"], path + ".highest");
    } else {
        if (!j["preset"].is_string()) fail(path + ".preset", "expected a string");
        out.preset = j["preset"].get<std::string>();
    }
    if (j.count("shift")) out.shift = get_rational(j["shift"], path + ".shift");
    return out;
}

}  // namespace

JobConfig parse_config(const nlohmann::json& j) {
    if (!j.is_object()) fail("$", "expected a JSON object");
    expect_keys(j, "$", {"schema", "command", "algebra", "modules", "preset", "table", "bounds"});
    if (get_int(require(j, "$", "schema"), "schema") != 1) fail("schema", "expected 1");

    JobConfig out;
    const json& cmd = require(j, "$", "command");
    if (!cmd.is_string()) fail("command", "expected a string");
    out.command = cmd.get<std::string>();
    static const std::set<std::string> commands = {"check", "classify", "prolong", "render"};
    if (!commands.count(out.command))
        fail("command", "expected one of check, classify, prolong, render");

    if (j.count("algebra")) out.algebra = parse_algebra(j["algebra"], "algebra");
    if (j.count("modules")) {
        const json& mods = j["modules"];
        if (!mods.is_array()) fail("modules", "expected an array");
        for (size_t i = 0; i < mods.size(); ++i)
            out.modules.push_back(parse_module(mods[i], "modules[" + std::to_string(i) + "]"));
    }
    if (j.count("preset")) {
        const json& p = j["preset"];
        if (!p.is_string()) fail("preset", "expected a string");
        out.preset = p.get<std::string>();
        const auto& names = preset_names();
        if (std::find(names.begin(), names.end(), out.preset) == names.end()) {
            std::string known;
            for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
            fail("preset", "unknown preset; known presets: " + known);
        }
    }
    if (j.count("table")) {
        try {
            out.table = table_from_json(j["table"]);
        } catch (const std::exception& e) {
            fail("table", e.what());
        }
    }

    if (j.count("bounds")) {
        const json& b = j["bounds"];
        if (!b.is_object()) fail("bounds", "expected an object");
        expect_keys(b, "bounds", {"max_weight_sum", "max_module_dim", "max_prolong_degree"});
        if (b.count("max_weight_sum"))
            out.bounds.max_weight_sum = get_int(b["max_weight_sum"], "bounds.max_weight_sum");
        if (b.count("max_module_dim"))
            out.bounds.max_module_dim = get_int(b["max_module_dim"], "bounds.max_module_dim");
        if (b.count("max_prolong_degree"))
            out.bounds.max_prolong_degree =
                get_int(b["max_prolong_degree"], "bounds.max_prolong_degree");
    }

    // Exactly one input source, matched to the command.
    const int sources = (out.algebra ? 1 : 0) + (out.preset.empty() ? 0 : 1) + (out.table ? 1 : 0);
    if (sources != 1) fail("$", "give exactly one of \"algebra\", \"preset\", \"table\"");
    if (!out.algebra && !out.modules.empty())
        fail("modules", "\"modules\" requires \"algebra\"");
    if (out.command == "check" && (!out.algebra || out.modules.empty()))
        fail("$", "check needs \"algebra\" and at least one module");
    if (out.command == "classify") {
        if (!out.algebra) fail("$", "classify needs \"algebra\"");
        if (!out.modules.empty()) fail("modules", "classify enumerates weights; drop \"modules\"");
    }
    if (out.command == "prolong" && out.algebra && out.modules.empty())
        fail("$", "prolong with \"algebra\" needs at least one module");
    if (out.command == "render") {
        if (!out.algebra) fail("$", "render needs \"algebra\"");
        if (out.modules.size() > 1) fail("modules", "render draws at most one module");
    }
    return out;
}

JobConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("config: " + path + ": " + e.what());
    }
    try {
        return parse_config(j);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(e.what()) + " (in " + path + ")");
    }
}

}  // namespace tanaka
