#include "tanaka/driver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "tanaka/extension.hpp"
#include "tanaka/graded_cr.hpp"
#include "tanaka/presets.hpp"
#include "tanaka/prolong.hpp"
#include "tanaka/render.hpp"
#include "tanaka/report.hpp"

namespace tanaka {

namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& p, const std::string& content, std::ostream& out) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << content;
    out << "wrote " << p.string() << "\n";
}

std::string weight_text(const IntVec& w) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

CRAlgebra build_algebra(const AlgebraSpec& spec) {
    return attach_cr(root_system_from_cartan(spec.cartan), spec.e, spec.j);
}

struct ResolvedModule {
    IntVec highest;
    std::optional<Rational> shift;
};

ResolvedModule resolve_module(const ModuleSpec& spec, const RootSystem& rs) {
    ResolvedModule out;
    if (spec.highest) {
        out.highest = *spec.highest;
        if (static_cast<long>(out.highest.size()) != rs.rank)
            throw std::invalid_argument("module weight " + weight_text(out.highest) +
                                        " does not match rank " + std::to_string(rs.rank));
    } else {
        ModulePreset p = module_preset(spec.preset, rs);
        out.highest = p.highest;
        out.shift = p.shift;
    }
    if (spec.shift) out.shift = spec.shift;  // an explicit shift wins over the preset's
    return out;
}

std::string shift_list(const AdmissibilityReport& rep) {
    std::string out;
    for (const auto& st : rep.structures)
        out += (out.empty() ? "" : ", ") + rational_to_string(st.shift);
    return out.empty() ? "none" : out;
}

long thread_cap() {
    if (const char* env = std::getenv("TANAKA_FORGE_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        return std::max(1L, n);
    }
    return std::max(1L, static_cast<long>(std::thread::hardware_concurrency()));
}

/// Nonzero dominant weights with coordinate sum <= bound, graded
/// lexicographic: by sum, then lex ascending.
std::vector<IntVec> dominant_weights(int rank, long bound) {
    std::vector<IntVec> out;
    IntVec v(rank, 0);
    auto fill = [&](auto&& self, int pos, long left) -> void {
        if (pos == rank - 1) {
            v[pos] = left;
            out.push_back(v);
            return;
        }
        for (long c = 0; c <= left; ++c) {
            v[pos] = c;
            self(self, pos + 1, left - c);
        }
    };
    for (long s = 1; s <= bound; ++s) fill(fill, 0, s);
    return out;
}

int run_check(const JobConfig& cfg, const DriverOptions& opt, std::ostream& out) {
    const CRAlgebra alg = build_algebra(*cfg.algebra);
    bool all_admit = true;
    for (size_t i = 0; i < cfg.modules.size(); ++i) {
        const ResolvedModule rm = resolve_module(cfg.modules[i], alg.rs);
        const AdmissibilityReport rep =
            admissible_structures(alg, rm.highest, cfg.bounds.max_module_dim);
        long matching = 0;
        for (const auto& st : rep.structures)
            matching += !rm.shift || st.shift == *rm.shift;
        write_file(fs::path(opt.out_dir) / ("admissibility-" + std::to_string(i) + ".json"),
                   dump_report(admissibility_json(alg, cfg.algebra->type_label, rep)), out);
        out << "module " << i << " " << weight_text(rm.highest) << ": " << matching
            << " admissible structure" << (matching == 1 ? "" : "s");
        if (rm.shift) out << " at shift " << rational_to_string(*rm.shift);
        out << "\n";
        all_admit = all_admit && matching > 0;
    }
    return all_admit ? 0 : 3;
}

int run_classify(const JobConfig& cfg, const DriverOptions& opt, std::ostream& out) {
    const CRAlgebra alg = build_algebra(*cfg.algebra);
    const long bound = opt.bound ? *opt.bound : cfg.bounds.max_weight_sum;
    const bool real_form = cfg.algebra->real_form;
    const std::vector<IntVec> weights = dominant_weights(alg.rs.rank, bound);

    std::vector<nlohmann::ordered_json> entries(weights.size());
    std::vector<std::exception_ptr> errors(weights.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (size_t i; (i = next.fetch_add(1)) < weights.size();) {
            try {
                nlohmann::ordered_json entry;
                entry["weight"] = weights[i];
                const AdmissibilityReport* rep = nullptr;
                RealModuleVerdict verdict;
                AdmissibilityReport plain;
                if (real_form) {
                    verdict = real_form_admissible(alg, weights[i], "", cfg.bounds.max_module_dim);
                    entry["type"] = verdict.type;
                    entry["conjugate"] = verdict.conjugate;
                    entry["dropped"] = verdict.dropped.size();
                    rep = &verdict.report;
                } else {
                    plain = admissible_structures(alg, weights[i], cfg.bounds.max_module_dim);
                    rep = &plain;
                }
                auto structures = nlohmann::ordered_json::array();
                for (const auto& st : rep->structures)
                    structures.push_back({{"shift", rational_to_string(st.shift)},
                                          {"k", rational_to_string(st.k)}});
                entry["structures"] = std::move(structures);
                entries[i] = std::move(entry);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const long n_threads = std::min<long>(thread_cap(), static_cast<long>(weights.size()));
    if (n_threads > 1) {
        std::vector<std::thread> pool;
        for (long t = 0; t < n_threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    } else {
        work();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    nlohmann::ordered_json doc;
    doc["algebra"] = algebra_json(alg, cfg.algebra->type_label);
    doc["bound"] = bound;
    doc["real_form"] = real_form;
    auto admissible = nlohmann::ordered_json::array();
    for (size_t i = 0; i < weights.size(); ++i) {
        if (entries[i]["structures"].empty()) continue;
        admissible.push_back(weights[i]);
        out << "weight " << weight_text(weights[i]) << ": "
            << entries[i]["structures"].size() << " structure"
            << (entries[i]["structures"].size() == 1 ? "" : "s");
        if (real_form) out << " [" << entries[i]["type"].get<std::string>() << "]";
        out << "\n";
    }
    doc["admissible"] = std::move(admissible);
    doc["weights"] = nlohmann::ordered_json(entries);
    write_file(fs::path(opt.out_dir) / "classification.json", dump_report(doc), out);
    out << doc["admissible"].size() << " of " << weights.size()
        << " weights admit a structure (bound " << bound << ")\n";
    return 0;
}

int finish_prolong(const nlohmann::ordered_json& doc, bool truncated, const DriverOptions& opt,
                   std::ostream& out, std::ostream& err) {
    write_file(fs::path(opt.out_dir) / "prolongation.json", dump_report(doc), out);
    out << "prolongation: total dimension " << doc["total_dim"] << ", "
        << doc["classification"].get<std::string>() << "\n";
    if (truncated) {
        err << "warning: degree cap reached with a nonzero top layer; result is truncated\n";
        return 2;
    }
    return 0;
}

int run_prolong(const JobConfig& cfg, const DriverOptions& opt, std::ostream& out,
                std::ostream& err) {
    const long cap = opt.max_degree ? *opt.max_degree : cfg.bounds.max_prolong_degree;
    if (!cfg.preset.empty()) {
        const PresetCase pc = preset_by_name(cfg.preset);
        out << "preset " << pc.name << ": " << pc.summary << "\n";
        const ExtensionAnalysis an = analyze_table(pc.table, pc.l_marker, cap);
        return finish_prolong(prolongation_json(an), an.prolongation.truncated, opt, out, err);
    }
    if (cfg.table) {
        const GradedNilpotent m = assemble_m(*cfg.table);
        const Prolongation g = tanaka_prolongation(m, cap);
        const StructureSummary summary = classify_structure(g.table);
        return finish_prolong(prolongation_json(g, std::nullopt, std::nullopt, {}, summary),
                              g.truncated, opt, out, err);
    }

    const CRAlgebra alg = build_algebra(*cfg.algebra);
    const ChevalleyBasis cb = chevalley(alg.rs);
    std::vector<Summand> summands;
    for (size_t i = 0; i < cfg.modules.size(); ++i) {
        const ResolvedModule rm = resolve_module(cfg.modules[i], alg.rs);
        const AdmissibilityReport rep =
            admissible_structures(alg, rm.highest, cfg.bounds.max_module_dim);
        const AdmissibleStructure* chosen = nullptr;
        if (rm.shift) {
            for (const auto& st : rep.structures)
                if (st.shift == *rm.shift) chosen = &st;
            if (!chosen)
                throw std::invalid_argument(
                    "module " + std::to_string(i) + " " + weight_text(rm.highest) + ": shift " +
                    rational_to_string(*rm.shift) +
                    " is not admissible; admissible shifts: " + shift_list(rep));
        } else if (rep.structures.size() == 1) {
            chosen = &rep.structures[0];
        } else if (opt.structure_index && cfg.modules.size() == 1) {
            const long idx = *opt.structure_index;
            if (idx < 0 || idx >= static_cast<long>(rep.structures.size()))
                throw std::invalid_argument(
                    "--structure " + std::to_string(idx) + " out of range; " +
                    std::to_string(rep.structures.size()) +
                    " admissible structures with shifts: " + shift_list(rep));
            chosen = &rep.structures[idx];
        } else {
            throw std::invalid_argument(
                "module " + std::to_string(i) + " " + weight_text(rm.highest) + ": " +
                std::to_string(rep.structures.size()) +
                " admissible structures; pick one with --structure or a \"shift\" entry"
                "; admissible shifts: " +
                shift_list(rep));
        }
        out << "module " << i << " " << weight_text(rm.highest) << ": shift "
            << rational_to_string(chosen->shift) << ", k = " << rational_to_string(chosen->k)
            << "\n";
        summands.push_back({rm.highest, chosen->shift, chosen->k});
    }
    const Extension ext = build_extension(cb, alg, summands, cfg.bounds.max_module_dim);
    const ExtensionAnalysis an = analyze_extension(ext, cap);
    return finish_prolong(prolongation_json(an), an.prolongation.truncated, opt, out, err);
}

int run_render(const JobConfig& cfg, const DriverOptions& opt, std::ostream& out,
               std::ostream& err) {
    const CRAlgebra alg = build_algebra(*cfg.algebra);
    DiagramSpec spec;
    if (cfg.modules.empty()) {
        spec = empty_diagram(alg.rs.rank);
    } else {
        const ResolvedModule rm = resolve_module(cfg.modules[0], alg.rs);
        const WeightSystem ws = weight_system(alg.rs, rm.highest, cfg.bounds.max_module_dim);
        const AdmissibilityReport rep =
            admissible_structures(alg, rm.highest, cfg.bounds.max_module_dim);
        spec = build_diagram(alg, ws, rep);
    }
    write_file(fs::path(opt.out_dir) / "diagram.txt", render_ascii(spec), out);
    if (alg.rs.rank <= 2)
        write_file(fs::path(opt.out_dir) / "diagram.svg", render_svg(spec), out);
    else
        err << "warning: rank " << alg.rs.rank
            << " has no planar rendering; wrote the text diagram only\n";
    return 0;
}

}  // namespace

int run_job(const JobConfig& cfg, const DriverOptions& opt, std::ostream& out, std::ostream& err) {
    fs::create_directories(opt.out_dir);
    if (cfg.command == "check") return run_check(cfg, opt, out);
    if (cfg.command == "classify") return run_classify(cfg, opt, out);
    if (cfg.command == "prolong") return run_prolong(cfg, opt, out, err);
    if (cfg.command == "render") return run_render(cfg, opt, out, err);
    throw std::invalid_argument("unknown command: " + cfg.command);
}

}  // namespace tanaka
