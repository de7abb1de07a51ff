// Command-line front end for the lfuzzy library.
//
// Verbs: compute, scalar, aggregate, between, cut, audit, grid. Inputs come
// from JSON set/partition files; grades print as exact fractions unless
// --decimal asks for a rounded display.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <lfuzzy/lfuzzy.hpp>

namespace {

using namespace lfuzzy;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitRefuted = 1;
constexpr int kExitError = 2;

struct CommonSets {
    std::string sets_file;
    std::string format = "text";
};

std::string grade_text(const Rational& value, bool decimal) {
    return decimal ? value.decimal_str() : value.str();
}

ordered_json relation_json(const RelationValue& value) {
    ordered_json arr = ordered_json::array();
    for (std::size_t u = 0; u < value.size(); ++u) {
        arr.push_back(value.bit(u) ? 1 : 0);
    }
    return arr;
}

ordered_json scalar_json(ScalarMeasureId id, const ScalarValue& v, bool decimal) {
    ordered_json j;
    j["measure"] = id.index();
    j["mnemonic"] = std::string(id.mnemonic());
    j["value"] = v.value.str();
    if (decimal) j["decimal"] = v.value.decimal_str();
    j["degenerate"] = v.degenerate;
    return j;
}

int run_compute(const CommonSets& common, const std::string& relation,
                const std::string& lhs, const std::string& rhs) {
    SetCollection sets = SetCollection::load(common.sets_file);
    const FuzzySet& a = sets.at(lhs);
    const FuzzySet& b = sets.at(rhs);
    RelationValue value = relation == "incl"  ? incl(a, b)
                          : relation == "sim" ? sim(a, b)
                                              : dist(a, b);
    if (common.format == "json") {
        std::cout << relation_json(value).dump() << "\n";
    } else {
        std::cout << value.bit_string() << "\n";
    }
    return 0;
}

int run_scalar(const CommonSets& common, const std::string& measure,
               const std::string& lhs, const std::string& rhs, bool decimal) {
    SetCollection sets = SetCollection::load(common.sets_file);
    ScalarMeasureId id = ScalarMeasureId::from_text(measure);
    ScalarValue v = eval_scalar(id, sets.at(lhs), sets.at(rhs));
    if (common.format == "json") {
        std::cout << scalar_json(id, v, decimal).dump() << "\n";
    } else {
        std::cout << grade_text(v.value, decimal)
                  << (v.degenerate ? " (degenerate)" : "") << "\n";
    }
    return 0;
}

int run_aggregate(const CommonSets& common, const std::string& partition_file,
                  const std::string& measure, const std::string& lhs,
                  const std::string& rhs, bool decimal) {
    SetCollection sets = SetCollection::load(common.sets_file);
    Partition partition = load_partition(partition_file, sets.universe());
    ScalarMeasureId id = ScalarMeasureId::from_text(measure);
    AggregatedInclusion agg = aggregate_incl(sets.at(lhs), sets.at(rhs), partition, id);

    if (common.format == "json") {
        ordered_json j;
        j["measure"] = id.index();
        j["mnemonic"] = std::string(id.mnemonic());
        ordered_json blocks = ordered_json::array();
        for (std::size_t k = 0; k < agg.values.size(); ++k) {
            ordered_json block;
            block["elements"] = partition.block_labels(k);
            block["value"] = agg.values[k].value.str();
            if (decimal) block["decimal"] = agg.values[k].value.decimal_str();
            block["degenerate"] = agg.values[k].degenerate;
            blocks.push_back(std::move(block));
        }
        j["blocks"] = std::move(blocks);
        std::cout << j.dump() << "\n";
    } else {
        for (std::size_t k = 0; k < agg.values.size(); ++k) {
            std::cout << "block " << (k + 1) << " {";
            const auto& labels = partition.block_labels(k);
            for (std::size_t i = 0; i < labels.size(); ++i) {
                std::cout << (i ? ", " : "") << labels[i];
            }
            std::cout << "}: " << grade_text(agg.values[k].value, decimal)
                      << (agg.values[k].degenerate ? " (degenerate)" : "") << "\n";
        }
    }
    return 0;
}

int run_between(const CommonSets& common, const std::string& a_name,
                const std::string& b_name, const std::string& c_name) {
    SetCollection sets = SetCollection::load(common.sets_file);
    const FuzzySet& a = sets.at(a_name);
    const FuzzySet& b = sets.at(b_name);
    const FuzzySet& c = sets.at(c_name);
    bool order = order_between(a, b, c);
    bool metric = metric_between(a, b, c);
    if (common.format == "json") {
        ordered_json j;
        j["order"] = order;
        j["metric"] = metric;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "order: " << (order ? "true" : "false") << "\n"
                  << "metric: " << (metric ? "true" : "false") << "\n";
    }
    return 0;
}

int run_cut(const CommonSets& common, const std::string& lhs,
            const std::string& rhs, const std::string& theta_bits) {
    SetCollection sets = SetCollection::load(common.sets_file);
    const FuzzySet& a = sets.at(lhs);
    const FuzzySet& b = sets.at(rhs);
    CrispSet theta = CrispSet::parse_bits(sets.universe(), theta_bits);
    bool holds = cut_leq(a, b, theta);
    if (common.format == "json") {
        ordered_json j;
        j["theta"] = theta.bit_string();
        j["holds"] = holds;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (holds ? "true" : "false") << "\n";
    }
    return 0;
}

unsigned grid_theorem_refutations(const audit::AxiomGrid& grid) {
    unsigned count = 0;
    for (const auto& row : grid.rows) {
        for (const auto& cell : row.cells) {
            if (cell.theorem && cell.verdict == audit::Verdict::Refuted) ++count;
        }
    }
    return count;
}

int emit_grid(const audit::SearchConfig& config, const std::string& format) {
    audit::AxiomGrid grid = audit::scalar_axiom_grid(config);
    if (format == "json") {
        std::cout << audit::grid_json_text(grid) << "\n";
    } else if (format == "csv") {
        std::cout << audit::grid_csv(grid);
    } else {
        std::cout << audit::grid_text(grid);
    }
    return grid_theorem_refutations(grid) == 0 ? 0 : kExitRefuted;
}

int run_audit(const std::string& suite_name, const audit::SearchConfig& config,
              const std::string& format) {
    if (suite_name == "scalar-grid") return emit_grid(config, format);
    if (format == "csv") {
        throw DomainError("csv output is only available for scalar-grid");
    }

    std::vector<audit::Suite> suites;
    if (suite_name == "all") {
        auto span = audit::all_suites();
        suites.assign(span.begin(), span.end());
    } else {
        suites.push_back(audit::suite_from_name(suite_name));
    }

    audit::Report report{suite_name, config, {}};
    for (audit::Suite suite : suites) {
        for (audit::AuditResult& r : audit::run_suite(suite, config)) {
            report.results.push_back(std::move(r));
        }
    }
    if (format == "json") {
        std::cout << report.json_text() << "\n";
    } else {
        std::cout << report.text();
    }
    return report.pass() ? 0 : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice-valued inclusion, similarity and distance "
                 "between fuzzy sets, scalar inclusion measures, and a "
                 "property audit engine"};
    app.require_subcommand(1);

    CommonSets common;
    bool decimal = false;

    auto add_sets_options = [&](CLI::App* cmd, bool with_decimal) {
        cmd->add_option("--sets", common.sets_file, "Set collection JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("--format", common.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_decimal) {
            cmd->add_flag("--decimal", decimal,
                          "Display grades as rounded decimals (display only)");
        }
    };

    std::string relation, lhs, rhs, third, measure, theta_bits;

    CLI::App* compute = app.add_subcommand(
        "compute", "Evaluate a lattice-valued relation between two named sets");
    compute->add_option("relation", relation, "One of incl, sim, dist")
        ->required()
        ->check(CLI::IsMember({"incl", "sim", "dist"}));
    compute->add_option("lhs", lhs, "Left operand set name")->required();
    compute->add_option("rhs", rhs, "Right operand set name")->required();
    add_sets_options(compute, false);

    CLI::App* scalar = app.add_subcommand(
        "scalar", "Evaluate a scalar inclusion measure between two named sets");
    scalar->add_option("lhs", lhs, "Left operand set name")->required();
    scalar->add_option("rhs", rhs, "Right operand set name")->required();
    scalar
        ->add_option("--measure", measure,
                     "Measure index 1..12 or mnemonic (kosko, kundu, ...)")
        ->required();
    add_sets_options(scalar, true);

    CLI::App* aggregate = app.add_subcommand(
        "aggregate", "Evaluate a scalar measure per partition block");
    std::string partition_file;
    aggregate->add_option("lhs", lhs, "Left operand set name")->required();
    aggregate->add_option("rhs", rhs, "Right operand set name")->required();
    aggregate
        ->add_option("--partition", partition_file, "Partition JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    aggregate
        ->add_option("--measure", measure,
                     "Measure index 1..12 or mnemonic (kosko, kundu, ...)")
        ->required();
    add_sets_options(aggregate, true);

    CLI::App* between = app.add_subcommand(
        "between", "Test order and metric betweenness of three named sets");
    between->add_option("a", lhs, "Endpoint set name")->required();
    between->add_option("b", rhs, "Candidate middle set name")->required();
    between->add_option("c", third, "Endpoint set name")->required();
    add_sets_options(between, false);

    CLI::App* cut = app.add_subcommand(
        "cut", "Test the threshold order lhs <= rhs at a crisp threshold");
    cut->add_option("lhs", lhs, "Left operand set name")->required();
    cut->add_option("rhs", rhs, "Right operand set name")->required();
    cut->add_option("--theta", theta_bits,
                    "Threshold as a bit string, one bit per element")
        ->required();
    add_sets_options(cut, false);

    audit::SearchConfig config;
    std::string suite_name, audit_format = "text";
    auto add_audit_options = [&](CLI::App* cmd) {
        cmd->add_option("--n", config.universe_size, "Universe size")
            ->capture_default_str();
        cmd->add_option("--g", config.grid_levels,
                        "Grid levels: grades are multiples of 1/g")
            ->capture_default_str();
        cmd->add_option("--trials", config.trials, "Random-mode trial count")
            ->capture_default_str();
        cmd->add_option("--seed", config.seed, "Random-mode seed")
            ->capture_default_str();
        cmd->add_option("--workers", config.workers,
                        "Worker threads (0 = hardware concurrency)")
            ->capture_default_str();
        cmd->add_option("--format", audit_format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    CLI::App* audit_cmd = app.add_subcommand(
        "audit", "Verify or refute property suites by exhaustive or random search");
    std::string mode_name = "exhaustive";
    audit_cmd
        ->add_option("suite", suite_name,
                     "Suite name (see the suites subcommand), \"scalar-grid\" or \"all\"")
        ->required();
    audit_cmd->add_option("--mode", mode_name, "Search mode")
        ->check(CLI::IsMember({"exhaustive", "random"}))
        ->capture_default_str();
    add_audit_options(audit_cmd);

    CLI::App* grid_cmd = app.add_subcommand(
        "grid", "Audit every scalar axiom for every measure and render the grid");
    add_audit_options(grid_cmd);

    CLI::App* suites_cmd =
        app.add_subcommand("suites", "List audit suite names and property counts");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return run_compute(common, relation, lhs, rhs);
        if (scalar->parsed()) return run_scalar(common, measure, lhs, rhs, decimal);
        if (aggregate->parsed()) {
            return run_aggregate(common, partition_file, measure, lhs, rhs, decimal);
        }
        if (between->parsed()) return run_between(common, lhs, rhs, third);
        if (cut->parsed()) return run_cut(common, lhs, rhs, theta_bits);
        if (audit_cmd->parsed()) {
            config.mode = audit::search_mode_from_name(mode_name);
            config.validate();
            return run_audit(suite_name, config, audit_format);
        }
        if (grid_cmd->parsed()) {
            config.validate();
            return emit_grid(config, audit_format);
        }
        if (suites_cmd->parsed()) {
            for (audit::Suite suite : audit::all_suites()) {
                std::cout << audit::suite_name(suite) << " ("
                          << audit::suite_properties(suite).size()
                          << " properties)\n";
            }
            std::cout << "scalar-grid (axiom grid over all measures)\n";
            return 0;
        }
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return 0;
}
