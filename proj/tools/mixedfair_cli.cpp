// mixedfair: allocate, check, audit and demo commands over JSON instance
// and allocation files.
//
// Exit codes:
//   0  success / property holds / no deviation
//   1  parse or precondition failure
//   2  instance mode incompatible with the mechanism
//   3  checked property fails
//   4  audit found a profitable deviation
//   5  search space above the cap
//   6  impossibility demo inconclusive on the given grid

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixedfair/audit.hpp"
#include "mixedfair/errors.hpp"
#include "mixedfair/fairness.hpp"
#include "mixedfair/io.hpp"
#include "mixedfair/mechanisms.hpp"
#include "mixedfair/mnw_tie.hpp"
#include "mixedfair/oracles.hpp"
#include "mixedfair/welfare.hpp"

namespace {

using nlohmann::json;
using namespace mixedfair;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitMode = 2;
constexpr int kExitPropertyFails = 3;
constexpr int kExitDeviation = 4;
constexpr int kExitCapped = 5;
constexpr int kExitInconclusive = 6;

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot open " + out_path + " for writing");
        out << j.dump(2) << '\n';
    }
}

// Agents are labelled from 1 in human-readable text, matching the usual
// write-ups; everything machine-readable stays 0-based.
std::string agent_label(int agent) { return "agent " + std::to_string(agent + 1); }

int cmd_allocate(const std::string& mechanism, const std::string& instance_path,
                 const std::string& out_path, bool trace) {
    const auto id = mechanism_from_name(mechanism);
    if (!id) {
        std::cerr << "unknown mechanism \"" << mechanism << "\"\n";
        return kExitParse;
    }
    const Instance inst = read_instance(instance_path);

    json output;
    switch (*id) {
        case MechanismId::mechanism1: {
            const Mechanism1Result result = mechanism1(inst);
            output = allocation_to_json(result.allocation);
            if (trace) output["trace"] = water_fill_trace_to_json(result.trace);
            break;
        }
        case MechanismId::mechanism2: {
            const Mechanism2Result result = mechanism2(inst);
            output = allocation_to_json(result.allocation);
            if (trace) output["trace"] = mechanism2_trace_to_json(result.trace);
            break;
        }
        case MechanismId::mechanism3: {
            const Mechanism3Result result = mechanism3(inst);
            output = allocation_to_json(result.allocation);
            if (trace) output["trace"] = mechanism3_trace_to_json(result.trace);
            break;
        }
        case MechanismId::mnw_tie:
        case MechanismId::mnw_tie_no_disposal: {
            const Allocation alloc = run_mechanism(*id, inst);
            output = allocation_to_json(alloc);
            if (trace) output["trace"] = assignment_to_json(assignment_of(inst, alloc));
            break;
        }
    }
    emit(output, out_path);
    return kExitOk;
}

int cmd_check(const std::string& property, const std::string& instance_path,
              const std::string& allocation_path) {
    const Instance inst = read_instance(instance_path);
    const Allocation alloc = read_allocation(allocation_path);

    std::optional<EnvyWitness> witness;
    if (property == "ef") {
        witness = find_ef_violation(inst, alloc);
    } else if (property == "ef1") {
        witness = find_ef1_violation(inst, alloc);
    } else if (property == "efm-pos") {
        witness = find_efm_pos_violation(inst, alloc);
    } else if (property == "efm-zero") {
        witness = find_efm_zero_violation(inst, alloc);
    } else if (property == "water-fill") {
        if (!check_water_filling_property(inst, alloc)) {
            std::cerr << "water-filling property fails\n";
            return kExitPropertyFails;
        }
        std::cout << "water-fill holds; potential " << rational_to_string(potential_phi(inst, alloc))
                  << '\n';
        return kExitOk;
    } else if (property == "lorenz") {
        // Lorenz domination against every water-filled wasteless assignment.
        if (!inst.identical_divisible_value()) {
            std::cerr << "lorenz check requires mode binary-ind-identical-div\n";
            return kExitParse;
        }
        validate_allocation(inst, alloc);
        const UtilityProfile mine = utility_profile(inst, alloc);
        bool dominating = true;
        for_each_wasteless_assignment(inst, [&](const AssignmentVector& owner) {
            if (!lorenz_dominates(mine, utility_profile(inst, water_fill(inst, owner)))) {
                dominating = false;
                return false;
            }
            return true;
        });
        if (!dominating) {
            std::cerr << "allocation is not Lorenz dominating\n";
            return kExitPropertyFails;
        }
        std::cout << "lorenz holds\n";
        return kExitOk;
    } else {
        std::cerr << "unknown property \"" << property << "\"\n";
        return kExitParse;
    }

    if (witness) {
        std::cerr << property << " fails: " << agent_label(witness->envious) << " envies "
                  << agent_label(witness->envied) << '\n';
        return kExitPropertyFails;
    }
    std::cout << property << " holds\n";
    return kExitOk;
}

int cmd_audit(const std::string& mechanism, const std::string& instance_path,
              std::optional<int> agent, bool all_agents, long long cap) {
    const auto id = mechanism_from_name(mechanism);
    if (!id) {
        std::cerr << "unknown mechanism \"" << mechanism << "\"\n";
        return kExitParse;
    }
    const Instance inst = read_instance(instance_path);

    std::vector<int> agents;
    if (all_agents) {
        for (int i = 0; i < inst.n(); ++i) agents.push_back(i);
    } else if (agent) {
        agents.push_back(*agent);
    } else {
        std::cerr << "pass --agent I or --all-agents\n";
        return kExitParse;
    }

    bool deviation_found = false;
    json reports = json::array();
    for (int i : agents) {
        const AuditReport report = audit_truthfulness(*id, inst, i, cap);
        deviation_found = deviation_found || report.deviation.has_value();
        reports.push_back(audit_report_to_json(report));
    }
    std::cout << reports.dump(2) << '\n';
    return deviation_found ? kExitDeviation : kExitOk;
}

int cmd_demo(const std::string& which, const std::string& rule_name) {
    if (which == "thm31") {
        AllocationRule rule;
        if (rule_name == "lower-endpoint") {
            rule = lower_endpoint_rule();
        } else if (rule_name == "upper-endpoint") {
            rule = upper_endpoint_rule();
        } else if (rule_name == "midpoint") {
            rule = midpoint_rule();
        } else {
            std::cerr << "unknown rule \"" << rule_name << "\"\n";
            return kExitParse;
        }
        const auto witness = impossibility_demo(rule, default_sample_grid(), default_deviation_grid());
        if (!witness) {
            std::cout << "inconclusive: no witness on the default grid\n";
            return kExitInconclusive;
        }
        std::cout << rule_witness_to_json(*witness).dump(2) << '\n';
        return kExitOk;
    }
    if (which == "ex52") {
        const MnwManipulationReport report = mnw_manipulation_report();
        std::cout << "single-good upper bound: " << rational_to_string(report.single_good_upper_bound)
                  << "\nbest product (agent 1 holds one good): "
                  << rational_to_string(report.best_single_good_product)
                  << "\nmnw product: " << rational_to_string(report.mnw_product)
                  << "\nbest product after misreport: " << rational_to_string(report.misreport_product)
                  << "\nalternatives after misreport: "
                  << rational_to_string(report.misreport_alt_agent1_pair) << " and "
                  << rational_to_string(report.misreport_alt_triple)
                  << "\nagent 2 utility, truthful vs misreport: "
                  << rational_to_string(report.truthful_agent2_utility) << " -> "
                  << rational_to_string(report.misreport_agent2_utility) << '\n';
        if (!report.ok) {
            std::cerr << "manipulation accounting failed\n";
            return kExitParse;
        }
        return kExitOk;
    }
    if (which == "remark-multi") {
        const auto found = find_naive_multi_counterexample();
        if (!found) {
            std::cerr << "no counterexample within the search bounds\n";
            return kExitParse;
        }
        json j;
        j["instance"] = instance_to_json(found->instance);
        j["allocation"] = allocation_to_json(found->allocation);
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }
    std::cerr << "unknown demo \"" << which << "\"\n";
    return kExitParse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Truthful fair division of mixed divisible and indivisible goods"};
    app.require_subcommand(1);

    std::string mechanism;
    std::string instance_path;
    std::string allocation_path;
    std::string out_path;
    std::string property;
    std::string which;
    std::string rule_name = "midpoint";
    bool trace = false;
    bool all_agents = false;
    std::optional<int> agent;
    long long cap = kDefaultAuditCap;

    CLI::App* allocate = app.add_subcommand("allocate", "Run a mechanism on an instance file");
    allocate->add_option("--mechanism", mechanism, "m1, m2, m3, mnw-tie or mnw-tie-nodisposal")
        ->required();
    allocate->add_option("--instance", instance_path, "instance JSON file")->required();
    allocate->add_option("--out", out_path, "allocation output file (stdout when omitted)");
    allocate->add_flag("--trace", trace, "include the mechanism trace in the output");

    CLI::App* check = app.add_subcommand("check", "Check a fairness property of an allocation");
    check->add_option("--property", property, "ef, ef1, efm-pos, efm-zero, water-fill or lorenz")
        ->required();
    check->add_option("--instance", instance_path, "instance JSON file")->required();
    check->add_option("--allocation", allocation_path, "allocation JSON file")->required();

    CLI::App* audit = app.add_subcommand("audit", "Exhaustive truthfulness audit");
    audit->add_option("--mechanism", mechanism, "mechanism to audit")->required();
    audit->add_option("--instance", instance_path, "instance JSON file")->required();
    audit->add_option("--agent", agent, "0-based agent to audit");
    audit->add_flag("--all-agents", all_agents, "audit every agent");
    audit->add_option("--cap", cap, "largest admissible report space");

    CLI::App* demo = app.add_subcommand("demo", "Built-in demonstrations");
    demo->add_option("--which", which, "thm31, ex52 or remark-multi")->required();
    demo->add_option("--rule", rule_name, "thm31 rule: lower-endpoint, upper-endpoint or midpoint");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }

    try {
        if (allocate->parsed()) return cmd_allocate(mechanism, instance_path, out_path, trace);
        if (check->parsed()) return cmd_check(property, instance_path, allocation_path);
        if (audit->parsed()) return cmd_audit(mechanism, instance_path, agent, all_agents, cap);
        if (demo->parsed()) return cmd_demo(which, rule_name);
    } catch (const ModeError& e) {
        std::cerr << e.what() << '\n';
        return kExitMode;
    } catch (const BudgetError& e) {
        std::cerr << e.what() << '\n';
        return kExitCapped;
    } catch (const PreconditionError& e) {
        std::cerr << e.what() << '\n';
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return kExitParse;
    }
    return kExitParse;
}
