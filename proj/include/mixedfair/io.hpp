#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "mixedfair/allocation.hpp"
#include "mixedfair/audit.hpp"
#include "mixedfair/instance.hpp"
#include "mixedfair/mechanisms.hpp"

namespace mixedfair {

// JSON file formats. Rationals travel as canonical "p" / "p/q" strings
// (plain JSON integers are accepted on input); good indices are 0-based.

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);
Instance read_instance(const std::filesystem::path& path);
void write_instance(const Instance& inst, const std::filesystem::path& path);

nlohmann::json allocation_to_json(const Allocation& alloc);
Allocation allocation_from_json(const nlohmann::json& j);
Allocation read_allocation(const std::filesystem::path& path);
void write_allocation(const Allocation& alloc, const std::filesystem::path& path);

nlohmann::json water_fill_trace_to_json(const WaterFillTrace& trace);
nlohmann::json mechanism2_trace_to_json(const Mechanism2Trace& trace);
nlohmann::json mechanism3_trace_to_json(const Mechanism3Trace& trace);
nlohmann::json assignment_to_json(const AssignmentVector& owner);

nlohmann::json audit_report_to_json(const AuditReport& report);
nlohmann::json rule_witness_to_json(const RuleWitness& witness);

} // namespace mixedfair
