#include "mixedfair/io.hpp"

#include <fstream>

#include "mixedfair/errors.hpp"

namespace mixedfair {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational string or integer, got " + j.dump());
}

json rational_json(const Rational& value) { return rational_to_string(value); }

Matrix matrix_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of rows");
    Matrix matrix;
    for (const json& row : j) {
        if (!row.is_array()) throw ParseError(std::string(what) + " rows must be arrays");
        std::vector<Rational> values;
        for (const json& cell : row) values.push_back(rational_from_json(cell));
        matrix.push_back(std::move(values));
    }
    return matrix;
}

json matrix_json(const Matrix& matrix) {
    json rows = json::array();
    for (const auto& row : matrix) {
        json cells = json::array();
        for (const Rational& v : row) cells.push_back(rational_json(v));
        rows.push_back(std::move(cells));
    }
    return rows;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path.string() + ": " + e.what());
    }
}

void write_json_file(const json& j, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path.string() + " for writing");
    out << j.dump(2) << '\n';
}

std::vector<int> indices_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of indices");
    std::vector<int> out;
    for (const json& v : j) {
        if (!v.is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

} // namespace

json instance_to_json(const Instance& inst) {
    json j;
    j["agents"] = inst.n();
    j["mode"] = std::string(mode_name(inst.mode()));
    j["indivisible"] = matrix_json(inst.indivisible_matrix());
    j["divisible"] = matrix_json(inst.divisible_matrix());
    if (inst.identical_divisible_value()) {
        j["identical_divisible_value"] = rational_json(*inst.identical_divisible_value());
    }
    return j;
}

Instance instance_from_json(const json& j) {
    try {
        if (!j.is_object()) throw ParseError("instance file must be a JSON object");
        const auto mode = mode_from_name(j.at("mode").get<std::string>());
        if (!mode) throw ParseError("unknown mode \"" + j.at("mode").get<std::string>() + "\"");
        const int agents = j.at("agents").get<int>();

        Matrix v_ind = matrix_from_json(j.at("indivisible"), "indivisible");
        if (static_cast<int>(v_ind.size()) != agents) {
            throw ParseError("indivisible matrix must have one row per agent");
        }

        Instance inst = [&] {
            switch (*mode) {
                case Mode::binary_all:
                    return Instance::binary_all(std::move(v_ind),
                                                matrix_from_json(j.value("divisible", json::array()),
                                                                 "divisible"));
                case Mode::binary_ind_identical_div: {
                    if (!j.contains("identical_divisible_value")) {
                        throw ParseError("mode binary-ind-identical-div requires identical_divisible_value");
                    }
                    const Rational u = rational_from_json(j.at("identical_divisible_value"));
                    if (j.contains("divisible")) {
                        const Matrix v_div = matrix_from_json(j.at("divisible"), "divisible");
                        for (const auto& row : v_div) {
                            if (row.size() != 1 || row[0] != u) {
                                throw ParseError("divisible matrix disagrees with identical_divisible_value");
                            }
                        }
                    }
                    return Instance::binary_ind_identical_div(std::move(v_ind), u);
                }
                case Mode::general_two_by_two: {
                    const Matrix v_div = matrix_from_json(j.at("divisible"), "divisible");
                    if (v_div.size() != 2 || v_div[0].size() != 1 || v_div[1].size() != 1) {
                        throw ParseError("general-2x2 requires a 2x1 divisible matrix");
                    }
                    if (v_ind != Matrix{{Rational(1)}, {Rational(1)}}) {
                        throw ParseError("general-2x2 requires a 2x1 all-ones indivisible matrix");
                    }
                    return Instance::general_two_by_two(v_div[0][0], v_div[1][0]);
                }
            }
            throw ParseError("unknown mode");
        }();
        return inst;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed instance file: ") + e.what());
    } catch (const ValidationError& e) {
        throw ParseError(std::string("invalid instance: ") + e.what());
    }
}

Instance read_instance(const std::filesystem::path& path) {
    return instance_from_json(read_json_file(path));
}

void write_instance(const Instance& inst, const std::filesystem::path& path) {
    write_json_file(instance_to_json(inst), path);
}

json allocation_to_json(const Allocation& alloc) {
    json bundles = json::array();
    for (const Bundle& b : alloc.bundles) {
        json fractions = json::array();
        for (const Rational& f : b.fractions) fractions.push_back(rational_json(f));
        bundles.push_back(json{{"indivisible", b.indivisible}, {"divisible", std::move(fractions)}});
    }
    return json{
        {"bundles", std::move(bundles)},
        {"disposed",
         json{{"indivisible", alloc.disposed_indivisible}, {"divisible", alloc.disposed_divisible}}},
    };
}

Allocation allocation_from_json(const json& j) {
    try {
        Allocation alloc;
        for (const json& b : j.at("bundles")) {
            Bundle bundle;
            bundle.indivisible = indices_from_json(b.at("indivisible"), "bundle indivisible");
            for (const json& f : b.at("divisible")) bundle.fractions.push_back(rational_from_json(f));
            alloc.bundles.push_back(std::move(bundle));
        }
        if (j.contains("disposed")) {
            alloc.disposed_indivisible =
                indices_from_json(j.at("disposed").value("indivisible", json::array()), "disposed");
            alloc.disposed_divisible =
                indices_from_json(j.at("disposed").value("divisible", json::array()), "disposed");
        }
        return alloc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed allocation file: ") + e.what());
    }
}

Allocation read_allocation(const std::filesystem::path& path) {
    return allocation_from_json(read_json_file(path));
}

void write_allocation(const Allocation& alloc, const std::filesystem::path& path) {
    write_json_file(allocation_to_json(alloc), path);
}

json water_fill_trace_to_json(const WaterFillTrace& trace) {
    json iterations = json::array();
    for (const WaterFillStep& step : trace.iterations) {
        iterations.push_back(json{
            {"t1", step.t1},
            {"t2", step.t2},
            {"delta", step.delta ? rational_json(*step.delta) : json(nullptr)},
            {"remaining", rational_json(step.remaining)},
            {"increment", rational_json(step.increment)},
        });
    }
    return json{{"iterations", std::move(iterations)}};
}

json mechanism2_trace_to_json(const Mechanism2Trace& trace) {
    return json{
        {"i_star", trace.i_star ? json(*trace.i_star) : json(nullptr)},
        {"k_bar_star", trace.k_bar_star ? json(*trace.k_bar_star) : json(nullptr)},
    };
}

json mechanism3_trace_to_json(const Mechanism3Trace& trace) { return json{{"t", trace.t}}; }

json assignment_to_json(const AssignmentVector& owner) {
    json owners = json::array();
    for (int who : owner) owners.push_back(who == kDisposed ? json(nullptr) : json(who));
    return json{{"owner", std::move(owners)}};
}

json audit_report_to_json(const AuditReport& report) {
    json j{
        {"mechanism", std::string(mechanism_name(report.mechanism))},
        {"agent", report.agent},
        {"search_space_size", report.search_space_size},
        {"exhaustive", report.exhaustive},
        {"deviation", nullptr},
    };
    if (report.deviation) {
        json ind = json::array();
        for (const Rational& v : report.deviation->reported_indivisible) ind.push_back(rational_json(v));
        json div = json::array();
        for (const Rational& v : report.deviation->reported_divisible) div.push_back(rational_json(v));
        j["deviation"] = json{
            {"indivisible", std::move(ind)},
            {"divisible", std::move(div)},
            {"truthful_utility", rational_json(report.deviation->truthful_utility)},
            {"deviating_utility", rational_json(report.deviation->deviating_utility)},
            {"gain", rational_json(report.deviation->gain)},
        };
    }
    return j;
}

json rule_witness_to_json(const RuleWitness& witness) {
    return json{
        {"a", rational_json(witness.a)},
        {"b", rational_json(witness.b)},
        {"x", rational_json(witness.x)},
        {"violation", std::string(rule_violation_name(witness.violation))},
        {"feasible_lo", rational_json(witness.feasible_lo)},
        {"feasible_hi", rational_json(witness.feasible_hi)},
        {"deviating_report",
         witness.deviating_report ? rational_json(*witness.deviating_report) : json(nullptr)},
        {"new_x", witness.new_x ? rational_json(*witness.new_x) : json(nullptr)},
        {"gain", witness.gain ? rational_json(*witness.gain) : json(nullptr)},
    };
}

} // namespace mixedfair
