#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mixedfair/audit.hpp"
#include "mixedfair/errors.hpp"
#include "mixedfair/fairness.hpp"
#include "mixedfair/io.hpp"
#include "mixedfair/mechanisms.hpp"
#include "mixedfair/mnw_tie.hpp"
#include "mixedfair/oracles.hpp"
#include "mixedfair/welfare.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// mixedfair::Rational <-> fractions.Fraction, exactly, via decimal strings.
template <>
struct type_caster<mixedfair::Rational> {
    PYBIND11_TYPE_CASTER(mixedfair::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (src.is_none()) return false;
        if (PyLong_Check(src.ptr())) {
            value = mixedfair::parse_rational(py::str(src).cast<std::string>());
            return true;
        }
        if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
            const auto num = py::str(src.attr("numerator")).cast<std::string>();
            const auto den = py::str(src.attr("denominator")).cast<std::string>();
            try {
                value = mixedfair::parse_rational(num + "/" + den);
            } catch (const mixedfair::ParseError&) {
                return false;
            }
            return true;
        }
        return false;
    }

    static handle cast(const mixedfair::Rational& src, return_value_policy, handle) {
        static py::object fraction = py::module_::import("fractions").attr("Fraction");
        std::ostringstream num, den;
        num << numerator(src);
        den << denominator(src);
        return fraction(py::str(num.str()), py::str(den.str())).release();
    }
};

} // namespace pybind11::detail

namespace {

using namespace mixedfair;

std::string ordering_name(Ordering o) {
    switch (o) {
        case Ordering::less: return "less";
        case Ordering::equal: return "equal";
        case Ordering::greater: return "greater";
    }
    return "?";
}

} // namespace

PYBIND11_MODULE(_mixedfair, m) {
    m.doc() = "Truthful fair division of mixed divisible and indivisible goods";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ModeError>(m, "ModeError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    py::enum_<Mode>(m, "Mode")
        .value("BINARY_ALL", Mode::binary_all)
        .value("BINARY_IND_IDENTICAL_DIV", Mode::binary_ind_identical_div)
        .value("GENERAL_TWO_BY_TWO", Mode::general_two_by_two);

    py::class_<Instance>(m, "Instance")
        .def_static("binary_all", &Instance::binary_all, py::arg("indivisible"),
                    py::arg("divisible"))
        .def_static("binary_ind_identical_div", &Instance::binary_ind_identical_div,
                    py::arg("indivisible"), py::arg("u"))
        .def_static("general_two_by_two", &Instance::general_two_by_two, py::arg("a"),
                    py::arg("b"))
        .def_property_readonly("n", &Instance::n)
        .def_property_readonly("m", &Instance::m)
        .def_property_readonly("m_bar", &Instance::m_bar)
        .def_property_readonly("mode", &Instance::mode)
        .def_property_readonly("indivisible", &Instance::indivisible_matrix)
        .def_property_readonly("divisible", &Instance::divisible_matrix)
        .def_property_readonly("u", &Instance::identical_divisible_value)
        .def("with_report", &Instance::with_report, py::arg("agent"), py::arg("indivisible"),
             py::arg("divisible"))
        .def("indivisible_projection", &Instance::indivisible_projection)
        .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
        .def("__repr__", [](const Instance& inst) {
            std::ostringstream out;
            out << "Instance(mode=" << mode_name(inst.mode()) << ", n=" << inst.n()
                << ", m=" << inst.m() << ", m_bar=" << inst.m_bar() << ")";
            return out.str();
        });

    py::class_<Bundle>(m, "Bundle")
        .def(py::init<>())
        .def(py::init<std::vector<int>, std::vector<Rational>>(), py::arg("indivisible"),
             py::arg("fractions"))
        .def_readwrite("indivisible", &Bundle::indivisible)
        .def_readwrite("fractions", &Bundle::fractions)
        .def("__eq__", [](const Bundle& a, const Bundle& b) { return a == b; });

    py::class_<Allocation>(m, "Allocation")
        .def(py::init<>())
        .def_readwrite("bundles", &Allocation::bundles)
        .def_readwrite("disposed_indivisible", &Allocation::disposed_indivisible)
        .def_readwrite("disposed_divisible", &Allocation::disposed_divisible)
        .def("__eq__", [](const Allocation& a, const Allocation& b) { return a == b; })
        .def("__repr__", [](const Allocation& alloc) {
            return allocation_to_json(alloc).dump();
        });

    m.def("validate_allocation", &validate_allocation, py::arg("instance"), py::arg("allocation"));
    m.def("allocation_from_assignment", &allocation_from_assignment, py::arg("instance"),
          py::arg("owner"));
    m.def("assignment_of", &assignment_of, py::arg("instance"), py::arg("allocation"));

    m.def("value_of", &value_of, py::arg("instance"), py::arg("agent"), py::arg("bundle"));
    m.def("utility_profile", &utility_profile, py::arg("instance"), py::arg("allocation"));
    m.def("is_ef", &is_ef, py::arg("instance"), py::arg("allocation"));
    m.def("is_ef1", &is_ef1, py::arg("instance"), py::arg("allocation"));
    m.def("is_efm_pos", &is_efm_pos, py::arg("instance"), py::arg("allocation"));
    m.def("is_efm_zero", &is_efm_zero, py::arg("instance"), py::arg("allocation"));

    m.def(
        "nash_welfare",
        [](const Instance& inst, const Allocation& alloc) {
            const NashWelfare nw = nash_welfare(inst, alloc);
            return py::make_tuple(nw.positive_count, nw.product);
        },
        py::arg("instance"), py::arg("allocation"));
    m.def(
        "leximin_compare",
        [](const UtilityProfile& p, const UtilityProfile& q) {
            return ordering_name(leximin_compare(p, q));
        },
        py::arg("p"), py::arg("q"));
    m.def("lorenz_dominates", &lorenz_dominates, py::arg("p"), py::arg("q"));

    m.def("leximin_profile", &leximin_profile, py::arg("instance"));
    m.def(
        "mnw_tie_allocate",
        [](const Instance& inst) {
            std::vector<std::optional<int>> owners;
            for (int who : mnw_tie_allocate(inst)) {
                owners.push_back(who == kDisposed ? std::nullopt : std::optional<int>(who));
            }
            return owners;
        },
        py::arg("instance"),
        "Owner per indivisible good; None marks a disposed good.");

    py::class_<WaterFillStep>(m, "WaterFillStep")
        .def_readonly("t1", &WaterFillStep::t1)
        .def_readonly("t2", &WaterFillStep::t2)
        .def_readonly("delta", &WaterFillStep::delta)
        .def_readonly("remaining", &WaterFillStep::remaining)
        .def_readonly("increment", &WaterFillStep::increment);
    py::class_<WaterFillTrace>(m, "WaterFillTrace")
        .def_readonly("iterations", &WaterFillTrace::iterations);
    py::class_<Mechanism2Trace>(m, "Mechanism2Trace")
        .def_readonly("i_star", &Mechanism2Trace::i_star)
        .def_readonly("k_bar_star", &Mechanism2Trace::k_bar_star);
    py::class_<Mechanism3Trace>(m, "Mechanism3Trace").def_readonly("t", &Mechanism3Trace::t);

    m.def(
        "mechanism1",
        [](const Instance& inst) {
            Mechanism1Result r = mechanism1(inst);
            return py::make_tuple(r.allocation, r.trace);
        },
        py::arg("instance"));
    m.def(
        "mechanism2",
        [](const Instance& inst) {
            Mechanism2Result r = mechanism2(inst);
            return py::make_tuple(r.allocation, r.trace);
        },
        py::arg("instance"));
    m.def(
        "mechanism3",
        [](const Instance& inst) {
            Mechanism3Result r = mechanism3(inst);
            return py::make_tuple(r.allocation, r.trace);
        },
        py::arg("instance"));
    m.def("mechanism3_naive_multi", &mechanism3_naive_multi, py::arg("instance"));
    m.def("water_fill", &water_fill, py::arg("instance"), py::arg("owner"));
    m.def("check_water_filling_property", &check_water_filling_property, py::arg("instance"),
          py::arg("allocation"));
    m.def("potential_phi", &potential_phi, py::arg("instance"), py::arg("allocation"));

    py::class_<Deviation>(m, "Deviation")
        .def_readonly("reported_indivisible", &Deviation::reported_indivisible)
        .def_readonly("reported_divisible", &Deviation::reported_divisible)
        .def_readonly("truthful_utility", &Deviation::truthful_utility)
        .def_readonly("deviating_utility", &Deviation::deviating_utility)
        .def_readonly("gain", &Deviation::gain);
    py::class_<AuditReport>(m, "AuditReport")
        .def_readonly("agent", &AuditReport::agent)
        .def_readonly("deviation", &AuditReport::deviation)
        .def_readonly("search_space_size", &AuditReport::search_space_size)
        .def_readonly("exhaustive", &AuditReport::exhaustive)
        .def("__repr__",
             [](const AuditReport& r) { return audit_report_to_json(r).dump(); });

    m.def(
        "audit_truthfulness",
        [](const std::string& mechanism, const Instance& inst, int agent, long long cap) {
            const auto id = mechanism_from_name(mechanism);
            if (!id) throw ValidationError("unknown mechanism \"" + mechanism + "\"");
            return audit_truthfulness(*id, inst, agent, cap);
        },
        py::arg("mechanism"), py::arg("instance"), py::arg("agent"),
        py::arg("cap") = kDefaultAuditCap);

    m.def("instance_dumps", [](const Instance& inst) { return instance_to_json(inst).dump(2); });
    m.def("instance_loads", [](const std::string& text) {
        try {
            return instance_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
    });
    m.def("allocation_dumps",
          [](const Allocation& alloc) { return allocation_to_json(alloc).dump(2); });
    m.def("allocation_loads", [](const std::string& text) {
        try {
            return allocation_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
    });
}
