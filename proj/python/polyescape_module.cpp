// Python bindings for the escape analyzer: thin wrappers over the C++ core.
// Rationals cross the boundary as exact strings ("p", "p/q", decimals on
// input); results come back as plain dicts so callers can feed them to
// fractions.Fraction or json without extra glue.

#include "polyescape/bounds.hpp"
#include "polyescape/decide.hpp"
#include "polyescape/instance_io.hpp"
#include "polyescape/lp.hpp"
#include "polyescape/rational.hpp"
#include "polyescape/simulate.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace polyescape;

namespace {

RatVector vector_from_strings(const std::vector<std::string>& texts) {
    std::vector<Rational> entries;
    entries.reserve(texts.size());
    for (const std::string& t : texts) entries.push_back(parse_rational(t));
    return RatVector(std::move(entries));
}

py::list vector_to_strings(const RatVector& v) {
    py::list out;
    for (const Rational& q : v) out.append(to_string(q));
    return out;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::AllEscape: return "all-escape";
        case Verdict::TrappedPointExists: return "trapped-point-exists";
        case Verdict::PolytopeEmpty: return "polytope-empty";
        case Verdict::PolytopeUnbounded: return "polytope-unbounded";
    }
    return "?";
}

const char* status_name(ValidationReport::Status s) {
    switch (s) {
        case ValidationReport::Status::Pass: return "pass";
        case ValidationReport::Status::Fail: return "fail";
        case ValidationReport::Status::Unconfirmed: return "unconfirmed";
        case ValidationReport::Status::NotApplicable: return "not-applicable";
    }
    return "?";
}

py::object optional_rational(const std::optional<Rational>& q) {
    if (!q) return py::none();
    return py::str(to_string(*q));
}

py::dict logscale_dict(const LogScaleRational& v) {
    py::dict d;
    if (v.is_value()) {
        d["form"] = "value";
        d["value"] = to_string(v.exact_value());
    } else {
        d["form"] = "exp";
        d["log_exponent"] = to_string(v.log_exponent());
    }
    d["approx"] = v.approx_decimal();
    return d;
}

EscapeCertificate compute_bound(const Instance& inst, unsigned precision_bits) {
    return inst.mode == Mode::Continuous ? continuous_escape_bound(inst, precision_bits)
                                         : discrete_escape_bound(inst, precision_bits);
}

}  // namespace

PYBIND11_MODULE(_polyescape, m) {
    m.doc() = "exact escape analysis for linear dynamics on rational polytopes";
    m.attr("__version__") = "0.1.0";

    py::class_<Instance>(m, "Instance",
                         "A linear system (continuous dx/dt = Ax + a or discrete "
                         "x_{n+1} = Ax_n + a) with the polytope Bx <= c it is analyzed on.")
        .def_static("from_json", &instance_from_json_text, py::arg("text"),
                    "Parse an instance JSON document (rationals as exact strings).")
        .def("to_json", &instance_to_json_text)
        .def_property_readonly("mode",
                               [](const Instance& i) {
                                   return i.mode == Mode::Continuous ? "continuous" : "discrete";
                               })
        .def_property_readonly("dimension", [](const Instance& i) { return i.a.rows(); })
        .def_property_readonly("constraint_count",
                               [](const Instance& i) { return i.polytope.constraint_count(); })
        .def("__repr__", [](const Instance& i) {
            return "<Instance " + std::string(i.mode == Mode::Continuous ? "continuous" : "discrete") +
                   " d=" + std::to_string(i.a.rows()) + ">";
        });

    py::class_<EscapeCertificate>(m, "EscapeCertificate",
                                  "Certified uniform escape-time bound (time T for continuous "
                                  "dynamics, iteration count N for discrete).")
        .def_static("from_json", &certificate_from_json_text, py::arg("text"))
        .def("to_json", &certificate_to_json_text)
        .def_property_readonly("mode",
                               [](const EscapeCertificate& c) {
                                   return c.mode == Mode::Continuous ? "continuous" : "discrete";
                               })
        .def_readonly("dimension", &EscapeCertificate::dimension)
        .def_readonly("coefficient_bits", &EscapeCertificate::coefficient_bits)
        .def_readonly("extra_steps", &EscapeCertificate::extra_steps)
        .def_property_readonly("total_bound",
                               [](const EscapeCertificate& c) { return logscale_dict(c.total_bound); })
        .def_property_readonly(
            "closed_form_bound",
            [](const EscapeCertificate& c) { return logscale_dict(c.closed_form_bound); })
        .def("__repr__", [](const EscapeCertificate& c) {
            return "<EscapeCertificate total=" + c.total_bound.approx_decimal() + ">";
        });

    m.def(
        "decide",
        [](const Instance& inst) {
            const Decision d = decide(inst);
            py::dict out;
            out["verdict"] = verdict_name(d.verdict);
            out["witness"] = d.witness ? py::object(vector_to_strings(*d.witness)) : py::none();
            return out;
        },
        py::arg("instance"),
        "Classify the instance: every trajectory escapes iff no fixed point lies in the "
        "polytope. Returns {'verdict', 'witness'} with the witness as exact rationals.");

    m.def("escape_bound", &compute_bound, py::arg("instance"), py::arg("precision") = 128u,
          "Assemble the certified escape bound; raises ValueError unless the verdict is "
          "all-escape.");

    m.def(
        "escape_time",
        [](const Instance& inst, const std::vector<std::string>& x0, const std::string& horizon,
           unsigned precision) {
            const RatVector start = vector_from_strings(x0);
            const TrajectoryRun run = escape_time(inst, start, parse_rational(horizon), precision);
            py::dict out;
            out["escaped"] = run.escape_time.has_value();
            out["escape_time"] = optional_rational(run.escape_time);
            out["horizon"] = to_string(run.horizon);
            out["sample_count"] = run.samples.size();
            return out;
        },
        py::arg("instance"), py::arg("x0"), py::arg("horizon"), py::arg("precision") = 128u,
        "Simulate one trajectory; returns the first certified exit time (exact rational "
        "string) or None if no exit was certified within the horizon.");

    m.def(
        "sample_points",
        [](const Instance& inst, unsigned interior, std::uint64_t seed) {
            SamplingPlan plan;
            plan.random_interior_count = interior;
            plan.seed = seed;
            py::list out;
            for (const RatVector& p : sample_points(inst.polytope, plan))
                out.append(vector_to_strings(p));
            return out;
        },
        py::arg("instance"), py::arg("interior") = 0u, py::arg("seed") = 0ull,
        "Vertices plus seeded random interior points of the instance's polytope.");

    m.def(
        "validate",
        [](const Instance& inst, const EscapeCertificate& cert, unsigned samples,
           std::uint64_t seed, const std::string& sim_cap, unsigned precision) {
            SamplingPlan plan;
            plan.random_interior_count = samples;
            plan.seed = seed;
            const ValidationReport r =
                validate_certificate(inst, cert, plan, parse_rational(sim_cap), precision);
            py::dict out;
            out["status"] = status_name(r.status);
            out["detail"] = r.detail;
            out["bound_within_cap"] = r.bound_within_cap;
            out["horizon"] = to_string(r.horizon);
            out["total_bound"] = logscale_dict(r.total_bound);
            out["max_observed_escape"] = optional_rational(r.max_observed_escape);
            out["slack_ratio"] = optional_rational(r.slack_ratio);
            py::list sample_list;
            for (const SampleValidation& s : r.samples) {
                py::dict e;
                e["initial_point"] = vector_to_strings(s.initial_point);
                e["escaped"] = s.escaped;
                e["escape_time"] = optional_rational(s.escape_time);
                sample_list.append(e);
            }
            out["samples"] = sample_list;
            return out;
        },
        py::arg("instance"), py::arg("certificate"), py::arg("samples") = 10u,
        py::arg("seed") = 0ull, py::arg("sim_cap") = std::string("1000000"),
        py::arg("precision") = 128u,
        "Cross-check a certificate by simulating sampled starts; status 'fail' means a "
        "trajectory outlasted a simulable bound.");
}
