#include "polyescape/instance_io.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>

namespace polyescape {
namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

constexpr std::size_t kMaxFractionalDigits = 64;

// Rational literal from a JSON string field: "p", "-p", "p/q", or a decimal
// with at most kMaxFractionalDigits fractional digits, converted exactly.
Rational rational_field(const ordered_json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a rational number as a string");
    const std::string text = j.get<std::string>();
    const std::string_view body = trimmed(text);
    if (const auto dot = body.find('.'); dot != std::string_view::npos) {
        const std::size_t fractional = body.size() - dot - 1;
        if (fractional > kMaxFractionalDigits)
            fail(where, "decimal literal has " + std::to_string(fractional) +
                            " fractional digits (limit " +
                            std::to_string(kMaxFractionalDigits) + "): " + text);
    }
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        fail(where, e.what());
    }
}

ordered_json rational_json(const Rational& q) { return to_string(q); }

const ordered_json& require(const ordered_json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing required field \"") + key + "\"");
    return *it;
}

std::string string_field(const ordered_json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
}

bool bool_field(const ordered_json& j, const std::string& where) {
    if (!j.is_boolean()) fail(where, "expected a boolean");
    return j.get<bool>();
}

template <typename T>
T uint_field(const ordered_json& j, const std::string& where) {
    if (!j.is_number_unsigned()) fail(where, "expected a nonnegative integer");
    return static_cast<T>(j.get<std::uint64_t>());
}

RatVector vector_from_json(const ordered_json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of rational strings");
    std::vector<Rational> entries;
    entries.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        entries.push_back(rational_field(j[i], where + "[" + std::to_string(i) + "]"));
    return RatVector(std::move(entries));
}

ordered_json vector_to_json(const RatVector& v) {
    ordered_json out = ordered_json::array();
    for (const Rational& q : v) out.push_back(rational_json(q));
    return out;
}

RatMatrix matrix_from_json(const ordered_json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    RatMatrix m;
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string row_where = where + "[" + std::to_string(i) + "]";
        const RatVector row = vector_from_json(j[i], row_where);
        if (i == 0) {
            cols = row.size();
            m = RatMatrix(rows, cols);
        } else if (row.size() != cols) {
            fail(row_where, "row has " + std::to_string(row.size()) + " entries, expected " +
                                std::to_string(cols));
        }
        for (std::size_t k = 0; k < row.size(); ++k) m.at(i, k) = row[k];
    }
    return m;
}

ordered_json matrix_to_json(const RatMatrix& m) {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
    return out;
}

// --- enum <-> string maps ---------------------------------------------------

std::string mode_name(Mode m) { return m == Mode::Continuous ? "continuous" : "discrete"; }

Mode mode_from_name(const std::string& s, const std::string& where) {
    if (s == "continuous") return Mode::Continuous;
    if (s == "discrete") return Mode::Discrete;
    fail(where, "mode must be \"continuous\" or \"discrete\", got \"" + s + "\"");
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::AllEscape: return "all-escape";
        case Verdict::TrappedPointExists: return "trapped-point-exists";
        case Verdict::PolytopeEmpty: return "polytope-empty";
        case Verdict::PolytopeUnbounded: return "polytope-unbounded";
    }
    return "all-escape";
}

Verdict verdict_from_name(const std::string& s, const std::string& where) {
    if (s == "all-escape") return Verdict::AllEscape;
    if (s == "trapped-point-exists") return Verdict::TrappedPointExists;
    if (s == "polytope-empty") return Verdict::PolytopeEmpty;
    if (s == "polytope-unbounded") return Verdict::PolytopeUnbounded;
    fail(where, "unknown verdict \"" + s + "\"");
}

std::string kind_name(EigenvalueKind k) {
    switch (k) {
        case EigenvalueKind::Zero: return "zero";
        case EigenvalueKind::PositiveReal: return "positive-real";
        case EigenvalueKind::NegativeReal: return "negative-real";
        case EigenvalueKind::ComplexPair: return "complex-pair";
    }
    return "zero";
}

EigenvalueKind kind_from_name(const std::string& s, const std::string& where) {
    if (s == "zero") return EigenvalueKind::Zero;
    if (s == "positive-real") return EigenvalueKind::PositiveReal;
    if (s == "negative-real") return EigenvalueKind::NegativeReal;
    if (s == "complex-pair") return EigenvalueKind::ComplexPair;
    fail(where, "unknown eigenvalue kind \"" + s + "\"");
}

std::string case_name(TLambdaCase c) {
    switch (c) {
        case TLambdaCase::Negative: return "negative";
        case TLambdaCase::Zero: return "zero";
        case TLambdaCase::Positive: return "positive";
    }
    return "positive";
}

TLambdaCase case_from_name(const std::string& s, const std::string& where) {
    if (s == "negative") return TLambdaCase::Negative;
    if (s == "zero") return TLambdaCase::Zero;
    if (s == "positive") return TLambdaCase::Positive;
    fail(where, "unknown per-eigenvalue case \"" + s + "\"");
}

std::string ratio_source_name(RatioSource r) {
    switch (r) {
        case RatioSource::ClosedFormFormula: return "closed-form-formula";
    }
    return "closed-form-formula";
}

RatioSource ratio_source_from_name(const std::string& s, const std::string& where) {
    if (s == "closed-form-formula") return RatioSource::ClosedFormFormula;
    fail(where, "unknown ratio source \"" + s + "\"");
}

std::string status_name(ValidationReport::Status s) {
    switch (s) {
        case ValidationReport::Status::Pass: return "pass";
        case ValidationReport::Status::Fail: return "fail";
        case ValidationReport::Status::Unconfirmed: return "unconfirmed";
        case ValidationReport::Status::NotApplicable: return "not-applicable";
    }
    return "not-applicable";
}

ValidationReport::Status status_from_name(const std::string& s, const std::string& where) {
    if (s == "pass") return ValidationReport::Status::Pass;
    if (s == "fail") return ValidationReport::Status::Fail;
    if (s == "unconfirmed") return ValidationReport::Status::Unconfirmed;
    if (s == "not-applicable") return ValidationReport::Status::NotApplicable;
    fail(where, "unknown validation status \"" + s + "\"");
}

// --- log-scale quantities ----------------------------------------------------

ordered_json logscale_to_json(const LogScaleRational& v) {
    ordered_json j;
    if (v.is_value()) {
        j["form"] = "value";
        j["value"] = rational_json(v.exact_value());
    } else {
        j["form"] = "exp";
        j["log_exponent"] = rational_json(v.log_exponent());
    }
    j["approx"] = v.approx_decimal();
    return j;
}

LogScaleRational logscale_from_json(const ordered_json& j, const std::string& where) {
    const std::string form = string_field(require(j, "form", where), where + ".form");
    if (form == "value")
        return LogScaleRational::value(rational_field(require(j, "value", where), where + ".value"));
    if (form == "exp")
        return LogScaleRational::exp_of(
            rational_field(require(j, "log_exponent", where), where + ".log_exponent"));
    fail(where, "form must be \"value\" or \"exp\", got \"" + form + "\"");
}

ordered_json interval_to_json(const RationalInterval& iv) {
    return ordered_json::array({rational_json(iv.lo), rational_json(iv.hi)});
}

RationalInterval interval_from_json(const ordered_json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) fail(where, "expected a two-element [lo, hi] array");
    RationalInterval iv{rational_field(j[0], where + "[0]"), rational_field(j[1], where + "[1]")};
    if (iv.lo > iv.hi) fail(where, "interval endpoints are out of order");
    return iv;
}

ordered_json enclosure_to_json(const EigenvalueEnclosure& e) {
    ordered_json j;
    j["kind"] = kind_name(e.kind);
    j["real"] = interval_to_json(e.real_interval);
    j["imag"] = interval_to_json(e.imag_interval);
    j["index"] = e.index;
    j["algebraic_multiplicity"] = e.alg_multiplicity;
    return j;
}

EigenvalueEnclosure enclosure_from_json(const ordered_json& j, const std::string& where) {
    EigenvalueEnclosure e;
    e.kind = kind_from_name(string_field(require(j, "kind", where), where + ".kind"), where);
    e.real_interval = interval_from_json(require(j, "real", where), where + ".real");
    e.imag_interval = interval_from_json(require(j, "imag", where), where + ".imag");
    e.index = uint_field<unsigned>(require(j, "index", where), where + ".index");
    e.alg_multiplicity = uint_field<unsigned>(require(j, "algebraic_multiplicity", where),
                                              where + ".algebraic_multiplicity");
    return e;
}

// --- certificate --------------------------------------------------------------

ordered_json certificate_to_json(const EscapeCertificate& c) {
    ordered_json j;
    j["mode"] = mode_name(c.mode);
    j["dimension"] = c.dimension;
    j["coefficient_bits"] = static_cast<std::uint64_t>(c.coefficient_bits);
    j["total_bound"] = logscale_to_json(c.total_bound);
    j["complex_hull_time"] = logscale_to_json(c.complex_hull_time);
    j["real_bound"] = logscale_to_json(c.real_bound);
    j["ratio_bound"] = logscale_to_json(c.ratio_bound);
    j["ratio_source"] = ratio_source_name(c.ratio_source);
    ordered_json per = ordered_json::array();
    for (const PerEigenvalueBound& p : c.per_eigenvalue) {
        ordered_json e;
        e["eigenvalue"] = enclosure_to_json(p.eigenvalue);
        e["case"] = case_name(p.t_case);
        e["t_lambda"] = logscale_to_json(p.t_lambda);
        per.push_back(std::move(e));
    }
    j["per_eigenvalue"] = std::move(per);
    ordered_json sc;
    sc["diagonalizable"] = c.special_case.diagonalizable;
    sc["invertible"] = c.special_case.invertible;
    j["special_case"] = std::move(sc);
    if (c.special_case_bound) j["special_case_bound"] = logscale_to_json(*c.special_case_bound);
    j["closed_form_bound"] = logscale_to_json(c.closed_form_bound);
    j["extra_steps"] = c.extra_steps;
    return j;
}

EscapeCertificate certificate_from_json(const ordered_json& j, const std::string& where) {
    EscapeCertificate c;
    c.mode = mode_from_name(string_field(require(j, "mode", where), where + ".mode"), where);
    c.dimension = uint_field<unsigned>(require(j, "dimension", where), where + ".dimension");
    c.coefficient_bits =
        uint_field<std::size_t>(require(j, "coefficient_bits", where), where + ".coefficient_bits");
    c.total_bound = logscale_from_json(require(j, "total_bound", where), where + ".total_bound");
    c.complex_hull_time =
        logscale_from_json(require(j, "complex_hull_time", where), where + ".complex_hull_time");
    c.real_bound = logscale_from_json(require(j, "real_bound", where), where + ".real_bound");
    c.ratio_bound = logscale_from_json(require(j, "ratio_bound", where), where + ".ratio_bound");
    c.ratio_source = ratio_source_from_name(
        string_field(require(j, "ratio_source", where), where + ".ratio_source"), where);
    const ordered_json& per = require(j, "per_eigenvalue", where);
    if (!per.is_array()) fail(where + ".per_eigenvalue", "expected an array");
    for (std::size_t i = 0; i < per.size(); ++i) {
        const std::string pw = where + ".per_eigenvalue[" + std::to_string(i) + "]";
        PerEigenvalueBound p;
        p.eigenvalue = enclosure_from_json(require(per[i], "eigenvalue", pw), pw + ".eigenvalue");
        p.t_case = case_from_name(string_field(require(per[i], "case", pw), pw + ".case"), pw);
        p.t_lambda = logscale_from_json(require(per[i], "t_lambda", pw), pw + ".t_lambda");
        c.per_eigenvalue.push_back(std::move(p));
    }
    const ordered_json& sc = require(j, "special_case", where);
    c.special_case.diagonalizable =
        bool_field(require(sc, "diagonalizable", where + ".special_case"),
                   where + ".special_case.diagonalizable");
    c.special_case.invertible = bool_field(require(sc, "invertible", where + ".special_case"),
                                           where + ".special_case.invertible");
    if (const auto it = j.find("special_case_bound"); it != j.end())
        c.special_case_bound = logscale_from_json(*it, where + ".special_case_bound");
    c.closed_form_bound =
        logscale_from_json(require(j, "closed_form_bound", where), where + ".closed_form_bound");
    c.extra_steps = uint_field<unsigned>(require(j, "extra_steps", where), where + ".extra_steps");
    return c;
}

// --- decision, runs, validation ----------------------------------------------

ordered_json decision_to_json(const Decision& d) {
    ordered_json j;
    j["verdict"] = verdict_name(d.verdict);
    if (d.witness) j["witness"] = vector_to_json(*d.witness);
    return j;
}

Decision decision_from_json(const ordered_json& j, const std::string& where) {
    Decision d;
    d.verdict =
        verdict_from_name(string_field(require(j, "verdict", where), where + ".verdict"), where);
    if (const auto it = j.find("witness"); it != j.end())
        d.witness = vector_from_json(*it, where + ".witness");
    return d;
}

ordered_json run_to_json(const RunSummary& r) {
    ordered_json j;
    j["initial_point"] = vector_to_json(r.initial_point);
    j["escaped"] = r.escaped;
    if (r.escape_time) j["escape_time"] = rational_json(*r.escape_time);
    j["horizon"] = rational_json(r.horizon);
    j["sample_count"] = static_cast<std::uint64_t>(r.sample_count);
    return j;
}

RunSummary run_from_json(const ordered_json& j, const std::string& where) {
    RunSummary r;
    r.initial_point = vector_from_json(require(j, "initial_point", where), where + ".initial_point");
    r.escaped = bool_field(require(j, "escaped", where), where + ".escaped");
    if (const auto it = j.find("escape_time"); it != j.end())
        r.escape_time = rational_field(*it, where + ".escape_time");
    r.horizon = rational_field(require(j, "horizon", where), where + ".horizon");
    r.sample_count = uint_field<std::size_t>(require(j, "sample_count", where), where + ".sample_count");
    return r;
}

ordered_json validation_to_json(const ValidationSummary& v) {
    ordered_json j;
    j["status"] = status_name(v.status);
    j["detail"] = v.detail;
    j["bound_within_cap"] = v.bound_within_cap;
    j["horizon"] = rational_json(v.horizon);
    j["total_bound"] = logscale_to_json(v.total_bound);
    if (v.max_observed_escape) j["max_observed_escape"] = rational_json(*v.max_observed_escape);
    if (v.slack_ratio) j["slack_ratio"] = rational_json(*v.slack_ratio);
    ordered_json samples = ordered_json::array();
    for (const SampleValidation& s : v.samples) {
        ordered_json e;
        e["initial_point"] = vector_to_json(s.initial_point);
        e["escaped"] = s.escaped;
        if (s.escape_time) e["escape_time"] = rational_json(*s.escape_time);
        samples.push_back(std::move(e));
    }
    j["samples"] = std::move(samples);
    return j;
}

ValidationSummary validation_from_json(const ordered_json& j, const std::string& where) {
    ValidationSummary v;
    v.status = status_from_name(string_field(require(j, "status", where), where + ".status"), where);
    v.detail = string_field(require(j, "detail", where), where + ".detail");
    v.bound_within_cap =
        bool_field(require(j, "bound_within_cap", where), where + ".bound_within_cap");
    v.horizon = rational_field(require(j, "horizon", where), where + ".horizon");
    v.total_bound = logscale_from_json(require(j, "total_bound", where), where + ".total_bound");
    if (const auto it = j.find("max_observed_escape"); it != j.end())
        v.max_observed_escape = rational_field(*it, where + ".max_observed_escape");
    if (const auto it = j.find("slack_ratio"); it != j.end())
        v.slack_ratio = rational_field(*it, where + ".slack_ratio");
    const ordered_json& samples = require(j, "samples", where);
    if (!samples.is_array()) fail(where + ".samples", "expected an array");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const std::string sw = where + ".samples[" + std::to_string(i) + "]";
        SampleValidation s;
        s.initial_point =
            vector_from_json(require(samples[i], "initial_point", sw), sw + ".initial_point");
        s.escaped = bool_field(require(samples[i], "escaped", sw), sw + ".escaped");
        if (const auto it = samples[i].find("escape_time"); it != samples[i].end())
            s.escape_time = rational_field(*it, sw + ".escape_time");
        v.samples.push_back(std::move(s));
    }
    return v;
}

ordered_json parse_document(const std::string& text, const std::string& where) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(where, std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

// --- instance files ------------------------------------------------------------

Instance instance_from_json_text(const std::string& text) {
    const ordered_json j = parse_document(text, "instance");
    if (!j.is_object()) fail("instance", "top-level value must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "mode" && key != "A" && key != "a" && key != "B" && key != "c")
            fail("instance", "unknown field \"" + key + "\" (expected mode, A, a, B, c)");
    }

    Instance inst;
    inst.mode =
        mode_from_name(string_field(require(j, "mode", "instance"), "instance.mode"), "instance.mode");
    inst.a = matrix_from_json(require(j, "A", "instance"), "instance.A");
    if (inst.a.rows() == 0) fail("instance.A", "matrix must have at least one row");
    if (inst.a.rows() != inst.a.cols())
        fail("instance.A", "matrix must be square, got " + std::to_string(inst.a.rows()) + "x" +
                               std::to_string(inst.a.cols()));
    const std::size_t d = inst.a.rows();

    if (const auto it = j.find("a"); it != j.end()) {
        RatVector drift = vector_from_json(*it, "instance.a");
        if (drift.size() != d)
            fail("instance.a", "drift term has " + std::to_string(drift.size()) +
                                   " entries, expected " + std::to_string(d));
        inst.affine = std::move(drift);
    }

    inst.polytope.b = matrix_from_json(require(j, "B", "instance"), "instance.B");
    inst.polytope.c = vector_from_json(require(j, "c", "instance"), "instance.c");
    if (inst.polytope.b.rows() == 0)
        fail("instance.B", "constraint matrix must have at least one row");
    if (inst.polytope.b.cols() != d)
        fail("instance.B", "constraint matrix has " + std::to_string(inst.polytope.b.cols()) +
                               " columns, expected " + std::to_string(d));
    if (inst.polytope.c.size() != inst.polytope.b.rows())
        fail("instance.c", "right-hand side has " + std::to_string(inst.polytope.c.size()) +
                               " entries, expected " + std::to_string(inst.polytope.b.rows()));
    return inst;
}

std::string instance_to_json_text(const Instance& inst) {
    ordered_json j;
    j["mode"] = mode_name(inst.mode);
    j["A"] = matrix_to_json(inst.a);
    if (inst.affine) j["a"] = vector_to_json(*inst.affine);
    j["B"] = matrix_to_json(inst.polytope.b);
    j["c"] = vector_to_json(inst.polytope.c);
    return j.dump(2) + "\n";
}

// --- reports --------------------------------------------------------------------

RunSummary summarize(const TrajectoryRun& run) {
    RunSummary r;
    r.initial_point = run.initial_point;
    r.escape_time = run.escape_time;
    r.horizon = run.horizon;
    r.sample_count = run.samples.size();
    r.escaped = run.escape_time.has_value();
    return r;
}

ValidationSummary summarize(const ValidationReport& report) {
    ValidationSummary v;
    v.status = report.status;
    v.detail = report.detail;
    v.bound_within_cap = report.bound_within_cap;
    v.horizon = report.horizon;
    v.total_bound = report.total_bound;
    v.max_observed_escape = report.max_observed_escape;
    v.slack_ratio = report.slack_ratio;
    v.samples = report.samples;
    return v;
}

std::string report_to_json_text(const Report& report) {
    ordered_json j;
    j["tool_version"] = report.tool_version;
    j["command"] = report.command;
    j["input_digest"] = report.input_digest;
    if (!report.notes.empty()) {
        ordered_json notes = ordered_json::array();
        for (const std::string& n : report.notes) notes.push_back(n);
        j["notes"] = std::move(notes);
    }
    if (report.decision) j["decision"] = decision_to_json(*report.decision);
    if (report.certificate) j["certificate"] = certificate_to_json(*report.certificate);
    if (report.validation) j["validation"] = validation_to_json(*report.validation);
    if (!report.runs.empty()) {
        ordered_json runs = ordered_json::array();
        for (const RunSummary& r : report.runs) runs.push_back(run_to_json(r));
        j["runs"] = std::move(runs);
    }
    ordered_json timings;
    for (const auto& [phase, us] : report.timings_us) timings[phase] = us;
    j["timings"] = std::move(timings);
    return j.dump(2) + "\n";
}

Report report_from_json_text(const std::string& text) {
    const ordered_json j = parse_document(text, "report");
    if (!j.is_object()) fail("report", "top-level value must be a JSON object");
    Report r;
    r.tool_version = string_field(require(j, "tool_version", "report"), "report.tool_version");
    r.command = string_field(require(j, "command", "report"), "report.command");
    r.input_digest = string_field(require(j, "input_digest", "report"), "report.input_digest");
    if (const auto it = j.find("notes"); it != j.end()) {
        if (!it->is_array()) fail("report.notes", "expected an array of strings");
        for (std::size_t i = 0; i < it->size(); ++i)
            r.notes.push_back(
                string_field((*it)[i], "report.notes[" + std::to_string(i) + "]"));
    }
    if (const auto it = j.find("decision"); it != j.end())
        r.decision = decision_from_json(*it, "report.decision");
    if (const auto it = j.find("certificate"); it != j.end())
        r.certificate = certificate_from_json(*it, "report.certificate");
    if (const auto it = j.find("validation"); it != j.end())
        r.validation = validation_from_json(*it, "report.validation");
    if (const auto it = j.find("runs"); it != j.end()) {
        if (!it->is_array()) fail("report.runs", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i)
            r.runs.push_back(run_from_json((*it)[i], "report.runs[" + std::to_string(i) + "]"));
    }
    const ordered_json& timings = require(j, "timings", "report");
    if (!timings.is_object()) fail("report.timings", "expected an object");
    for (const auto& [phase, us] : timings.items()) {
        if (!us.is_number_integer() && !us.is_number_unsigned())
            fail("report.timings." + phase, "expected an integer microsecond count");
        r.timings_us.emplace_back(phase, us.get<std::int64_t>());
    }
    return r;
}

std::string certificate_to_json_text(const EscapeCertificate& cert) {
    return certificate_to_json(cert).dump(2) + "\n";
}

EscapeCertificate certificate_from_json_text(const std::string& text) {
    const ordered_json j = parse_document(text, "certificate");
    if (!j.is_object()) fail("certificate", "top-level value must be a JSON object");
    // Accept either a bare certificate document or a full report that
    // carries one, so `bound --format json` output can be fed back in.
    if (const auto it = j.find("certificate"); it != j.end())
        return certificate_from_json(*it, "report.certificate");
    return certificate_from_json(j, "certificate");
}

// --- auxiliary formats -----------------------------------------------------------

std::string input_digest(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (const char ch : bytes) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void write_trace_csv(std::ostream& out, const TrajectoryRun& run) {
    const std::size_t d = run.initial_point.size();
    out << 't';
    for (std::size_t i = 1; i <= d; ++i) out << ",x" << i;
    out << ",inside\n";
    for (const TrajectorySample& s : run.samples) {
        out << to_decimal_string(s.time, 17);
        for (std::size_t i = 0; i < d; ++i) out << ',' << to_decimal_string(s.point[i], 17);
        out << ',' << (s.inside ? 1 : 0) << '\n';
    }
}

}  // namespace polyescape
