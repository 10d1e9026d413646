// polyescape: exact escape analysis for linear dynamics on rational polytopes.
//
// Subcommands:
//   decide    classify the instance (every-trajectory-escapes or trapped point)
//   bound     assemble a certified uniform escape-time bound
//   simulate  run high-precision trajectories and report first certified exits
//   validate  cross-check a certificate against simulated escape times
//
// Exit codes (stable contract):
//   0  success: AllEscape (decide/bound), runs consistent (validate), simulate done
//   1  decide: a trapped point exists (witness printed)
//   2  decide/simulate: degenerate polytope (empty or unbounded)
//   3  malformed input: file, JSON, flags, or an initial point outside P
//   4  bound/validate: precondition failed (instance is not AllEscape)
//   5  bound/validate: certification failure at the working precision
//   6  validate: a sampled trajectory outlasted a simulable bound

#include "polyescape/bounds.hpp"
#include "polyescape/decide.hpp"
#include "polyescape/instance_io.hpp"
#include "polyescape/lp.hpp"
#include "polyescape/rational.hpp"
#include "polyescape/simulate.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace polyescape;

constexpr const char* kToolVersion = "0.1.0";

constexpr int kExitAllEscape = 0;
constexpr int kExitTrapped = 1;
constexpr int kExitDegeneratePolytope = 2;
constexpr int kExitInputError = 3;
constexpr int kExitPreconditionFailed = 4;
constexpr int kExitCertificationFailure = 5;
constexpr int kExitValidationFailure = 6;
constexpr int kExitInternalError = 70;

class PhaseTimer {
public:
    std::int64_t take_us() {
        const auto now = std::chrono::steady_clock::now();
        const auto us = std::chrono::duration_cast<std::chrono::microseconds>(now - last_).count();
        last_ = now;
        return us;
    }
    std::int64_t since_start_us() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration_cast<std::chrono::microseconds>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
    std::chrono::steady_clock::time_point last_ = start_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw ParseError("I/O error while reading: " + path);
    return std::move(buf).str();
}

Rational positive_rational_flag(const std::string& text, const std::string& flag) {
    Rational value;
    try {
        value = parse_rational(text);
    } catch (const ParseError& e) {
        throw ParseError(flag + ": " + e.what());
    }
    if (value <= 0) throw ParseError(flag + " must be positive, got " + text);
    return value;
}

RatVector parse_point(const std::string& text) {
    std::vector<Rational> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string piece =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            entries.push_back(parse_rational(piece));
        } catch (const ParseError& e) {
            throw ParseError(std::string("--x0: ") + e.what());
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return RatVector(std::move(entries));
}

bool has_nonzero_drift(const Instance& inst) {
    return inst.affine.has_value() && !inst.affine->is_zero();
}

// ---------------------------------------------------------------------------
// Human-readable rendering
// ---------------------------------------------------------------------------

std::string point_text(const RatVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

std::string approx(const Rational& q) { return to_decimal_string(q, 12); }

std::string enclosure_text(const EigenvalueEnclosure& e) {
    std::string name;
    switch (e.kind) {
        case EigenvalueKind::Zero: name = "zero"; break;
        case EigenvalueKind::PositiveReal: name = "positive"; break;
        case EigenvalueKind::NegativeReal: name = "negative"; break;
        case EigenvalueKind::ComplexPair: name = "complex pair"; break;
    }
    std::string loc;
    if (e.kind == EigenvalueKind::ComplexPair) {
        loc = approx(e.real_interval.midpoint()) + " +/- " + approx(e.imag_interval.midpoint()) + "i";
    } else if (e.real_interval.is_point()) {
        loc = approx(e.real_interval.lo);
    } else {
        loc = "[" + approx(e.real_interval.lo) + ", " + approx(e.real_interval.hi) + "]";
    }
    return name + " eigenvalue " + loc;
}

const char* case_label(TLambdaCase c) {
    switch (c) {
        case TLambdaCase::Negative: return "negative";
        case TLambdaCase::Zero: return "zero";
        case TLambdaCase::Positive: return "positive";
    }
    return "?";
}

const char* verdict_label(Verdict v) {
    switch (v) {
        case Verdict::AllEscape: return "all-escape";
        case Verdict::TrappedPointExists: return "trapped-point-exists";
        case Verdict::PolytopeEmpty: return "polytope-empty";
        case Verdict::PolytopeUnbounded: return "polytope-unbounded";
    }
    return "?";
}

const char* status_label(ValidationReport::Status s) {
    switch (s) {
        case ValidationReport::Status::Pass: return "pass";
        case ValidationReport::Status::Fail: return "fail";
        case ValidationReport::Status::Unconfirmed: return "unconfirmed";
        case ValidationReport::Status::NotApplicable: return "not-applicable";
    }
    return "?";
}

void render_certificate(std::ostream& out, const EscapeCertificate& c) {
    const bool discrete = c.mode == Mode::Discrete;
    out << "certificate:\n";
    out << "  mode: " << (discrete ? "discrete" : "continuous") << "\n";
    out << "  dimension: " << c.dimension << "\n";
    out << "  coefficient bits: " << c.coefficient_bits << "\n";
    out << "  total bound " << (discrete ? "(iterations N)" : "(time T)") << ": "
        << c.total_bound.approx_decimal() << "\n";
    out << "  complex hull time: " << c.complex_hull_time.approx_decimal() << "\n";
    out << "  real-eigenvalue bound: " << c.real_bound.approx_decimal() << "\n";
    out << "  ratio C/eps: " << c.ratio_bound.approx_decimal() << " (closed-form formula)\n";
    if (!c.per_eigenvalue.empty()) {
        out << "  per-eigenvalue bounds" << (discrete ? " (for log lambda)" : "") << ":\n";
        for (const PerEigenvalueBound& p : c.per_eigenvalue) {
            out << "    - " << enclosure_text(p.eigenvalue) << ", index " << p.eigenvalue.index
                << ", case " << case_label(p.t_case) << ", t = " << p.t_lambda.approx_decimal()
                << "\n";
        }
    }
    if (c.special_case.any()) {
        out << "  special case:";
        if (c.special_case.diagonalizable) out << " diagonalizable";
        if (c.special_case.invertible) out << " invertible";
        if (c.special_case_bound)
            out << "; sharper bound " << c.special_case_bound->approx_decimal();
        out << "\n";
    }
    out << "  closed-form ceiling: " << c.closed_form_bound.approx_decimal() << "\n";
    if (discrete) out << "  trailing extra steps: " << c.extra_steps << "\n";
}

void render_run(std::ostream& out, std::size_t number, const RunSummary& r, Mode mode) {
    out << "  " << number << ": start " << point_text(r.initial_point);
    if (r.escape_time) {
        if (mode == Mode::Discrete)
            out << ", exits at iteration " << to_string(*r.escape_time);
        else
            out << ", exits at t ~ " << approx(*r.escape_time);
    } else {
        out << ", no certified exit within horizon " << approx(r.horizon);
    }
    out << " (" << r.sample_count << " samples)\n";
}

void render_report(std::ostream& out, const Report& rep, const std::string& input_path,
                   Mode mode) {
    out << "command: " << rep.command << "\n";
    out << "input: " << input_path << " (" << rep.input_digest << ")\n";
    for (const std::string& n : rep.notes) out << "note: " << n << "\n";

    if (rep.decision) {
        out << "verdict: " << verdict_label(rep.decision->verdict) << "\n";
        if (rep.decision->witness) out << "trapped point: " << point_text(*rep.decision->witness)
                                       << " (exact; stays in P forever)\n";
        if (rep.decision->verdict == Verdict::PolytopeEmpty ||
            rep.decision->verdict == Verdict::PolytopeUnbounded)
            out << "escape analysis requires a compact polytope: nonempty, with every "
                   "coordinate bounded\n";
    }
    if (rep.certificate) render_certificate(out, *rep.certificate);
    if (!rep.runs.empty()) {
        out << "runs:\n";
        for (std::size_t i = 0; i < rep.runs.size(); ++i)
            render_run(out, i + 1, rep.runs[i], mode);
    }
    if (rep.validation) {
        const ValidationSummary& v = *rep.validation;
        out << "validation: " << status_label(v.status) << "\n";
        out << "  " << v.detail << "\n";
        out << "  certified bound: " << v.total_bound.approx_decimal() << "\n";
        out << "  bound within simulation cap: " << (v.bound_within_cap ? "yes" : "no") << "\n";
        out << "  simulated horizon: " << approx(v.horizon) << "\n";
        if (v.max_observed_escape)
            out << "  max observed escape: " << approx(*v.max_observed_escape) << "\n";
        if (v.slack_ratio)
            out << "  slack (bound / observed): " << approx(*v.slack_ratio) << "\n";
        out << "  samples (" << v.samples.size() << "):\n";
        for (std::size_t i = 0; i < v.samples.size(); ++i) {
            const SampleValidation& s = v.samples[i];
            out << "    " << i + 1 << ": start " << point_text(s.initial_point);
            if (s.escape_time) {
                if (mode == Mode::Discrete)
                    out << ", exits at iteration " << to_string(*s.escape_time);
                else
                    out << ", exits at t ~ " << approx(*s.escape_time);
            } else {
                out << (s.escaped ? ", exits" : ", no exit observed");
            }
            out << "\n";
        }
    }

    out << "timings:";
    for (std::size_t i = 0; i < rep.timings_us.size(); ++i) {
        const auto& [phase, us] = rep.timings_us[i];
        out << (i ? ", " : " ") << phase << " "
            << to_decimal_string(Rational(us, 1000), 4) << " ms";
    }
    out << "\n";
}

void emit(const Report& rep, const std::string& format, const std::string& input_path,
          Mode mode) {
    if (format == "json")
        std::cout << report_to_json_text(rep);
    else
        render_report(std::cout, rep, input_path, mode);
}

// ---------------------------------------------------------------------------
// Shared per-command plumbing
// ---------------------------------------------------------------------------

struct CommonFlags {
    std::string input_path;
    std::string format = "text";
};

Report start_report(const char* command, const std::string& input_text) {
    Report rep;
    rep.tool_version = kToolVersion;
    rep.command = command;
    rep.input_digest = input_digest(input_text);
    return rep;
}

void write_traces(const std::string& dir, const std::vector<TrajectoryRun>& runs, Report& rep) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < runs.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "trace_%03zu.csv", i);
        const std::filesystem::path path = std::filesystem::path(dir) / name;
        std::ofstream out(path);
        if (!out) throw ParseError("cannot write trace file: " + path.string());
        write_trace_csv(out, runs[i]);
        rep.notes.push_back(std::string("trace: ") + path.string());
    }
}

int decide_exit_code(Verdict v) {
    switch (v) {
        case Verdict::AllEscape: return kExitAllEscape;
        case Verdict::TrappedPointExists: return kExitTrapped;
        case Verdict::PolytopeEmpty:
        case Verdict::PolytopeUnbounded: return kExitDegeneratePolytope;
    }
    return kExitInternalError;
}

// Compute a certificate (or report why none exists). On a non-AllEscape
// verdict or a certification failure, emits the partial report and returns
// the exit code; on success leaves the certificate in the report.
int attach_certificate(Report& rep, const Instance& inst, unsigned precision,
                       const std::string& loaded_certificate_path, PhaseTimer& timer,
                       const CommonFlags& common) {
    const Decision decision = decide(inst);
    rep.decision = decision;
    rep.timings_us.emplace_back("decide", timer.take_us());

    if (decision.verdict != Verdict::AllEscape) {
        rep.timings_us.emplace_back("total", timer.since_start_us());
        emit(rep, common.format, common.input_path, inst.mode);
        std::cerr << "error: escape bound requires an all-escape instance; verdict is "
                  << verdict_label(decision.verdict) << "\n";
        return kExitPreconditionFailed;
    }

    if (has_nonzero_drift(inst))
        rep.notes.push_back(
            "affine drift absorbed by embedding the system one dimension up; the "
            "certificate reports the embedded dimension and bit size");

    if (!loaded_certificate_path.empty()) {
        EscapeCertificate cert = certificate_from_json_text(read_file(loaded_certificate_path));
        const unsigned expected_dim =
            static_cast<unsigned>(inst.a.rows()) + (has_nonzero_drift(inst) ? 1u : 0u);
        if (cert.mode != inst.mode || cert.dimension != expected_dim)
            throw ParseError("certificate does not match the instance (mode or dimension)");
        rep.certificate = std::move(cert);
        rep.notes.push_back("certificate loaded from " + loaded_certificate_path);
        rep.timings_us.emplace_back("load-certificate", timer.take_us());
        return kExitAllEscape;
    }

    try {
        rep.certificate = inst.mode == Mode::Continuous
                              ? continuous_escape_bound(inst, precision)
                              : discrete_escape_bound(inst, precision);
    } catch (const std::runtime_error& e) {
        rep.timings_us.emplace_back("total", timer.since_start_us());
        emit(rep, common.format, common.input_path, inst.mode);
        std::cerr << "error: certification failure: " << e.what() << "\n";
        return kExitCertificationFailure;
    } catch (const std::logic_error& e) {
        rep.timings_us.emplace_back("total", timer.since_start_us());
        emit(rep, common.format, common.input_path, inst.mode);
        std::cerr << "error: certification failure (internal invariant): " << e.what() << "\n";
        return kExitCertificationFailure;
    }
    rep.timings_us.emplace_back("bound", timer.take_us());
    return kExitAllEscape;
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

int run_decide(const CommonFlags& common) {
    PhaseTimer timer;
    const std::string text = read_file(common.input_path);
    const Instance inst = instance_from_json_text(text);
    Report rep = start_report("decide", text);
    rep.timings_us.emplace_back("parse", timer.take_us());

    const Decision decision = decide(inst);
    rep.decision = decision;
    rep.timings_us.emplace_back("decide", timer.take_us());
    rep.timings_us.emplace_back("total", timer.since_start_us());

    emit(rep, common.format, common.input_path, inst.mode);
    return decide_exit_code(decision.verdict);
}

int run_bound(const CommonFlags& common, unsigned precision) {
    PhaseTimer timer;
    const std::string text = read_file(common.input_path);
    const Instance inst = instance_from_json_text(text);
    Report rep = start_report("bound", text);
    rep.timings_us.emplace_back("parse", timer.take_us());

    const int code = attach_certificate(rep, inst, precision, "", timer, common);
    if (code != kExitAllEscape) return code;

    rep.timings_us.emplace_back("total", timer.since_start_us());
    emit(rep, common.format, common.input_path, inst.mode);
    return kExitAllEscape;
}

int run_simulate(const CommonFlags& common, unsigned precision, const std::string& x0_text,
                 const std::string& horizon_text, unsigned samples, std::uint64_t seed,
                 const std::string& trace_dir) {
    PhaseTimer timer;
    const std::string text = read_file(common.input_path);
    const Instance inst = instance_from_json_text(text);
    Report rep = start_report("simulate", text);
    rep.timings_us.emplace_back("parse", timer.take_us());

    const Rational horizon = positive_rational_flag(horizon_text, "--horizon");

    std::vector<RatVector> starts;
    if (!x0_text.empty()) {
        RatVector x0 = parse_point(x0_text);
        if (x0.size() != inst.a.rows())
            throw ParseError("--x0 has " + std::to_string(x0.size()) + " coordinates, expected " +
                             std::to_string(inst.a.rows()));
        if (!inst.polytope.contains(x0))
            throw ParseError("--x0 " + point_text(x0) + " violates the polytope constraints");
        starts.push_back(std::move(x0));
    } else {
        SamplingPlan plan;
        plan.include_vertices = true;
        plan.random_interior_count = samples;
        plan.seed = seed;
        const Compactness compactness = is_compact_nonempty(inst.polytope);
        if (compactness != Compactness::CompactNonempty) {
            std::cerr << "error: sampling initial points requires a compact polytope "
                         "(nonempty, every coordinate bounded); pass --x0 to simulate a "
                         "specific start\n";
            return kExitDegeneratePolytope;
        }
        starts = sample_points(inst.polytope, plan);
    }

    std::vector<TrajectoryRun> runs;
    runs.reserve(starts.size());
    for (const RatVector& x0 : starts) {
        TrajectoryRun run = escape_time(inst, x0, horizon, precision);
        rep.runs.push_back(summarize(run));
        runs.push_back(std::move(run));
    }
    rep.timings_us.emplace_back("simulate", timer.take_us());

    write_traces(trace_dir, runs, rep);
    rep.timings_us.emplace_back("total", timer.since_start_us());
    emit(rep, common.format, common.input_path, inst.mode);
    return kExitAllEscape;
}

int run_validate(const CommonFlags& common, unsigned precision, unsigned samples,
                 std::uint64_t seed, const std::string& sim_cap_text,
                 const std::string& certificate_path, const std::string& trace_dir) {
    PhaseTimer timer;
    const std::string text = read_file(common.input_path);
    const Instance inst = instance_from_json_text(text);
    Report rep = start_report("validate", text);
    rep.timings_us.emplace_back("parse", timer.take_us());

    const Rational sim_cap = positive_rational_flag(sim_cap_text, "--sim-cap");

    const int code = attach_certificate(rep, inst, precision, certificate_path, timer, common);
    if (code != kExitAllEscape) return code;

    SamplingPlan plan;
    plan.include_vertices = true;
    plan.random_interior_count = samples;
    plan.seed = seed;
    const ValidationReport vr =
        validate_certificate(inst, *rep.certificate, plan, sim_cap, precision);
    rep.validation = summarize(vr);
    for (const TrajectoryRun& run : vr.runs) rep.runs.push_back(summarize(run));
    rep.timings_us.emplace_back("validate", timer.take_us());

    write_traces(trace_dir, vr.runs, rep);
    rep.timings_us.emplace_back("total", timer.since_start_us());
    emit(rep, common.format, common.input_path, inst.mode);

    if (vr.status == ValidationReport::Status::Fail) {
        std::cerr << "error: validation failure: " << vr.detail << "\n";
        return kExitValidationFailure;
    }
    return kExitAllEscape;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact escape analysis for linear dynamics on rational polytopes"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    CommonFlags common;
    unsigned precision = 128;
    std::uint64_t seed = 0;
    std::string trace_dir;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", common.input_path, "instance JSON file")->required();
        sub->add_option("--format", common.format, "report format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };
    const auto add_precision = [&](CLI::App* sub) {
        sub->add_option("--precision", precision,
                        "working precision in bits for eigenvalue enclosures and "
                        "trajectory evaluation")
            ->capture_default_str();
    };

    CLI::App* cmd_decide =
        app.add_subcommand("decide", "decide whether every trajectory escapes the polytope");
    add_common(cmd_decide);

    CLI::App* cmd_bound =
        app.add_subcommand("bound", "assemble a certified uniform escape-time bound");
    add_common(cmd_bound);
    add_precision(cmd_bound);
    std::string ratio_source = "formula";
    cmd_bound->add_option("--ratio-source", ratio_source, "where the ratio C/eps comes from")
        ->check(CLI::IsMember({"formula"}))
        ->capture_default_str();

    CLI::App* cmd_simulate =
        app.add_subcommand("simulate", "simulate trajectories and report certified exits");
    add_common(cmd_simulate);
    add_precision(cmd_simulate);
    std::string x0_text;
    std::string horizon_text = "1000";
    unsigned sim_samples = 0;
    cmd_simulate->add_option("--x0", x0_text,
                             "initial point as comma-separated rationals (e.g. \"1,0,1/2\"); "
                             "defaults to the polytope's vertices plus --samples interior points");
    cmd_simulate->add_option("--horizon", horizon_text, "simulation horizon (time or iterations)")
        ->capture_default_str();
    cmd_simulate->add_option("--samples", sim_samples, "random interior starts when --x0 is absent")
        ->capture_default_str();
    cmd_simulate->add_option("--seed", seed, "seed for random interior starts")
        ->capture_default_str();
    cmd_simulate->add_option("--trace-dir", trace_dir, "write one CSV trace per run here");

    CLI::App* cmd_validate = app.add_subcommand(
        "validate", "cross-check an escape certificate against simulated trajectories");
    add_common(cmd_validate);
    add_precision(cmd_validate);
    unsigned val_samples = 10;
    std::string sim_cap_text = "1000000";
    std::string certificate_path;
    cmd_validate->add_option("--samples", val_samples, "random interior starts besides vertices")
        ->capture_default_str();
    cmd_validate->add_option("--seed", seed, "seed for random interior starts")
        ->capture_default_str();
    cmd_validate
        ->add_option("--sim-cap", sim_cap_text,
                     "largest horizon worth simulating; larger certified bounds downgrade "
                     "to escape-existence checking")
        ->capture_default_str();
    cmd_validate->add_option("--certificate", certificate_path,
                             "validate this certificate JSON (bare or inside a report) instead "
                             "of computing one");
    cmd_validate->add_option("--trace-dir", trace_dir, "write one CSV trace per run here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (cmd_decide->parsed()) return run_decide(common);
        if (cmd_bound->parsed()) return run_bound(common, precision);
        if (cmd_simulate->parsed())
            return run_simulate(common, precision, x0_text, horizon_text, sim_samples, seed,
                                trace_dir);
        if (cmd_validate->parsed())
            return run_validate(common, precision, val_samples, seed, sim_cap_text,
                                certificate_path, trace_dir);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
    return kExitInternalError;
}
