#pragma once

#include "polyescape/bounds.hpp"
#include "polyescape/decide.hpp"
#include "polyescape/rational.hpp"
#include "polyescape/simulate.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyescape {

// ---------------------------------------------------------------------------
// Instance files
// ---------------------------------------------------------------------------
//
// A single JSON document:
//
//   {
//     "mode": "continuous" | "discrete",
//     "A":    [["0", "-1"], ["1", "0"]],          d x d matrix
//     "a":    ["0", "1/2"],                        optional drift term, size d
//     "B":    [["1", "0"], ["-1", "0"], ...],      n x d constraint matrix
//     "c":    ["2", "-1", ...]                     n right-hand sides
//   }
//
// Every number is a string: "p", "-p", "p/q", or a decimal literal with at
// most 64 fractional digits, converted exactly (e.g. "1.01" -> 101/100).
// Strings avoid the silent corruption binary floating-point JSON numbers
// would introduce.

// Parse an instance document; throws ParseError with a diagnostic on
// malformed JSON, bad rational literals, or inconsistent dimensions.
Instance instance_from_json_text(const std::string& text);

// Serialize an instance to the same schema (2-space indent, keys in the
// documented order, exact "p/q" strings). parse(serialize(x)) == x.
std::string instance_to_json_text(const Instance& inst);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

// Per-run summary carried in reports; full per-sample traces are emitted as
// CSV (write_trace_csv), not embedded in JSON.
struct RunSummary {
    RatVector initial_point;
    std::optional<Rational> escape_time;
    Rational horizon;
    std::size_t sample_count = 0;
    bool escaped = false;
};

// Validation outcome carried in reports (summary of ValidationReport; the
// heavyweight runs live in CSV traces).
struct ValidationSummary {
    ValidationReport::Status status = ValidationReport::Status::NotApplicable;
    std::string detail;
    bool bound_within_cap = false;
    Rational horizon;
    LogScaleRational total_bound;
    std::optional<Rational> max_observed_escape;
    std::optional<Rational> slack_ratio;
    std::vector<SampleValidation> samples;
};

RunSummary summarize(const TrajectoryRun& run);
ValidationSummary summarize(const ValidationReport& report);

// The machine-readable result of one CLI invocation. JSON serialization is
// deterministic: identical contents produce byte-identical text, and
// serialize -> parse -> serialize is byte-identical.
struct Report {
    std::string tool_version;
    std::string command;
    std::string input_digest;
    std::vector<std::string> notes;  // e.g. the affine-embedding notice

    std::optional<Decision> decision;
    std::optional<EscapeCertificate> certificate;
    std::optional<ValidationSummary> validation;
    std::vector<RunSummary> runs;

    // Wall-clock phase timings in microseconds, in execution order. The
    // only report block allowed to differ between identical invocations.
    std::vector<std::pair<std::string, std::int64_t>> timings_us;
};

std::string report_to_json_text(const Report& report);
Report report_from_json_text(const std::string& text);

// Stand-alone certificate document (the "certificate" block of a report),
// losslessly round-trippable so externally supplied certificates can be
// re-validated.
std::string certificate_to_json_text(const EscapeCertificate& cert);
EscapeCertificate certificate_from_json_text(const std::string& text);

// ---------------------------------------------------------------------------
// Auxiliary formats
// ---------------------------------------------------------------------------

// FNV-1a (64-bit) content digest of the raw input bytes, rendered as
// "fnv1a64:<16 hex digits>".
std::string input_digest(std::string_view bytes);

// CSV trace: header "t,x1,...,xd,inside", one row per recorded sample in
// nondecreasing time order. Times and coordinates are decimal renderings
// (17 significant digits); inside is 0/1.
void write_trace_csv(std::ostream& out, const TrajectoryRun& run);

}  // namespace polyescape
