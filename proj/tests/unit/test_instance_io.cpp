#include "polyescape/instance_io.hpp"

#include "polyescape/bounds.hpp"
#include "polyescape/simulate.hpp"

#include "doctest.h"

#include <sstream>
#include <string>

using namespace polyescape;

namespace {

Instance growth_instance() {
    Instance inst;
    inst.mode = Mode::Continuous;
    inst.a = RatMatrix{{Rational(1, 8)}};
    inst.polytope.b = RatMatrix{{Rational(1)}, {Rational(-1)}};
    inst.polytope.c = RatVector{Rational(2), Rational(-1)};
    return inst;
}

}  // namespace

TEST_CASE("instance documents parse exactly and round-trip byte-identically") {
    const std::string doc = R"({
      "mode": "continuous",
      "A": [["-0.125"]],
      "B": [["1"], ["-1"]],
      "c": ["2", "-1"]
    })";
    const Instance inst = instance_from_json_text(doc);
    CHECK(inst.mode == Mode::Continuous);
    CHECK(inst.a.at(0, 0) == Rational(-1, 8));
    CHECK(inst.polytope.b.rows() == 2);
    CHECK(inst.polytope.c.size() == 2);
    CHECK_FALSE(inst.affine.has_value());

    const std::string ser = instance_to_json_text(inst);
    const Instance reparsed = instance_from_json_text(ser);
    CHECK(reparsed.a == inst.a);
    CHECK(reparsed.polytope.b == inst.polytope.b);
    CHECK(reparsed.polytope.c == inst.polytope.c);
    CHECK(instance_to_json_text(reparsed) == ser);
}

TEST_CASE("decimal literals convert exactly; the drift term is preserved") {
    const Instance dec = instance_from_json_text(
        R"({"mode":"discrete","A":[["1.01"]],"B":[["1"],["-1"]],"c":["2","0"]})");
    CHECK(dec.mode == Mode::Discrete);
    CHECK(dec.a.at(0, 0) == Rational(101, 100));

    const Instance aff = instance_from_json_text(
        R"({"mode":"continuous","A":[["-1"]],"a":["1"],"B":[["1"],["-1"]],"c":["3","-2"]})");
    REQUIRE(aff.affine.has_value());
    CHECK((*aff.affine)[0] == 1);
    CHECK(instance_from_json_text(instance_to_json_text(aff)).affine.has_value());
}

TEST_CASE("malformed instance documents raise diagnostics") {
    const auto rejects = [](const std::string& text) {
        CHECK_THROWS_AS((void)instance_from_json_text(text), ParseError);
    };
    rejects("{");  // truncated JSON
    rejects(R"({"mode":"continuous","A":[["1","0"]],"B":[["1"]],"c":["1"]})");   // non-square A
    rejects(R"({"mode":"continuous","A":[["1"]],"B":[["1","2"]],"c":["1"]})");   // B columns
    rejects(R"({"mode":"continuous","A":[["1"]],"B":[["1"]],"c":["1","2"]})");   // c length
    rejects(R"({"mode":"weird","A":[["1"]],"B":[["1"]],"c":["1"]})");            // bad mode
    rejects(R"({"mode":"continuous","A":[[1]],"B":[["1"]],"c":["1"]})");         // bare number
    rejects(R"({"mode":"continuous","A":[["1"]],"affine":["1"],"B":[["1"]],"c":["1"]})");
    rejects(R"({"mode":"continuous","A":[["1"]],"B":[["1"]],"c":["1/0"]})");     // zero denom
    rejects(R"({"A":[["1"]],"B":[["1"]],"c":["1"]})");                           // missing mode
}

TEST_CASE("decimal literals accept up to 64 fractional digits") {
    const std::string prefix = R"({"mode":"continuous","A":[[")";
    const std::string ok = "0." + std::string(64, '3');
    const Instance accepted = instance_from_json_text(
        prefix + ok + R"("]],"B":[["1"],["-1"]],"c":["1","0"]})");
    CHECK(accepted.a.at(0, 0) > 0);

    const std::string toolong = "0." + std::string(65, '3');
    CHECK_THROWS_AS((void)instance_from_json_text(
                        prefix + toolong + R"("]],"B":[["1"],["-1"]],"c":["1","0"]})"),
                    ParseError);
}

TEST_CASE("full reports round-trip byte-identically") {
    const Instance ex = growth_instance();
    const EscapeCertificate cert = continuous_escape_bound(ex);
    SamplingPlan plan;
    plan.random_interior_count = 2;
    plan.seed = 42;
    const ValidationReport vr = validate_certificate(ex, cert, plan, Rational(1000000));
    const TrajectoryRun run = escape_time(ex, RatVector{Rational(1)}, Rational(100));

    Report rep;
    rep.tool_version = "0.1.0";
    rep.command = "validate";
    rep.input_digest = input_digest("example");
    rep.notes.push_back("example note");
    rep.decision = decide(ex);
    rep.certificate = cert;
    rep.validation = summarize(vr);
    rep.runs.push_back(summarize(run));
    rep.timings_us = {{"parse", 120}, {"decide", 340}, {"total", 9999}};

    const std::string text1 = report_to_json_text(rep);
    const Report back = report_from_json_text(text1);
    CHECK(report_to_json_text(back) == text1);

    REQUIRE(back.timings_us.size() == 3);
    CHECK(back.timings_us[2].second == 9999);
    REQUIRE(back.certificate.has_value());
    CHECK(exactly_equal(back.certificate->total_bound, cert.total_bound));
    CHECK(back.certificate->per_eigenvalue.size() == cert.per_eigenvalue.size());
    REQUIRE(back.validation.has_value());
    CHECK(back.validation->status == vr.status);
    REQUIRE(back.runs.size() == 1);
    CHECK(back.runs[0].escaped);
    CHECK(back.decision->verdict == Verdict::AllEscape);
    CHECK(back.notes == rep.notes);
}

TEST_CASE("certificate documents parse bare or wrapped in a report") {
    const EscapeCertificate cert = continuous_escape_bound(growth_instance());
    const std::string cert_doc = certificate_to_json_text(cert);
    const EscapeCertificate bare = certificate_from_json_text(cert_doc);
    CHECK(certificate_to_json_text(bare) == cert_doc);

    Report rep;
    rep.tool_version = "0.1.0";
    rep.command = "bound";
    rep.input_digest = input_digest("x");
    rep.certificate = cert;
    rep.timings_us = {{"total", 1}};
    const EscapeCertificate wrapped = certificate_from_json_text(report_to_json_text(rep));
    CHECK(exactly_equal(wrapped.total_bound, cert.total_bound));
    CHECK(wrapped.dimension == cert.dimension);
    CHECK(wrapped.coefficient_bits == cert.coefficient_bits);

    // a document with neither shape is rejected
    CHECK_THROWS_AS((void)certificate_from_json_text(R"({"hello": 3})"), ParseError);
}

TEST_CASE("trapped decisions carry their witness through serialization") {
    Instance trapped = growth_instance();
    trapped.a = RatMatrix{{Rational(0)}};
    Report rep;
    rep.tool_version = "0.1.0";
    rep.command = "decide";
    rep.input_digest = input_digest("x");
    rep.decision = decide(trapped);
    rep.timings_us = {{"total", 1}};
    REQUIRE(rep.decision->verdict == Verdict::TrappedPointExists);
    REQUIRE(rep.decision->witness.has_value());

    const std::string text = report_to_json_text(rep);
    CHECK(report_to_json_text(report_from_json_text(text)) == text);
    const Report back = report_from_json_text(text);
    REQUIRE(back.decision->witness.has_value());
    CHECK((*back.decision->witness)[0] == (*rep.decision->witness)[0]);
}

TEST_CASE("input digest is stable, discriminating, and pinned") {
    CHECK(input_digest("abc") == input_digest("abc"));
    CHECK(input_digest("abc") != input_digest("abd"));
    // FNV-1a offset basis for the empty string
    CHECK(input_digest("") == std::string("fnv1a64:cbf29ce484222325"));
}

TEST_CASE("trace CSV has the documented header and marks the exit row") {
    const TrajectoryRun run =
        escape_time(growth_instance(), RatVector{Rational(1)}, Rational(100));
    std::ostringstream csv;
    write_trace_csv(csv, run);
    const std::string text = csv.str();
    CHECK(text.rfind("t,x1,inside\n", 0) == 0);
    // last row is the certified exit sample, flagged 0
    const std::string last = text.substr(text.rfind('\n', text.size() - 2) + 1);
    CHECK(last.find(",0\n") != std::string::npos);

    // a multi-coordinate run widens the header
    Instance rot;
    rot.a = RatMatrix{{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}};
    rot.polytope.b = RatMatrix{{Rational(1), Rational(0)},
                               {Rational(-1), Rational(0)},
                               {Rational(0), Rational(1)},
                               {Rational(0), Rational(-1)}};
    rot.polytope.c = RatVector{Rational(2), Rational(-1), Rational(2), Rational(-1)};
    const TrajectoryRun rrun = escape_time(rot, RatVector{Rational(1), Rational(1)}, Rational(10));
    std::ostringstream csv2;
    write_trace_csv(csv2, rrun);
    CHECK(csv2.str().rfind("t,x1,x2,inside\n", 0) == 0);
}
