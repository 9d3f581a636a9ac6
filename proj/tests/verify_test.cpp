#include <gtest/gtest.h>

#include <sstream>

#include "common/errors.hpp"
#include "verify/job.hpp"
#include "verify/tex.hpp"
#include "verify/verify.hpp"
#include "support/print.hpp"

using namespace sgeo;
using namespace sgeo::verify;

namespace {

const Errata& shipped() {
    static const Errata e = load_errata(default_errata_path());
    return e;
}

const VerifyReport& full_report() {
    static const VerifyReport r = run_verify({"all", 20}, shipped());
    return r;
}

std::vector<std::pair<std::string, std::string>> records(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        out.emplace_back(line.substr(0, eq), line.substr(eq + 1));
    }
    return out;
}

const char* kIdentityJob = R"(# identity frame
[model]
name = custom

[vierbein]
E_t_t = 1
E_t_theta = 0
E_t_thetabar = 0
E_theta_t = 0
E_theta_theta = 1
E_theta_thetabar = 0
E_thetabar_t = 0
E_thetabar_theta = 0
E_thetabar_thetabar = 1

[options]
format = records
)";

}  // namespace

// ---------------------------------------------------------------- errata

TEST(Errata, ParsesFirstColumn) {
    Errata e = parse_errata(
        "# title\n\n| id | component | note |\n|----|----|----|\n| a.b[t,t] | x | y |\n| `c.d` | x | y |\ntext | no\n");
    EXPECT_EQ(e.ids, (std::set<std::string>{"a.b[t,t]", "c.d"}));
}

TEST(Errata, ShippedListIsNonEmpty) {
    EXPECT_TRUE(shipped().contains("qpi.regularized.inverse"));
    EXPECT_TRUE(shipped().contains("cpi.static.metric.upper[t,t]"));
    EXPECT_FALSE(shipped().contains("id"));
}

TEST(Errata, MissingFile) { EXPECT_THROW(load_errata("/nonexistent/errata.md"), Error); }

// ---------------------------------------------------------------- verify

TEST(Verify, EverySuiteExitsZero) {
    for (const char* s : {"appendixE", "appendixF", "appendixG", "metric", "all"}) {
        VerifyReport r = run_verify({s, 20}, shipped());
        EXPECT_EQ(r.exit_code(), 0) << s;
        EXPECT_EQ(r.count(Status::Unledgered), 0) << s;
        EXPECT_FALSE(r.fixtures.empty()) << s;
    }
}

TEST(Verify, NoStaleErrata) {
    EXPECT_TRUE(full_report().stale.empty());
    // every listed id is a confirmed misprint in the report
    std::set<std::string> typo;
    for (const auto& f : full_report().fixtures)
        if (f.status == Status::Typo) typo.insert(f.fixture->id);
    EXPECT_EQ(typo, shipped().ids);
}

TEST(Verify, MismatchesCarryPrintedTypoVerdicts) {
    for (const auto& f : full_report().fixtures) {
        if (f.status != Status::Typo) continue;
        for (const auto& b : f.branches) {
            if (b.equal) continue;
            ASSERT_TRUE(b.ledger) << f.fixture->id;
            EXPECT_EQ(b.ledger->verdict, oracle::Verdict::PrintedTypo) << f.fixture->id;
            EXPECT_EQ(b.ledger->computed_agrees, b.ledger->samples);
            EXPECT_EQ(b.ledger->printed_agrees, 0);
        }
    }
}

TEST(Verify, WithoutErrataMismatchesAreUnledgered) {
    VerifyReport r = run_verify({"appendixF", 5}, Errata{});
    EXPECT_GT(r.count(Status::Unledgered), 0);
    EXPECT_EQ(r.exit_code(), 1);
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_verify({"nope", 5}, shipped()), std::invalid_argument); }

TEST(Verify, RenderingIsDeterministic) {
    VerifyReport again = run_verify({"all", 20}, shipped());
    EXPECT_EQ(render_records(again), render_records(full_report()));
    EXPECT_EQ(render_text(again), render_text(full_report()));
    EXPECT_EQ(render_tex(again), render_tex(full_report()));
}

TEST(Verify, RecordsRoundTrip) {
    for (const auto& [key, value] : records(render_records(full_report()))) {
        bool expr = key.size() > 9 && (key.ends_with(".printed") || key.ends_with(".computed"));
        if (!expr) continue;
        SuperFunction f = parse_super(value);
        EXPECT_EQ(f.str(), value) << key;
    }
}

TEST(Tex, Markup) {
    EXPECT_EQ(tex_symbol("pi2", 1), "{\\pi_{2}}'");
    std::string t = tex_expr("pi2*thetabar*theta");
    EXPECT_NE(t.find("\\bar\\theta"), std::string::npos) << t;
}

// ---------------------------------------------------------------- jobs

TEST(Job, ParseOptions) {
    EXPECT_EQ(parse_model("qpi"), JobModel::Qpi);
    EXPECT_EQ(parse_format("tex"), Format::Tex);
    EXPECT_EQ(parse_pi6_form("eq72"), Pi6Form::Interpolating);
    EXPECT_EQ(parse_pi6_form("eq69"), Pi6Form::Regularized);
    EXPECT_EQ(parse_sign("-"), -1);
    EXPECT_EQ(parse_sign("+1"), 1);
    EXPECT_THROW(parse_sign("2"), Error);
    EXPECT_THROW(parse_model("gr"), Error);
}

TEST(Job, ParseErrorsCarryLocation) {
    try {
        parse_job("[model]\nname = custom\n[vierbein]\nE_t_t = 1 +\n", "frame.job");
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("frame.job:4"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_job("[model]\nname = custom\n[vierbein]\nE_t_t = 1\n"), Error);  // eight entries missing
}

TEST(Job, IdentityFrameIsFlat) {
    JobSpec job = parse_job(kIdentityJob);
    EXPECT_EQ(job.model, JobModel::Custom);
    for (const auto& [key, value] : records(run_compute(job))) {
        if (key.starts_with("christoffel") || key.starts_with("ricci") || key == "scalar")
            EXPECT_EQ(value, "0") << key;
    }
}

TEST(Job, ComputeRecordsRoundTrip) {
    JobSpec job;
    job.model = JobModel::Qpi;
    job.format = Format::Records;
    auto rec = records(run_compute(job));
    ASSERT_GT(rec.size(), 40u);
    for (const auto& [key, value] : rec) {
        if (key == "model") continue;
        EXPECT_EQ(parse_super(value).str(), value) << key;
    }
}

TEST(Job, BoundClassicalScalar) {
    JobSpec job;
    job.format = Format::Records;
    for (const char* b : {"pi1=6", "pi2=2", "pi3=3", "pi4=1"}) add_binding(job, b);
    bool seen = false;
    for (const auto& [key, value] : records(run_compute(job)))
        if (key == "scalar") {
            EXPECT_EQ(value, "-1/2");
            seen = true;
        }
    EXPECT_TRUE(seen);
}

TEST(Job, QuantumLimitIsSingular) {
    JobSpec job;
    job.model = JobModel::Qpi;
    add_binding(job, "eps=0");
    try {
        run_compute(job);
        FAIL();
    } catch (const SingularBlockB& e) {
        EXPECT_NE(std::string(e.what()).find("eps"), std::string::npos);
    }
}

TEST(Job, FlatnessVerdicts) {
    JobSpec cpi;
    FlatnessOutcome c = run_flatness(cpi);
    EXPECT_TRUE(c.ok);
    EXPECT_NE(c.report.find("FLAT"), std::string::npos);
    cpi.time_dependent = true;
    EXPECT_TRUE(run_flatness(cpi).ok);
    JobSpec qpi;
    qpi.model = JobModel::Qpi;
    FlatnessOutcome q = run_flatness(qpi);
    EXPECT_TRUE(q.ok);
    EXPECT_NE(q.report.find("OBSTRUCTED"), std::string::npos);
}
