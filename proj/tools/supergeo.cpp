// supergeo: verify | compute | flatness
// Exit status: 0 pass, 1 unledgered mismatch (verify) or negative verdict (flatness), 2 error.

#include <CLI11.hpp>

#include <iostream>

#include "common/errors.hpp"
#include "verify/job.hpp"
#include "verify/verify.hpp"

using namespace sgeo;
using namespace sgeo::verify;

namespace {

struct Flags {
    std::string model, input, sign, pi6, format, suite = "all", errata;
    std::vector<std::string> binds;
    bool time_dependent = false;
    int samples = 20;
};

void job_flags(CLI::App* sub, Flags& f) {
    sub->add_option("--model", f.model, "cpi, qpi or custom");
    sub->add_option("--input", f.input, "sectioned job file")->check(CLI::ExistingFile);
    sub->add_option("--bind", f.binds, "SYM=RATIONAL, repeatable");
    sub->add_option("--sign", f.sign, "branch of a (cpi) or a_B (qpi): + or -");
    sub->add_flag("--time-dependent", f.time_dependent, "keep t-derivatives");
    sub->add_option("--pi6-form", f.pi6, "eq69 (regularized) or eq72 (interpolating)");
    sub->add_option("--format", f.format, "text, records or tex");
}

JobSpec make_job(const Flags& f) {
    JobSpec job = f.input.empty() ? JobSpec{} : load_job(f.input);
    if (!f.model.empty()) job.model = parse_model(f.model);
    if (!f.sign.empty()) job.sign = parse_sign(f.sign);
    if (f.time_dependent) job.time_dependent = true;
    if (!f.pi6.empty()) job.pi6 = parse_pi6_form(f.pi6);
    if (!f.format.empty()) job.format = parse_format(f.format);
    for (const auto& b : f.binds) add_binding(job, b);
    if (job.model == JobModel::Custom && !job.vierbein && !job.upper)
        throw Error("--model custom needs an --input file with a [vierbein] or [metric] section");
    return job;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Supergeometry of supertime: metric, connection and curvature over one even and two odd coordinates"};
    app.require_subcommand(1);
    Flags f;

    auto* verify = app.add_subcommand("verify", "check every printed reference entry against the pipeline");
    verify->add_option("--suite", f.suite, "connection, curvature, evolving-curvature, metric, all (aliases appendixE/F/G)");
    verify->add_option("--format", f.format, "text, records or tex");
    verify->add_option("--samples", f.samples, "oracle bindings per mismatch")->check(CLI::PositiveNumber);
    verify->add_option("--errata", f.errata, "errata table (default: the copy in docs/)");

    auto* compute = app.add_subcommand("compute", "metric, Christoffel symbols, Ricci tensor and scalar");
    job_flags(compute, f);
    auto* flat = app.add_subcommand("flatness", "zero-curvature surface (cpi) or quantum obstruction (qpi)");
    job_flags(flat, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            Errata errata = load_errata(f.errata.empty() ? default_errata_path() : f.errata);
            VerifyOptions opt;
            opt.suite = f.suite;
            opt.samples = f.samples;
            VerifyReport r = run_verify(opt, errata);
            Format fmt = f.format.empty() ? Format::Text : parse_format(f.format);
            std::cout << (fmt == Format::Records ? render_records(r) : fmt == Format::Tex ? render_tex(r) : render_text(r));
            return r.exit_code();
        }
        JobSpec job = make_job(f);
        if (compute->parsed()) {
            std::cout << run_compute(job);
            return 0;
        }
        FlatnessOutcome out = run_flatness(job);
        std::cout << out.report;
        return out.ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
