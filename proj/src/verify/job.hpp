#pragma once

// Compute and flatness jobs: what the CLI runs besides verification.

#include <optional>
#include <string>

#include "models/models.hpp"

namespace sgeo::verify {

enum class JobModel { Cpi, Qpi, Custom };
enum class Format { Text, Records, Tex };

struct JobSpec {
    JobModel model = JobModel::Cpi;
    std::optional<SuperMatrix3> vierbein;  // custom: rows are flat indices
    std::optional<SuperMatrix3> upper;     // custom: g^{MN} given directly
    Bindings bindings;                     // applied to the results
    int sign = 1;                          // a for cpi, a_B for qpi
    bool time_dependent = false;
    Pi6Form pi6 = Pi6Form::Regularized;
    Format format = Format::Text;
};

JobModel parse_model(const std::string& s);
Format parse_format(const std::string& s);
// "regularized" and "interpolating", plus the short aliases the CLI accepts
Pi6Form parse_pi6_form(const std::string& s);
// "+", "-", "+1", "-1"
int parse_sign(const std::string& s);

// "SYM=VALUE"; SYM may carry primes, VALUE is any constant expression
void add_binding(JobSpec& job, const std::string& assignment);

// Sectioned text: [model] name=..., [vierbein] E_t_t=..., [metric] g_t_t=...,
// [bindings] sym=value, [options] sign/time_dependent/pi6_form/format.
// Errors carry "source:line".
JobSpec parse_job(const std::string& text, const std::string& source = "input");
JobSpec load_job(const std::string& path);

std::string run_compute(const JobSpec& job);

struct FlatnessOutcome {
    std::string report;
    bool ok = false;  // FLAT for cpi, OBSTRUCTED for qpi
};
FlatnessOutcome run_flatness(const JobSpec& job);

}  // namespace sgeo::verify
