#pragma once

// Runs catalog entries against the pipeline. Mismatches are arbitrated by
// the numeric oracle and checked against the errata list.

#include <optional>
#include <string>
#include <vector>

#include "models/fixture_eval.hpp"
#include "oracle/ledger.hpp"
#include "verify/errata.hpp"

namespace sgeo::verify {

struct VerifyOptions {
    std::string suite = "all";
    int samples = 20;  // oracle bindings per mismatching branch
};

enum class Status {
    Pass,        // printed equals computed on every branch
    Typo,        // every mismatch is a confirmed misprint listed in the errata
    Vacuous,     // printed entry is defined as itself
    Unledgered,  // anything else
};

const char* status_name(Status s);

struct BranchOutcome {
    int branch = 0;
    bool equal = false;
    std::optional<SuperFunction> printed;
    SuperFunction computed;
    std::optional<oracle::LedgerEntry> ledger;
};

struct FixtureOutcome {
    const catalog::Fixture* fixture = nullptr;
    std::vector<BranchOutcome> branches;
    Status status = Status::Pass;
    bool listed = false;  // id appears in the errata
};

struct VerifyReport {
    std::string suite;
    int samples = 0;
    std::vector<FixtureOutcome> fixtures;  // catalog order, sorted by id
    std::vector<std::string> stale;        // listed in the errata but passing

    int count(Status s) const;
    // 0 when nothing is unledgered, 1 otherwise
    int exit_code() const;
};

FixtureOutcome verify_fixture(const catalog::Fixture& f, int samples, const Errata& errata);
// throws std::invalid_argument for an unknown suite
VerifyReport run_verify(const VerifyOptions& opt, const Errata& errata);

std::string branch_label(const catalog::Fixture& f, int branch);

std::string render_text(const VerifyReport& r);
std::string render_records(const VerifyReport& r);
std::string render_tex(const VerifyReport& r);

}  // namespace sgeo::verify
