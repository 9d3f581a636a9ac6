#pragma once

// Symbolic evaluation of catalog entries: the printed expression and the
// value the pipeline computes for the same component.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "models/catalog.hpp"
#include "models/models.hpp"

namespace sgeo {

// +1 and -1 when the entry carries the sign of a (classical) or a_B (quantum
// frame); {0} otherwise
std::vector<int> fixture_branches(const catalog::Fixture& f);
// "a", "aB" or "" for entries without a sign branch
std::string branch_symbol(const catalog::Fixture& f);

using Resolver = std::function<SuperFunction(const std::string& name, int order)>;
SuperFunction eval_ast(const Ast& a, const Resolver& r);

// nullopt for an entry defined as itself
std::optional<SuperFunction> printed_value(const catalog::Fixture& f, int branch);
SuperFunction computed_value(const catalog::Fixture& f, int branch);

struct BranchCheck {
    int branch = 0;
    std::optional<SuperFunction> printed;
    SuperFunction computed;
    bool equal = false;
};

struct FixtureCheck {
    const catalog::Fixture* fixture = nullptr;
    std::vector<BranchCheck> branches;
    bool vacuous = false;  // printed as itself, nothing to compare
    bool match = false;
};

FixtureCheck check_fixture(const catalog::Fixture& f);

// raw parameters after solving the second constraint family
CpiRaw constrained_cpi(int a);
QpiRaw constrained_qpi(int aB);

}  // namespace sgeo
