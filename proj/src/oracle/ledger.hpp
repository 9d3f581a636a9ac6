#pragma once

// Arbitration between a printed expression and the computed one: both are
// evaluated at sample bindings and compared with an independent reference.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oracle/numeric.hpp"

namespace sgeo::oracle {

enum class Verdict {
    PrintedTypo,            // reference agrees with computed everywhere, with printed nowhere
    ImplementationError,  // the reverse
    Inconclusive,
};

std::string verdict_name(Verdict v);

struct LedgerEntry {
    std::string fixture;
    int branch = 0;
    std::string printed, computed;  // rendered expressions
    int samples = 0;
    int computed_agrees = 0;  // samples where computed equals the reference
    int printed_agrees = 0;
    int singular = 0;         // samples where some side could not be evaluated
    Verdict verdict = Verdict::Inconclusive;
};

using Reference = std::function<NSN(const Binding&)>;
using Evaluator = std::function<NSN(const Binding&)>;

// counts agreement of each side with the reference over the samples
LedgerEntry arbitrate(const std::string& fixture, const Evaluator& printed, const Evaluator& computed,
                      const std::vector<Binding>& samples, const Reference& reference);

// nullopt when the two expressions are identical
std::optional<LedgerEntry> discrepancy_ledger(const std::string& fixture, const SuperFunction& printed,
                                              const SuperFunction& computed, const std::vector<Binding>& samples,
                                              const Reference& reference);

// throws Inconclusive unless the entry has a definite verdict
const LedgerEntry& require_verdict(const LedgerEntry& e);

}  // namespace sgeo::oracle
