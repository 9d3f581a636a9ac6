#include "oracle/ledger.hpp"

#include "common/errors.hpp"

namespace sgeo::oracle {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::PrintedTypo: return "printed typo";
        case Verdict::ImplementationError: return "implementation error";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

LedgerEntry arbitrate(const std::string& fixture, const Evaluator& printed, const Evaluator& computed,
                      const std::vector<Binding>& samples, const Reference& reference) {
    LedgerEntry e;
    e.fixture = fixture;
    e.samples = static_cast<int>(samples.size());
    for (const Binding& b : samples) {
        try {
            NSN ref = reference(b);
            bool c = computed(b) == ref;
            bool p = printed(b) == ref;
            e.computed_agrees += c;
            e.printed_agrees += p;
        } catch (const SingularNumeric&) {
            ++e.singular;
        }
    }
    if (e.samples > 0 && e.singular == 0) {
        if (e.computed_agrees == e.samples && e.printed_agrees == 0) e.verdict = Verdict::PrintedTypo;
        else if (e.printed_agrees == e.samples && e.computed_agrees == 0) e.verdict = Verdict::ImplementationError;
    }
    return e;
}

std::optional<LedgerEntry> discrepancy_ledger(const std::string& fixture, const SuperFunction& printed,
                                              const SuperFunction& computed, const std::vector<Binding>& samples,
                                              const Reference& reference) {
    if (printed == computed) return std::nullopt;
    LedgerEntry e = arbitrate(
        fixture, [&](const Binding& b) { return numeric_eval(printed, b); },
        [&](const Binding& b) { return numeric_eval(computed, b); }, samples, reference);
    e.printed = printed.str();
    e.computed = computed.str();
    return e;
}

const LedgerEntry& require_verdict(const LedgerEntry& e) {
    if (e.verdict == Verdict::Inconclusive)
        throw Inconclusive(e.fixture + ": reference matched computed at " + std::to_string(e.computed_agrees) +
                           " and printed at " + std::to_string(e.printed_agrees) + " of " +
                           std::to_string(e.samples) + " samples");
    return e;
}

}  // namespace sgeo::oracle
