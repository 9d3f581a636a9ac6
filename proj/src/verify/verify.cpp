#include "verify/verify.hpp"

#include <sstream>

#include "common/parallel.hpp"
#include "oracle/fixture_oracle.hpp"
#include "verify/tex.hpp"

namespace sgeo::verify {

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Typo: return "TYPO";
        case Status::Vacuous: return "VACUOUS";
        case Status::Unledgered: return "FAIL";
    }
    return "?";
}

std::string branch_label(const catalog::Fixture& f, int branch) {
    std::string s = branch_symbol(f);
    if (s.empty()) return "";
    return s + "=" + (branch > 0 ? "+1" : "-1");
}

FixtureOutcome verify_fixture(const catalog::Fixture& f, int samples, const Errata& errata) {
    FixtureOutcome out;
    out.fixture = &f;
    out.listed = errata.contains(f.id);
    bool all_equal = true, vacuous = false, all_confirmed = true;
    for (int br : fixture_branches(f)) {
        BranchOutcome b;
        b.branch = br;
        b.printed = printed_value(f, br);
        b.computed = computed_value(f, br);
        if (!b.printed) {
            vacuous = true;
        } else if (*b.printed == b.computed) {
            b.equal = true;
        } else {
            all_equal = false;
            auto bindings = oracle::fixture_samples(f, br, samples);
            b.ledger = oracle::discrepancy_ledger(f.id, *b.printed, b.computed, bindings,
                                                  [&](const oracle::Binding& x) { return oracle::reference_value(f, br, x); });
            if (b.ledger) b.ledger->branch = br;
            if (!b.ledger || b.ledger->verdict != oracle::Verdict::PrintedTypo) all_confirmed = false;
        }
        out.branches.push_back(std::move(b));
    }
    if (vacuous)
        out.status = Status::Vacuous;
    else if (all_equal)
        out.status = Status::Pass;
    else
        out.status = all_confirmed && out.listed ? Status::Typo : Status::Unledgered;
    return out;
}

int VerifyReport::count(Status s) const {
    int n = 0;
    for (const auto& f : fixtures) n += f.status == s;
    return n;
}

int VerifyReport::exit_code() const { return count(Status::Unledgered) == 0 ? 0 : 1; }

VerifyReport run_verify(const VerifyOptions& opt, const Errata& errata) {
    VerifyReport r;
    r.suite = opt.suite;
    r.samples = opt.samples;
    std::vector<const catalog::Fixture*> chosen;
    for (const auto& f : catalog::fixtures())
        if (catalog::in_suite(f, opt.suite)) chosen.push_back(&f);
    r.fixtures.resize(chosen.size());
    parallel_for(chosen.size(), [&](std::size_t i) { r.fixtures[i] = verify_fixture(*chosen[i], opt.samples, errata); });
    for (const auto& f : r.fixtures)
        if (f.listed && f.status == Status::Pass) r.stale.push_back(f.fixture->id);
    return r;
}

namespace {

std::string tex_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '#' || c == '_' || c == '&' || c == '%') out += '\\';
        out += c;
    }
    return out;
}

std::string why(const FixtureOutcome& f) {
    std::string s;
    for (const auto& b : f.branches) {
        if (b.equal) continue;
        std::string lab = branch_label(*f.fixture, b.branch);
        if (!s.empty()) s += "; ";
        if (!lab.empty()) s += lab + ": ";
        if (!b.printed) {
            s += "printed entry refers to itself";
        } else if (b.ledger) {
            s += oracle::verdict_name(b.ledger->verdict) + ", oracle agrees with computed " +
                 std::to_string(b.ledger->computed_agrees) + "/" + std::to_string(b.ledger->samples) +
                 ", with printed " + std::to_string(b.ledger->printed_agrees) + "/" +
                 std::to_string(b.ledger->samples);
        }
    }
    if (f.status == Status::Unledgered && !f.listed) s += s.empty() ? "not in errata" : "; not in errata";
    return s;
}

}  // namespace

std::string render_text(const VerifyReport& r) {
    std::ostringstream o;
    o << "suite " << r.suite << ": " << r.fixtures.size() << " entries, " << r.samples
      << " oracle samples per mismatch\n";
    for (const auto& f : r.fixtures) {
        o << status_name(f.status) << "  " << f.fixture->id;
        if (f.status != Status::Pass) o << "  (" << why(f) << ")";
        o << "\n";
        if (f.status == Status::Unledgered)
            for (const auto& b : f.branches) {
                if (b.equal) continue;
                std::string lab = branch_label(*f.fixture, b.branch);
                o << "    " << (lab.empty() ? "" : lab + " ") << "printed:  " << (b.printed ? b.printed->str() : "-")
                  << "\n    " << (lab.empty() ? "" : lab + " ") << "computed: " << b.computed.str() << "\n";
            }
    }
    for (const auto& s : r.stale) o << "note: " << s << " is listed in the errata but now passes\n";
    o << "pass " << r.count(Status::Pass) << ", confirmed misprints " << r.count(Status::Typo) << ", vacuous "
      << r.count(Status::Vacuous) << ", unledgered " << r.count(Status::Unledgered) << "\n";
    return o.str();
}

std::string render_records(const VerifyReport& r) {
    std::ostringstream o;
    o << "suite=" << r.suite << "\n";
    for (const auto& f : r.fixtures) {
        const std::string& id = f.fixture->id;
        o << id << ".status=" << status_name(f.status) << "\n";
        for (const auto& b : f.branches) {
            std::string key = id + (b.branch ? (b.branch > 0 ? "[+1]" : "[-1]") : "");
            if (b.printed) o << key << ".printed=" << b.printed->str() << "\n";
            o << key << ".computed=" << b.computed.str() << "\n";
            if (b.ledger)
                o << key << ".verdict=" << oracle::verdict_name(b.ledger->verdict) << "\n"
                  << key << ".oracle_computed=" << b.ledger->computed_agrees << "/" << b.ledger->samples << "\n"
                  << key << ".oracle_printed=" << b.ledger->printed_agrees << "/" << b.ledger->samples << "\n";
        }
    }
    o << "summary.pass=" << r.count(Status::Pass) << "\nsummary.typo=" << r.count(Status::Typo)
      << "\nsummary.vacuous=" << r.count(Status::Vacuous) << "\nsummary.unledgered=" << r.count(Status::Unledgered)
      << "\n";
    return o.str();
}

std::string render_tex(const VerifyReport& r) {
    std::ostringstream o;
    o << "\\begin{longtable}{lll}\n\\textbf{entry} & \\textbf{status} & \\textbf{computed} \\\\\n\\hline\n";
    for (const auto& f : r.fixtures)
        for (const auto& b : f.branches) {
            std::string lab = branch_label(*f.fixture, b.branch);
            o << "\\texttt{" << tex_escape(f.fixture->id) << "}" << (lab.empty() ? "" : " $" + lab + "$") << " & "
              << status_name(f.status) << " & $" << tex(b.computed) << "$ \\\\\n";
        }
    o << "\\end{longtable}\n";
    return o.str();
}

}  // namespace sgeo::verify
