// Acceptance run: one line per criterion, with wall time against its budget.
// Exit status is 1 when a criterion fails for any reason other than printed
// entries that the oracle confirms as misprints and the errata list records.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "common/errors.hpp"
#include "oracle/fixture_oracle.hpp"
#include "scalar_ring/parse_scalar.hpp"
#include "verify/verify.hpp"

using namespace sgeo;
using catalog::Model;
using catalog::Quantity;
using catalog::Regime;

namespace {

struct Result {
    bool pass = false;
    bool misprints_only = false;  // failure explained entirely by confirmed, listed misprints
    std::string detail;
};

const verify::Errata& errata() {
    static const verify::Errata e = verify::load_errata(verify::default_errata_path());
    return e;
}

// exact comparison of a fixture selection; mismatches go through the oracle
Result exact_fixtures(const std::function<bool(const catalog::Fixture&)>& pick, bool ledgered_ok) {
    int total = 0, exact = 0, confirmed = 0, other = 0, vacuous = 0;
    std::string bad;
    for (const auto& f : catalog::fixtures()) {
        if (!pick(f)) continue;
        ++total;
        verify::FixtureOutcome o = verify::verify_fixture(f, 20, errata());
        switch (o.status) {
            case verify::Status::Pass: ++exact; break;
            case verify::Status::Vacuous: ++vacuous; break;
            case verify::Status::Typo: ++confirmed; break;
            case verify::Status::Unledgered:
                ++other;
                bad += " " + f.id;
                break;
        }
    }
    Result r;
    r.detail = std::to_string(exact) + "/" + std::to_string(total) + " exact";
    if (confirmed) r.detail += ", " + std::to_string(confirmed) + " oracle-confirmed misprints (errata)";
    if (vacuous) r.detail += ", " + std::to_string(vacuous) + " self-referential";
    if (other) r.detail += ", unexplained:" + bad;
    r.pass = other == 0 && (ledgered_ok || confirmed == 0);
    r.misprints_only = other == 0;
    return r;
}

bool is(const catalog::Fixture& f, Model m, Quantity q) { return f.model == m && f.quantity == q; }

// ---------------------------------------------------------------- criteria

Result cpi_metric() {
    return exact_fixtures(
        [](const catalog::Fixture& f) {
            return is(f, Model::Cpi, Quantity::VierbeinMetric) || is(f, Model::Cpi, Quantity::UpperMetric) ||
                   is(f, Model::Cpi, Quantity::LowerMetric);
        },
        false);
}

Result cpi_christoffel() {
    return exact_fixtures([](const catalog::Fixture& f) { return is(f, Model::Cpi, Quantity::Christoffel); }, false);
}

Result cpi_curvature() {
    auto curv = [](const catalog::Fixture& f) {
        return f.model == Model::Cpi && (f.quantity == Quantity::Ricci || f.quantity == Quantity::Scalar);
    };
    Result st = exact_fixtures([&](const catalog::Fixture& f) { return curv(f) && f.regime == Regime::Static; }, false);
    Result ev = exact_fixtures([&](const catalog::Fixture& f) { return curv(f) && f.regime == Regime::Evolving; }, true);
    Result r;
    r.pass = st.pass && ev.pass;
    r.misprints_only = st.misprints_only && ev.misprints_only;
    r.detail = "static " + st.detail + "; evolving " + ev.detail;
    return r;
}

Result cpi_flat() {
    Result r;
    r.pass = true;
    for (int a : {1, -1}) {
        bool s = cpi_flatness(CpiPis::symbolic(a), false).flat;
        bool t = cpi_flatness(CpiPis::symbolic(a), true, true).flat;
        // stronger: primes follow the constraint surface instead of vanishing
        bool u = cpi_flatness(CpiPis::symbolic(a), true, false).flat;
        r.pass = r.pass && s && t && u;
        r.detail += std::string(a > 0 ? "a=+1" : " a=-1") + " static " + (s ? "flat" : "curved") + ", evolving " +
                    (t ? "flat" : "curved") + ", primes on the surface " + (u ? "flat" : "curved") + ";";
    }
    return r;
}

Result qpi_reproduction() {
    return exact_fixtures(
        [](const catalog::Fixture& f) {
            return f.model == Model::Qpi &&
                   (f.quantity == Quantity::UpperMetric || f.quantity == Quantity::LowerMetric ||
                    f.quantity == Quantity::Christoffel || f.quantity == Quantity::Ricci ||
                    f.quantity == Quantity::Scalar);
        },
        true);
}

Result qpi_obstructed() {
    Result r;
    ObstructionReport rep = qpi_obstruction(QpiPis::symbolic());
    bool evidence = true;
    for (const auto& e : rep.evidence) evidence = evidence && e.holds;
    bool bodies = true;
    for (int aB : {1, -1}) {
        QpiRaw raw = QpiRaw::symbolic(aB);
        raw.alpha_t = raw.alpha_tb = raw.beta_t = raw.beta_tb = 0;
        ScalarExpr v = substitute(qpi_pi6(raw), {{intern("eps"), ScalarExpr(0)}});
        bodies = bodies && v == -ScalarExpr(aB) * ScalarExpr::imag() / ScalarExpr::sym("hbar");
    }
    bool growth = true;
    long k = 9;
    for (const char* e : {"1/10", "1/100", "1/1000"}) {
        ScalarExpr eps = parse_scalar(e);
        growth = growth && (ScalarExpr(1) - eps) / eps == ScalarExpr(k) &&
                 divergent_soul(1, eps) == ScalarExpr(k) * ScalarExpr::imag() / ScalarExpr::sym("hbar");
        k = 10 * k + 9;
    }
    r.pass = rep.curvature_vanishes && rep.obstructed && evidence && bodies && growth;
    r.detail = std::string("curvature under constraints ") + (rep.curvature_vanishes ? "0" : "nonzero") +
               ", pi6 at eps=0 " + (bodies ? "-+i/hbar" : "wrong") + ", (1-eps)/eps " +
               (growth ? "9, 99, 999" : "wrong");
    return r;
}

Result interpolation() {
    Result r;
    bool one = interpolating_determinant(1) == SuperFunction(1);
    bool zero = interpolating_determinant(0) == parse_super("-i*thetabar*theta/hbar");
    bool noinv = false;
    try {
        super_inverse(interpolating_determinant(0));
    } catch (const NoBody&) {
        noinv = true;
    }
    SuperFunction d = interpolating_determinant(ScalarExpr::sym("eps"));
    bool inv = d * super_inverse(d) == SuperFunction(1);
    r.pass = one && zero && noinv && inv;
    r.detail = std::string("eps=1 ") + (one ? "1" : "?") + ", eps=0 " + (zero ? "-i thetabar theta/hbar" : "?") +
               ", inverse " + (noinv && inv ? "iff eps != 0" : "wrong");
    return r;
}

// ---------------------------------------------------------------- oracle and algebra

oracle::CQ rnd(std::mt19937_64& g) {
    std::uniform_int_distribution<int> num(2, 997), den(1, 991), sgn(0, 1);
    mpq_class q(num(g) * (sgn(g) ? 1 : -1), den(g));
    q.canonicalize();
    return {q};
}

oracle::Binding pis(std::mt19937_64& g, bool quantum, bool td) {
    oracle::Binding b;
    for (int k = 1; k <= (quantum ? 7 : 4); ++k)
        for (int o = 0; o <= (td ? 2 : 0); ++o)
            b[intern((quantum ? "qpi" : "pi") + std::to_string(k), o)] = quantum && k == 7 && o ? oracle::CQ(0) : rnd(g);
    return b;
}

bool agrees(const Curvature& s, const oracle::NumericCurvature& n, const oracle::Binding& b) {
    using oracle::numeric_eval;
    for (std::size_t k = 0; k < 9; ++k) {
        int r = static_cast<int>(k / 3), c = static_cast<int>(k % 3);
        if (numeric_eval(s.metric.upper(r, c), b) != n.upper[k]) return false;
        if (numeric_eval(s.metric.lower(r, c), b) != n.lower[k]) return false;
        if (numeric_eval(s.curv.ricci[k], b) != n.ricci[k]) return false;
    }
    for (std::size_t k = 0; k < 27; ++k)
        if (numeric_eval(s.gamma.g[k], b) != n.gamma[k]) return false;
    for (std::size_t k = 0; k < 81; ++k)
        if (numeric_eval(s.curv.riemann[k], b) != n.riemann[k]) return false;
    return numeric_eval(s.curv.scalar, b) == n.scalar;
}

Result oracle_equivalence() {
    std::mt19937_64 g(8);
    int ok = 0, total = 0;
    std::string where;
    auto run = [&](const char* name, const Curvature& s, oracle::Family fam, bool td, int sign) {
        int good = 0;
        for (int k = 0; k < 100; ++k) {
            oracle::Binding b = pis(g, fam == oracle::Family::Qpi, td);
            good += agrees(s, oracle::numeric_pipeline(b, fam, td, sign), b);
        }
        ok += good, total += 100;
        if (good != 100) where += std::string(" ") + name;
    };
    for (int a : {1, -1}) {
        run(a > 0 ? "cpi+static" : "cpi-static", cpi_curvature(CpiPis::symbolic(a), false), oracle::Family::Cpi, false, a);
        run(a > 0 ? "cpi+evolving" : "cpi-evolving", cpi_curvature(CpiPis::symbolic(a), true), oracle::Family::Cpi, true, a);
    }
    run("qpi-static", qpi_curvature(QpiPis::symbolic(), false), oracle::Family::Qpi, false, 1);
    run("qpi-evolving", qpi_curvature(QpiPis::symbolic(), true), oracle::Family::Qpi, true, 1);
    Result r;
    r.pass = ok == total;
    r.detail = std::to_string(ok) + "/" + std::to_string(total) + " bindings agree on every component" +
               (where.empty() ? "" : ", disagreeing:" + where);
    return r;
}

struct RandomAlgebra {
    std::mt19937_64 g{9};
    ScalarExpr c(bool nonzero = false) {
        std::uniform_int_distribution<int> n(-6, 6), d(1, 5);
        for (;;) {
            mpq_class q(n(g), d(g));
            q.canonicalize();
            ScalarExpr v(q);
            if (!nonzero || !v.is_zero()) return v;
        }
    }
    ScalarExpr poly() { return c() + c() * ScalarExpr::sym("pi1") + c() * ScalarExpr::sym("pi2"); }
    SuperFunction even() { return SuperFunction::even(poly(), poly()); }
    SuperFunction odd() { return SuperFunction::odd(poly(), poly()); }
    SuperFunction any() { return {poly(), poly(), poly(), poly()}; }
    SuperMatrix3 matrix() {
        for (;;) {
            SuperMatrix3 m;
            for (int r = 0; r < 3; ++r)
                for (int k = 0; k < 3; ++k)
                    m(r, k) = grading(r) == grading(k) ? SuperFunction::even(r == k ? c(true) : c(), c())
                                                       : SuperFunction::odd(c(), c());
            ScalarExpr detb = m(1, 1).body() * m(2, 2).body() - m(1, 2).body() * m(2, 1).body();
            if (!detb.is_zero()) return m;
        }
    }
};

Result algebra() {
    RandomAlgebra r;
    const int n = 100;
    int comm = 0, assoc = 0, soul = 0, inv = 0, mult = 0, cyc = 0, minv = 0;
    for (int k = 0; k < n; ++k) {
        bool xo = k % 2, yo = k % 3 == 0;
        SuperFunction x = xo ? r.odd() : r.even(), y = yo ? r.odd() : r.even();
        comm += x * y == (xo && yo ? -(y * x) : y * x);
        SuperFunction a = r.any(), b = r.any(), c = r.any();
        assoc += (a * b) * c == a * (b * c);
        SuperFunction s = a.soul();
        soul += (s * s * s).is_zero();
        SuperFunction z = a + 1;
        if (z.body().is_zero()) z += 1;
        inv += z * super_inverse(z) == SuperFunction(1);
        SuperMatrix3 m = r.matrix(), p = r.matrix(), mp = m * p;
        ScalarExpr detb = mp(1, 1).body() * mp(2, 2).body() - mp(1, 2).body() * mp(2, 1).body();
        mult += detb.is_zero() || sdet(mp) == sdet(m) * sdet(p);
        cyc += supertrace(m * p) == supertrace(p * m);
        SuperMatrix3 mi = smat_inverse(m);
        minv += m * mi == SuperMatrix3::identity() && mi * m == SuperMatrix3::identity() &&
                sdet(mi) * sdet(m) == SuperFunction(1);
    }
    Result res;
    res.pass = comm == n && assoc == n && soul == n && inv == n && mult == n && cyc == n && minv == n;
    auto f = [&](const char* name, int v) { return std::string(name) + " " + std::to_string(v) + "/" + std::to_string(n); };
    res.detail = f("graded-comm", comm) + ", " + f("assoc", assoc) + ", " + f("soul^3", soul) + ", " + f("z z^-1", inv) +
                 ", " + f("sdet mult", mult) + ", " + f("str cyclic", cyc) + ", " + f("inverse", minv);
    return res;
}

Result ledger() {
    using namespace oracle;
    SuperFunction det = regularized_determinant(ScalarExpr::sym("eps"));
    SuperFunction printed = parse_super("1/eps + thetabar*theta/(eps^2*hbar)");
    SuperFunction computed = super_inverse(det);
    bool back = computed * det == SuperFunction(1) && printed * det != SuperFunction(1);
    const auto& f = catalog::fixture("qpi.regularized.inverse");
    auto e = discrepancy_ledger(f.id, printed, computed, fixture_samples(f, 0, 20),
                                [&](const Binding& b) { return numeric_eval(det, b).inv(); });
    bool missing_i = e && e->verdict == Verdict::PrintedTypo;

    const auto& g = catalog::fixture(catalog::ricci_id(Model::Cpi, Regime::Static, TH, THB));
    SuperFunction good = computed_value(g, 1);
    auto samples = fixture_samples(g, 1, 20);
    Reference ref = [&](const Binding& b) { return reference_value(g, 1, b); };
    auto flipped_printed = discrepancy_ledger(g.id, -good, good, samples, ref);
    auto flipped_computed = discrepancy_ledger(g.id, good, -good, samples, ref);
    bool injected = flipped_printed && flipped_printed->verdict == Verdict::PrintedTypo && flipped_computed &&
                    flipped_computed->verdict == Verdict::ImplementationError;
    Result r;
    r.pass = back && missing_i && injected;
    r.detail = std::string("missing i: ") + (missing_i ? "printed typo, computed multiplies back to 1" : "not flagged") +
               "; injected sign flip: " + (injected ? "flagged on the flipped side" : "misattributed");
    return r;
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    Result (*run)();
};

}  // namespace

int main() {
    const std::vector<Criterion> all{
        {1, "CPI metric reproduction", 1, cpi_metric},
        {2, "CPI Christoffel fixtures", 5, cpi_christoffel},
        {3, "CPI curvature", 10, cpi_curvature},
        {4, "CPI flatness", 10, cpi_flat},
        {5, "QPI reproduction", 30, qpi_reproduction},
        {6, "QPI obstruction", 5, qpi_obstructed},
        {7, "Interpolation endpoints", 1, interpolation},
        {8, "Oracle equivalence", 60, oracle_equivalence},
        {9, "Algebra property suite", 60, algebra},
        {10, "Discrepancy ledger soundness", 5, ledger},
    };
    int hard = 0, failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.pass = false;
            r.misprints_only = false;
            r.detail = std::string("error: ") + e.what();
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = s < c.budget_s;
        bool pass = r.pass && in_time;
        if (!in_time) r.detail += "; over budget";
        std::printf("%s  %2d  %-30s %7.3f s (< %g s)  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, s, c.budget_s,
                    r.detail.c_str());
        std::fflush(stdout);
        if (!pass) {
            ++failed;
            if (!(r.misprints_only && in_time)) ++hard;
        }
    }
    std::printf("%d of %zu criteria pass", static_cast<int>(all.size()) - failed, all.size());
    if (failed) std::printf("; %d fail only on oracle-confirmed misprints in the reference tables", failed - hard);
    std::printf("\n");
    return hard ? 1 : 0;
}
