#include <gtest/gtest.h>

#include <thread>

#include "common/errors.hpp"
#include "models/fixture_eval.hpp"
#include "oracle/fixture_oracle.hpp"
#include "oracle/ledger.hpp"
#include "scalar_ring/parse_scalar.hpp"
#include "support/super_gen.hpp"

using namespace sgeo;
using namespace sgeo::oracle;
using testgen::Gen;

namespace {

SuperFunction S(const char* s) { return parse_super(s); }

void PrintTo(const NSN& n, std::ostream* os) { *os << n.str(); }

CQ rnd(Gen& g) {
    // wide range so accidental cancellations are unlikely
    int num = g.uniform(2, 997) * (g.coin() ? 1 : -1);
    mpq_class q(num, g.uniform(1, 991));
    q.canonicalize();
    return CQ(q);
}

Binding pi_binding(Gen& g, bool quantum, bool time_dependent) {
    Binding b;
    int n = quantum ? 7 : 4;
    for (int k = 1; k <= n; ++k)
        for (int o = 0; o <= (time_dependent ? 2 : 0); ++o) {
            // pi7 is constant in the evolving quantum run
            bool frozen = quantum && k == 7 && o > 0;
            b[intern((quantum ? "qpi" : "pi") + std::to_string(k), o)] = frozen ? CQ(0) : rnd(g);
        }
    return b;
}

NSN eval(const SuperFunction& f, const Binding& b) { return numeric_eval(f, b); }

// every stage of the symbolic pipeline, evaluated, against the numeric pipeline
void expect_equivalent(const Curvature& sym, const NumericCurvature& num, const Binding& b) {
    for (int k = 0; k < 9; ++k) {
        EXPECT_EQ(eval(sym.metric.upper(k / 3, k % 3), b), num.upper[static_cast<std::size_t>(k)]);
        EXPECT_EQ(eval(sym.metric.lower(k / 3, k % 3), b), num.lower[static_cast<std::size_t>(k)]);
        EXPECT_EQ(eval(sym.curv.ricci[static_cast<std::size_t>(k)], b), num.ricci[static_cast<std::size_t>(k)]) << k;
    }
    for (std::size_t k = 0; k < 27; ++k) EXPECT_EQ(eval(sym.gamma.g[k], b), num.gamma[k]) << k;
    for (std::size_t k = 0; k < 81; ++k) EXPECT_EQ(eval(sym.curv.riemann[k], b), num.riemann[k]) << k;
    EXPECT_EQ(eval(sym.curv.scalar, b), num.scalar);
}

}  // namespace

// ---------------------------------------------------------------- arithmetic

TEST(NumericEval, Examples) {
    Binding b{{intern("pi2"), CQ(3)}};
    EXPECT_EQ(eval(S("pi2*thetabar*theta"), b), NSN(0, 0, 0, 3));
    EXPECT_EQ(eval(S("theta*thetabar"), {}), NSN(0, 0, 0, -1));
    EXPECT_EQ(NSN::theta() * NSN::thetabar(), NSN(0, 0, 0, -1));
    EXPECT_TRUE((NSN::theta() * NSN::theta()).zero());
}

TEST(NumericEval, PrintedScalarAtAPoint) {
    const auto& f = catalog::fixture(catalog::scalar_id(catalog::Model::Cpi, catalog::Regime::Static));
    auto printed = printed_value(f, 1);
    ASSERT_TRUE(printed);
    Binding b{{intern("pi1"), CQ(6)}, {intern("pi2"), CQ(2)}, {intern("pi3"), CQ(3)}, {intern("pi4"), CQ(1)}};
    EXPECT_EQ(eval(*printed, b), NSN(CQ(mpq_class(-1, 2)), 0, 0, 0));
}

TEST(NumericEval, Unbound) { EXPECT_THROW(eval(S("pi1*theta"), {}), UnboundSymbol); }

TEST(NumericEval, ImaginaryUnit) {
    EXPECT_EQ(eval(S("i*i"), {}), NSN(-1));
    EXPECT_EQ(eval(S("1/(1+i)"), {}), NSN(CQ(mpq_class(1, 2), mpq_class(-1, 2))));
}

TEST(NumericEval, InverseOfBodylessThrows) {
    EXPECT_THROW(NSN(0, 1, 0, 0).inv(), SingularNumeric);
    NSN z(3, 1, 2, 5);
    EXPECT_EQ(z * z.inv(), NSN(1));
}

TEST(NumericEval, Homomorphism) {
    Gen g(51);
    const auto& names = testgen::few_names();
    int checked = 0;
    for (int k = 0; k < 1000; ++k) {
        SuperFunction x = testgen::any(g), y = testgen::any(g);
        if (g.coin()) x = x.scaled(ScalarExpr(1) / g.nonzero_poly(names, 2));
        Binding b;
        for (const auto& n : names) b[intern(n)] = rnd(g);
        try {
            NSN nx = eval(x, b), ny = eval(y, b);
            EXPECT_EQ(eval(x * y, b), nx * ny);
            EXPECT_EQ(eval(x + y, b), nx + ny);
            EXPECT_EQ(eval(x - y, b), nx - ny);
            ++checked;
        } catch (const SingularNumeric&) {
            // denominator vanished at this point
        }
    }
    EXPECT_GE(checked, 950);
}

TEST(NumericEval, GradedDerivatives) {
    Gen g(52);
    for (int k = 0; k < 100; ++k) {
        SuperFunction f = testgen::any(g);
        Binding b;
        for (const auto& n : testgen::few_names()) b[intern(n)] = rnd(g);
        EXPECT_EQ(eval(left_deriv(f, Generator::Theta), b), eval(f, b).d_theta());
        EXPECT_EQ(eval(left_deriv(f, Generator::ThetaBar), b), eval(f, b).d_thetabar());
    }
}

// ---------------------------------------------------------------- pipeline

TEST(NumericPipeline, FlatBindings) {
    for (bool td : {false, true}) {
        Binding b;
        for (int k = 1; k <= 4; ++k)
            for (int o = 0; o <= 2; ++o) b[intern("pi" + std::to_string(k), o)] = CQ(0);
        NumericCurvature c = numeric_pipeline(b, Family::Cpi, td, 1);
        for (const auto& x : c.gamma) EXPECT_TRUE(x.zero());
        for (const auto& x : c.riemann) EXPECT_TRUE(x.zero());
        for (const auto& x : c.ricci) EXPECT_TRUE(x.zero());
        EXPECT_TRUE(c.scalar.zero());
    }
}

TEST(NumericPipeline, FlatnessSurfacePoint) {
    Binding b{{intern("pi1"), CQ(4)}, {intern("pi2"), CQ(2)}, {intern("pi3"), CQ(2)}, {intern("pi4"), CQ(1)}};
    for (int a : {1, -1}) {
        NumericCurvature c = numeric_pipeline(b, Family::Cpi, false, a);
        for (const auto& x : c.ricci) EXPECT_TRUE(x.zero());
        EXPECT_TRUE(c.scalar.zero());
    }
    Binding off = b;
    off[intern("pi1")] = CQ(5);
    EXPECT_FALSE(numeric_pipeline(off, Family::Cpi, false, 1).scalar.zero());
}

TEST(NumericPipeline, QuantumLimitIsSingular) {
    Gen g(53);
    Binding b = pi_binding(g, true, false);
    b[intern("qpi7")] = CQ(0);
    EXPECT_THROW(numeric_pipeline(b, Family::Qpi, false, 1), SingularNumeric);
}

TEST(OracleEquivalence, ClassicalStatic) {
    Gen g(54);
    for (int a : {1, -1}) {
        Curvature sym = cpi_curvature(CpiPis::symbolic(a), false);
        for (int k = 0; k < 100; ++k) {
            Binding b = pi_binding(g, false, false);
            expect_equivalent(sym, numeric_pipeline(b, Family::Cpi, false, a), b);
        }
    }
}

TEST(OracleEquivalence, ClassicalEvolving) {
    Gen g(55);
    for (int a : {1, -1}) {
        Curvature sym = cpi_curvature(CpiPis::symbolic(a), true);
        for (int k = 0; k < 100; ++k) {
            Binding b = pi_binding(g, false, true);
            expect_equivalent(sym, numeric_pipeline(b, Family::Cpi, true, a), b);
        }
    }
}

TEST(OracleEquivalence, QuantumStatic) {
    Gen g(56);
    Curvature sym = qpi_curvature(QpiPis::symbolic(), false);
    for (int k = 0; k < 100; ++k) {
        Binding b = pi_binding(g, true, false);
        expect_equivalent(sym, numeric_pipeline(b, Family::Qpi, false, 1), b);
    }
}

TEST(OracleEquivalence, QuantumEvolving) {
    Gen g(57);
    Curvature sym = qpi_curvature(QpiPis::symbolic(), true);
    for (int k = 0; k < 100; ++k) {
        Binding b = pi_binding(g, true, true);
        expect_equivalent(sym, numeric_pipeline(b, Family::Qpi, true, 1), b);
    }
}

TEST(OracleEquivalence, FrameRoute) {
    // raw frames solved numerically against the Berezinian targets, then the metric read off
    Gen g(58);
    for (auto m : {catalog::Model::Cpi, catalog::Model::Qpi}) {
        const char* id = m == catalog::Model::Cpi ? "cpi.frame.inverse[t,t]" : "qpi.frame.sdet";
        const auto& f = catalog::fixture(id);
        for (int k = 0; k < 20; ++k) {
            Binding b = fixture_sample(f, k % 2 ? 1 : -1, k);
            Mat e = numeric_frame(b, m);
            NSN want(1);
            if (m == catalog::Model::Qpi) {
                NSN eps = symbol_jet(b, "eps", false).d[0], hbar = symbol_jet(b, "hbar", false).d[0];
                want = (eps + NSN(CQ(0, -1)) * hbar.inv() * NSN(0, 0, 0, 1)).inv();
            }
            EXPECT_EQ(berezinian(e), want) << id << " sample " << k;
        }
    }
}

TEST(OracleDeterminism, SameBindingSameResult) {
    Gen g(59);
    Binding b = pi_binding(g, true, true);
    NumericCurvature first = numeric_pipeline(b, Family::Qpi, true, 1);
    std::vector<NumericCurvature> runs(8);
    std::vector<std::thread> pool;
    for (auto& r : runs) pool.emplace_back([&r, &b] { r = numeric_pipeline(b, Family::Qpi, true, 1); });
    for (auto& t : pool) t.join();
    for (const auto& r : runs) {
        EXPECT_EQ(r.riemann, first.riemann);
        EXPECT_EQ(r.scalar, first.scalar);
    }
    const auto& f = catalog::fixture(catalog::scalar_id(catalog::Model::Qpi, catalog::Regime::Static));
    EXPECT_EQ(fixture_samples(f, 0, 5).size(), 5u);
    EXPECT_EQ(fixture_samples(f, 0, 5), fixture_samples(f, 0, 5));
}

// ---------------------------------------------------------------- ledger

TEST(Ledger, MissingImaginaryUnit) {
    SuperFunction det = regularized_determinant(ScalarExpr::sym("eps"));
    SuperFunction printed = S("1/eps + thetabar*theta/(eps^2*hbar)");
    SuperFunction computed = super_inverse(det);
    EXPECT_EQ(computed * det, SuperFunction(1));
    EXPECT_NE(printed * det, SuperFunction(1));
    const auto& f = catalog::fixture("qpi.regularized.inverse");
    auto samples = fixture_samples(f, 0, 20);
    // reference: numeric inverse of the numerically evaluated determinant
    Reference ref = [&](const Binding& b) { return numeric_eval(det, b).inv(); };
    auto e = discrepancy_ledger(f.id, printed, computed, samples, ref);
    ASSERT_TRUE(e);
    EXPECT_EQ(e->verdict, Verdict::PrintedTypo);
    EXPECT_EQ(e->computed_agrees, 20);
    EXPECT_EQ(e->printed_agrees, 0);
    EXPECT_NO_THROW(require_verdict(*e));
}

TEST(Ledger, MatchingFixtureHasNoEntry) {
    const auto& f = catalog::fixture(catalog::ricci_id(catalog::Model::Cpi, catalog::Regime::Static, T, T));
    SuperFunction v = computed_value(f, 1);
    EXPECT_EQ(printed_value(f, 1), v);
    EXPECT_FALSE(discrepancy_ledger(f.id, v, v, fixture_samples(f, 1, 5),
                                    [&](const Binding& b) { return reference_value(f, 1, b); }));
}

TEST(Ledger, InjectedErrorIsAttributedToTheWrongSide) {
    const auto& f = catalog::fixture(catalog::ricci_id(catalog::Model::Cpi, catalog::Regime::Static, TH, THB));
    for (int a : {1, -1}) {
        SuperFunction good = computed_value(f, a);
        SuperFunction bad = good + S("thetabar*theta");  // a flipped sign would do as well
        auto samples = fixture_samples(f, a, 20);
        Reference ref = [&](const Binding& b) { return reference_value(f, a, b); };
        auto printed_wrong = discrepancy_ledger(f.id, bad, good, samples, ref);
        ASSERT_TRUE(printed_wrong);
        EXPECT_EQ(printed_wrong->verdict, Verdict::PrintedTypo);
        auto computed_wrong = discrepancy_ledger(f.id, good, -good, samples, ref);
        ASSERT_TRUE(computed_wrong);
        EXPECT_EQ(computed_wrong->verdict, Verdict::ImplementationError);
    }
}

TEST(Ledger, NeitherSideMatches) {
    const auto& f = catalog::fixture(catalog::scalar_id(catalog::Model::Cpi, catalog::Regime::Static));
    auto samples = fixture_samples(f, 1, 10);
    Reference ref = [&](const Binding&) { return NSN(CQ(123457)); };
    auto e = discrepancy_ledger(f.id, S("pi1"), S("pi2"), samples, ref);
    ASSERT_TRUE(e);
    EXPECT_EQ(e->verdict, Verdict::Inconclusive);
    EXPECT_THROW(require_verdict(*e), Inconclusive);
}

TEST(Ledger, SingularSamplesAreInconclusive) {
    std::vector<Binding> samples(3);
    Reference ref = [](const Binding&) -> NSN { throw SingularNumeric("forced"); };
    LedgerEntry e = arbitrate("x", [](const Binding&) { return NSN(1); }, [](const Binding&) { return NSN(2); },
                              samples, ref);
    EXPECT_EQ(e.singular, 3);
    EXPECT_EQ(e.verdict, Verdict::Inconclusive);
}
