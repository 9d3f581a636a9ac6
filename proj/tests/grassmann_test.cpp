#include <gtest/gtest.h>

#include "common/errors.hpp"
#include "grassmann_core/super_function.hpp"
#include "scalar_ring/parse_scalar.hpp"
#include "support/super_gen.hpp"

using namespace sgeo;
using testgen::Gen;

namespace {

SuperFunction S(const char* s) { return parse_super(s); }
ScalarExpr P(const char* s) { return parse_scalar(s); }
const SuperFunction th = SuperFunction::theta();
const SuperFunction tb = SuperFunction::thetabar();
const SuperFunction tbt = SuperFunction::thetabar_theta();

int bit(Parity p) { return p == Parity::Odd ? 1 : 0; }

}  // namespace

TEST(SuperMul, ThetaThetabarIsCanonicalised) {
    EXPECT_EQ(th * tb, -tbt);
    EXPECT_EQ(S("theta*thetabar"), -tbt);
}

TEST(SuperMul, Nilpotent) {
    EXPECT_TRUE((th * th).is_zero());
    EXPECT_TRUE((tb * tb).is_zero());
}

TEST(SuperMul, OddPairGivesEvenSoul) {
    SuperFunction gamma = S("gt*theta + gtb*thetabar");
    SuperFunction delta = S("dt*theta + dtb*thetabar");
    EXPECT_EQ(gamma * delta, SuperFunction::even(0, P("gtb*dt - gt*dtb")));
}

TEST(SuperMul, ParityClassification) {
    EXPECT_EQ(S("pi1 + pi2*thetabar*theta").parity(), Parity::Even);
    EXPECT_EQ(S("pi1*theta").parity(), Parity::Odd);
    EXPECT_EQ(S("1 + theta").parity(), Parity::Mixed);
    EXPECT_EQ(SuperFunction().parity(), Parity::Even);
}

TEST(SuperInverse, RegularisedDeterminant) {
    SuperFunction z = S("eps - i*thetabar*theta/hbar");
    SuperFunction inv = super_inverse(z);
    EXPECT_EQ(inv, S("1/eps + i*thetabar*theta/(eps^2*hbar)"));
    EXPECT_EQ(z * inv, SuperFunction(1));
    // the form without i does not multiply back
    EXPECT_NE(z * S("1/eps + thetabar*theta/(eps^2*hbar)"), SuperFunction(1));
}

TEST(SuperInverse, One) { EXPECT_EQ(super_inverse(1), SuperFunction(1)); }

TEST(SuperInverse, EvenElement) {
    EXPECT_EQ(super_inverse(S("aB + aS*thetabar*theta")), S("1/aB - aS/aB^2*thetabar*theta"));
}

TEST(SuperInverse, NoBody) {
    EXPECT_THROW(super_inverse(S("-i*thetabar*theta/hbar")), NoBody);
    EXPECT_THROW(super_inverse(S("theta + (pi1 - pi1)")), NoBody);
}

TEST(GrassmannDeriv, GeneratorRules) {
    EXPECT_EQ(left_deriv(th * tb, Generator::Theta), tb);
    EXPECT_EQ(right_deriv(th * tb, Generator::Theta), -tb);
    EXPECT_EQ(left_deriv(tbt, Generator::Theta), -tb);
    EXPECT_EQ(left_deriv(tb * th, Generator::ThetaBar), th);
    EXPECT_EQ(right_deriv(tb * th, Generator::ThetaBar), -th);
}

TEST(GrassmannDeriv, KillsGeneratorFreeTerms) {
    EXPECT_TRUE(left_deriv(S("pi1*pi2"), Generator::Theta).is_zero());
    EXPECT_TRUE(right_deriv(S("pi1*pi2"), Generator::ThetaBar).is_zero());
}

TEST(GrassmannDeriv, LinearFactors) {
    EXPECT_EQ(left_deriv(S("pi1*theta + pi2*thetabar"), Generator::Theta), S("pi1"));
    EXPECT_EQ(right_deriv(S("pi1*theta + pi2*thetabar"), Generator::ThetaBar), S("pi2"));
}

TEST(Berezin, Rules) {
    EXPECT_EQ(berezin_integrate(tbt), ScalarExpr(1));
    EXPECT_TRUE(berezin_integrate(1).is_zero());
    EXPECT_EQ(berezin_integrate(S("pi2*thetabar*theta + pi3*theta")), P("pi2"));
}

TEST(TDerive, Componentwise) {
    EXPECT_EQ(t_derive(S("pi5*thetabar*theta")), S("pi5'*thetabar*theta"));
    EXPECT_TRUE(t_derive(th).is_zero());
    EXPECT_EQ(t_derive(S("pi2*pi3 + pi1*theta")), S("pi2'*pi3 + pi2*pi3' + pi1'*theta"));
}

TEST(SuperText, RoundTrip) {
    Gen g(11);
    for (int k = 0; k < 100; ++k) {
        SuperFunction f = testgen::any(g);
        EXPECT_EQ(parse_super(f.str()), f) << f.str();
    }
}

// ---------------------------------------------------------------- properties

TEST(SuperProperty, GradedCommutativity) {
    Gen g(1);
    for (int k = 0; k < 500; ++k) {
        SuperFunction x = testgen::homogeneous(g), y = testgen::homogeneous(g);
        int s = bit(x.parity()) * bit(y.parity());
        SuperFunction yx = y * x;
        EXPECT_EQ(x * y, s ? -yx : yx) << x.str() << " | " << y.str();
    }
}

TEST(SuperProperty, Associativity) {
    Gen g(2);
    for (int k = 0; k < 200; ++k) {
        SuperFunction x = testgen::any(g), y = testgen::any(g), z = testgen::any(g);
        EXPECT_EQ((x * y) * z, x * (y * z));
    }
}

TEST(SuperProperty, Distributivity) {
    Gen g(3);
    for (int k = 0; k < 200; ++k) {
        SuperFunction x = testgen::any(g), y = testgen::any(g), z = testgen::any(g);
        EXPECT_EQ(x * (y + z), x * y + x * z);
    }
}

TEST(SuperProperty, SoulCubedVanishes) {
    Gen g(4);
    for (int k = 0; k < 200; ++k) {
        SuperFunction s = testgen::any(g).soul();
        EXPECT_TRUE((s * s * s).is_zero());
    }
}

TEST(SuperProperty, InverseMultipliesBack) {
    Gen g(5);
    for (int k = 0; k < 200; ++k) {
        SuperFunction z = testgen::any(g);
        if (z.body().is_zero()) z += 1;
        if (z.body().is_zero()) continue;
        SuperFunction inv = super_inverse(z);
        EXPECT_EQ(z * inv, SuperFunction(1));
        EXPECT_EQ(inv * z, SuperFunction(1));
    }
}

TEST(SuperProperty, BerezinProjection) {
    Gen g(6);
    for (int k = 0; k < 200; ++k) {
        SuperFunction f = testgen::any(g);
        EXPECT_EQ(berezin_integrate(tbt * f), f.body());
    }
}

TEST(SuperProperty, LeftRightDerivativesOnEvenSoul) {
    Gen g(7);
    for (int k = 0; k < 100; ++k) {
        ScalarExpr c = g.poly(testgen::few_names(), 2);
        SuperFunction f = tbt.scaled(c);
        // moving the operator across one generator flips the sign
        EXPECT_EQ(left_deriv(f, Generator::Theta), -right_deriv(f, Generator::Theta));
        EXPECT_EQ(left_deriv(f, Generator::ThetaBar), -right_deriv(f, Generator::ThetaBar));
    }
}

TEST(SuperProperty, ProductParity) {
    Gen g(8);
    for (int k = 0; k < 200; ++k) {
        SuperFunction x = testgen::homogeneous(g), y = testgen::homogeneous(g);
        SuperFunction p = x * y;
        if (p.is_zero()) continue;
        EXPECT_EQ(bit(p.parity()), (bit(x.parity()) + bit(y.parity())) % 2);
    }
}
