#pragma once

// Metric -> inverse -> connection -> curvature, entirely in NSN arithmetic.
// Time dependence is carried by jets: value, first and second t-derivative at
// one evaluation point.

#include <array>

#include "oracle/numeric.hpp"

namespace sgeo::oracle {

using Mat = std::array<NSN, 9>;  // row-major, index order t, theta, thetabar

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
// row reduction with left multiplications; throws SingularNumeric
Mat mat_inverse(const Mat& m);

struct Jet {
    std::array<NSN, 3> d;
    int valid = 3;  // how many leading orders are known
};

Jet jet_mul(const Jet& x, const Jet& y);
Jet jet_add(const Jet& x, const Jet& y);
Jet jet_scale(const Jet& x, const CQ& s);

struct NumericCurvature {
    Mat upper, lower;
    std::array<NSN, 27> gamma;     // Gamma^c_{ab} at 9c + 3a + b
    std::array<NSN, 81> riemann;   // R^d_{abc} at 27d + 9a + 3b + c
    std::array<NSN, 9> ricci;
    NSN scalar;
};

// upper metric and its first two t-derivatives
using MetricJet = std::array<Mat, 3>;
NumericCurvature curvature_from_jet(const MetricJet& upper);

enum class Family { Cpi, Qpi };

// Reads pi1..pi4 (classical, with "a" = +-1 from sign) or qpi1..qpi7 and
// their primes from the binding. Static runs ignore primes.
MetricJet metric_jet(const Binding& b, Family model, bool time_dependent, int sign);
NumericCurvature numeric_pipeline(const Binding& b, Family model, bool time_dependent, int sign);

// jet of a time-dependent symbol read from the binding
Jet symbol_jet(const Binding& b, const char* name, bool time_dependent);

// g^{LP} = sum_{A,B} E(A,L) eta(A,B) (-1)^{g(B) g(P)} E(B,P)
Mat frame_metric(const Mat& e);
// (E_tt - row D^-1 column) / det D with D the odd-odd block
NSN berezinian(const Mat& e);

}  // namespace sgeo::oracle
