#pragma once

// Concrete Grassmann algebra over {theta, thetabar} with exact complex
// rational coefficients. Nothing here touches the symbolic simplifier.

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>

#include "grassmann_core/super_function.hpp"
#include "scalar_ring/symbol.hpp"

namespace sgeo::oracle {

struct CQ {
    mpq_class re, im;

    CQ() = default;
    CQ(long v) : re(v) {}  // NOLINT(google-explicit-constructor)
    CQ(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}

    bool zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    CQ inv() const;  // throws SingularNumeric
    std::string str() const;

    friend CQ operator+(const CQ& a, const CQ& b) { return {a.re + b.re, a.im + b.im}; }
    friend CQ operator-(const CQ& a, const CQ& b) { return {a.re - b.re, a.im - b.im}; }
    friend CQ operator-(const CQ& a) { return {-a.re, -a.im}; }
    friend CQ operator*(const CQ& a, const CQ& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const CQ& a, const CQ& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CQ& a, const CQ& b) { return !(a == b); }
};

// c[0] + c[1] theta + c[2] thetabar + c[3] thetabar theta
struct NSN {
    std::array<CQ, 4> c;

    NSN() = default;
    NSN(CQ body) { c[0] = std::move(body); }  // NOLINT(google-explicit-constructor)
    NSN(CQ a, CQ t, CQ tb, CQ tbt) : c{std::move(a), std::move(t), std::move(tb), std::move(tbt)} {}

    static NSN theta() { return {0, 1, 0, 0}; }
    static NSN thetabar() { return {0, 0, 1, 0}; }

    bool zero() const { return c[0].zero() && c[1].zero() && c[2].zero() && c[3].zero(); }
    NSN inv() const;  // throws SingularNumeric when the body vanishes
    std::string str() const;

    // left derivatives
    NSN d_theta() const { return {c[1], 0, -c[3], 0}; }
    NSN d_thetabar() const { return {c[2], c[3], 0, 0}; }

    friend NSN operator+(const NSN& a, const NSN& b) {
        return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
    }
    friend NSN operator-(const NSN& a, const NSN& b) {
        return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
    }
    friend NSN operator-(const NSN& a) { return {-a.c[0], -a.c[1], -a.c[2], -a.c[3]}; }
    // theta thetabar = -thetabar theta, thetabar theta = +thetabar theta
    friend NSN operator*(const NSN& a, const NSN& b) {
        return {a.c[0] * b.c[0], a.c[0] * b.c[1] + a.c[1] * b.c[0], a.c[0] * b.c[2] + a.c[2] * b.c[0],
                a.c[0] * b.c[3] + a.c[3] * b.c[0] - a.c[1] * b.c[2] + a.c[2] * b.c[1]};
    }
    friend bool operator==(const NSN& a, const NSN& b) { return a.c == b.c; }
    friend bool operator!=(const NSN& a, const NSN& b) { return !(a == b); }
};

using Binding = std::map<SymId, CQ>;

// reads the stored polynomial terms; throws UnboundSymbol, SingularNumeric
NSN numeric_eval(const SuperFunction& f, const Binding& b);
CQ numeric_eval(const ScalarExpr& e, const Binding& b);

}  // namespace sgeo::oracle
