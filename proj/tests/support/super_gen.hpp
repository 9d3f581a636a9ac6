#pragma once

// Random super-numbers and supermatrices built on testgen::Gen.

#include "support/gen.hpp"
#include "support/print.hpp"
#include "supermatrix/super_matrix.hpp"

namespace sgeo::testgen {

inline const std::vector<std::string>& few_names() {
    static const std::vector<std::string> n{"pi1", "pi2", "pi3"};
    return n;
}

inline SuperFunction even(Gen& g, bool nonzero_body = false) {
    ScalarExpr body = nonzero_body ? g.nonzero_poly(few_names(), 2) : g.poly(few_names(), 2);
    return SuperFunction::even(body, g.poly(few_names(), 2));
}

inline SuperFunction odd(Gen& g) { return SuperFunction::odd(g.poly(few_names(), 2), g.poly(few_names(), 2)); }

inline SuperFunction homogeneous(Gen& g) { return g.coin() ? even(g) : odd(g); }

inline SuperFunction any(Gen& g) {
    return {g.poly(few_names(), 2), g.poly(few_names(), 2), g.poly(few_names(), 2), g.poly(few_names(), 2)};
}

// constant-coefficient variants keep sdet and inverse checks cheap
inline SuperFunction even_const(Gen& g, bool nonzero_body = false) {
    ScalarExpr body(nonzero_body ? g.nonzero_rational() : g.rational());
    return SuperFunction::even(body, ScalarExpr(g.rational()));
}
inline SuperFunction odd_const(Gen& g) { return SuperFunction::odd(ScalarExpr(g.rational()), ScalarExpr(g.rational())); }

// grading-valid matrix; invertible blocks when asked
inline SuperMatrix3 valid_matrix(Gen& g, bool invertible = true) {
    for (;;) {
        SuperMatrix3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                m(r, c) = grading(r) == grading(c) ? even_const(g, r == c && invertible) : odd_const(g);
        if (!invertible) return m;
        ScalarExpr detb = m(1, 1).body() * m(2, 2).body() - m(1, 2).body() * m(2, 1).body();
        if (!detb.is_zero()) return m;
    }
}

}  // namespace sgeo::testgen
