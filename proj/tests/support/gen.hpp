#pragma once

// Hand-rolled generators for property tests. Fixed seeds keep runs reproducible.

#include <random>
#include <string>
#include <vector>

#include "scalar_ring/scalar_expr.hpp"

namespace sgeo::testgen {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    // small nonzero-numerator rationals, denominator 1..5
    mpq_class rational(int span = 6) {
        mpq_class q(uniform(-span, span), uniform(1, 5));
        q.canonicalize();
        return q;
    }
    mpq_class nonzero_rational(int span = 6) {
        mpq_class q;
        do q = rational(span); while (sgn(q) == 0);
        return q;
    }
    GaussQ gauss() { return coin() ? GaussQ(rational()) : GaussQ(rational(), rational(3)); }

    ScalarExpr symbol(const std::vector<std::string>& names) {
        return ScalarExpr::sym(names[static_cast<std::size_t>(uniform(0, static_cast<int>(names.size()) - 1))]);
    }

    // polynomial with up to `terms` terms of degree <= 2
    ScalarExpr poly(const std::vector<std::string>& names, int terms = 3) {
        ScalarExpr acc;
        int n = uniform(1, terms);
        for (int k = 0; k < n; ++k) {
            ScalarExpr t(gauss());
            int d = uniform(0, 2);
            for (int j = 0; j < d; ++j) t *= symbol(names);
            acc += t;
        }
        return acc;
    }

    ScalarExpr nonzero_poly(const std::vector<std::string>& names, int terms = 3) {
        ScalarExpr p;
        do p = poly(names, terms); while (p.is_zero());
        return p;
    }

    // p/q with q nonzero
    ScalarExpr rational_function(const std::vector<std::string>& names) {
        ScalarExpr n = poly(names);
        if (coin()) return n;
        return n / nonzero_poly(names, 2);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline const std::vector<std::string>& pi_names() {
    static const std::vector<std::string> n{"pi1", "pi2", "pi3", "pi4", "eps", "hbar"};
    return n;
}

}  // namespace sgeo::testgen
