#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scalar_ring/poly.hpp"

namespace sgeo {

// Canonical rational function num/den: gcd(num, den) = 1, den monic, zero is 0/1.
class ScalarExpr {
public:
    ScalarExpr();
    ScalarExpr(long v);               // NOLINT(google-explicit-constructor)
    ScalarExpr(const GaussQ& c);      // NOLINT(google-explicit-constructor)
    ScalarExpr(const mpq_class& q);   // NOLINT(google-explicit-constructor)

    static ScalarExpr sym(SymId id);
    static ScalarExpr sym(std::string_view name, int order = 0);
    static ScalarExpr imag();
    static ScalarExpr fraction(Poly num, Poly den);
    static ScalarExpr from_poly(Poly p);

    const Poly& num() const { return r_->num; }
    const Poly& den() const { return r_->den; }

    bool is_zero() const { return r_->num.is_zero(); }
    bool is_one() const { return r_->den.is_one() && r_->num.is_one(); }
    bool is_constant() const { return r_->den.is_one() && r_->num.is_constant(); }
    std::optional<GaussQ> constant() const;

    ScalarExpr inverse() const;
    ScalarExpr pow(int e) const;
    std::vector<SymId> symbols() const;

    ScalarExpr operator-() const;
    friend ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b);
    ScalarExpr& operator+=(const ScalarExpr& o) { return *this = *this + o; }
    ScalarExpr& operator-=(const ScalarExpr& o) { return *this = *this - o; }
    ScalarExpr& operator*=(const ScalarExpr& o) { return *this = *this * o; }
    ScalarExpr& operator/=(const ScalarExpr& o) { return *this = *this / o; }
    friend bool operator==(const ScalarExpr& a, const ScalarExpr& b);
    friend bool operator!=(const ScalarExpr& a, const ScalarExpr& b) { return !(a == b); }

    std::string str() const;

private:
    struct Rep {
        Poly num;
        Poly den;
    };
    explicit ScalarExpr(std::shared_ptr<const Rep> r) : r_(std::move(r)) {}
    static ScalarExpr raw(Poly num, Poly den);  // already canonical

    std::shared_ptr<const Rep> r_;
};

using Bindings = std::map<SymId, ScalarExpr>;

ScalarExpr derive(const ScalarExpr& e);
ScalarExpr partial(const ScalarExpr& e, SymId v);
ScalarExpr substitute(const ScalarExpr& e, const Bindings& b);
// bindings already closed: no right side mentions a bound symbol
ScalarExpr substitute_closed(const ScalarExpr& e, const Bindings& r);
// Transitive closure of a binding map; throws CyclicBinding.
Bindings resolve_bindings(const Bindings& b);

std::string poly_str(const Poly& p);

}  // namespace sgeo
