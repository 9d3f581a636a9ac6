#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "scalar_ring/scalar_expr.hpp"
#include "scalar_ring/syntax.hpp"

namespace sgeo {

enum class Parity { Even = 0, Odd = 1, Mixed };
enum class Generator { Theta, ThetaBar };

const char* parity_name(Parity p);

// u1 + ut*theta + utb*thetabar + utbt*thetabar*theta
class SuperFunction {
public:
    SuperFunction() = default;
    SuperFunction(ScalarExpr body);  // NOLINT(google-explicit-constructor)
    SuperFunction(long v) : SuperFunction(ScalarExpr(v)) {}  // NOLINT(google-explicit-constructor)
    SuperFunction(ScalarExpr u1, ScalarExpr ut, ScalarExpr utb, ScalarExpr utbt);

    static SuperFunction theta();
    static SuperFunction thetabar();
    static SuperFunction thetabar_theta();
    static SuperFunction even(ScalarExpr body, ScalarExpr soul) { return {std::move(body), {}, {}, std::move(soul)}; }
    static SuperFunction odd(ScalarExpr ut, ScalarExpr utb) { return {{}, std::move(ut), std::move(utb), {}}; }

    const ScalarExpr& u1() const { return c_[0]; }
    const ScalarExpr& ut() const { return c_[1]; }
    const ScalarExpr& utb() const { return c_[2]; }
    const ScalarExpr& utbt() const { return c_[3]; }
    const ScalarExpr& component(int k) const { return c_[static_cast<std::size_t>(k)]; }

    Parity parity() const;
    bool is_zero() const;
    ScalarExpr body() const { return c_[0]; }
    SuperFunction soul() const { return {{}, c_[1], c_[2], c_[3]}; }

    SuperFunction map(const std::function<ScalarExpr(const ScalarExpr&)>& f) const;
    SuperFunction scaled(const ScalarExpr& s) const;

    SuperFunction operator-() const;
    friend SuperFunction operator+(const SuperFunction& x, const SuperFunction& y);
    friend SuperFunction operator-(const SuperFunction& x, const SuperFunction& y);
    friend SuperFunction operator*(const SuperFunction& x, const SuperFunction& y);
    SuperFunction& operator+=(const SuperFunction& o) { return *this = *this + o; }
    SuperFunction& operator-=(const SuperFunction& o) { return *this = *this - o; }
    SuperFunction& operator*=(const SuperFunction& o) { return *this = *this * o; }
    friend bool operator==(const SuperFunction& x, const SuperFunction& y);
    friend bool operator!=(const SuperFunction& x, const SuperFunction& y) { return !(x == y); }

    // re-parses with parse_super
    std::string str() const;

private:
    ScalarExpr c_[4];
};

// throws NoBody
SuperFunction super_inverse(const SuperFunction& z);
SuperFunction left_deriv(const SuperFunction& f, Generator v);
SuperFunction right_deriv(const SuperFunction& f, Generator v);
ScalarExpr berezin_integrate(const SuperFunction& f);
SuperFunction t_derive(const SuperFunction& f);
SuperFunction substitute(const SuperFunction& f, const Bindings& b);

SuperFunction parse_super(std::string_view text);
SuperFunction super_from_ast(const Ast& a);

}  // namespace sgeo
