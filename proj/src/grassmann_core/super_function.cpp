#include "grassmann_core/super_function.hpp"

#include "common/errors.hpp"
#include "scalar_ring/parse_scalar.hpp"

namespace sgeo {

const char* parity_name(Parity p) {
    switch (p) {
        case Parity::Even: return "even";
        case Parity::Odd: return "odd";
        case Parity::Mixed: return "mixed";
    }
    return "?";
}

SuperFunction::SuperFunction(ScalarExpr body) { c_[0] = std::move(body); }

SuperFunction::SuperFunction(ScalarExpr u1, ScalarExpr ut, ScalarExpr utb, ScalarExpr utbt) {
    c_[0] = std::move(u1);
    c_[1] = std::move(ut);
    c_[2] = std::move(utb);
    c_[3] = std::move(utbt);
}

SuperFunction SuperFunction::theta() { return {0, 1, 0, 0}; }
SuperFunction SuperFunction::thetabar() { return {0, 0, 1, 0}; }
SuperFunction SuperFunction::thetabar_theta() { return {0, 0, 0, 1}; }

Parity SuperFunction::parity() const {
    bool odd_free = c_[1].is_zero() && c_[2].is_zero();
    if (odd_free) return Parity::Even;
    if (c_[0].is_zero() && c_[3].is_zero()) return Parity::Odd;
    return Parity::Mixed;
}

bool SuperFunction::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

SuperFunction SuperFunction::map(const std::function<ScalarExpr(const ScalarExpr&)>& f) const {
    return {f(c_[0]), f(c_[1]), f(c_[2]), f(c_[3])};
}

SuperFunction SuperFunction::scaled(const ScalarExpr& s) const {
    return {c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s};
}

SuperFunction SuperFunction::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

SuperFunction operator+(const SuperFunction& x, const SuperFunction& y) {
    return {x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2], x.c_[3] + y.c_[3]};
}

SuperFunction operator-(const SuperFunction& x, const SuperFunction& y) {
    return {x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2], x.c_[3] - y.c_[3]};
}

// theta*thetabar = -thetabar*theta, thetabar*theta stays
SuperFunction operator*(const SuperFunction& x, const SuperFunction& y) {
    const auto& a = x.c_;
    const auto& b = y.c_;
    return {a[0] * b[0],
            a[0] * b[1] + a[1] * b[0],
            a[0] * b[2] + a[2] * b[0],
            a[0] * b[3] + a[3] * b[0] - a[1] * b[2] + a[2] * b[1]};
}

bool operator==(const SuperFunction& x, const SuperFunction& y) {
    for (int k = 0; k < 4; ++k)
        if (x.c_[k] != y.c_[k]) return false;
    return true;
}

std::string SuperFunction::str() const {
    static const char* basis[] = {"", "theta", "thetabar", "thetabar*theta"};
    std::string s;
    for (int k = 0; k < 4; ++k) {
        const ScalarExpr& c = c_[k];
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (k == 0) s += c.str();
        else if (c.is_one()) s += basis[k];
        else if (c == ScalarExpr(-1)) s += std::string("-") + basis[k];
        else s += "(" + c.str() + ")*" + basis[k];
    }
    return s.empty() ? "0" : s;
}

SuperFunction super_inverse(const SuperFunction& z) {
    if (z.body().is_zero()) throw NoBody("element " + z.str() + " has zero body");
    ScalarExpr ib = z.body().inverse();
    SuperFunction m = z.soul().scaled(-ib);
    // soul^3 = 0 with two generators
    return (SuperFunction(1) + m + m * m).scaled(ib);
}

SuperFunction left_deriv(const SuperFunction& f, Generator v) {
    if (v == Generator::Theta) return {f.ut(), 0, -f.utbt(), 0};
    return {f.utb(), f.utbt(), 0, 0};
}

SuperFunction right_deriv(const SuperFunction& f, Generator v) {
    if (v == Generator::Theta) return {f.ut(), 0, f.utbt(), 0};
    return {f.utb(), -f.utbt(), 0, 0};
}

ScalarExpr berezin_integrate(const SuperFunction& f) { return f.utbt(); }

SuperFunction t_derive(const SuperFunction& f) {
    return f.map([](const ScalarExpr& e) { return derive(e); });
}

SuperFunction substitute(const SuperFunction& f, const Bindings& b) {
    if (b.empty()) return f;
    Bindings r = resolve_bindings(b);
    return f.map([&](const ScalarExpr& e) { return substitute_closed(e, r); });
}

SuperFunction super_from_ast(const Ast& a) {
    using K = Ast::Kind;
    if (!mentions_theta(a)) return SuperFunction(scalar_from_ast(a));
    switch (a.kind) {
        case K::Theta: return SuperFunction::theta();
        case K::ThetaBar: return SuperFunction::thetabar();
        case K::Add: return super_from_ast(*a.lhs) + super_from_ast(*a.rhs);
        case K::Sub: return super_from_ast(*a.lhs) - super_from_ast(*a.rhs);
        case K::Mul: return super_from_ast(*a.lhs) * super_from_ast(*a.rhs);
        case K::Div: {
            SuperFunction d = super_from_ast(*a.rhs);
            if (d.body().is_zero()) throw DivisionByZeroExpr("divisor without body at offset " + std::to_string(a.pos));
            return super_from_ast(*a.lhs) * super_inverse(d);
        }
        case K::Pow: {
            SuperFunction base = super_from_ast(*a.lhs), acc(1);
            for (unsigned k = 0; k < a.exponent; ++k) acc *= base;
            return acc;
        }
        case K::Neg: return -super_from_ast(*a.lhs);
        default: break;
    }
    throw ParseError(a.pos, {}, "unexpected node");
}

SuperFunction parse_super(std::string_view text) { return super_from_ast(*parse_ast(text)); }

}  // namespace sgeo
