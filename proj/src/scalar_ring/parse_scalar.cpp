#include "scalar_ring/parse_scalar.hpp"

#include "common/errors.hpp"

namespace sgeo {

ScalarExpr scalar_from_ast(const Ast& a) {
    using K = Ast::Kind;
    switch (a.kind) {
        case K::Number: return ScalarExpr(a.value);
        case K::Imag: return ScalarExpr::imag();
        case K::Symbol: return ScalarExpr::sym(intern(a.name, a.order));
        case K::Theta:
        case K::ThetaBar:
            throw ParseError(a.pos, {"scalar operand"}, "Grassmann generator in a scalar expression");
        case K::Add: return scalar_from_ast(*a.lhs) + scalar_from_ast(*a.rhs);
        case K::Sub: return scalar_from_ast(*a.lhs) - scalar_from_ast(*a.rhs);
        case K::Mul: return scalar_from_ast(*a.lhs) * scalar_from_ast(*a.rhs);
        case K::Div: return scalar_from_ast(*a.lhs) / scalar_from_ast(*a.rhs);
        case K::Pow: return scalar_from_ast(*a.lhs).pow(static_cast<int>(a.exponent));
        case K::Neg: return -scalar_from_ast(*a.lhs);
    }
    throw ParseError(a.pos, {}, "unknown node");
}

ScalarExpr parse_scalar(std::string_view text) { return scalar_from_ast(*parse_ast(text)); }

}  // namespace sgeo
