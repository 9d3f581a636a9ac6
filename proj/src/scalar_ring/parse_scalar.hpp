#pragma once

#include <string_view>

#include "scalar_ring/scalar_expr.hpp"
#include "scalar_ring/syntax.hpp"

namespace sgeo {

// theta/thetabar are rejected here; super expressions go through parse_super.
ScalarExpr parse_scalar(std::string_view text);
ScalarExpr scalar_from_ast(const Ast& a);

}  // namespace sgeo
