#pragma once

#include <string>

#include "grassmann_core/super_function.hpp"

namespace sgeo::verify {

// typeset markup for an expression in the parser's grammar
std::string tex_expr(const std::string& text);
std::string tex(const SuperFunction& f);
std::string tex_symbol(const std::string& name, int order);

}  // namespace sgeo::verify
