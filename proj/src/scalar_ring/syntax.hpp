#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace sgeo {

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

// Parse tree for scalar and super expressions. Products keep written order.
struct Ast {
    enum class Kind { Number, Imag, Symbol, Theta, ThetaBar, Add, Sub, Mul, Div, Pow, Neg };
    Kind kind = Kind::Number;
    mpq_class value;         // Number
    std::string name;        // Symbol
    int order = 0;           // Symbol primes
    unsigned exponent = 0;   // Pow
    AstPtr lhs, rhs;         // rhs unused for Neg/Pow
    std::size_t pos = 0;     // byte offset in the original text
};

// Unicode aliases (π, subscript digits, primes, ε, ħ, θ, θ̄, minus sign) are folded first.
AstPtr parse_ast(std::string_view text);

bool mentions_theta(const Ast& a);

}  // namespace sgeo
