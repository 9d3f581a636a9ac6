#include "verify/tex.hpp"

#include <map>

#include "common/errors.hpp"

namespace sgeo::verify {
namespace {

int level(const Ast& a) {
    switch (a.kind) {
        case Ast::Kind::Add:
        case Ast::Kind::Sub: return 1;
        case Ast::Kind::Mul: return 2;
        case Ast::Kind::Neg: return 3;
        case Ast::Kind::Pow: return 4;
        default: return 5;  // atoms and \frac
    }
}

std::string render(const Ast& a);

std::string wrap(const Ast& a, int min_level) {
    std::string s = render(a);
    return level(a) < min_level ? "\\left(" + s + "\\right)" : s;
}

std::string render(const Ast& a) {
    switch (a.kind) {
        case Ast::Kind::Number: {
            if (a.value.get_den() == 1) return a.value.get_num().get_str();
            return "\\frac{" + a.value.get_num().get_str() + "}{" + a.value.get_den().get_str() + "}";
        }
        case Ast::Kind::Imag: return "i";
        case Ast::Kind::Symbol: return tex_symbol(a.name, a.order);
        case Ast::Kind::Theta: return "\\theta";
        case Ast::Kind::ThetaBar: return "\\bar\\theta";
        case Ast::Kind::Add: return render(*a.lhs) + " + " + wrap(*a.rhs, 1);
        case Ast::Kind::Sub: return render(*a.lhs) + " - " + wrap(*a.rhs, 2);
        case Ast::Kind::Mul: return wrap(*a.lhs, 2) + " " + wrap(*a.rhs, 3);
        case Ast::Kind::Div: return "\\frac{" + render(*a.lhs) + "}{" + render(*a.rhs) + "}";
        case Ast::Kind::Neg: return "-" + wrap(*a.lhs, 3);
        case Ast::Kind::Pow: return "{" + wrap(*a.lhs, 5) + "}^{" + std::to_string(a.exponent) + "}";
    }
    throw Error("unknown expression node");
}

}  // namespace

std::string tex_symbol(const std::string& name, int order) {
    static const std::map<std::string, std::string> fixed{
        {"eps", "\\epsilon"}, {"hbar", "\\hbar"}, {"phi", "\\phi"}, {"sigma1", "\\sigma_1"},
        {"aB", "a_B"},        {"aS", "a_S"},     {"bB", "b_B"},    {"bS", "b_S"},
        {"cB", "c_B"},        {"cS", "c_S"},     {"dB", "d_B"},    {"dS", "d_S"},
        {"eB", "e_B"},        {"eS", "e_S"}};
    std::string base;
    if (auto it = fixed.find(name); it != fixed.end()) {
        base = it->second;
    } else if (name.rfind("qpi", 0) == 0 && name.size() > 3) {
        base = "\\pi^{Q}_{" + name.substr(3) + "}";
    } else if (name.rfind("pi", 0) == 0 && name.size() > 2) {
        base = "\\pi_{" + name.substr(2) + "}";
    } else {
        bool matched = false;
        for (const char* g : {"gamma", "delta", "alpha", "beta"}) {
            std::string gs(g);
            if (name == gs + "t") base = "\\tilde\\" + gs + "_{\\theta}", matched = true;
            if (name == gs + "tb") base = "\\tilde\\" + gs + "_{\\bar\\theta}", matched = true;
        }
        if (!matched) base = name.size() == 1 ? name : "\\mathrm{" + name + "}";
    }
    if (order > 0) base = "{" + base + "}" + std::string(static_cast<std::size_t>(order), '\'');
    return base;
}

std::string tex_expr(const std::string& text) { return render(*parse_ast(text)); }

std::string tex(const SuperFunction& f) { return tex_expr(f.str()); }

}  // namespace sgeo::verify
