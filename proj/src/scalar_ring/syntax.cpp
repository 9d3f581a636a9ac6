#include "scalar_ring/syntax.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "common/errors.hpp"

namespace sgeo {
namespace {

struct Folded {
    std::string text;
    std::vector<std::size_t> origin;  // origin[k] = byte offset of text[k] in the input
};

Folded fold(std::string_view in) {
    static const std::pair<std::string_view, std::string_view> table[] = {
        {"θ̄", "thetabar"}, {"θ", "theta"}, {"π", "pi"},
        {"ε", "eps"},            {"ħ", "hbar"},  {"′", "'"},
        {"″", "''"},             {"−", "-"},     {"·", "*"},
        {"₀", "0"}, {"₁", "1"}, {"₂", "2"}, {"₃", "3"}, {"₄", "4"},
        {"₅", "5"}, {"₆", "6"}, {"₇", "7"}, {"₈", "8"}, {"₉", "9"},
    };
    Folded f;
    std::size_t i = 0;
    while (i < in.size()) {
        bool hit = false;
        for (const auto& [from, to] : table) {
            if (in.substr(i, from.size()) == from) {
                for (char c : to) {
                    f.text += c;
                    f.origin.push_back(i);
                }
                i += from.size();
                hit = true;
                break;
            }
        }
        if (!hit) {
            f.text += in[i];
            f.origin.push_back(i++);
        }
    }
    f.origin.push_back(in.size());
    return f;
}

class Parser {
public:
    explicit Parser(Folded f) : f_(std::move(f)) {}

    AstPtr run() {
        AstPtr e = expr();
        skip();
        if (k_ < s().size()) fail({"operator", "end of input"}, "unexpected character");
        return e;
    }

private:
    const std::string& s() const { return f_.text; }
    std::size_t where(std::size_t k) const { return f_.origin[std::min(k, f_.origin.size() - 1)]; }

    [[noreturn]] void fail(std::vector<std::string> exp, const std::string& msg) const {
        throw ParseError(where(k_), std::move(exp), msg);
    }

    void skip() {
        while (k_ < s().size() && std::isspace(static_cast<unsigned char>(s()[k_]))) ++k_;
    }
    bool peek(char c) {
        skip();
        return k_ < s().size() && s()[k_] == c;
    }

    static AstPtr node(Ast::Kind k, std::size_t pos, AstPtr l = nullptr, AstPtr r = nullptr) {
        auto a = std::make_shared<Ast>();
        a->kind = k;
        a->pos = pos;
        a->lhs = std::move(l);
        a->rhs = std::move(r);
        return a;
    }

    AstPtr expr() {
        AstPtr e = term();
        for (;;) {
            if (peek('+')) {
                std::size_t p = where(k_++);
                e = node(Ast::Kind::Add, p, e, term());
            } else if (peek('-')) {
                std::size_t p = where(k_++);
                e = node(Ast::Kind::Sub, p, e, term());
            } else {
                return e;
            }
        }
    }

    AstPtr term() {
        AstPtr e = unary();
        for (;;) {
            if (peek('*')) {
                std::size_t p = where(k_++);
                e = node(Ast::Kind::Mul, p, e, unary());
            } else if (peek('/')) {
                std::size_t p = where(k_++);
                e = node(Ast::Kind::Div, p, e, unary());
            } else {
                return e;
            }
        }
    }

    // leading minus binds looser than ^: -x^2 = -(x^2)
    AstPtr unary() {
        if (peek('-')) {
            std::size_t p = where(k_++);
            return node(Ast::Kind::Neg, p, unary());
        }
        if (peek('+')) {
            ++k_;
            return unary();
        }
        return factor();
    }

    AstPtr factor() {
        AstPtr b = base();
        if (!peek('^')) return b;
        std::size_t p = where(k_++);
        skip();
        std::size_t start = k_;
        while (k_ < s().size() && std::isdigit(static_cast<unsigned char>(s()[k_]))) ++k_;
        if (start == k_) fail({"unsigned integer"}, "bad exponent");
        auto a = std::make_shared<Ast>();
        a->kind = Ast::Kind::Pow;
        a->pos = p;
        a->lhs = b;
        std::string digits = s().substr(start, k_ - start);
        if (digits.size() > 6) fail({"small exponent"}, "exponent too large");
        a->exponent = static_cast<unsigned>(std::stoul(digits));
        return a;
    }

    AstPtr base() {
        skip();
        if (k_ >= s().size()) fail({"number", "identifier", "'('"}, "unexpected end of input");
        char c = s()[k_];
        std::size_t p = where(k_);
        if (c == '(') {
            ++k_;
            AstPtr e = expr();
            if (!peek(')')) fail({"')'"}, "unbalanced parenthesis");
            ++k_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = k_;
            while (k_ < s().size() &&
                   (std::isalnum(static_cast<unsigned char>(s()[k_])) || s()[k_] == '_'))
                ++k_;
            std::string id = s().substr(start, k_ - start);
            int primes = 0;
            while (k_ < s().size() && s()[k_] == '\'') {
                ++primes;
                ++k_;
            }
            auto a = std::make_shared<Ast>();
            a->pos = p;
            if (id == "i" || id == "theta" || id == "thetabar") {
                if (primes) throw ParseError(p, {"operator"}, "'" + id + "' takes no primes");
                a->kind = id == "i" ? Ast::Kind::Imag
                          : id == "theta" ? Ast::Kind::Theta : Ast::Kind::ThetaBar;
                return a;
            }
            if (primes > 2) throw ParseError(p, {"at most two primes"}, "derivative order above 2");
            a->kind = Ast::Kind::Symbol;
            a->name = std::move(id);
            a->order = primes;
            return a;
        }
        fail({"number", "identifier", "'('"}, std::string("unexpected '") + c + "'");
    }

    AstPtr number() {
        std::size_t p = where(k_);
        std::string whole, frac;
        while (k_ < s().size() && std::isdigit(static_cast<unsigned char>(s()[k_]))) whole += s()[k_++];
        if (k_ < s().size() && s()[k_] == '.') {
            ++k_;
            while (k_ < s().size() && std::isdigit(static_cast<unsigned char>(s()[k_]))) frac += s()[k_++];
        }
        if (whole.empty() && frac.empty()) fail({"digit"}, "malformed number");
        mpz_class n(whole.empty() ? "0" : whole);
        mpz_class d = 1;
        for (char ch : frac) {
            n = n * 10 + (ch - '0');
            d *= 10;
        }
        auto a = std::make_shared<Ast>();
        a->kind = Ast::Kind::Number;
        a->pos = p;
        a->value = mpq_class(n, d);
        a->value.canonicalize();
        return a;
    }

    Folded f_;
    std::size_t k_ = 0;
};

}  // namespace

AstPtr parse_ast(std::string_view text) { return Parser(fold(text)).run(); }

bool mentions_theta(const Ast& a) {
    if (a.kind == Ast::Kind::Theta || a.kind == Ast::Kind::ThetaBar) return true;
    return (a.lhs && mentions_theta(*a.lhs)) || (a.rhs && mentions_theta(*a.rhs));
}

}  // namespace sgeo
