#include "scalar_ring/scalar_expr.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "common/errors.hpp"

namespace sgeo {
namespace {

const Poly& poly_one() {
    static const Poly one(GaussQ(1));
    return one;
}

}  // namespace

ScalarExpr::ScalarExpr() {
    static const auto zero = std::make_shared<const Rep>(Rep{Poly(), poly_one()});
    r_ = zero;
}

ScalarExpr::ScalarExpr(long v) : ScalarExpr(GaussQ(v)) {}
ScalarExpr::ScalarExpr(const mpq_class& q) : ScalarExpr(GaussQ(q)) {}
ScalarExpr::ScalarExpr(const GaussQ& c) : r_(std::make_shared<const Rep>(Rep{Poly(c), poly_one()})) {}

ScalarExpr ScalarExpr::raw(Poly num, Poly den) {
    return ScalarExpr(std::make_shared<const Rep>(Rep{std::move(num), std::move(den)}));
}

ScalarExpr ScalarExpr::sym(SymId id) { return raw(Poly::variable(id), poly_one()); }
ScalarExpr ScalarExpr::sym(std::string_view name, int order) { return sym(intern(name, order)); }
ScalarExpr ScalarExpr::imag() { return ScalarExpr(GaussQ::imag_unit()); }
ScalarExpr ScalarExpr::from_poly(Poly p) { return raw(std::move(p), poly_one()); }

ScalarExpr ScalarExpr::fraction(Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZeroExpr("denominator normalizes to 0");
    if (num.is_zero()) return ScalarExpr();
    if (den.is_constant()) return raw(num.scaled(den.constant_value().inverse()), poly_one());
    Poly g = gcd(num, den);
    if (!g.is_one()) {
        num = *divide_exact(num, g);
        den = *divide_exact(den, g);
    }
    GaussQ lc = den.lead().c;
    if (!lc.is_one()) {
        GaussQ inv = lc.inverse();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    if (den.is_one()) return raw(std::move(num), poly_one());
    return raw(std::move(num), std::move(den));
}

std::optional<GaussQ> ScalarExpr::constant() const {
    if (!is_constant()) return std::nullopt;
    return num().constant_value();
}

ScalarExpr ScalarExpr::inverse() const {
    if (is_zero()) throw DivisionByZeroExpr("inverse of 0");
    // swapping keeps gcd = 1; only the monic normalization moves
    GaussQ lc = num().lead().c.inverse();
    return raw(den().scaled(lc), num().scaled(lc));
}

ScalarExpr ScalarExpr::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    auto u = static_cast<unsigned>(e);
    return raw(num().pow(u), den().pow(u));  // powers of coprime polys stay coprime
}

std::vector<SymId> ScalarExpr::symbols() const {
    auto a = num().vars(), b = den().vars();
    std::vector<SymId> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ScalarExpr ScalarExpr::operator-() const { return raw(-num(), den()); }

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den().is_one() && b.den().is_one()) return ScalarExpr::raw(a.num() + b.num(), poly_one());
    if (a.den() == b.den()) return ScalarExpr::fraction(a.num() + b.num(), a.den());
    Poly g = gcd(a.den(), b.den());
    Poly bd = *divide_exact(b.den(), g);
    Poly ad = *divide_exact(a.den(), g);
    return ScalarExpr::fraction(a.num() * bd + b.num() * ad, a.den() * bd);
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) { return a + (-b); }

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
    if (a.is_zero() || b.is_zero()) return ScalarExpr();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    if (a.den().is_one() && b.den().is_one()) return ScalarExpr::raw(a.num() * b.num(), poly_one());
    // cross-cancel; the product of monic coprime pieces is already canonical
    Poly g1 = gcd(a.num(), b.den());
    Poly g2 = gcd(b.num(), a.den());
    Poly an = *divide_exact(a.num(), g1), bd = *divide_exact(b.den(), g1);
    Poly bn = *divide_exact(b.num(), g2), ad = *divide_exact(a.den(), g2);
    Poly den = ad * bd;
    Poly num = an * bn;
    GaussQ lc = den.lead().c;
    if (!lc.is_one()) {
        GaussQ inv = lc.inverse();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    return ScalarExpr::raw(std::move(num), std::move(den));
}

ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) {
    if (b.is_zero()) throw DivisionByZeroExpr("divisor normalizes to 0");
    return a * b.inverse();
}

bool operator==(const ScalarExpr& a, const ScalarExpr& b) {
    return a.r_ == b.r_ || (a.num() == b.num() && a.den() == b.den());
}

// ---------------------------------------------------------------------------

namespace {

std::string mono_str(const Monomial& m) {
    std::string s;
    for (const auto& [id, e] : m.f) {
        if (!s.empty()) s += "*";
        s += symbol_text(id);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

bool negative(const GaussQ& c) {
    return (c.is_real() && sgn(c.re) < 0) || (sgn(c.re) == 0 && sgn(c.im) < 0);
}

}  // namespace

std::string poly_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
        bool neg = negative(t.c);
        GaussQ c = neg ? -t.c : t.c;
        if (first) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        first = false;
        if (t.m.is_one()) {
            s += c.str();
        } else if (c.is_one()) {
            s += mono_str(t.m);
        } else {
            s += c.str() + "*" + mono_str(t.m);
        }
    }
    return s;
}

std::string ScalarExpr::str() const {
    std::string n = poly_str(num());
    if (den().is_one()) return n;
    const Poly& d = den();
    bool bare = d.is_monomial() && d.lead().c.is_one() && d.lead().m.f.size() == 1;
    std::string ds = bare ? poly_str(d) : "(" + poly_str(d) + ")";
    // a single term reads left to right: -3*x/y = ((-3)*x)/y
    return (num().is_monomial() ? n : "(" + n + ")") + "/" + ds;
}

// ---------------------------------------------------------------------------

namespace {

Poly derive_poly(const Poly& p) {
    Poly out;
    for (SymId v : p.vars()) {
        if (!symbol(v).time_dependent) continue;
        Poly d = partial(p, v);
        if (d.is_zero()) continue;
        out = out + d * Poly::variable(derived(v));
    }
    return out;
}

ScalarExpr eval_poly(const Poly& p, const Bindings& b) {
    ScalarExpr acc;
    std::map<std::pair<SymId, std::uint32_t>, ScalarExpr> powers;
    for (const auto& t : p.terms()) {
        ScalarExpr term(t.c);
        std::vector<Term> rest;
        for (const auto& [id, e] : t.m.f) {
            auto it = b.find(id);
            if (it == b.end()) {
                term = term * ScalarExpr::from_poly(Poly::variable(id, e));
                continue;
            }
            auto key = std::make_pair(id, e);
            auto pw = powers.find(key);
            if (pw == powers.end()) pw = powers.emplace(key, it->second.pow(static_cast<int>(e))).first;
            term = term * pw->second;
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace

ScalarExpr derive(const ScalarExpr& e) {
    Poly dn = derive_poly(e.num());
    if (e.den().is_one()) return ScalarExpr::from_poly(std::move(dn));
    Poly dd = derive_poly(e.den());
    return ScalarExpr::fraction(dn * e.den() - e.num() * dd, e.den() * e.den());
}

ScalarExpr partial(const ScalarExpr& e, SymId v) {
    Poly dn = partial(e.num(), v);
    if (e.den().is_one()) return ScalarExpr::from_poly(std::move(dn));
    Poly dd = partial(e.den(), v);
    return ScalarExpr::fraction(dn * e.den() - e.num() * dd, e.den() * e.den());
}

Bindings resolve_bindings(const Bindings& b) {
    enum Mark { Fresh, Active, Done };
    std::map<SymId, Mark> mark;
    Bindings out;
    std::function<void(SymId)> visit = [&](SymId v) {
        Mark& m = mark[v];
        if (m == Done) return;
        if (m == Active) throw CyclicBinding("binding cycle through " + symbol_text(v));
        m = Active;
        const ScalarExpr& rhs = b.at(v);
        Bindings deps;
        for (SymId s : rhs.symbols()) {
            if (!b.count(s)) continue;
            visit(s);
            deps.emplace(s, out.at(s));
        }
        out[v] = deps.empty() ? rhs : substitute_closed(rhs, deps);
        mark[v] = Done;
    };
    for (const auto& [v, rhs] : b) visit(v);
    return out;
}

ScalarExpr substitute(const ScalarExpr& e, const Bindings& b) {
    if (b.empty()) return e;
    return substitute_closed(e, resolve_bindings(b));
}

ScalarExpr substitute_closed(const ScalarExpr& e, const Bindings& r) {
    if (r.empty()) return e;
    ScalarExpr n = eval_poly(e.num(), r);
    if (e.den().is_one()) return n;
    ScalarExpr d = eval_poly(e.den(), r);
    if (d.is_zero()) throw DivisionByZeroExpr("substitution sends the denominator to 0");
    return n / d;
}

}  // namespace sgeo
