#include "oracle/numeric.hpp"

#include "common/errors.hpp"

namespace sgeo::oracle {

CQ CQ::inv() const {
    mpq_class n = re * re + im * im;
    if (sgn(n) == 0) throw SingularNumeric("division by zero");
    return {re / n, -im / n};
}

std::string CQ::str() const {
    if (sgn(im) == 0) return re.get_str();
    if (sgn(re) == 0) return im.get_str() + "*i";
    return "(" + re.get_str() + (sgn(im) > 0 ? "+" : "") + im.get_str() + "*i)";
}

NSN NSN::inv() const {
    if (c[0].zero()) throw SingularNumeric("supernumber without body has no inverse");
    // (b + s)^-1 = 1/b - s/b^2 + s^2/b^3, and s^2 = 2 s_t s_tb thetabar theta
    CQ ib = c[0].inv();
    CQ ib2 = ib * ib;
    NSN s{0, c[1], c[2], c[3]};
    NSN s2 = s * s;
    return NSN(ib) - s * NSN(ib2) + s2 * NSN(ib2 * ib);
}

std::string NSN::str() const {
    return "(" + c[0].str() + ", " + c[1].str() + ", " + c[2].str() + ", " + c[3].str() + ")";
}

namespace {

CQ poly_value(const Poly& p, const Binding& b) {
    CQ acc;
    for (const auto& t : p.terms()) {
        CQ v(t.c.re, t.c.im);
        for (const auto& [id, e] : t.m.f) {
            auto it = b.find(id);
            if (it == b.end()) throw UnboundSymbol(symbol_text(id));
            for (std::uint32_t k = 0; k < e; ++k) v = v * it->second;
        }
        acc = acc + v;
    }
    return acc;
}

}  // namespace

CQ numeric_eval(const ScalarExpr& e, const Binding& b) {
    CQ den = poly_value(e.den(), b);
    if (den.zero()) throw SingularNumeric("denominator " + poly_str(e.den()) + " vanishes");
    return poly_value(e.num(), b) * den.inv();
}

NSN numeric_eval(const SuperFunction& f, const Binding& b) {
    NSN out;
    for (int k = 0; k < 4; ++k)
        if (!f.component(k).is_zero()) out.c[static_cast<std::size_t>(k)] = numeric_eval(f.component(k), b);
    return out;
}

}  // namespace sgeo::oracle
