#include "scalar_ring/poly.hpp"

#include <algorithm>

#include "common/errors.hpp"

namespace sgeo {

std::uint32_t Monomial::exponent(SymId v) const {
    for (const auto& [id, e] : f)
        if (id == v) return e;
    return 0;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    const std::size_t n = std::min(a.f.size(), b.f.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.f[i].first != b.f[i].first) return a.f[i].first < b.f[i].first ? 1 : -1;
        if (a.f[i].second != b.f[i].second) return a.f[i].second > b.f[i].second ? 1 : -1;
    }
    if (a.f.size() != b.f.size()) return a.f.size() > b.f.size() ? 1 : -1;
    return 0;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.f.reserve(a.f.size() + b.f.size());
    std::size_t i = 0, j = 0;
    while (i < a.f.size() || j < b.f.size()) {
        if (j == b.f.size() || (i < a.f.size() && a.f[i].first < b.f[j].first)) {
            r.f.push_back(a.f[i++]);
        } else if (i == a.f.size() || b.f[j].first < a.f[i].first) {
            r.f.push_back(b.f[j++]);
        } else {
            r.f.emplace_back(a.f[i].first, a.f[i].second + b.f[j].second);
            ++i, ++j;
        }
    }
    r.deg = a.deg + b.deg;
    return r;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
    if (d.deg > m.deg) return false;
    std::size_t j = 0;
    for (const auto& [id, e] : d.f) {
        while (j < m.f.size() && m.f[j].first < id) ++j;
        if (j == m.f.size() || m.f[j].first != id || m.f[j].second < e) return false;
    }
    return true;
}

Monomial mono_div(const Monomial& m, const Monomial& d) {
    Monomial r;
    std::size_t j = 0;
    for (const auto& [id, e] : m.f) {
        std::uint32_t sub = 0;
        if (j < d.f.size() && d.f[j].first == id) sub = d.f[j++].second;
        if (e > sub) r.f.emplace_back(id, e - sub);
    }
    r.deg = m.deg - d.deg;
    return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.f.size() && j < b.f.size()) {
        if (a.f[i].first < b.f[j].first) ++i;
        else if (b.f[j].first < a.f[i].first) ++j;
        else {
            std::uint32_t e = std::min(a.f[i].second, b.f[j].second);
            r.f.emplace_back(a.f[i].first, e);
            r.deg += e;
            ++i, ++j;
        }
    }
    return r;
}

Monomial mono_var(SymId v, std::uint32_t e) {
    Monomial m;
    if (e) {
        m.f.emplace_back(v, e);
        m.deg = e;
    }
    return m;
}

// ---------------------------------------------------------------------------

Poly::Poly(const GaussQ& c) {
    if (!c.is_zero()) t_.push_back(Term{Monomial{}, c});
}

Poly Poly::variable(SymId v, std::uint32_t e) { return monomial(mono_var(v, e), GaussQ(1)); }

Poly Poly::monomial(Monomial m, GaussQ c) {
    Poly p;
    if (!c.is_zero()) p.t_.push_back(Term{std::move(m), std::move(c)});
    return p;
}

Poly Poly::from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(),
              [](const Term& x, const Term& y) { return grlex_cmp(x.m, y.m) > 0; });
    Poly p;
    p.t_.reserve(ts.size());
    for (auto& t : ts) {
        if (!p.t_.empty() && p.t_.back().m == t.m) {
            p.t_.back().c += t.c;
            if (p.t_.back().c.is_zero()) p.t_.pop_back();
        } else if (!t.c.is_zero()) {
            p.t_.push_back(std::move(t));
        }
    }
    return p;
}

Poly Poly::from_sorted(std::vector<Term> ts) {
    Poly p;
    p.t_ = std::move(ts);
    return p;
}

GaussQ Poly::constant_value() const { return t_.empty() ? GaussQ(0) : t_[0].c; }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

namespace {

Poly merge(const Poly& a, const Poly& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    const auto& x = a.terms();
    const auto& y = b.terms();
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        int c;
        if (i == x.size()) c = -1;
        else if (j == y.size()) c = 1;
        else c = grlex_cmp(x[i].m, y[j].m);
        if (c > 0) {
            out.push_back(x[i++]);
        } else if (c < 0) {
            out.push_back(subtract ? Term{y[j].m, -y[j].c} : y[j]);
            ++j;
        } else {
            GaussQ s = subtract ? x[i].c - y[j].c : x[i].c + y[j].c;
            if (!s.is_zero()) out.push_back(Term{x[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    return Poly::from_sorted(std::move(out));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return merge(a, b, false);
}

Poly operator-(const Poly& a, const Poly& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    return merge(a, b, true);
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.is_constant()) return b.scaled(a.constant_value());
    if (b.is_constant()) return a.scaled(b.constant_value());
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) out.push_back(Term{mono_mul(s.m, t.m), s.c * t.c});
    return Poly::from_terms(std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.t_[i].m != b.t_[i].m || a.t_[i].c != b.t_[i].c) return false;
    return true;
}

Poly Poly::scaled(const GaussQ& c) const {
    if (c.is_zero()) return Poly();
    if (c.is_one()) return *this;
    Poly r = *this;
    for (auto& t : r.t_) t.c *= c;
    return r;
}

Poly Poly::shifted(const Monomial& m) const {
    if (m.is_one()) return *this;
    Poly r = *this;
    for (auto& t : r.t_) t.m = mono_mul(t.m, m);
    return r;  // order preserved: grlex is a monomial order
}

Poly Poly::unshifted(const Monomial& m) const {
    if (m.is_one()) return *this;
    Poly r = *this;
    for (auto& t : r.t_) t.m = mono_div(t.m, m);
    return r;
}

Poly Poly::monic() const {
    if (t_.empty() || t_[0].c.is_one()) return *this;
    return scaled(t_[0].c.inverse());
}

Poly Poly::pow(unsigned e) const {
    Poly r(GaussQ(1)), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::uint32_t Poly::degree_in(SymId v) const {
    std::uint32_t d = 0;
    for (const auto& t : t_) d = std::max(d, t.m.exponent(v));
    return d;
}

std::vector<SymId> Poly::vars() const {
    std::vector<SymId> v;
    for (const auto& t : t_)
        for (const auto& [id, e] : t.m.f) v.push_back(id);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Monomial Poly::min_monomial() const {
    if (t_.empty()) return Monomial{};
    Monomial g = t_[0].m;
    for (std::size_t i = 1; i < t_.size() && !g.is_one(); ++i) g = mono_gcd(g, t_[i].m);
    return g;
}

std::map<std::uint32_t, Poly> Poly::coeffs_in(SymId v) const {
    std::map<std::uint32_t, std::vector<Term>> bucket;
    for (const auto& t : t_) {
        std::uint32_t e = t.m.exponent(v);
        bucket[e].push_back(Term{e ? mono_div(t.m, mono_var(v, e)) : t.m, t.c});
    }
    std::map<std::uint32_t, Poly> out;
    for (auto& [e, ts] : bucket) out.emplace(e, Poly::from_terms(std::move(ts)));
    return out;
}

// ---------------------------------------------------------------------------

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZeroExpr("polynomial division by zero");
    if (a.is_zero()) return Poly();
    if (b.is_constant()) return a.scaled(b.constant_value().inverse());
    if (b.is_monomial()) {
        const Term& bt = b.lead();
        GaussQ inv = bt.c.inverse();
        std::vector<Term> out;
        out.reserve(a.size());
        for (const auto& t : a.terms()) {
            if (!mono_divides(bt.m, t.m)) return std::nullopt;
            out.push_back(Term{mono_div(t.m, bt.m), t.c * inv});
        }
        return Poly::from_terms(std::move(out));
    }
    const Term& bl = b.lead();
    GaussQ binv = bl.c.inverse();
    Poly r = a;
    std::vector<Term> q;
    while (!r.is_zero()) {
        const Term& rl = r.lead();
        if (!mono_divides(bl.m, rl.m)) return std::nullopt;
        Term t{mono_div(rl.m, bl.m), rl.c * binv};
        r = r - Poly::monomial(t.m, t.c) * b;
        q.push_back(std::move(t));
    }
    return Poly::from_terms(std::move(q));
}

namespace {

Poly exact(const Poly& a, const Poly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw Error("internal: inexact division in gcd");
    return *q;
}

Poly content_in(const Poly& p, SymId v);

Poly prem(Poly a, const Poly& b, SymId v) {
    const std::uint32_t db = b.degree_in(v);
    const Poly lcb = b.coeffs_in(v).rbegin()->second;
    while (!a.is_zero()) {
        std::uint32_t da = a.degree_in(v);
        if (da < db) break;
        Poly lca = a.coeffs_in(v).rbegin()->second;
        a = lcb * a - (lca * b).shifted(mono_var(v, da - db));
    }
    return a;
}

Poly primitive_in(const Poly& p, SymId v) {
    if (p.is_zero()) return p;
    return exact(p, content_in(p, v));
}

Poly gcd_impl(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, SymId v) {
    auto cs = p.coeffs_in(v);
    Poly g;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        g = gcd_impl(g, it->second);
        if (g.is_constant()) return Poly(GaussQ(1));
    }
    return g;
}

// a, b nonzero, non-constant, without monomial content
Poly gcd_primitive(Poly a, Poly b) {
    for (;;) {
        if (a.is_constant() || b.is_constant()) return Poly(GaussQ(1));
        if (a == b) return a.monic();
        auto va = a.vars(), vb = b.vars();
        std::vector<SymId> only_a, only_b, common;
        std::set_difference(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(only_a));
        std::set_difference(vb.begin(), vb.end(), va.begin(), va.end(), std::back_inserter(only_b));
        std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
        if (common.empty()) return Poly(GaussQ(1));
        // a variable present on one side only divides nothing on the other
        if (!only_a.empty()) { a = content_in(a, only_a.front()); continue; }
        if (!only_b.empty()) { b = content_in(b, only_b.front()); continue; }

        SymId v = common.front();
        std::uint32_t best = UINT32_MAX;
        for (SymId c : common) {
            std::uint32_t d = std::max(a.degree_in(c), b.degree_in(c));
            if (d < best) best = d, v = c;
        }
        Poly ca = content_in(a, v), cb = content_in(b, v);
        Poly c = gcd_impl(ca, cb);
        Poly pa = exact(a, ca), pb = exact(b, cb);
        if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
        while (!pb.is_zero() && pb.degree_in(v) > 0) {
            Poly r = prem(pa, pb, v);
            pa = std::move(pb);
            pb = primitive_in(r, v);
        }
        Poly g = pb.is_zero() ? primitive_in(pa, v) : Poly(GaussQ(1));
        return (c * g).monic();
    }
}

Poly gcd_impl(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly(GaussQ(1));
    Monomial ma = a.min_monomial(), mb = b.min_monomial();
    Monomial mg = mono_gcd(ma, mb);
    Poly ra = a.unshifted(ma), rb = b.unshifted(mb);
    Poly g = gcd_primitive(std::move(ra), std::move(rb));
    return g.shifted(mg).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) { return gcd_impl(a, b); }

Poly partial(const Poly& p, SymId v) {
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        std::uint32_t e = t.m.exponent(v);
        if (!e) continue;
        Monomial m = mono_div(t.m, mono_var(v, 1));
        out.push_back(Term{std::move(m), t.c * GaussQ(static_cast<long>(e))});
    }
    return Poly::from_terms(std::move(out));
}

}  // namespace sgeo
