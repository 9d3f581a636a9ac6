#include "models/models.hpp"

#include "common/errors.hpp"
#include "common/parallel.hpp"

namespace sgeo {
namespace {

ScalarExpr S(const char* name) { return ScalarExpr::sym(name); }
ScalarExpr I() { return ScalarExpr::imag(); }

SuperFunction tbt() { return SuperFunction::thetabar_theta(); }

SuperFunction even_sym(const std::string& stem) {
    return SuperFunction::even(S((stem + "B").c_str()), S((stem + "S").c_str()));
}

void require_even(const SuperFunction& f, const char* what) {
    if (f.parity() == Parity::Odd || f.parity() == Parity::Mixed)
        throw ConstraintViolated(std::string(what) + " must be even, got " + f.str());
}

// b e - c d split into body and soul
std::pair<ScalarExpr, ScalarExpr> inner_det(const SuperFunction& b, const SuperFunction& c,
                                            const SuperFunction& d, const SuperFunction& e) {
    ScalarExpr body = b.u1() * e.u1() - c.u1() * d.u1();
    ScalarExpr soul = b.utbt() * e.u1() + b.u1() * e.utbt() - c.utbt() * d.u1() - c.u1() * d.utbt();
    return {body, soul};
}

struct RawPis {
    ScalarExpr p1, p2, p3, p4, p5;
};

RawPis raw_pis(const ScalarExpr& gt, const ScalarExpr& gtb, const ScalarExpr& dt, const ScalarExpr& dtb,
               const SuperFunction& b, const SuperFunction& c, const SuperFunction& d, const SuperFunction& e) {
    return {gt * e.u1() - dt * c.u1(), gtb * e.u1() - dtb * c.u1(), dt * b.u1() - gt * d.u1(),
            dtb * b.u1() - gtb * d.u1(), gtb * dt - gt * dtb};
}

SuperMatrix3 frame(const SuperFunction& a, const SuperFunction& alpha, const SuperFunction& beta,
                   const SuperFunction& gamma, const SuperFunction& delta, const SuperFunction& b,
                   const SuperFunction& c, const SuperFunction& d, const SuperFunction& e) {
    SuperMatrix3 m;
    m(T, T) = a, m(T, TH) = alpha, m(T, THB) = beta;
    m(TH, T) = gamma, m(TH, TH) = b, m(TH, THB) = c;
    m(THB, T) = delta, m(THB, TH) = d, m(THB, THB) = e;
    return m;
}

SuperMatrix3 cpi_upper(const CpiPis& p) {
    SuperMatrix3 g;
    g(T, T) = SuperFunction(1) - tbt().scaled(2 * p.pi5);
    g(T, TH) = g(TH, T) = odd_pair(-p.pi3, -p.pi4);
    g(T, THB) = g(THB, T) = odd_pair(p.pi1, p.pi2);
    g(TH, THB) = SuperFunction(p.a);
    g(THB, TH) = SuperFunction(-p.a);
    return g;
}

SuperFunction subst_closed(const SuperFunction& f, const Bindings& r) {
    return f.map([&](const ScalarExpr& e) { return substitute_closed(e, r); });
}

void freeze_stage(std::array<SuperFunction, 27>& g, const Bindings& r) {
    parallel_for(27, [&](std::size_t i) { g[i] = subst_closed(g[i], r); });
}

std::vector<Residual> curvature_residuals(const Curvature& c, const Bindings& b) {
    Bindings r = resolve_bindings(b);
    std::vector<Residual> out(10);
    parallel_for(10, [&](std::size_t i) {
        if (i < 9) {
            int a = static_cast<int>(i / 3), bb = static_cast<int>(i % 3);
            out[i] = {ricci_name(a, bb), subst_closed(c.curv.ric(a, bb), r)};
        } else {
            out[i] = {"R", subst_closed(c.curv.scalar, r)};
        }
    });
    return out;
}

bool all_zero(const std::vector<Residual>& rs) {
    for (const auto& r : rs)
        if (!r.value.is_zero()) return false;
    return true;
}

SymId symbol_of(const ScalarExpr& e, const char* what) {
    auto s = as_symbol(e);
    if (!s) throw Error(std::string("flatness analysis needs a bare symbol for ") + what + ", got " + e.str());
    return *s;
}

}  // namespace

ScalarExpr pi_sym(int k, int order) { return ScalarExpr::sym("pi" + std::to_string(k), order); }
ScalarExpr qpi_sym(int k, int order) { return ScalarExpr::sym("qpi" + std::to_string(k), order); }

std::optional<SymId> as_symbol(const ScalarExpr& e) {
    if (!e.den().is_one() || !e.num().is_monomial()) return std::nullopt;
    auto vars = e.symbols();
    if (vars.size() != 1) return std::nullopt;
    if (e != ScalarExpr::sym(vars[0])) return std::nullopt;
    return vars[0];
}

SuperFunction odd_pair(const ScalarExpr& c1, const ScalarExpr& c2) { return SuperFunction::odd(c1, c2); }

// ---------------------------------------------------------------- classical

CpiRaw CpiRaw::symbolic(int a) {
    CpiRaw r;
    r.a = a;
    r.gamma_t = S("gammat"), r.gamma_tb = S("gammatb");
    r.delta_t = S("deltat"), r.delta_tb = S("deltatb");
    r.b = even_sym("b"), r.c = even_sym("c"), r.d = even_sym("d"), r.e = even_sym("e");
    return r;
}

CpiPis CpiPis::symbolic(ScalarExpr a) {
    CpiPis p;
    p.a = a;
    p.pi1 = pi_sym(1), p.pi2 = pi_sym(2), p.pi3 = pi_sym(3), p.pi4 = pi_sym(4);
    p.pi5 = a * (p.pi2 * p.pi3 - p.pi1 * p.pi4);
    return p;
}

void cpi_check(const CpiRaw& raw) {
    if (raw.a != 1 && raw.a != -1) throw ConstraintViolated("a must be +1 or -1");
    require_even(raw.b, "b"), require_even(raw.c, "c"), require_even(raw.d, "d"), require_even(raw.e, "e");
    auto [body, soul] = inner_det(raw.b, raw.c, raw.d, raw.e);
    if (body != ScalarExpr(raw.a))
        throw ConstraintViolated("body: bB eB - cB dB = " + body.str() + ", expected " + std::to_string(raw.a));
    if (!soul.is_zero())
        throw ConstraintViolated("soul: bS eB + bB eS - cS dB - cB dS = " + soul.str() + ", expected 0");
}

SuperMatrix3 cpi_vierbein(const CpiRaw& raw) {
    cpi_check(raw);
    return frame(SuperFunction(raw.a), {}, {}, odd_pair(raw.gamma_t, raw.gamma_tb),
                 odd_pair(raw.delta_t, raw.delta_tb), raw.b, raw.c, raw.d, raw.e);
}

SuperMatrix3 general_frame(const CpiRaw& raw) {
    return frame(SuperFunction(raw.a), {}, {}, odd_pair(raw.gamma_t, raw.gamma_tb),
                 odd_pair(raw.delta_t, raw.delta_tb), raw.b, raw.c, raw.d, raw.e);
}

CpiPis cpi_pis(const CpiRaw& raw) {
    RawPis r = raw_pis(raw.gamma_t, raw.gamma_tb, raw.delta_t, raw.delta_tb, raw.b, raw.c, raw.d, raw.e);
    CpiPis p;
    p.a = raw.a;
    p.pi1 = r.p1, p.pi2 = r.p2, p.pi3 = r.p3, p.pi4 = r.p4, p.pi5 = r.p5;
    return p;
}

Metric cpi_metric(const CpiPis& p) { return make_metric(cpi_upper(p)); }

CpiRaw cpi_family(int which, const CpiRaw& seed, FamilyText text) {
    CpiRaw r = seed;
    ScalarExpr a(seed.a);
    ScalarExpr bB = seed.b.u1(), bS = seed.b.utbt(), cB = seed.c.u1(), cS = seed.c.utbt();
    ScalarExpr dB = seed.d.u1(), dS = seed.d.utbt(), eB = seed.e.u1(), eS = seed.e.utbt();
    if (which == 1) {
        cB = -a / dB;
        cS = text == FamilyText::Corrected ? (a * dS + dB * bB * eS) / (dB * dB)
                                           : (-a * dS + dB * bB * eS) / (dB * dB);
        r.e = SuperFunction::even(0, eS);
        r.c = SuperFunction::even(cB, cS);
    } else if (which == 2) {
        bB = (a + cB * dB) / eB;
        bS = (-a * eS - cB * dB * eS) / (eB * eB) + (cB * dS * eB + cS * dB * eB) / (eB * eB);
        r.b = SuperFunction::even(bB, bS);
    } else {
        throw Error("no solution family " + std::to_string(which));
    }
    return r;
}

// ---------------------------------------------------------------- quantum

QpiRaw QpiRaw::symbolic(int aB) {
    QpiRaw r;
    r.aB = aB;
    r.aS = S("aS"), r.eps = S("eps"), r.hbar = S("hbar");
    r.alpha_t = S("alphat"), r.alpha_tb = S("alphatb"), r.beta_t = S("betat"), r.beta_tb = S("betatb");
    r.gamma_t = S("gammat"), r.gamma_tb = S("gammatb"), r.delta_t = S("deltat"), r.delta_tb = S("deltatb");
    r.b = even_sym("b"), r.c = even_sym("c"), r.d = even_sym("d"), r.e = even_sym("e");
    return r;
}

QpiPis QpiPis::from(ScalarExpr p1, ScalarExpr p2, ScalarExpr p3, ScalarExpr p4, ScalarExpr p5, ScalarExpr p6,
                    ScalarExpr p7) {
    QpiPis q;
    q.pi[1] = std::move(p1), q.pi[2] = std::move(p2), q.pi[3] = std::move(p3), q.pi[4] = std::move(p4);
    q.pi[5] = std::move(p5), q.pi[6] = std::move(p6), q.pi[7] = std::move(p7);
    q.phi = q.pi[2] * q.pi[3] - q.pi[1] * q.pi[4];
    q.sigma1 = q.phi - q.pi[5] * q.pi[7];
    return q;
}

QpiPis QpiPis::symbolic() {
    return from(qpi_sym(1), qpi_sym(2), qpi_sym(3), qpi_sym(4), qpi_sym(5), qpi_sym(6), qpi_sym(7));
}

namespace {

RawPis qpi_raw_pis(const QpiRaw& raw) {
    return raw_pis(raw.gamma_t, raw.gamma_tb, raw.delta_t, raw.delta_tb, raw.b, raw.c, raw.d, raw.e);
}

// alpha_theta pi2 - alpha_thetabar pi1 + beta_theta pi4 - beta_thetabar pi3
ScalarExpr mixing(const QpiRaw& raw, const RawPis& r) {
    return raw.alpha_t * r.p2 - raw.alpha_tb * r.p1 + raw.beta_t * r.p4 - raw.beta_tb * r.p3;
}

ScalarExpr quantum_term(const QpiRaw& raw) {
    ScalarExpr ih = I() / raw.hbar;
    ScalarExpr aB(raw.aB);
    return raw.form == Pi6Form::Regularized ? ih / aB : ih * aB * (ScalarExpr(1) - raw.eps);
}

}  // namespace

ScalarExpr qpi_pi6(const QpiRaw& raw) {
    RawPis r = qpi_raw_pis(raw);
    ScalarExpr aB(raw.aB);
    return raw.eps * raw.aS - quantum_term(raw) + aB * mixing(raw, r) + raw.alpha_tb * raw.beta_t -
           raw.alpha_t * raw.beta_tb;
}

ScalarExpr qpi_target_soul(const QpiRaw& raw) {
    // eps p = -a_B (alpha_theta pi2 - ...)
    RawPis r = qpi_raw_pis(raw);
    return raw.eps * raw.aS + ScalarExpr(raw.aB) * mixing(raw, r) - quantum_term(raw);
}

void qpi_check(const QpiRaw& raw) {
    if (raw.eps.is_zero()) throw EpsilonZero("the regularized determinant needs eps != 0");
    if (raw.aB != 1 && raw.aB != -1) throw ConstraintViolated("a_B must be +1 or -1");
    require_even(raw.b, "b"), require_even(raw.c, "c"), require_even(raw.d, "d"), require_even(raw.e, "e");
    auto [body, soul] = inner_det(raw.b, raw.c, raw.d, raw.e);
    ScalarExpr want_body = ScalarExpr(raw.aB) * raw.eps;
    if (body != want_body)
        throw ConstraintViolated("body: bB eB - cB dB = " + body.str() + ", expected " + want_body.str());
    ScalarExpr want = qpi_target_soul(raw);
    if (soul != want)
        throw ConstraintViolated("soul: bS eB + bB eS - cS dB - cB dS = " + soul.str() + ", expected " + want.str());
}

SuperMatrix3 qpi_vierbein(const QpiRaw& raw) {
    qpi_check(raw);
    return frame(SuperFunction::even(raw.aB, raw.aS), odd_pair(raw.alpha_t, raw.alpha_tb),
                 odd_pair(raw.beta_t, raw.beta_tb), odd_pair(raw.gamma_t, raw.gamma_tb),
                 odd_pair(raw.delta_t, raw.delta_tb), raw.b, raw.c, raw.d, raw.e);
}

SuperMatrix3 general_frame(const QpiRaw& raw) {
    return frame(SuperFunction::even(raw.aB, raw.aS), odd_pair(raw.alpha_t, raw.alpha_tb),
                 odd_pair(raw.beta_t, raw.beta_tb), odd_pair(raw.gamma_t, raw.gamma_tb),
                 odd_pair(raw.delta_t, raw.delta_tb), raw.b, raw.c, raw.d, raw.e);
}

Pqr qpi_pqr(const QpiRaw& raw) {
    if (raw.eps.is_zero()) throw EpsilonZero("p, q, r need eps != 0");
    SuperFunction det = raw.b * raw.e - raw.c * raw.d;
    if (det.body().is_zero()) throw SingularBlockB("b e - c d has no body");
    SuperFunction inv = super_inverse(det);
    SuperFunction g = odd_pair(raw.gamma_t, raw.gamma_tb), dl = odd_pair(raw.delta_t, raw.delta_tb);
    SuperFunction al = odd_pair(raw.alpha_t, raw.alpha_tb), be = odd_pair(raw.beta_t, raw.beta_tb);
    // (alpha beta) D^-1 (gamma delta)^T with D^-1 = inv * ((e, -c), (-d, b))
    SuperFunction v = al * inv * (raw.e * g - raw.c * dl) + be * inv * (raw.b * dl - raw.d * g);
    return {v.utbt(), inv.u1(), inv.utbt()};
}

QpiPis qpi_pis(const QpiRaw& raw) {
    RawPis r = qpi_raw_pis(raw);
    ScalarExpr aB(raw.aB);
    return QpiPis::from(r.p1 + raw.beta_t * aB, r.p2 + raw.beta_tb * aB, r.p3 - raw.alpha_t * aB,
                        r.p4 - raw.alpha_tb * aB, r.p5 - aB * raw.aS, qpi_pi6(raw), aB * raw.eps);
}

SuperMatrix3 qpi_upper(const QpiPis& p) {
    SuperMatrix3 g;
    g(T, T) = SuperFunction(1) - tbt().scaled(2 * p.pi[5]);
    g(T, TH) = g(TH, T) = odd_pair(-p.pi[3], -p.pi[4]);
    g(T, THB) = g(THB, T) = odd_pair(p.pi[1], p.pi[2]);
    g(TH, THB) = SuperFunction::even(p.pi[7], p.pi[6]);
    g(THB, TH) = -g(TH, THB);
    return g;
}

Metric qpi_metric(const QpiPis& p) { return make_metric(qpi_upper(p)); }

QpiRaw qpi_family(int which, const QpiRaw& seed, FamilyText text) {
    QpiRaw r = seed;
    ScalarExpr aB(seed.aB), eps = seed.eps, aS = seed.aS, ih = I() / seed.hbar;
    ScalarExpr bB = seed.b.u1(), bS = seed.b.utbt(), cB = seed.c.u1(), cS = seed.c.utbt();
    ScalarExpr dB = seed.d.u1(), dS = seed.d.utbt(), eB = seed.e.u1(), eS = seed.e.utbt();
    if (which == 1) {
        eB = 0;
        if (text == FamilyText::Corrected) {
            cB = -aB * eps / dB;
            r.e = SuperFunction::even(0, eS);
            r.c = SuperFunction::even(cB, 0);
            ScalarExpr s = qpi_target_soul(r);  // depends on bodies only
            cS = (bB * eS - cB * dS - s) / dB;
        } else {
            cB = -aB / dB;
            cS = (aB * eps * dS + dB * bB * aS + aB * ih * aS * dB - eps * aS * dB) / (dB * dB);
        }
        r.e = SuperFunction::even(0, eS);
        r.c = SuperFunction::even(cB, cS);
    } else if (which == 2) {
        bB = (aB * eps + cB * dB) / eB;
        if (text == FamilyText::Corrected) {
            r.b = SuperFunction::even(bB, 0);
            ScalarExpr s = qpi_target_soul(r);
            bS = (s - bB * eS + cS * dB + cB * dS) / eB;
        } else {
            bS = (-aB * eps * eS - cB * dB * bS + cB * dS * eB) / (eB * eB) +
                 (cB * dB * eB - aB * ih * eB + eps * aS * aB) / (eB * eB);
        }
        r.b = SuperFunction::even(bB, bS);
    } else {
        throw Error("no solution family " + std::to_string(which));
    }
    return r;
}

SuperFunction interpolating_determinant(const ScalarExpr& eps, const ScalarExpr& hbar) {
    return SuperFunction::even(eps, -I() * (ScalarExpr(1) - eps) / hbar);
}

SuperFunction regularized_determinant(const ScalarExpr& eps, const ScalarExpr& hbar) {
    return SuperFunction::even(eps, -I() / hbar);
}

// ---------------------------------------------------------------- curvature

Bindings static_freeze(bool quantum) {
    Bindings b;
    int n = quantum ? 7 : 5;
    for (int k = 1; k <= n; ++k)
        for (int ord = 1; ord <= kMaxDerivativeOrder; ++ord)
            b[*as_symbol(quantum ? qpi_sym(k, ord) : pi_sym(k, ord))] = ScalarExpr(0);
    return b;
}

Bindings evolving_freeze_quantum() {
    Bindings b;
    for (int ord = 1; ord <= kMaxDerivativeOrder; ++ord) b[*as_symbol(qpi_sym(7, ord))] = ScalarExpr(0);
    return b;
}

Curvature staged_curvature(const SuperMatrix3& upper, const Bindings& freeze) {
    Curvature out;
    out.metric = make_metric(upper);
    out.gamma = christoffel(out.metric);
    Bindings r = resolve_bindings(freeze);
    if (!r.empty()) freeze_stage(out.gamma.g, r);
    out.curv = riemann(out.gamma);
    if (!r.empty()) {
        parallel_for(81, [&](std::size_t i) { out.curv.riemann[i] = subst_closed(out.curv.riemann[i], r); });
        ricci_tensor(out.curv);
    }
    out.curv.scalar = ricci_scalar(out.metric, out.curv);
    return out;
}

Curvature cpi_curvature(const CpiPis& p, bool time_dependent) {
    return staged_curvature(cpi_upper(p), time_dependent ? Bindings{} : static_freeze(false));
}

Curvature qpi_curvature(const QpiPis& p, bool time_dependent) {
    return staged_curvature(qpi_upper(p), time_dependent ? evolving_freeze_quantum() : static_freeze(true));
}

std::string ricci_name(int a, int b) { return std::string("R_") + index_name(a) + "_" + index_name(b); }

// ---------------------------------------------------------------- zeros of the curvature

FlatnessReport cpi_flatness(const CpiPis& p, bool time_dependent, bool zero_primes) {
    SymId s1 = symbol_of(p.pi1, "pi1"), s2 = symbol_of(p.pi2, "pi2");
    if (p.pi4.is_zero()) throw DivisionByZeroExpr("pi4 = 0: the surface pi1 = pi2 pi3 / pi4 is undefined");
    ScalarExpr img2 = p.pi3;
    ScalarExpr img1 = substitute(p.pi2 * p.pi3 / p.pi4, {{s2, img2}});

    FlatnessReport rep;
    rep.a = p.a;
    rep.time_dependent = time_dependent;
    rep.primes_zeroed = time_dependent && zero_primes;
    rep.constraints = {"pi1 = pi2*pi3/pi4", "pi2 = pi3"};

    Bindings b{{s1, img1}, {s2, img2}};
    if (time_dependent) {
        rep.constraints.push_back("pi5 = 0");
        if (zero_primes) {
            rep.constraints.push_back("all primed symbols = 0");
            for (int k = 1; k <= 5; ++k)
                for (int ord = 1; ord <= kMaxDerivativeOrder; ++ord) b[*as_symbol(pi_sym(k, ord))] = 0;
        } else {
            rep.constraints.push_back("primes follow the constraints");
            SymId d1 = derived(s1), d2 = derived(s2);
            b[d1] = derive(img1), b[derived(d1)] = derive(derive(img1));
            b[d2] = derive(img2), b[derived(d2)] = derive(derive(img2));
        }
    }
    Curvature c = cpi_curvature(p, time_dependent);
    rep.residuals = curvature_residuals(c, b);
    rep.flat = all_zero(rep.residuals);
    return rep;
}

ScalarExpr divergent_soul(int aB, const ScalarExpr& eps, const ScalarExpr& hbar) {
    if (eps.is_zero()) throw DivisionByZeroExpr("a_S diverges at eps = 0");
    return I() / hbar * ScalarExpr(aB) * (ScalarExpr(1) - eps) / eps;
}

ObstructionReport qpi_obstruction(const QpiPis& p) {
    ObstructionReport rep;
    SymId s1 = symbol_of(p.pi[1], "qpi1"), s2 = symbol_of(p.pi[2], "qpi2");
    SymId s5 = symbol_of(p.pi[5], "qpi5"), s6 = symbol_of(p.pi[6], "qpi6");
    if (p.pi[4].is_zero()) throw DivisionByZeroExpr("qpi4 = 0");
    if (p.pi[7].is_zero()) throw SingularBlockB("qpi7 = 0");

    // (i) the vanishing constraints. sigma1 = 3/2 pi6 = 0 with pi7 != 0 fixes pi5 = phi / pi7.
    rep.constraints = {"qpi2 = qpi3", "qpi1 = qpi2*qpi3/qpi4", "qpi6 = 0", "sigma1 = 3/2*qpi6",
                       "qpi5 = phi/qpi7 (sigma1 = 0)"};
    Bindings b{{s2, p.pi[3]}, {s1, p.pi[2] * p.pi[3] / p.pi[4]}, {s6, ScalarExpr(0)}};
    Bindings closed = resolve_bindings(b);
    b[s5] = substitute_closed(p.phi, closed) / substitute_closed(p.pi[7], closed);
    Curvature c = qpi_curvature(p, false);
    rep.residuals = curvature_residuals(c, b);
    rep.curvature_vanishes = all_zero(rep.residuals);

    // (ii) quantum limit of pi6 with alpha = beta = 0
    ScalarExpr hbar = S("hbar");
    for (Pi6Form form : {Pi6Form::Regularized, Pi6Form::Interpolating})
        for (int aB : {1, -1}) {
            QpiRaw raw = QpiRaw::symbolic(aB);
            raw.form = form;
            raw.alpha_t = raw.alpha_tb = raw.beta_t = raw.beta_tb = 0;
            ScalarExpr v = substitute(qpi_pi6(raw), {{*as_symbol(raw.eps), ScalarExpr(0)}});
            ScalarExpr want = -ScalarExpr(aB) * I() / hbar;
            rep.evidence.push_back({std::string("pi6 at eps=0, alpha=beta=0, aB=") + (aB > 0 ? "+1" : "-1") +
                                        (form == Pi6Form::Regularized ? " (regularized form)" : " (interpolating form)"),
                                    v.str(), v == want && !v.is_zero()});
        }

    // (iii) a_S needed to cancel the complex part grows as (1 - eps)/eps
    for (long n : {10L, 100L, 1000L}) {
        ScalarExpr eps(mpq_class(1, n));
        ScalarExpr aS = divergent_soul(1, eps, hbar);
        ScalarExpr ratio = aS / (I() / hbar);
        rep.evidence.push_back({"a_S/(i/hbar) at eps=1/" + std::to_string(n) + ", aB=+1", ratio.str(),
                                ratio == ScalarExpr(n - 1)});
    }

    // (iv) (R_CPI(pi^Q) + 2 sigma1)/3 against pi6, with the odd-coefficient parameters and eps sent to 0
    Curvature cpi = cpi_curvature(CpiPis::symbolic(), false);
    for (int aB : {1, -1}) {
        QpiRaw raw = QpiRaw::symbolic(aB);
        raw.form = Pi6Form::Interpolating;
        QpiPis q = qpi_pis(raw);
        Bindings rename{{*as_symbol(S("a")), q.pi[7]}};
        for (int k = 1; k <= 4; ++k) rename[*as_symbol(pi_sym(k))] = q.pi[k];
        ScalarExpr rhs = (substitute(cpi.curv.scalar.body(), rename) + 2 * q.sigma1) / ScalarExpr(3);
        Bindings odd;
        for (const char* n : {"alphat", "alphatb", "betat", "betatb", "gammat", "gammatb", "deltat", "deltatb"})
            odd[*as_symbol(S(n))] = 0;
        Bindings lim{{*as_symbol(raw.eps), ScalarExpr(0)}};
        ScalarExpr rhs0 = substitute(substitute(rhs, odd), lim);
        ScalarExpr lhs0 = substitute(substitute(q.pi[6], odd), lim);
        rep.evidence.push_back({std::string("complex part: pi6 vs (R_CPI(pi^Q)+2 sigma1)/3, aB=") +
                                    (aB > 0 ? "+1" : "-1"),
                                lhs0.str() + " vs " + rhs0.str(), rhs0.is_zero() && !lhs0.is_zero()});
    }

    bool all = true;
    for (const auto& e : rep.evidence) all = all && e.holds;
    rep.obstructed = rep.curvature_vanishes && all;
    return rep;
}

}  // namespace sgeo
