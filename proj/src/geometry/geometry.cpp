#include "geometry/geometry.hpp"

#include "common/errors.hpp"
#include "common/parallel.hpp"

namespace sgeo {
namespace {

int sign(int exponent) { return (exponent & 1) ? -1 : 1; }

SuperFunction signed_(int s, const SuperFunction& f) { return s < 0 ? -f : f; }

const int kEta[3][3] = {{1, 0, 0}, {0, 0, -1}, {0, 1, 0}};

SuperMatrix3 bilinear(const SuperMatrix3& e, bool lower) {
    grading_check(e);
    SuperMatrix3 g;
    for (int l = 0; l < 3; ++l)
        for (int p = 0; p < 3; ++p) {
            SuperFunction acc;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    if (!kEta[a][b]) continue;
                    int ex = lower ? (1 + grading(b)) * grading(p) : grading(b) * grading(p);
                    acc += signed_(kEta[a][b] * sign(ex), e(a, l) * e(b, p));
                }
            g(l, p) = acc;
        }
    return g;
}

}  // namespace

SuperMatrix3 flat_metric() {
    SuperMatrix3 m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m(r, c) = SuperFunction(static_cast<long>(kEta[r][c]));
    return m;
}

SuperMatrix3 metric_from_vierbein(const SuperMatrix3& e) { return bilinear(e, false); }
SuperMatrix3 lower_metric_from_vierbein(const SuperMatrix3& e) { return bilinear(e, true); }

SuperMatrix3 metric_lower(const SuperMatrix3& upper) { return smat_inverse(upper); }

Metric make_metric(const SuperMatrix3& upper) { return {upper, metric_lower(upper)}; }

SuperFunction comma(const SuperFunction& f, int k, Side side) {
    if (k == T) return t_derive(f);
    Generator v = k == TH ? Generator::Theta : Generator::ThetaBar;
    return side == Side::Left ? left_deriv(f, v) : right_deriv(f, v);
}

ChristoffelSet christoffel(const Metric& m, const DerivConvention& conv) {
    // d[s][k][a*3+b] = derivative along k of g_ab in slot s's convention
    std::array<std::array<std::array<SuperFunction, 9>, 3>, 3> d;
    parallel_for(27, [&](std::size_t i) {
        int s = static_cast<int>(i / 9), k = static_cast<int>(i / 3 % 3), r = static_cast<int>(i % 3);
        for (int c = 0; c < 3; ++c) d[s][k][3 * r + c] = comma(m.lower(r, c), k, conv.slot[s]);
    });
    ChristoffelSet out;
    parallel_for(27, [&](std::size_t i) {
        int c = static_cast<int>(i / 9), a = static_cast<int>(i / 3 % 3), b = static_cast<int>(i % 3);
        int ga = grading(a), gb = grading(b), gc = grading(c);
        SuperFunction acc;
        for (int dd = 0; dd < 3; ++dd) {
            int gd = grading(dd);
            SuperFunction bracket = signed_(sign(gb * gd), d[0][b][3 * a + dd]) +
                                    signed_(sign(ga + gb + ga * gb + ga * gd), d[1][a][3 * b + dd]) -
                                    d[2][dd][3 * a + b];
            acc += bracket * m.upper(dd, c);
        }
        out(c, a, b) = acc.scaled(ScalarExpr(mpq_class(sign(gb * gc), 2)));
    });
    return out;
}

CurvatureSet riemann(const ChristoffelSet& gamma, RiemannForm form) {
    int last = form == RiemannForm::Calibrated ? -1 : 1;
    std::array<std::array<SuperFunction, 3>, 27> dg;  // dg[slot][k]
    parallel_for(27, [&](std::size_t i) {
        for (int k = 0; k < 3; ++k) dg[i][static_cast<std::size_t>(k)] = comma(gamma.g[i], k);
    });
    auto dgam = [&](int c, int a, int b, int k) -> const SuperFunction& {
        return dg[static_cast<std::size_t>(9 * c + 3 * a + b)][static_cast<std::size_t>(k)];
    };
    CurvatureSet cs;
    parallel_for(81, [&](std::size_t i) {
        int d = static_cast<int>(i / 27), a = static_cast<int>(i / 9 % 3), b = static_cast<int>(i / 3 % 3),
            c = static_cast<int>(i % 3);
        int gb = grading(b), gc = grading(c), gd = grading(d);
        SuperFunction acc = -dgam(d, a, c, b) + signed_(sign(gb * gc), dgam(d, a, b, c));
        for (int e = 0; e < 3; ++e) {
            int ge = grading(e);
            acc -= signed_(sign(gc * (gd + ge)), gamma(e, a, c) * gamma(d, e, b));
            acc += signed_(last * sign(gb * (gc + gd + ge)), gamma(e, a, b) * gamma(d, e, c));
        }
        cs.riemann[i] = acc;
    });
    ricci_tensor(cs);
    return cs;
}

void ricci_tensor(CurvatureSet& cs) {
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            SuperFunction acc;
            for (int c = 0; c < 3; ++c) acc += signed_(sign(grading(c)), cs.r(c, a, b, c));
            cs.ricci[static_cast<std::size_t>(3 * a + b)] = acc;
        }
}

std::array<SuperFunction, 9> ricci_expanded(const ChristoffelSet& gamma, RiemannForm form) {
    int last = form == RiemannForm::Calibrated ? -1 : 1;
    std::array<SuperFunction, 9> out;
    parallel_for(9, [&](std::size_t i) {
        int a = static_cast<int>(i / 3), b = static_cast<int>(i % 3);
        int gb = grading(b);
        SuperFunction acc;
        for (int c = 0; c < 3; ++c) {
            int gc = grading(c);
            acc += signed_(sign(gc + 1), comma(gamma(c, a, c), b));
            acc += signed_(sign(gc * (gb + 1)), comma(gamma(c, a, b), c));
            for (int e = 0; e < 3; ++e) {
                int ge = grading(e);
                // the exponent C(C+E-1) taken mod 2
                acc -= signed_(sign(gc * (gc + ge + 1)), gamma(e, a, c) * gamma(c, e, b));
                acc += signed_(last * sign(gb * ge + gc), gamma(e, a, b) * gamma(c, e, c));
            }
        }
        out[i] = acc;
    });
    return out;
}

SuperFunction ricci_scalar(const Metric& m, const CurvatureSet& cs) {
    SuperFunction acc;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) acc += signed_(sign(grading(b)), m.upper(b, a) * cs.ric(a, b));
    return acc;
}

Curvature full_curvature(const SuperMatrix3& upper, RiemannForm form) {
    Curvature out;
    out.metric = make_metric(upper);
    out.gamma = christoffel(out.metric);
    out.curv = riemann(out.gamma, form);
    out.curv.scalar = ricci_scalar(out.metric, out.curv);
    return out;
}

Curvature substitute(const Curvature& c, const Bindings& b) {
    if (b.empty()) return c;
    Bindings r = resolve_bindings(b);
    auto sub = [&](const SuperFunction& f) {
        return f.map([&](const ScalarExpr& e) { return substitute_closed(e, r); });
    };
    Curvature out;
    out.metric = {c.metric.upper.map(sub), c.metric.lower.map(sub)};
    parallel_for(27, [&](std::size_t i) { out.gamma.g[i] = sub(c.gamma.g[i]); });
    parallel_for(81, [&](std::size_t i) { out.curv.riemann[i] = sub(c.curv.riemann[i]); });
    for (std::size_t i = 0; i < 9; ++i) out.curv.ricci[i] = sub(c.curv.ricci[i]);
    out.curv.scalar = sub(c.curv.scalar);
    return out;
}

// ---------------------------------------------------------------------------

std::array<SuperFunction, 3> diffeo_vector(const Diffeo& x) {
    SuperFunction th = SuperFunction::theta(), tb = SuperFunction::thetabar();
    SuperFunction tt = th * tb;
    return {SuperFunction(x.A) + x.at * th + x.bt * tb + SuperFunction(x.beta) * tt,
            x.gt + SuperFunction(x.C) * th + SuperFunction(x.D) * tb + x.eps * tt,
            x.dt + SuperFunction(x.F) * th + SuperFunction(x.G) * tb + x.xi * tt};
}

SuperMatrix3 metric_transform(const SuperMatrix3& g, const Diffeo& x) {
    auto xi = diffeo_vector(x);
    SuperMatrix3 out;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            SuperFunction acc = g(a, b);
            for (int c = 0; c < 3; ++c) {
                acc += comma(xi[static_cast<std::size_t>(c)], a, Side::Left) * g(c, b);
                acc += g(a, c) * comma(xi[static_cast<std::size_t>(c)], b, Side::Right);
                acc += comma(g(a, b), c, Side::Right) * xi[static_cast<std::size_t>(c)];
            }
            out(a, b) = acc;
        }
    return out;
}

SuperMatrix3 vierbein_transform(const SuperMatrix3& e, const Diffeo& x) {
    auto xi = diffeo_vector(x);
    SuperMatrix3 out;
    for (int m = 0; m < 3; ++m)
        for (int a = 0; a < 3; ++a) {
            SuperFunction acc = e(m, a);
            for (int b = 0; b < 3; ++b) {
                acc += comma(xi[static_cast<std::size_t>(b)], a, Side::Left) * e(m, b);
                acc += comma(e(m, a), b, Side::Right) * xi[static_cast<std::size_t>(b)];
            }
            out(m, a) = acc;
        }
    return out;
}

}  // namespace sgeo
