#include "oracle/pipeline.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "common/errors.hpp"

namespace sgeo::oracle {
namespace {

constexpr int kGrade[3] = {0, 1, 1};
constexpr int kEta[3][3] = {{1, 0, 0}, {0, 0, -1}, {0, 1, 0}};

NSN signed_(int exponent, const NSN& x) { return (exponent & 1) ? -x : x; }

NSN& at(Mat& m, int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }
const NSN& at(const Mat& m, int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }

NSN comma_grassmann(const NSN& x, int k) { return k == 1 ? x.d_theta() : x.d_thetabar(); }

Mat mat_neg(const Mat& x) {
    Mat out;
    for (std::size_t i = 0; i < 9; ++i) out[i] = -x[i];
    return out;
}

Mat mat_add(const Mat& x, const Mat& y) {
    Mat out;
    for (std::size_t i = 0; i < 9; ++i) out[i] = x[i] + y[i];
    return out;
}

CQ value(const Binding& b, const std::string& name, int order) {
    auto it = b.find(intern(name, order));
    if (it == b.end()) throw UnboundSymbol(symbol_text(intern(name, order)));
    return it->second;
}

}  // namespace

Mat mat_mul(const Mat& x, const Mat& y) {
    Mat out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            NSN acc;
            for (int k = 0; k < 3; ++k) acc = acc + at(x, r, k) * at(y, k, c);
            at(out, r, c) = acc;
        }
    return out;
}

Mat mat_sub(const Mat& x, const Mat& y) {
    Mat out;
    for (std::size_t i = 0; i < 9; ++i) out[i] = x[i] - y[i];
    return out;
}

Mat mat_inverse(const Mat& m) {
    Mat a = m, inv;
    for (int i = 0; i < 3; ++i) at(inv, i, i) = NSN(1);
    for (int col = 0; col < 3; ++col) {
        int piv = -1;
        for (int r = col; r < 3; ++r)
            if (!at(a, r, col).c[0].zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw SingularNumeric("matrix has no invertible pivot in column " + std::to_string(col));
        if (piv != col)
            for (int k = 0; k < 3; ++k) {
                std::swap(at(a, piv, k), at(a, col, k));
                std::swap(at(inv, piv, k), at(inv, col, k));
            }
        NSN p = at(a, col, col).inv();
        for (int k = 0; k < 3; ++k) {
            at(a, col, k) = p * at(a, col, k);
            at(inv, col, k) = p * at(inv, col, k);
        }
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            NSN f = at(a, r, col);
            if (f.zero()) continue;
            for (int k = 0; k < 3; ++k) {
                at(a, r, k) = at(a, r, k) - f * at(a, col, k);
                at(inv, r, k) = at(inv, r, k) - f * at(inv, col, k);
            }
        }
    }
    return inv;
}

Jet jet_mul(const Jet& x, const Jet& y) {
    Jet out;
    out.valid = std::min(x.valid, y.valid);
    out.d[0] = x.d[0] * y.d[0];
    out.d[1] = x.d[1] * y.d[0] + x.d[0] * y.d[1];
    out.d[2] = x.d[2] * y.d[0] + NSN(2) * x.d[1] * y.d[1] + x.d[0] * y.d[2];
    return out;
}

Jet jet_add(const Jet& x, const Jet& y) {
    Jet out;
    out.valid = std::min(x.valid, y.valid);
    for (std::size_t k = 0; k < 3; ++k) out.d[k] = x.d[k] + y.d[k];
    return out;
}

Jet jet_scale(const Jet& x, const CQ& s) {
    Jet out = x;
    for (auto& v : out.d) v = NSN(s) * v;
    return out;
}

Jet symbol_jet(const Binding& b, const char* name, bool time_dependent) {
    Jet j;
    j.d[0] = value(b, name, 0);
    if (time_dependent) {
        j.d[1] = value(b, name, 1);
        j.d[2] = value(b, name, 2);
    }
    return j;
}

MetricJet metric_jet(const Binding& b, Family model, bool td, int sign) {
    bool q = model == Family::Qpi;
    auto p = [&](int k) { return symbol_jet(b, ((q ? "qpi" : "pi") + std::to_string(k)).c_str(), td); };
    Jet p1 = p(1), p2 = p(2), p3 = p(3), p4 = p(4);
    Jet p5;
    Jet p6, p7;
    if (q) {
        p5 = p(5);
        p6 = p(6);
        p7 = p(7);
    } else {
        // pi5 = a (pi2 pi3 - pi1 pi4)
        p5 = jet_scale(jet_add(jet_mul(p2, p3), jet_scale(jet_mul(p1, p4), -1)), sign);
        p7.d[0] = NSN(sign);
    }
    MetricJet m;
    NSN tbt{0, 0, 0, 1};
    for (std::size_t o = 0; o < 3; ++o) {
        Mat& g = m[o];
        at(g, 0, 0) = NSN(o == 0 ? 1 : 0) - NSN(2) * p5.d[o] * tbt;
        at(g, 0, 1) = at(g, 1, 0) = -(p3.d[o] * NSN::theta() + p4.d[o] * NSN::thetabar());
        at(g, 0, 2) = at(g, 2, 0) = p1.d[o] * NSN::theta() + p2.d[o] * NSN::thetabar();
        at(g, 1, 2) = p7.d[o] + p6.d[o] * tbt;
        at(g, 2, 1) = -at(g, 1, 2);
    }
    return m;
}

NumericCurvature curvature_from_jet(const MetricJet& up) {
    NumericCurvature out;
    out.upper = up[0];
    // lower metric jet by differentiating N M = 1
    Mat n0 = mat_inverse(up[0]);
    Mat n1 = mat_neg(mat_mul(mat_mul(n0, up[1]), n0));
    Mat n2 = mat_neg(mat_add(mat_add(mat_mul(mat_mul(n1, up[1]), n0), mat_mul(mat_mul(n0, up[2]), n0)),
                             mat_mul(mat_mul(n0, up[1]), n1)));
    out.lower = n0;
    std::array<Mat, 3> low{n0, n1, n2};

    // dg[o][k] = order-o time derivative of the k-derivative of g_lower
    auto dg = [&](int o, int k, int r, int c) -> NSN {
        if (k == 0) return at(low[static_cast<std::size_t>(o + 1)], r, c);
        return comma_grassmann(at(low[static_cast<std::size_t>(o)], r, c), k);
    };

    std::array<std::array<NSN, 27>, 2> gam;  // order 0 and 1
    for (int o = 0; o < 2; ++o)
        for (int c = 0; c < 3; ++c)
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    int ga = kGrade[a], gb = kGrade[b], gc = kGrade[c];
                    NSN acc;
                    for (int d = 0; d < 3; ++d) {
                        int gd = kGrade[d];
                        auto bracket = [&](int ord) {
                            return signed_(gb * gd, dg(ord, b, a, d)) +
                                   signed_(ga + gb + ga * gb + ga * gd, dg(ord, a, b, d)) - dg(ord, d, a, b);
                        };
                        if (o == 0)
                            acc = acc + bracket(0) * at(up[0], d, c);
                        else
                            acc = acc + bracket(1) * at(up[0], d, c) + bracket(0) * at(up[1], d, c);
                    }
                    NSN half(CQ(mpq_class(1, 2)));
                    gam[static_cast<std::size_t>(o)][static_cast<std::size_t>(9 * c + 3 * a + b)] =
                        signed_(gb * gc, half * acc);
                }
    out.gamma = gam[0];
    auto G = [&](int c, int a, int b) -> const NSN& { return gam[0][static_cast<std::size_t>(9 * c + 3 * a + b)]; };
    auto dG = [&](int c, int a, int b, int k) -> NSN {
        if (k == 0) return gam[1][static_cast<std::size_t>(9 * c + 3 * a + b)];
        return comma_grassmann(G(c, a, b), k);
    };

    for (int d = 0; d < 3; ++d)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) {
                    int gb = kGrade[b], gc = kGrade[c], gd = kGrade[d];
                    NSN acc = -dG(d, a, c, b) + signed_(gb * gc, dG(d, a, b, c));
                    for (int e = 0; e < 3; ++e) {
                        int ge = kGrade[e];
                        acc = acc - signed_(gc * (gd + ge), G(e, a, c) * G(d, e, b));
                        acc = acc - signed_(gb * (gc + gd + ge), G(e, a, b) * G(d, e, c));
                    }
                    out.riemann[static_cast<std::size_t>(27 * d + 9 * a + 3 * b + c)] = acc;
                }
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            NSN acc;
            for (int c = 0; c < 3; ++c)
                acc = acc + signed_(kGrade[c], out.riemann[static_cast<std::size_t>(27 * c + 9 * a + 3 * b + c)]);
            out.ricci[static_cast<std::size_t>(3 * a + b)] = acc;
        }
    NSN s;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            s = s + signed_(kGrade[b], at(out.upper, b, a) * out.ricci[static_cast<std::size_t>(3 * a + b)]);
    out.scalar = s;
    return out;
}

NumericCurvature numeric_pipeline(const Binding& b, Family model, bool td, int sign) {
    return curvature_from_jet(metric_jet(b, model, td, sign));
}

Mat frame_metric(const Mat& e) {
    Mat out;
    for (int l = 0; l < 3; ++l)
        for (int p = 0; p < 3; ++p) {
            NSN acc;
            for (int a = 0; a < 3; ++a)
                for (int bb = 0; bb < 3; ++bb) {
                    if (kEta[a][bb] == 0) continue;
                    NSN term = at(e, a, l) * at(e, bb, p);
                    term = signed_(kGrade[bb] * kGrade[p], term);
                    acc = kEta[a][bb] > 0 ? acc + term : acc - term;
                }
            at(out, l, p) = acc;
        }
    return out;
}

NSN berezinian(const Mat& e) {
    // D is the odd-odd block; its entries are even here so the ordinary 2x2 formulas hold
    const NSN &d11 = at(e, 1, 1), &d12 = at(e, 1, 2), &d21 = at(e, 2, 1), &d22 = at(e, 2, 2);
    NSN det = d11 * d22 - d12 * d21;
    NSN idet = det.inv();
    NSN i11 = d22 * idet, i12 = -d12 * idet, i21 = -d21 * idet, i22 = d11 * idet;
    NSN corr = at(e, 0, 1) * (i11 * at(e, 1, 0) + i12 * at(e, 2, 0)) +
               at(e, 0, 2) * (i21 * at(e, 1, 0) + i22 * at(e, 2, 0));
    return (at(e, 0, 0) - corr) * idet;
}

}  // namespace sgeo::oracle
