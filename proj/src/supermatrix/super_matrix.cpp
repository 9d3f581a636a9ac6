#include "supermatrix/super_matrix.hpp"

#include "common/errors.hpp"

namespace sgeo {

const char* index_name(int i) {
    static const char* names[] = {"t", "theta", "thetabar"};
    return names[i];
}

SuperMatrix3 SuperMatrix3::identity() { return diag(1, 1, 1); }

SuperMatrix3 SuperMatrix3::diag(SuperFunction a, SuperFunction b, SuperFunction e) {
    SuperMatrix3 m;
    m(0, 0) = std::move(a);
    m(1, 1) = std::move(b);
    m(2, 2) = std::move(e);
    return m;
}

SuperMatrix3 SuperMatrix3::map(const std::function<SuperFunction(const SuperFunction&)>& f) const {
    SuperMatrix3 out;
    for (std::size_t k = 0; k < 9; ++k) out.e_[k] = f(e_[k]);
    return out;
}

SuperMatrix3 operator*(const SuperMatrix3& m, const SuperMatrix3& n) {
    SuperMatrix3 out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            out(r, c) = m(r, 0) * n(0, c) + m(r, 1) * n(1, c) + m(r, 2) * n(2, c);
    return out;
}

SuperMatrix3 operator+(const SuperMatrix3& m, const SuperMatrix3& n) {
    SuperMatrix3 out;
    for (std::size_t k = 0; k < 9; ++k) out.e_[k] = m.e_[k] + n.e_[k];
    return out;
}

SuperMatrix3 operator-(const SuperMatrix3& m, const SuperMatrix3& n) {
    SuperMatrix3 out;
    for (std::size_t k = 0; k < 9; ++k) out.e_[k] = m.e_[k] - n.e_[k];
    return out;
}

std::string SuperMatrix3::str() const {
    std::string s;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            s += std::string(index_name(r)) + "," + index_name(c) + ": " + (*this)(r, c).str() + "\n";
    return s;
}

bool grading_ok(const SuperMatrix3& m, std::string* why) {
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            Parity want = grading(r) == grading(c) ? Parity::Even : Parity::Odd;
            const SuperFunction& f = m(r, c);
            if (f.is_zero() || f.parity() == want) continue;
            if (why)
                *why = std::string("entry (") + index_name(r) + "," + index_name(c) + ") is " +
                       parity_name(f.parity()) + ", expected " + parity_name(want);
            return false;
        }
    return true;
}

void grading_check(const SuperMatrix3& m) {
    std::string why;
    if (!grading_ok(m, &why)) throw GradingViolation(why);
}

SuperFunction supertrace(const SuperMatrix3& m) { return m(0, 0) - m(1, 1) - m(2, 2); }

namespace {

struct Blocks {
    SuperFunction a;
    SuperFunction b[2][2];
    SuperFunction c[2];  // row
    SuperFunction d[2];  // column
};

Blocks split(const SuperMatrix3& m) {
    Blocks k;
    k.a = m(0, 0);
    for (int i = 0; i < 2; ++i) {
        k.c[i] = m(0, i + 1);
        k.d[i] = m(i + 1, 0);
        for (int j = 0; j < 2; ++j) k.b[i][j] = m(i + 1, j + 1);
    }
    return k;
}

// entries of B are even, so the ordinary determinant is order independent
SuperFunction det2(const SuperFunction (&b)[2][2]) { return b[0][0] * b[1][1] - b[0][1] * b[1][0]; }

struct Inv2 {
    SuperFunction m[2][2];
};

Inv2 inverse2(const SuperFunction (&b)[2][2], const char* what) {
    SuperFunction det = det2(b);
    if (det.body().is_zero()) throw SingularBlockB(std::string(what) + ": det B = " + det.str() + " has zero body");
    SuperFunction id = super_inverse(det);
    Inv2 r;
    r.m[0][0] = b[1][1] * id;
    r.m[0][1] = -(b[0][1] * id);
    r.m[1][0] = -(b[1][0] * id);
    r.m[1][1] = b[0][0] * id;
    return r;
}

}  // namespace

SuperFunction sdet(const SuperMatrix3& m) {
    Blocks k = split(m);
    Inv2 bi = inverse2(k.b, "sdet");
    SuperFunction cbd;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) cbd += k.c[i] * bi.m[i][j] * k.d[j];
    return (k.a - cbd) * super_inverse(det2(k.b));
}

SuperMatrix3 smat_inverse(const SuperMatrix3& m) {
    Blocks k = split(m);
    if (k.a.body().is_zero()) throw SingularBlockA("A = " + k.a.str() + " has zero body");
    Inv2 bi = inverse2(k.b, "inverse");
    SuperFunction ai = super_inverse(k.a);

    // Ã = (A - C B^-1 D)^-1
    SuperFunction cb[2];
    for (int j = 0; j < 2; ++j) cb[j] = k.c[0] * bi.m[0][j] + k.c[1] * bi.m[1][j];
    SuperFunction at = super_inverse(k.a - (cb[0] * k.d[0] + cb[1] * k.d[1]));

    // B̃ = (B - D A^-1 C)^-1
    SuperFunction s[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s[i][j] = k.b[i][j] - k.d[i] * ai * k.c[j];
    Inv2 bt = inverse2(s, "inverse");

    SuperMatrix3 out;
    out(0, 0) = at;
    for (int j = 0; j < 2; ++j) {
        // C̃ = -A^-1 C B̃
        out(0, j + 1) = -(ai * (k.c[0] * bt.m[0][j] + k.c[1] * bt.m[1][j]));
        // D̃ = -B^-1 D Ã
        out(j + 1, 0) = -((bi.m[j][0] * k.d[0] + bi.m[j][1] * k.d[1]) * at);
        for (int i = 0; i < 2; ++i) out(i + 1, j + 1) = bt.m[i][j];
    }
    return out;
}

SuperMatrix3 substitute(const SuperMatrix3& m, const Bindings& b) {
    if (b.empty()) return m;
    Bindings r = resolve_bindings(b);
    return m.map([&](const SuperFunction& f) {
        return f.map([&](const ScalarExpr& e) { return substitute_closed(e, r); });
    });
}

}  // namespace sgeo
