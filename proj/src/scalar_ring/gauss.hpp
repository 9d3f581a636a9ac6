#pragma once

#include <gmpxx.h>

#include <string>

namespace sgeo {

// a + b i with a, b rational
struct GaussQ {
    mpq_class re;
    mpq_class im;

    GaussQ() = default;
    GaussQ(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussQ(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}

    static GaussQ imag_unit() { return GaussQ(0, 1); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussQ conj() const { return GaussQ(re, -im); }
    GaussQ inverse() const;

    GaussQ& operator+=(const GaussQ& o) { re += o.re; im += o.im; return *this; }
    GaussQ& operator-=(const GaussQ& o) { re -= o.re; im -= o.im; return *this; }
    GaussQ& operator*=(const GaussQ& o);
    GaussQ& operator/=(const GaussQ& o) { return *this *= o.inverse(); }

    friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
    friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
    friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
    friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
    friend GaussQ operator-(const GaussQ& a) { return GaussQ(-a.re, -a.im); }
    friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }

    // "3/2", "-i", "(1/2+3*i)"
    std::string str() const;
};

}  // namespace sgeo
