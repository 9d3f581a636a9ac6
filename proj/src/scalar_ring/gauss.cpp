#include "scalar_ring/gauss.hpp"

#include "common/errors.hpp"

namespace sgeo {

GaussQ GaussQ::inverse() const {
    mpq_class n = re * re + im * im;
    if (sgn(n) == 0) throw DivisionByZeroExpr("zero coefficient");
    return GaussQ(re / n, -im / n);
}

GaussQ& GaussQ::operator*=(const GaussQ& o) {
    if (sgn(im) == 0 && sgn(o.im) == 0) {
        re *= o.re;
        return *this;
    }
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string GaussQ::str() const {
    if (sgn(im) == 0) return re.get_str();
    std::string imag;
    if (im == 1) imag = "i";
    else if (im == -1) imag = "-i";
    else imag = im.get_str() + "*i";
    if (sgn(re) == 0) return imag;
    std::string s = "(" + re.get_str();
    if (sgn(im) > 0) s += "+";
    return s + imag + ")";
}

}  // namespace sgeo
