#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "scalar_ring/gauss.hpp"
#include "scalar_ring/symbol.hpp"

namespace sgeo {

struct Monomial {
    std::vector<std::pair<SymId, std::uint32_t>> f;  // sorted by id, exponents > 0
    std::uint32_t deg = 0;

    bool is_one() const { return f.empty(); }
    std::uint32_t exponent(SymId v) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.deg == b.deg && a.f == b.f; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// graded lexicographic; >0 when a is the larger monomial
int grlex_cmp(const Monomial& a, const Monomial& b);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& d, const Monomial& m);
Monomial mono_div(const Monomial& m, const Monomial& d);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
Monomial mono_var(SymId v, std::uint32_t e = 1);

struct Term {
    Monomial m;
    GaussQ c;
};

// Sparse polynomial, terms strictly decreasing in grlex order, no zero coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(const GaussQ& c);
    static Poly variable(SymId v, std::uint32_t e = 1);
    static Poly monomial(Monomial m, GaussQ c);
    static Poly from_terms(std::vector<Term> ts);  // any order, duplicates merged
    static Poly from_sorted(std::vector<Term> ts); // strictly decreasing, no zeros

    const std::vector<Term>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    bool is_one() const { return t_.size() == 1 && t_[0].m.is_one() && t_[0].c.is_one(); }
    bool is_monomial() const { return t_.size() == 1; }
    GaussQ constant_value() const;  // zero when empty; caller checks is_constant
    const Term& lead() const { return t_.front(); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const GaussQ& c) const;
    Poly shifted(const Monomial& m) const;       // multiply by a monomial
    Poly unshifted(const Monomial& m) const;     // divide by a monomial dividing every term
    Poly monic() const;
    Poly pow(unsigned e) const;

    std::uint32_t degree_in(SymId v) const;
    std::vector<SymId> vars() const;
    Monomial min_monomial() const;               // monomial content
    std::map<std::uint32_t, Poly> coeffs_in(SymId v) const;

private:
    std::vector<Term> t_;
};

std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic; gcd(0, 0) = 0
Poly partial(const Poly& p, SymId v);

}  // namespace sgeo
