#pragma once

#include <array>
#include <string>

#include "grassmann_core/super_function.hpp"

namespace sgeo {

// index order t, theta, thetabar
enum Idx : int { T = 0, TH = 1, THB = 2 };
constexpr int grading(int i) { return i == T ? 0 : 1; }
const char* index_name(int i);  // "t", "theta", "thetabar"

class SuperMatrix3 {
public:
    SuperMatrix3() = default;
    static SuperMatrix3 identity();
    static SuperMatrix3 diag(SuperFunction a, SuperFunction b, SuperFunction e);

    SuperFunction& operator()(int r, int c) { return e_[static_cast<std::size_t>(3 * r + c)]; }
    const SuperFunction& operator()(int r, int c) const { return e_[static_cast<std::size_t>(3 * r + c)]; }

    SuperMatrix3 map(const std::function<SuperFunction(const SuperFunction&)>& f) const;

    friend SuperMatrix3 operator*(const SuperMatrix3& m, const SuperMatrix3& n);
    friend SuperMatrix3 operator+(const SuperMatrix3& m, const SuperMatrix3& n);
    friend SuperMatrix3 operator-(const SuperMatrix3& m, const SuperMatrix3& n);
    friend bool operator==(const SuperMatrix3& m, const SuperMatrix3& n) { return m.e_ == n.e_; }
    friend bool operator!=(const SuperMatrix3& m, const SuperMatrix3& n) { return !(m == n); }

    std::string str() const;

private:
    std::array<SuperFunction, 9> e_;
};

// even entries where the row and column gradings agree, odd elsewhere; zero passes either way
bool grading_ok(const SuperMatrix3& m, std::string* why = nullptr);
void grading_check(const SuperMatrix3& m);  // throws GradingViolation

SuperFunction supertrace(const SuperMatrix3& m);
// det(A - C B^-1 D) det(B)^-1; throws SingularBlockB
SuperFunction sdet(const SuperMatrix3& m);
// throws SingularBlockA, SingularBlockB
SuperMatrix3 smat_inverse(const SuperMatrix3& m);

SuperMatrix3 substitute(const SuperMatrix3& m, const Bindings& b);

}  // namespace sgeo
