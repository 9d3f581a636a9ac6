#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgeo {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SGEO_ERROR(Name)                                                   \
    class Name : public Error {                                            \
    public:                                                                \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

SGEO_ERROR(DivisionByZeroExpr);
SGEO_ERROR(DerivativeOrderExceeded);
SGEO_ERROR(CyclicBinding);
SGEO_ERROR(NoBody);
SGEO_ERROR(SingularBlockA);
SGEO_ERROR(SingularBlockB);
SGEO_ERROR(GradingViolation);
SGEO_ERROR(ConstraintViolated);
SGEO_ERROR(EpsilonZero);
SGEO_ERROR(UnboundSymbol);
SGEO_ERROR(SingularNumeric);
SGEO_ERROR(Inconclusive);

#undef SGEO_ERROR

class ParseError : public Error {
public:
    ParseError(std::size_t pos, std::vector<std::string> expected, const std::string& msg)
        : Error(format(pos, expected, msg)), pos_(pos), expected_(std::move(expected)) {}

    std::size_t position() const { return pos_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string format(std::size_t pos, const std::vector<std::string>& exp,
                              const std::string& msg) {
        std::string s = "ParseError at " + std::to_string(pos) + ": " + msg;
        if (!exp.empty()) {
            s += " (expected";
            for (std::size_t i = 0; i < exp.size(); ++i) s += (i ? ", " : " ") + exp[i];
            s += ")";
        }
        return s;
    }
    std::size_t pos_;
    std::vector<std::string> expected_;
};

}  // namespace sgeo
