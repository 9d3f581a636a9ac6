#include "models/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sgeo::catalog {
namespace {

const char* kIdx[] = {"t", "theta", "thetabar"};
const char* kLabelIdx[] = {"t", "θ", "θ̄"};

std::string prefix(Model m, Regime r) {
    return std::string(m == Model::Cpi ? "cpi" : "qpi") + (r == Regime::Static ? ".static" : ".evolving");
}

// "[gamma]" -> "(gammat*theta+gammatb*thetabar)" and so on for the raw frame entries
std::string expand(std::string s) {
    static const std::pair<const char*, const char*> kMacros[] = {
        {"[gamma]", "(gammat*theta+gammatb*thetabar)"},
        {"[delta]", "(deltat*theta+deltatb*thetabar)"},
        {"[alpha]", "(alphat*theta+alphatb*thetabar)"},
        {"[beta]", "(betat*theta+betatb*thetabar)"},
        {"[b]", "(bB+bS*thetabar*theta)"},
        {"[c]", "(cB+cS*thetabar*theta)"},
        {"[d]", "(dB+dS*thetabar*theta)"},
        {"[e]", "(eB+eS*thetabar*theta)"},
    };
    for (auto [from, to] : kMacros) {
        std::string f(from);
        for (std::size_t at = s.find(f); at != std::string::npos; at = s.find(f, at)) {
            s.replace(at, f.size(), to);
            at += std::string(to).size();
        }
    }
    return s;
}

Term lit(const std::string& text) { return {Term::Kind::Text, 1, expand(text)}; }
Term same(const std::string& id, int sign = 1) { return {Term::Kind::Ref, sign, id}; }
Term base(const std::string& id) { return {Term::Kind::Base, 1, id}; }
Term self() { return {Term::Kind::Self, 1, {}}; }

class Builder {
public:
    std::vector<Fixture> out;

    void christoffel(Model m, Regime r, int c, int a, int b, std::vector<Term> terms) {
        Fixture f = make(m, r, Quantity::Christoffel, christoffel_id(m, r, c, a, b), std::move(terms));
        f.i = c, f.j = a, f.k = b;
        f.label = std::string("Γ^") + kLabelIdx[c] + "_{" + kLabelIdx[a] + " " + kLabelIdx[b] + "}";
        push(std::move(f));
    }
    void ricci(Model m, Regime r, int a, int b, std::vector<Term> terms) {
        Fixture f = make(m, r, Quantity::Ricci, ricci_id(m, r, a, b), std::move(terms));
        f.i = a, f.j = b;
        f.label = std::string("R_{") + kLabelIdx[a] + " " + kLabelIdx[b] + "}";
        push(std::move(f));
    }
    void scalar(Model m, Regime r, std::vector<Term> terms) {
        Fixture f = make(m, r, Quantity::Scalar, scalar_id(m, r), std::move(terms));
        f.label = "R";
        push(std::move(f));
    }
    // nine entries, row-major; "0" entries are printed zeros
    void matrix(Model m, Quantity q, const std::string& id, const std::string& sym, bool constrained,
                const std::vector<std::string>& entries) {
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                Fixture f = make(m, Regime::Static, q, id + "[" + kIdx[r] + "," + kIdx[c] + "]",
                                 {lit(entries[static_cast<std::size_t>(3 * r + c)])});
                f.i = r, f.j = c;
                f.constrained = constrained;
                f.label = sym + "(" + kLabelIdx[r] + "," + kLabelIdx[c] + ")";
                push(std::move(f));
            }
    }
    void single(Model m, Quantity q, const std::string& id, const std::string& label, bool constrained,
                const std::string& text) {
        Fixture f = make(m, Regime::Static, q, id, {lit(text)});
        f.constrained = constrained;
        f.label = label;
        push(std::move(f));
    }

    // "all the other components are equal to zero"
    void fill_zero(Model m, Regime r, Quantity q) {
        for (int c = 0; c < 3; ++c)
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    if (q == Quantity::Ricci && c > 0) return;
                    std::string id = q == Quantity::Christoffel ? christoffel_id(m, r, c, a, b) : ricci_id(m, r, a, b);
                    if (ids_.count(id)) continue;
                    if (q == Quantity::Christoffel) christoffel(m, r, c, a, b, {lit("0")});
                    else ricci(m, r, a, b, {lit("0")});
                    out.back().implicit = true;
                }
    }

private:
    std::set<std::string> ids_;

    static Fixture make(Model m, Regime r, Quantity q, std::string id, std::vector<Term> terms) {
        Fixture f;
        f.model = m, f.regime = r, f.quantity = q;
        f.id = std::move(id);
        f.terms = std::move(terms);
        return f;
    }
    // a second printed line for the same component keeps both, the repeat suffixed
    void push(Fixture f) {
        std::string id = f.id;
        for (int n = 2; ids_.count(f.id); ++n) f.id = id + "#" + std::to_string(n);
        ids_.insert(f.id);
        out.push_back(std::move(f));
    }
};

constexpr int t = 0, th = 1, tb = 2;
constexpr Model C = Model::Cpi, Q = Model::Qpi;
constexpr Regime S = Regime::Static, E = Regime::Evolving;

std::string G(Model m, Regime r, int c, int a, int b) { return christoffel_id(m, r, c, a, b); }
std::string Ric(Model m, Regime r, int a, int b) { return ricci_id(m, r, a, b); }

void metrics(Builder& B) {
    B.matrix(C, Quantity::VierbeinMetric, "cpi.frame.metric", "g^", false,
             {"1-2*[gamma]*[delta]", "[gamma]*[d]-[delta]*[b]", "[gamma]*[e]-[delta]*[c]",
              "[gamma]*[d]-[delta]*[b]", "0", "[b]*[e]-[c]*[d]",
              "[gamma]*[e]-[delta]*[c]", "-([b]*[e]-[c]*[d])", "0"});
    B.matrix(C, Quantity::VierbeinMetric, "cpi.frame.metric.constrained", "g^", true,
             {"1-2*[gamma]*[delta]", "[gamma]*[d]-[delta]*[b]", "[gamma]*[e]-[delta]*[c]",
              "[gamma]*[d]-[delta]*[b]", "0", "a",
              "[gamma]*[e]-[delta]*[c]", "-a", "0"});
    B.matrix(C, Quantity::VierbeinInverse, "cpi.frame.inverse", "E^-1", true,
             {"a", "0", "0",
              "a*[c]*[delta]-a*[e]*[gamma]", "a*[e]", "-a*[c]",
              "a*[d]*[gamma]-a*[b]*[delta]", "-a*[d]", "a*[b]"});
    B.matrix(C, Quantity::UpperMetric, "cpi.static.metric.upper", "g^", false,
             {"1+a*2*thetabar*theta*(pi2*pi3-pi1*pi4)", "-pi3*theta-pi4*thetabar", "pi1*theta+pi2*thetabar",
              "-pi3*theta-pi4*thetabar", "0", "a",
              "pi1*theta+pi2*thetabar", "-a", "0"});
    B.matrix(C, Quantity::LowerMetric, "cpi.static.metric.lower", "g_", false,
             {"1", "-a*(theta*pi1+thetabar*pi2)", "-a*(theta*pi3+thetabar*pi4)",
              "a*(theta*pi1+thetabar*pi2)", "0", "-a*(1+thetabar*theta*(pi2*pi3-pi1*pi4))",
              "a*(theta*pi3+thetabar*pi4)", "a*(1+thetabar*theta*(pi2*pi3-pi1*pi4))", "0"});

    B.matrix(Q, Quantity::VierbeinMetric, "qpi.frame.metric", "g^", false,
             {"1-2*[gamma]*[delta]+2*thetabar*theta*aB*aS", "[d]*[gamma]-[b]*[delta]+[alpha]*aB",
              "[e]*[gamma]-[c]*[delta]+[beta]*aB",
              "[d]*[gamma]-[b]*[delta]+[alpha]*aB", "0", "[b]*[e]-[c]*[d]+[alpha]*[beta]",
              "[e]*[gamma]-[c]*[delta]+[beta]*aB", "[c]*[d]-[b]*[e]-[alpha]*[beta]", "0"});
    B.single(Q, Quantity::VierbeinSdet, "qpi.frame.sdet", "sdet E", true,
             "1/eps+i/eps*thetabar*theta/hbar");
    B.matrix(Q, Quantity::UpperMetric, "qpi.static.metric.upper", "g^", false,
             {"1-2*qpi5*thetabar*theta", "-qpi3*theta-qpi4*thetabar", "qpi1*theta+qpi2*thetabar",
              "-qpi3*theta-qpi4*thetabar", "0", "qpi7+qpi6*thetabar*theta",
              "qpi1*theta+qpi2*thetabar", "-qpi7-qpi6*thetabar*theta", "0"});
    B.matrix(Q, Quantity::LowerMetric, "qpi.static.metric.lower", "g_", false,
             {"1-2*thetabar*theta*(phi-qpi5*qpi7)/qpi7", "-(theta*qpi1+thetabar*qpi2)/qpi7",
              "-(theta*qpi3+thetabar*qpi4)/qpi7",
              "(theta*qpi1+thetabar*qpi2)/qpi7", "0", "-(qpi7+(phi-qpi6))/qpi7^2",
              "(theta*qpi3+thetabar*qpi4)/qpi7", "(qpi7+thetabar*theta*(phi-qpi6))/qpi7^2", "0"});
    B.single(Q, Quantity::DeterminantInverse, "qpi.regularized.inverse", "(eps - i θ̄θ/ħ)^-1", false,
             "1/eps+1/eps^2*thetabar*theta/hbar");
}

void cpi_static_connection(Builder& B) {
    B.christoffel(C, S, t, t, th,
                  {lit("(theta*pi1*(pi2-pi3)+thetabar*(pi2*(pi2+pi3)-2*pi1*pi4))/(2*a)")});
    B.christoffel(C, S, t, th, t, {same(G(C, S, t, t, th), -1)});
    B.christoffel(C, S, th, t, th, {lit("(pi2+pi3)/2")});
    B.christoffel(C, S, th, th, t, {same(G(C, S, th, t, th))});
    B.christoffel(C, S, tb, t, tb, {same(G(C, S, th, t, th), -1)});
    B.christoffel(C, S, tb, tb, t, {same(G(C, S, th, t, th), -1)});
    B.christoffel(C, S, tb, t, th, {lit("-pi1")});
    B.christoffel(C, S, tb, th, t, {same(G(C, S, tb, t, th))});
    B.christoffel(C, S, t, t, tb,
                  {lit("(theta*(-pi3*(pi2+pi3)+2*pi1*pi4)+thetabar*pi4*(pi2-pi3))/(2*a)")});
    B.christoffel(C, S, t, tb, t, {same(G(C, S, t, t, tb), -1)});
    B.christoffel(C, S, th, t, tb, {lit("pi4")});
    B.christoffel(C, S, th, tb, t, {same(G(C, S, th, t, tb))});
    B.christoffel(C, S, t, th, tb,
                  {lit("(pi2-pi3)/(2*a)-2*thetabar*theta*(pi2-pi3)*(pi2*pi3-pi1*pi4)")});
    B.christoffel(C, S, t, tb, th, {same(G(C, S, t, th, tb), -1)});
    B.christoffel(C, S, th, th, tb,
                  {lit("(theta*(pi3*(3*pi2-pi3)-2*pi1*pi4)+thetabar*pi4*(pi2-pi3))/(2*a)")});
    B.christoffel(C, S, th, tb, th, {same(G(C, S, th, th, tb), -1)});
    // parenthesis as printed: the thetabar term sits inside the theta factor
    B.christoffel(C, S, tb, th, tb,
                  {lit("(theta*(pi1*(pi3-pi2)+thetabar*(pi2*(3*pi3-pi2)-2*pi1*pi4)))/(2*a)")});
    B.christoffel(C, S, tb, tb, th, {same(G(C, S, tb, th, tb), -1)});
    B.fill_zero(C, S, Quantity::Christoffel);
}

void qpi_static_connection(Builder& B) {
    auto base_of = [](int c, int a, int b) { return base(G(C, S, c, a, b)); };
    B.christoffel(Q, S, t, t, t, {lit("thetabar*theta*(qpi3-qpi2)/qpi7*sigma1")});
    B.christoffel(Q, S, th, t, t, {lit("-thetabar*sigma1")});
    B.christoffel(Q, S, t, t, th, {base_of(t, t, th), lit("sigma1/qpi7")});
    B.christoffel(Q, S, t, th, t, {same(G(Q, S, t, t, th), -1)});
    B.christoffel(Q, S, th, t, th,
                  {base_of(th, t, th), lit("thetabar*theta*(qpi6*(qpi2+qpi3)+2*qpi3*sigma1)/(2*qpi7)")});
    B.christoffel(Q, S, th, th, t, {same(G(Q, S, th, t, th))});
    B.christoffel(Q, S, tb, t, th, {base_of(tb, t, th), lit("-thetabar*theta*qpi1*(sigma1+qpi6)/qpi7")});
    B.christoffel(Q, S, tb, th, t, {same(G(Q, S, tb, t, th), -1)});
    B.christoffel(Q, S, t, t, tb, {base_of(t, t, tb), lit("-sigma1/qpi7")});
    B.christoffel(Q, S, t, tb, t, {same(G(Q, S, t, t, tb), -1)});
    B.christoffel(Q, S, th, t, tb, {base_of(th, t, tb), lit("thetabar*theta*qpi4*(sigma1+qpi6)/qpi7")});
    B.christoffel(Q, S, th, tb, t, {same(G(Q, S, th, t, tb))});
    B.christoffel(Q, S, tb, t, tb,
                  {base_of(tb, t, tb), lit("-thetabar*theta*(qpi6*(qpi2+qpi3)+2*qpi2*sigma1)/(2*qpi7)")});
    B.christoffel(Q, S, tb, tb, t, {same(G(Q, S, tb, t, tb))});
    B.christoffel(Q, S, t, th, tb,
                  {base_of(t, th, tb),
                   lit("-thetabar*theta*(qpi2-qpi3)*(sigma1+qpi6+2*qpi5*qpi7)/(2*qpi7^2)")});
    B.christoffel(Q, S, t, tb, th, {same(G(Q, S, t, th, tb), -1)});
    B.christoffel(Q, S, th, th, tb, {base_of(th, th, tb), lit("-theta*qpi6/qpi7")});
    B.christoffel(Q, S, th, tb, th, {same(G(Q, S, th, th, tb), -1)});
    B.christoffel(Q, S, tb, th, tb, {base_of(tb, th, tb), lit("-thetabar*qpi6/qpi7")});
    B.christoffel(Q, S, tb, tb, th, {same(G(Q, S, tb, th, tb), -1)});
    B.fill_zero(Q, S, Quantity::Christoffel);
}

void cpi_evolving_connection(Builder& B) {
    B.christoffel(C, E, t, t, t, {lit("thetabar*theta*pi5'")});
    B.christoffel(C, E, th, t, t, {lit("theta*pi3'+thetabar*pi4'")});
    B.christoffel(C, E, tb, t, t, {lit("-theta*pi1'-thetabar*pi2'")});
    B.christoffel(C, E, t, t, th,
                  {lit("-theta*pi1*(pi2-pi3)/(2*a)+thetabar*((pi2+pi3)*pi2-2*pi1*pi4)/(2*a)")});
    B.christoffel(C, E, th, t, th, {lit("(pi2+pi3)/2+thetabar*theta*pi5'/2")});
    B.christoffel(C, E, tb, t, th, {lit("-pi1")});
    B.christoffel(C, E, t, t, tb,
                  {lit("thetabar*(pi2-pi3)*pi4/(2*a)+theta*(2*pi1*pi4-pi3*(pi2+pi3))/(2*a)")});
    B.christoffel(C, E, th, t, tb, {lit("pi4")});
    B.christoffel(C, E, tb, t, tb, {lit("-pi7/2+thetabar*theta*pi5'/2")});
    B.christoffel(C, E, t, th, t, {same(G(C, E, t, t, th), -1)});
    B.christoffel(C, E, th, th, t, {same(G(C, E, th, t, th))});
    B.christoffel(C, E, tb, th, t, {same(G(C, E, tb, t, th))});
    B.christoffel(C, E, t, th, tb, {lit("(pi2-pi3)/(2*a)-thetabar*theta*(4*pi2*pi5-pi5')/(2*a)")});
    B.christoffel(C, E, th, th, tb,
                  {lit("thetabar*(pi2-pi3)*pi4/(2*a)+theta*((pi2-pi3)*pi3+2*a*pi5)/(2*a)")});
    B.christoffel(C, E, tb, th, tb,
                  {lit("-thetabar*(pi2-pi3)*pi1/(2*a)+thetabar*(2*a*pi5-(pi2-pi3)*pi2)/(2*a)")});
    B.christoffel(C, E, t, tb, t, {same(G(C, E, t, t, tb), -1)});
    B.christoffel(C, E, th, tb, t, {same(G(C, E, th, t, tb))});
    B.christoffel(C, E, tb, tb, t, {lit("-(pi2+pi3)/2+thetabar*theta*(pi2'+pi3')/2")});
    B.christoffel(C, E, t, tb, th, {same(G(C, E, t, th, tb), -1)});
    B.christoffel(C, E, th, tb, th, {same(G(C, E, th, th, tb), -1)});
    // printed a second time with the opposite body
    B.christoffel(C, E, th, t, th, {lit("-(pi2+pi3)/2+thetabar*theta*pi5'/2")});
    B.fill_zero(C, E, Quantity::Christoffel);
}

void qpi_evolving_connection(Builder& B) {
    auto base_of = [](int c, int a, int b) { return base(G(C, E, c, a, b)); };
    B.christoffel(Q, E, t, t, t, {base_of(t, t, t), lit("-thetabar*theta*(qpi2-qpi3)*sigma1/qpi7")});
    B.christoffel(Q, E, th, t, t, {base_of(th, t, t), lit("-theta*sigma1")});
    B.christoffel(Q, E, tb, t, t, {base_of(tb, t, t), lit("-thetabar*sigma1")});
    B.christoffel(Q, E, t, t, th, {base_of(t, t, th), lit("thetabar*sigma1/qpi7")});
    B.christoffel(Q, E, th, t, th,
                  {base_of(th, t, th),
                   lit("thetabar*theta*(sigma1'+qpi6*(qpi2+qpi3)+2*qpi3*sigma1-qpi6')/(2*qpi7)")});
    B.christoffel(Q, E, tb, t, th, {base_of(tb, t, th), lit("-thetabar*theta*qpi1*(sigma1+qpi6)/qpi7")});
    B.christoffel(Q, E, t, t, tb, {base_of(t, t, tb), lit("-theta*sigma1/qpi7")});
    B.christoffel(Q, E, th, t, tb, {base_of(th, t, tb), lit("thetabar*theta*qpi4*(sigma1+qpi6)/qpi7")});
    B.christoffel(Q, E, tb, t, tb,
                  {base_of(tb, t, tb),
                   lit("thetabar*theta*(sigma1'-qpi6*(qpi2+qpi3)-2*qpi2*sigma1-qpi6')/qpi7")});
    B.christoffel(Q, E, t, th, t, {same(G(Q, E, t, t, th), -1)});
    B.christoffel(Q, E, th, th, t, {same(G(Q, E, th, t, th))});
    B.christoffel(Q, E, tb, th, t, {same(G(Q, E, tb, t, th))});
    B.christoffel(Q, E, t, th, tb,
                  {base_of(t, th, tb),
                   lit("-thetabar*theta*(qpi6'-sigma1'+2*(qpi2-qpi3)*(sigma1-qpi6))/(2*qpi7^2)")});
    B.christoffel(Q, E, th, th, tb, {base_of(th, th, tb), lit("theta*(sigma1-qpi6)/qpi7")});
    B.christoffel(Q, E, tb, th, tb, {base_of(tb, th, tb), lit("thetabar*(sigma1-qpi6)/qpi7")});
    B.christoffel(Q, E, t, tb, t, {same(G(Q, E, t, t, tb), -1)});
    B.christoffel(Q, E, th, tb, t, {same(G(Q, E, th, t, tb))});
    B.christoffel(Q, E, tb, tb, t, {self()});
    B.christoffel(Q, E, t, tb, th, {same(G(Q, E, t, th, tb), -1)});
    B.christoffel(Q, E, th, tb, th, {same(G(Q, E, th, th, tb), -1)});
    B.christoffel(Q, E, tb, tb, th, {same(G(Q, E, tb, th, tb), -1)});
    B.fill_zero(Q, E, Quantity::Christoffel);
}

void cpi_static_curvature(Builder& B) {
    B.ricci(C, S, th, th, {lit("0")});
    B.ricci(C, S, tb, tb, {lit("0")});
    B.ricci(C, S, t, t, {lit("((pi2+pi3)^2-4*pi1*pi4)/2")});
    B.ricci(C, S, t, th, {lit("-(theta*pi1+thetabar*pi2)*((pi2+pi3)^2-4*pi1*pi4)/(2*a)")});
    B.ricci(C, S, th, t, {same(Ric(C, S, t, th), -1)});
    B.ricci(C, S, t, tb, {lit("-(theta*pi3+thetabar*pi4)*((pi2+pi3)^2-4*pi1*pi4)/(2*a)")});
    B.ricci(C, S, tb, t, {same(Ric(C, S, t, tb), -1)});
    B.ricci(C, S, th, tb,
            {lit("thetabar*theta/2*(pi1*pi4-pi2*pi3)*(pi2^2-6*pi2*pi3+pi3^2+4*pi1*pi4)"
                 "-a/2*(pi2^2-10*pi2*pi3+pi3^2+8*pi1*pi4)")});
    B.ricci(C, S, tb, th, {same(Ric(C, S, th, tb), -1)});
    B.fill_zero(C, S, Quantity::Ricci);
    B.scalar(C, S,
             {lit("-1/2*(pi2^2-22*pi2*pi3+pi3^2+20*pi1*pi4)+8*thetabar*theta/a*(pi2*pi3-pi1*pi4)^2")});
}

void qpi_static_curvature(Builder& B) {
    B.ricci(Q, S, th, th, {lit("0")});
    B.ricci(Q, S, tb, tb, {lit("0")});
    B.ricci(Q, S, t, t,
            {base(Ric(C, S, t, t)),
             lit("2*sigma1+thetabar*theta/qpi7*(qpi6*((qpi2+qpi3)^2-4*qpi1*qpi4)"
                 "+2*sigma1*(qpi2^2+4*qpi2*qpi3+qpi3^2-6*qpi1*qpi4-qpi6)+6*sigma1^2)")});
    B.ricci(Q, S, t, th,
            {base(Ric(C, S, t, th)), lit("-(qpi6+3*sigma1)/qpi7*(theta*qpi1+thetabar*(qpi2+qpi3))")});
    B.ricci(Q, S, th, t, {same(Ric(Q, S, t, th), -1)});
    B.ricci(Q, S, t, tb,
            {base(Ric(C, S, t, tb)), lit("-(qpi6+3*sigma1)/qpi7*(thetabar*qpi4+theta*(qpi2+qpi3))")});
    B.ricci(Q, S, tb, t, {same(Ric(Q, S, t, tb), -1)});
    B.ricci(Q, S, th, tb,
            {base(Ric(C, S, th, tb)),
             lit("-(sigma1-3*qpi6)/qpi7+thetabar*theta/(2*qpi7^2)*(2*qpi6^2+8*qpi1*qpi4*qpi6"
                 "-8*qpi2*qpi3*qpi6-sigma1*((qpi2-qpi3)^2+4*qpi6+2*sigma1))")});
    B.ricci(Q, S, tb, th, {same(Ric(Q, S, th, tb), -1)});
    B.fill_zero(Q, S, Quantity::Ricci);
    // the stray discretionary hyphen before pi6 is read as a minus sign, as in the restated formula
    B.scalar(Q, S,
             {base(scalar_id(C, S)),
              lit("2*sigma1-3*qpi6+thetabar*theta/qpi7*(-qpi6*(qpi2^2+6*qpi2*qpi3+qpi3^2-8*qpi1*qpi4)"
                  "+4*qpi6^2-4*sigma1*(qpi2^2+3*qpi2*qpi3+qpi3^2-5*qpi1*qpi4-qpi6+sigma1))")});
}

void cpi_evolving_curvature(Builder& B) {
    const std::string bracket = "(5*a*pi5'*(pi3-pi2)+4*a*pi5*(pi3'-pi2')+a*pi5'')";
    B.ricci(C, E, th, th, {lit("0")});
    B.ricci(C, E, tb, tb, {lit("0")});
    B.ricci(C, E, t, t,
            {same(Ric(C, S, t, t)),
             lit("(pi3'-pi2')+thetabar*theta*(pi3^2*pi2'-pi2^2*pi3'+(pi3'-pi2')*(a*pi5-2*pi2*pi3+3*pi1*pi4)"
                 "+2*a*pi5'+(pi2-pi3)*(pi4*pi1'+pi4'*pi1))")});
    B.ricci(C, E, t, th,
            {same(Ric(C, S, t, th)), lit("(theta*pi1+thetabar*pi2)/(2*a)*(pi3'-pi2')+thetabar*pi5'/2")});
    B.ricci(C, E, t, tb,
            {same(Ric(C, S, t, tb)), lit("(theta*pi3+thetabar*pi4)/(2*a)*(pi2'-pi3')-theta*pi5'/2")});
    B.ricci(C, E, th, t,
            {same(Ric(C, S, th, t)), lit("-(theta*pi3+thetabar*pi4)/(2*a)*(pi2'-pi3')-3*theta*pi5'/2")});
    B.ricci(C, E, th, tb,
            {same(Ric(C, S, th, tb)), lit("a*(pi2'-pi3')/2+thetabar*theta/2*" + bracket)});
    B.ricci(C, E, tb, t,
            {same(Ric(C, S, tb, t)), lit("-(theta*pi3+thetabar*pi4)/(2*a)*(pi2'-pi3')-3*theta*pi5'/2")});
    B.ricci(C, E, tb, th,
            {same(Ric(C, S, tb, th)), lit("-a*(pi2'-pi3')/2-thetabar*theta/2*" + bracket)});
    B.fill_zero(C, E, Quantity::Ricci);
    B.scalar(C, E,
             {same(scalar_id(C, S)),
              lit("2*(pi2'-pi3')+thetabar*theta*(4*pi5*(pi3'-pi2')+7*(pi3-pi2)*pi5'+2*pi5'')")});
}

void qpi_evolving_curvature(Builder& B) {
    B.ricci(Q, E, th, th, {lit("0")});
    B.ricci(Q, E, tb, tb, {lit("0")});
    B.ricci(Q, E, t, t,
            {same(Ric(Q, S, t, t)),
             lit("qpi2'-qpi3'-thetabar*theta/qpi7*("
                 "-qpi2*(2*qpi4*qpi1'+4*qpi3*(qpi2'-qpi3')+2*qpi1*qpi4'+qpi7*qpi5'+qpi3'')"
                 "+qpi3*(2*qpi4*qpi1'+2*qpi1*qpi4'+qpi7*qpi5'-qpi2'')"
                 "+2*qpi2^2*qpi3'-2*qpi3^2*qpi2'+6*qpi1*qpi4*qpi2'+2*qpi7*qpi5*qpi2'+qpi6*qpi2'"
                 "-6*qpi1*qpi4*qpi3'-2*qpi7*qpi5*qpi3'-qpi6*qpi3'-2*qpi2'*qpi3'+2*qpi1'*qpi4'"
                 "+qpi4*qpi1''+qpi1*qpi4''+qpi6'')")});
    B.ricci(Q, E, t, th,
            {same(Ric(Q, S, t, th)),
             lit("theta/(2*qpi7)*(qpi1*qpi2'-qpi1*qpi3')"
                 "+thetabar/(2*qpi7)*(-qpi4*qpi1'+(qpi2+qpi3)*qpi2'-qpi1*qpi4'+3*qpi6')")});
    B.ricci(Q, E, t, tb,
            {same(Ric(Q, S, t, tb)),
             lit("theta/(2*qpi7)*(qpi4*qpi1'-(qpi2+qpi3)*qpi3'+qpi1*qpi4'-3*qpi6')"
                 "+thetabar/(2*qpi7)*(qpi4*(qpi2'-qpi3'))")});
    B.ricci(Q, E, th, t,
            {same(Ric(Q, S, th, t)),
             lit("theta/(2*qpi7)*qpi1*(qpi3'-qpi2')"
                 "+thetabar/(2*qpi7)*(-3*qpi4*qpi1'-(qpi2-3*qpi3)*qpi2'+4*qpi2*qpi3'-3*(qpi1*qpi4'+qpi6'))")});
    B.ricci(Q, E, th, tb,
            {same(Ric(Q, S, th, tb)),
             lit("(qpi2'-qpi3')/(2*qpi7)-thetabar*theta/(2*qpi7^2)*("
                 "-qpi2*(2*qpi4*qpi1'+4*qpi3*(qpi3'-qpi2')+2*qpi1*qpi4'-3*qpi7*qpi5'+2*qpi6'+qpi3'')"
                 "+qpi3*(2*qpi4*qpi1'+2*qpi1*qpi4'-3*qpi7*qpi5'+2*qpi6'-qpi2'')"
                 "+2*qpi2^2*qpi3'-2*qpi3^2*qpi2'-2*qpi1*qpi4*qpi2'+2*qpi7*qpi5*qpi2'"
                 "-2*qpi6*qpi2'+2*qpi1*qpi4*qpi3'-2*qpi7*qpi5*qpi3'+2*qpi6*qpi3'"
                 "-2*qpi2'*qpi3'+2*qpi1'*qpi4'+qpi4*qpi1''+qpi1*qpi4''+qpi6'')")});
    B.ricci(Q, E, tb, t,
            {same(Ric(Q, S, tb, t)),
             lit("theta/(2*qpi7)*(3*qpi4*qpi1'+qpi3*(qpi3'-4*qpi2')+3*(-qpi2*qpi3'+qpi1*qpi4'+qpi6'))"
                 "+thetabar/(2*qpi7)*qpi4*(qpi3'-qpi2')")});
    // two adjacent factors printed without an operator are read as a product
    B.ricci(Q, E, tb, th,
            {same(Ric(Q, S, tb, th)),
             lit("(qpi3'-qpi2')/(2*qpi7)-thetabar*theta/qpi7^2*("
                 "qpi2*(2*qpi4*qpi1'+4*qpi3*(qpi3'-qpi2')+2*qpi1*qpi4'-3*qpi7*qpi5'+2*qpi6'+qpi3'')"
                 "-qpi3*(2*qpi4*qpi1'+2*qpi1*qpi4'-3*qpi7*qpi5'+2*qpi6'-qpi2'')"
                 "-2*qpi2^2*qpi3'*2*qpi3^2*qpi2'"
                 "+2*qpi1*qpi4*qpi2'-2*qpi7*qpi5*qpi2'+2*qpi6*qpi2'-2*qpi1*qpi4*qpi3'"
                 "+2*qpi7*qpi5*qpi3'-2*qpi6*qpi3'+2*qpi2'*qpi3'-2*qpi1'*qpi4'-qpi4*qpi1''"
                 "-qpi1*qpi4''-qpi6'')")});
    B.fill_zero(Q, E, Quantity::Ricci);
    B.scalar(Q, E,
             {same(scalar_id(Q, S)),
              lit("2*(qpi2'-qpi3')+thetabar*theta/qpi7*("
                  "-qpi2*(5*qpi4*qpi1'+3*qpi3*(qpi3'-qpi2')+5*qpi1*qpi4'-2*qpi7*qpi5'+5*qpi6'+2*qpi3'')"
                  "+qpi3*(5*qpi4*qpi1'+5*qpi1*qpi4'-2*qpi7*qpi5'+5*qpi6'-2*qpi2'')"
                  "+2*(qpi1*(qpi4*(qpi2'-qpi3')+qpi4'')+(3*qpi7*qpi5-qpi6)*qpi2'"
                  "+(-2*qpi2'-3*qpi7*qpi5+qpi6)*qpi3'+2*qpi1'*qpi4'+qpi4*qpi1''+qpi6'')"
                  "+5*qpi2^2*qpi3'-5*qpi3^2*qpi2')")});
}

std::vector<Fixture> build() {
    Builder B;
    metrics(B);
    cpi_static_connection(B);
    cpi_evolving_connection(B);
    qpi_static_connection(B);
    qpi_evolving_connection(B);
    cpi_static_curvature(B);
    qpi_static_curvature(B);
    cpi_evolving_curvature(B);
    qpi_evolving_curvature(B);
    std::sort(B.out.begin(), B.out.end(), [](const Fixture& x, const Fixture& y) { return x.id < y.id; });
    return B.out;
}

}  // namespace

std::string christoffel_id(Model m, Regime r, int c, int a, int b) {
    return prefix(m, r) + ".christoffel[" + kIdx[c] + ";" + kIdx[a] + "," + kIdx[b] + "]";
}
std::string ricci_id(Model m, Regime r, int a, int b) {
    return prefix(m, r) + ".ricci[" + kIdx[a] + "," + kIdx[b] + "]";
}
std::string scalar_id(Model m, Regime r) { return prefix(m, r) + ".scalar"; }

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = build();
    return all;
}

const Fixture& fixture(const std::string& id) {
    static const std::map<std::string, std::size_t> index = [] {
        std::map<std::string, std::size_t> m;
        for (std::size_t i = 0; i < fixtures().size(); ++i) m[fixtures()[i].id] = i;
        return m;
    }();
    auto it = index.find(id);
    if (it == index.end()) throw std::out_of_range("no fixture " + id);
    return fixtures()[it->second];
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> n{"connection", "curvature", "evolving-curvature", "metric", "all"};
    return n;
}

bool in_suite(const Fixture& f, const std::string& suite) {
    bool curvature = f.quantity == Quantity::Ricci || f.quantity == Quantity::Scalar;
    if (suite == "all") return true;
    if (suite == "connection" || suite == "appendixE") return f.quantity == Quantity::Christoffel;
    if (suite == "curvature" || suite == "appendixF") return curvature && f.regime == Regime::Static;
    if (suite == "evolving-curvature" || suite == "appendixG") return curvature && f.regime == Regime::Evolving;
    if (suite == "metric") return !curvature && f.quantity != Quantity::Christoffel;
    throw std::invalid_argument("unknown suite " + suite);
}

std::vector<std::string> dependencies(const Fixture& f) {
    std::vector<std::string> out;
    for (const Term& t : f.terms) {
        if (t.kind != Term::Kind::Ref && t.kind != Term::Kind::Base) continue;
        for (auto& d : dependencies(fixture(t.body))) out.push_back(d);
        out.push_back(t.body);
    }
    return out;
}

}  // namespace sgeo::catalog
