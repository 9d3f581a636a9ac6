#include "models/fixture_eval.hpp"

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "common/errors.hpp"

namespace sgeo {
namespace {

using catalog::Fixture;
using catalog::Model;
using catalog::Quantity;
using catalog::Regime;
using catalog::Term;

bool raw_level(const Fixture& f) {
    return f.quantity == Quantity::VierbeinMetric || f.quantity == Quantity::VierbeinInverse ||
           f.quantity == Quantity::VierbeinSdet;
}

bool pi_level(const Fixture& f) { return !raw_level(f) && f.quantity != Quantity::DeterminantInverse; }

ScalarExpr nth_derivative(ScalarExpr e, int order) {
    for (int k = 0; k < order; ++k) e = derive(e);
    return e;
}

// pi_k -> qpi_k, a -> qpi7
std::pair<std::string, int> classical_reading(const std::string& name, int order) {
    if (name == "a") return {"qpi7", order};
    if (name.size() == 3 && name.rfind("pi", 0) == 0 && name[2] >= '1' && name[2] <= '9') return {"q" + name, order};
    return {name, order};
}

struct Context {
    const Fixture* top;
    int branch;
};

SuperFunction resolve(const Context& cx, bool classical, std::string name, int order) {
    if (classical) std::tie(name, order) = classical_reading(name, order);
    const Fixture& f = *cx.top;
    ScalarExpr s(cx.branch);
    if (f.model == Model::Cpi) {
        if (name == "a") return SuperFunction(s);
        if (name == "pi5" && pi_level(f))
            return SuperFunction(nth_derivative(s * (pi_sym(2) * pi_sym(3) - pi_sym(1) * pi_sym(4)), order));
        if (f.constrained && (name == "bB" || name == "bS")) {
            CpiRaw r = constrained_cpi(cx.branch);
            return SuperFunction(name == "bB" ? r.b.u1() : r.b.utbt());
        }
    } else {
        if (name == "aB" && raw_level(f)) return SuperFunction(s);
        if (name == "phi")
            return SuperFunction(nth_derivative(qpi_sym(2) * qpi_sym(3) - qpi_sym(1) * qpi_sym(4), order));
        if (name == "sigma1")
            return SuperFunction(nth_derivative(
                qpi_sym(2) * qpi_sym(3) - qpi_sym(1) * qpi_sym(4) - qpi_sym(5) * qpi_sym(7), order));
        if (f.constrained && (name == "bB" || name == "bS")) {
            QpiRaw r = constrained_qpi(cx.branch);
            return SuperFunction(name == "bB" ? r.b.u1() : r.b.utbt());
        }
    }
    return SuperFunction(ScalarExpr::sym(name, order));
}

std::optional<SuperFunction> printed_rec(const Fixture& f, const Context& cx, bool classical) {
    SuperFunction acc;
    for (const Term& t : f.terms) {
        switch (t.kind) {
            case Term::Kind::Self:
                return std::nullopt;
            case Term::Kind::Text: {
                AstPtr ast = parse_ast(t.body);
                acc += eval_ast(*ast, [&](const std::string& n, int o) { return resolve(cx, classical, n, o); });
                break;
            }
            case Term::Kind::Ref:
            case Term::Kind::Base: {
                auto v = printed_rec(catalog::fixture(t.body), cx, classical || t.kind == Term::Kind::Base);
                if (!v) return std::nullopt;
                acc += t.sign < 0 ? -*v : *v;
                break;
            }
        }
    }
    return acc;
}

Bindings freeze_for(const Fixture& f) {
    if (!pi_level(f)) return {};
    bool quantum = f.model == Model::Qpi;
    if (f.regime == Regime::Static) return static_freeze(quantum);
    return quantum ? evolving_freeze_quantum() : Bindings{};
}

using CurvKey = std::tuple<int, int, int>;

std::shared_ptr<const Curvature> curvature_for(Model m, Regime r, int branch) {
    static std::mutex mu;
    static std::map<CurvKey, std::shared_future<std::shared_ptr<const Curvature>>> cache;
    CurvKey key{static_cast<int>(m), static_cast<int>(r), branch};
    std::promise<std::shared_ptr<const Curvature>> mine;
    std::shared_future<std::shared_ptr<const Curvature>> fut;
    bool owner = false;
    {
        std::lock_guard lk(mu);
        auto it = cache.find(key);
        if (it == cache.end()) {
            fut = mine.get_future().share();
            cache.emplace(key, fut);
            owner = true;
        } else {
            fut = it->second;
        }
    }
    if (owner) {
        try {
            bool evolving = r == Regime::Evolving;
            auto c = m == Model::Cpi ? cpi_curvature(CpiPis::symbolic(ScalarExpr(branch)), evolving)
                                     : qpi_curvature(QpiPis::symbolic(), evolving);
            mine.set_value(std::make_shared<const Curvature>(std::move(c)));
        } catch (...) {
            mine.set_exception(std::current_exception());
        }
    }
    return fut.get();
}

}  // namespace

CpiRaw constrained_cpi(int a) { return cpi_family(2, CpiRaw::symbolic(a)); }
QpiRaw constrained_qpi(int aB) { return qpi_family(2, QpiRaw::symbolic(aB)); }

std::vector<int> fixture_branches(const Fixture& f) {
    if (f.model == Model::Cpi || raw_level(f)) return {1, -1};
    return {0};
}

std::string branch_symbol(const Fixture& f) {
    if (f.model == Model::Cpi) return "a";
    return raw_level(f) ? "aB" : "";
}

SuperFunction eval_ast(const Ast& a, const Resolver& r) {
    switch (a.kind) {
        case Ast::Kind::Number: return SuperFunction(ScalarExpr(a.value));
        case Ast::Kind::Imag: return SuperFunction(ScalarExpr::imag());
        case Ast::Kind::Symbol: return r(a.name, a.order);
        case Ast::Kind::Theta: return SuperFunction::theta();
        case Ast::Kind::ThetaBar: return SuperFunction::thetabar();
        case Ast::Kind::Add: return eval_ast(*a.lhs, r) + eval_ast(*a.rhs, r);
        case Ast::Kind::Sub: return eval_ast(*a.lhs, r) - eval_ast(*a.rhs, r);
        case Ast::Kind::Mul: return eval_ast(*a.lhs, r) * eval_ast(*a.rhs, r);
        case Ast::Kind::Div: return eval_ast(*a.lhs, r) * super_inverse(eval_ast(*a.rhs, r));
        case Ast::Kind::Neg: return -eval_ast(*a.lhs, r);
        case Ast::Kind::Pow: {
            SuperFunction x = eval_ast(*a.lhs, r), acc(1);
            for (unsigned k = 0; k < a.exponent; ++k) acc *= x;
            return acc;
        }
    }
    throw Error("unknown expression node");
}

std::optional<SuperFunction> printed_value(const Fixture& f, int branch) {
    Context cx{&f, branch};
    auto v = printed_rec(f, cx, false);
    if (!v) return v;
    Bindings fr = freeze_for(f);
    return fr.empty() ? v : substitute(*v, fr);
}

SuperFunction computed_value(const Fixture& f, int branch) {
    switch (f.quantity) {
        case Quantity::VierbeinMetric: {
            SuperMatrix3 e;
            if (f.model == Model::Cpi)
                e = f.constrained ? cpi_vierbein(constrained_cpi(branch)) : general_frame(CpiRaw::symbolic(branch));
            else
                e = general_frame(QpiRaw::symbolic(branch));
            return metric_from_vierbein(e)(f.i, f.j);
        }
        case Quantity::VierbeinInverse:
            return smat_inverse(cpi_vierbein(constrained_cpi(branch)))(f.i, f.j);
        case Quantity::VierbeinSdet:
            return sdet(qpi_vierbein(constrained_qpi(branch)));
        case Quantity::UpperMetric:
        case Quantity::LowerMetric: {
            Metric m = f.model == Model::Cpi ? cpi_metric(CpiPis::symbolic(ScalarExpr(branch)))
                                             : qpi_metric(QpiPis::symbolic());
            return (f.quantity == Quantity::UpperMetric ? m.upper : m.lower)(f.i, f.j);
        }
        case Quantity::DeterminantInverse:
            return super_inverse(regularized_determinant(ScalarExpr::sym("eps")));
        case Quantity::Christoffel:
            return curvature_for(f.model, f.regime, branch)->gamma(f.i, f.j, f.k);
        case Quantity::Ricci:
            return curvature_for(f.model, f.regime, branch)->curv.ric(f.i, f.j);
        case Quantity::Scalar:
            return curvature_for(f.model, f.regime, branch)->curv.scalar;
    }
    throw Error("unknown quantity");
}

FixtureCheck check_fixture(const Fixture& f) {
    FixtureCheck out;
    out.fixture = &f;
    out.match = true;
    for (int b : fixture_branches(f)) {
        BranchCheck bc;
        bc.branch = b;
        bc.printed = printed_value(f, b);
        bc.computed = computed_value(f, b);
        bc.equal = bc.printed && *bc.printed == bc.computed;
        if (!bc.printed) out.vacuous = true;
        out.match = out.match && bc.equal;
        out.branches.push_back(std::move(bc));
    }
    return out;
}

}  // namespace sgeo
