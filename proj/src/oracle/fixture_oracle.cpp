#include "oracle/fixture_oracle.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <tuple>

#include "common/errors.hpp"
#include "scalar_ring/syntax.hpp"

namespace sgeo::oracle {
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

std::uint64_t fnv(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ULL;
    return h;
}

class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}
    CQ nonzero() {
        // wide range keeps accidental cancellations between unequal expressions unlikely
        std::uniform_int_distribution<int> num(2, 997), den(1, 991), sgn(0, 1);
        mpq_class v(num(rng_), den(rng_));
        v.canonicalize();
        return CQ(sgn(rng_) ? v : mpq_class(-v));
    }

private:
    std::mt19937_64 rng_;
};

void put(Binding& b, const std::string& name, int order, CQ v) { b[intern(name, order)] = std::move(v); }

CQ get(const Binding& b, const std::string& name, int order = 0) {
    auto it = b.find(intern(name, order));
    if (it == b.end()) throw UnboundSymbol(symbol_text(intern(name, order)));
    return it->second;
}

NSN even(const Binding& b, const std::string& base) { return {get(b, base + "B"), 0, 0, get(b, base + "S")}; }
NSN odd(const Binding& b, const std::string& base) { return {0, get(b, base + "t"), get(b, base + "tb"), 0}; }

NSN regularized(const Binding& b) {
    // eps - i thetabar theta / hbar
    CQ ih = CQ(0, 1) * get(b, "hbar").inv();
    return {get(b, "eps"), 0, 0, -ih};
}

Binding draw_sample(const Fixture& f, int branch, int index) {
    std::string fam = sample_family(f);
    Draw d(fnv(fam + "/" + std::to_string(branch) + "/" + std::to_string(index)));
    Binding b;
    bool quantum = f.model == Model::Qpi;
    if (pi_level(f)) {
        bool evolving = f.regime == Regime::Evolving;
        int n = quantum ? 7 : 4;
        for (int k = 1; k <= n; ++k)
            for (int o = 0; o <= 2; ++o) {
                CQ v = d.nonzero();
                bool frozen = o > 0 && (!evolving || (quantum && k == 7));
                put(b, (quantum ? "qpi" : "pi") + std::to_string(k), o, frozen ? CQ(0) : v);
            }
        if (!quantum) {
            put(b, "a", 0, branch);
            // pi7 has no classical meaning but one printed entry mentions it; it gets an unrelated value
            for (int o = 0; o <= 2; ++o) put(b, "pi7", o, d.nonzero());
        }
        return b;
    }
    if (f.quantity == Quantity::DeterminantInverse) {
        put(b, "eps", 0, d.nonzero());
        put(b, "hbar", 0, d.nonzero());
        return b;
    }
    for (const char* s : {"gammat", "gammatb", "deltat", "deltatb", "bB", "bS", "cB", "cS", "dB", "dS", "eB", "eS"})
        put(b, s, 0, d.nonzero());
    if (quantum) {
        put(b, "aB", 0, branch);
        for (const char* s : {"aS", "alphat", "alphatb", "betat", "betatb", "eps", "hbar"}) put(b, s, 0, d.nonzero());
    } else {
        put(b, "a", 0, branch);
    }
    if (f.constrained) solve_constraint(b, f.model);
    return b;
}

std::string binding_key(const Binding& b) {
    std::string s;
    for (const auto& [id, v] : b) s += std::to_string(id) + "=" + v.re.get_str() + "," + v.im.get_str() + ";";
    return s;
}

std::shared_ptr<const NumericCurvature> pipeline_for(const Fixture& f, int branch, const Binding& b) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const NumericCurvature>> cache;
    std::string key = sample_family(f) + "|" + binding_key(b);
    {
        std::lock_guard lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto c = std::make_shared<const NumericCurvature>(numeric_pipeline(
        b, f.model == Model::Cpi ? Family::Cpi : Family::Qpi, f.regime == Regime::Evolving, branch));
    std::lock_guard lk(mu);
    return cache.emplace(key, std::move(c)).first->second;
}

// ---------------------------------------------------------------- printed text

NSN nth(const Jet& j, int order) {
    if (order < 0 || order > 2 || order >= j.valid) throw Error("derivative order " + std::to_string(order) + " out of range");
    return j.d[static_cast<std::size_t>(order)];
}

Jet jet_of(const Binding& b, const std::string& name) { return symbol_jet(b, name.c_str(), true); }

// p2 p3 - p1 p4 with the given prefix
Jet phi_jet(const Binding& b, const std::string& prefix) {
    auto p = [&](int k) { return jet_of(b, prefix + std::to_string(k)); };
    return jet_add(jet_mul(p(2), p(3)), jet_scale(jet_mul(p(1), p(4)), -1));
}

struct Reader {
    const Fixture& top;
    int branch;
    const Binding& b;

    NSN symbol(std::string name, int order, bool classical) const {
        if (classical) {
            if (name == "a") name = "qpi7";
            else if (name.size() == 3 && name.rfind("pi", 0) == 0) name = "q" + name;
        }
        if (top.model == Model::Cpi) {
            if (name == "a") {
                if (order) return NSN();
                return NSN(CQ(branch));
            }
            if (name == "pi5" && pi_level(top)) return nth(jet_scale(phi_jet(b, "pi"), branch), order);
        } else {
            if (name == "aB" && raw_level(top)) return order ? NSN() : NSN(CQ(branch));
            if (name == "phi") return nth(phi_jet(b, "qpi"), order);
            if (name == "sigma1")
                return nth(jet_add(phi_jet(b, "qpi"), jet_scale(jet_mul(jet_of(b, "qpi5"), jet_of(b, "qpi7")), -1)),
                           order);
        }
        return NSN(get(b, name, order));
    }

    NSN eval(const Ast& a, bool classical) const {
        switch (a.kind) {
            case Ast::Kind::Number: return NSN(CQ(a.value));
            case Ast::Kind::Imag: return NSN(CQ(0, 1));
            case Ast::Kind::Symbol: return symbol(a.name, a.order, classical);
            case Ast::Kind::Theta: return NSN::theta();
            case Ast::Kind::ThetaBar: return NSN::thetabar();
            case Ast::Kind::Add: return eval(*a.lhs, classical) + eval(*a.rhs, classical);
            case Ast::Kind::Sub: return eval(*a.lhs, classical) - eval(*a.rhs, classical);
            case Ast::Kind::Mul: return eval(*a.lhs, classical) * eval(*a.rhs, classical);
            case Ast::Kind::Div: return eval(*a.lhs, classical) * eval(*a.rhs, classical).inv();
            case Ast::Kind::Neg: return -eval(*a.lhs, classical);
            case Ast::Kind::Pow: {
                NSN x = eval(*a.lhs, classical), acc(1);
                for (unsigned k = 0; k < a.exponent; ++k) acc = acc * x;
                return acc;
            }
        }
        throw Error("unknown expression node");
    }

    std::optional<NSN> entry(const Fixture& f, bool classical) const {
        NSN acc;
        for (const Term& t : f.terms) {
            if (t.kind == Term::Kind::Self) return std::nullopt;
            if (t.kind == Term::Kind::Text) {
                acc = acc + eval(*parse_ast(t.body), classical);
                continue;
            }
            auto v = entry(catalog::fixture(t.body), classical || t.kind == Term::Kind::Base);
            if (!v) return std::nullopt;
            acc = t.sign < 0 ? acc - *v : acc + *v;
        }
        return acc;
    }
};

}  // namespace

std::string sample_family(const Fixture& f) {
    std::string m = f.model == Model::Cpi ? "cpi" : "qpi";
    if (f.quantity == Quantity::DeterminantInverse) return m + ".determinant";
    if (raw_level(f)) return m + (f.constrained ? ".frame.constrained" : ".frame");
    return m + (f.regime == Regime::Static ? ".static" : ".evolving");
}

Binding fixture_sample(const Fixture& f, int branch, int index) {
    // a draw that makes the constraint unsolvable is replaced by the next one
    for (int attempt = 0; attempt < 64; ++attempt) {
        try {
            return draw_sample(f, branch, index * 64 + attempt);
        } catch (const SingularNumeric&) {
        }
    }
    throw SingularNumeric("no admissible sample for " + sample_family(f));
}

std::vector<Binding> fixture_samples(const Fixture& f, int branch, int count) {
    std::vector<Binding> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(fixture_sample(f, branch, i));
    return out;
}

Mat numeric_frame(const Binding& b, Model m) {
    Mat e;
    if (m == Model::Cpi) {
        e[0] = NSN(get(b, "a"));
    } else {
        e[0] = NSN(get(b, "aB"), 0, 0, get(b, "aS"));
        e[1] = odd(b, "alpha");
        e[2] = odd(b, "beta");
    }
    e[3] = odd(b, "gamma"), e[4] = even(b, "b"), e[5] = even(b, "c");
    e[6] = odd(b, "delta"), e[7] = even(b, "d"), e[8] = even(b, "e");
    return e;
}

void solve_constraint(Binding& b, Model m) {
    NSN target = m == Model::Cpi ? NSN(1) : regularized(b).inv();
    auto sdet_at = [&](CQ bb, CQ bs) {
        put(b, "bB", 0, std::move(bb));
        put(b, "bS", 0, std::move(bs));
        return berezinian(numeric_frame(b, m));
    };
    // 1/body is affine in bB
    CQ h1 = sdet_at(1, 0).c[0].inv(), h2 = sdet_at(2, 0).c[0].inv();
    CQ slope = h2 - h1;
    if (slope.zero()) throw SingularNumeric("body of sdet does not depend on bB");
    CQ bB = CQ(1) + (target.c[0].inv() - h1) * slope.inv();
    // with the body fixed the top component is affine in bS
    CQ f0 = sdet_at(bB, 0).c[3], f1 = sdet_at(bB, 1).c[3];
    CQ ds = f1 - f0;
    if (ds.zero()) throw SingularNumeric("sdet does not depend on bS");
    CQ bS = (target.c[3] - f0) * ds.inv();
    put(b, "bB", 0, bB);
    put(b, "bS", 0, bS);
}

NSN reference_value(const Fixture& f, int branch, const Binding& b) {
    switch (f.quantity) {
        case Quantity::VierbeinMetric: return frame_metric(numeric_frame(b, f.model))[static_cast<std::size_t>(3 * f.i + f.j)];
        case Quantity::VierbeinInverse: return mat_inverse(numeric_frame(b, f.model))[static_cast<std::size_t>(3 * f.i + f.j)];
        case Quantity::VierbeinSdet: return berezinian(numeric_frame(b, f.model));
        case Quantity::DeterminantInverse: return regularized(b).inv();
        default: break;
    }
    auto c = pipeline_for(f, branch, b);
    switch (f.quantity) {
        case Quantity::UpperMetric: return c->upper[static_cast<std::size_t>(3 * f.i + f.j)];
        case Quantity::LowerMetric: return c->lower[static_cast<std::size_t>(3 * f.i + f.j)];
        case Quantity::Christoffel: return c->gamma[static_cast<std::size_t>(9 * f.i + 3 * f.j + f.k)];
        case Quantity::Ricci: return c->ricci[static_cast<std::size_t>(3 * f.i + f.j)];
        case Quantity::Scalar: return c->scalar;
        default: break;
    }
    throw Error("unknown quantity");
}

std::optional<NSN> printed_numeric(const Fixture& f, int branch, const Binding& b) {
    Reader r{f, branch, b};
    return r.entry(f, false);
}

}  // namespace sgeo::oracle
