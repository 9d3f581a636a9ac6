#include "verify/job.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "common/errors.hpp"
#include "verify/tex.hpp"

namespace sgeo::verify {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

bool parse_bool(const std::string& s) {
    std::string v = lower(s);
    if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
    if (v == "false" || v == "no" || v == "0" || v == "off") return false;
    throw Error("expected a boolean, got '" + s + "'");
}

int index_of(const std::string& s) {
    if (s == "t") return T;
    if (s == "theta") return TH;
    if (s == "thetabar") return THB;
    throw Error("unknown index '" + s + "' (t, theta, thetabar)");
}

// "E_t_theta" -> (t, theta)
std::pair<int, int> entry_key(const std::string& key, char head) {
    if (key.size() < 4 || key[0] != head || key[1] != '_') throw Error(std::string("expected ") + head + "_<row>_<col>");
    std::string rest = key.substr(2);
    std::size_t us = rest.find('_');
    if (us == std::string::npos) throw Error(std::string("expected ") + head + "_<row>_<col>");
    return {index_of(rest.substr(0, us)), index_of(rest.substr(us + 1))};
}

const char* model_name(JobModel m) {
    switch (m) {
        case JobModel::Cpi: return "cpi";
        case JobModel::Qpi: return "qpi";
        case JobModel::Custom: return "custom";
    }
    return "?";
}

Bindings static_freeze_for(const SuperMatrix3& g) {
    std::set<SymId> base;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            for (int k = 0; k < 4; ++k) {
                const ScalarExpr& e = g(r, c).component(k);
                for (SymId s : e.symbols()) base.insert(s);
            }
    Bindings b;
    for (SymId s : base) {
        if (!symbol(s).time_dependent || symbol(s).order != 0) continue;
        SymId d = s;
        for (int o = 1; o <= kMaxDerivativeOrder; ++o) {
            d = derived(d);
            b[d] = ScalarExpr(0);
        }
    }
    return b;
}

Curvature job_curvature(const JobSpec& job) {
    switch (job.model) {
        case JobModel::Cpi: return cpi_curvature(CpiPis::symbolic(ScalarExpr(job.sign)), job.time_dependent);
        case JobModel::Qpi: {
            // qpi7 = a_B eps; a bound eps = 0 is the singular limit
            QpiPis p = QpiPis::symbolic();
            auto eps = find_symbol("eps");
            if (eps && job.bindings.count(*eps)) {
                ScalarExpr p7 = ScalarExpr(job.sign) * job.bindings.at(*eps);
                if (p7.is_zero())
                    throw SingularBlockB("qpi7 = a_B eps = 0: the quantum metric is singular as eps -> 0, "
                                         "its odd-odd block has no body");
            }
            auto p7 = find_symbol("qpi7");
            if (p7 && job.bindings.count(*p7) && job.bindings.at(*p7).is_zero())
                throw SingularBlockB("qpi7 = 0: the quantum metric is singular, its odd-odd block has no body");
            return qpi_curvature(p, job.time_dependent);
        }
        case JobModel::Custom: {
            SuperMatrix3 up = job.upper ? *job.upper : metric_from_vierbein(*job.vierbein);
            return staged_curvature(up, job.time_dependent ? Bindings{} : static_freeze_for(up));
        }
    }
    throw Error("unknown model");
}

struct Line {
    std::string key;    // records key
    std::string label;  // text label
    std::string tex_label;
    SuperFunction value;
};

std::string tex_index(int i) { return i == T ? "t" : i == TH ? "\\theta" : "\\bar\\theta"; }

std::string render(const std::vector<std::pair<std::string, std::vector<Line>>>& blocks, const std::string& head,
                   Format fmt) {
    std::ostringstream o;
    if (fmt == Format::Records) {
        for (const auto& [title, lines] : blocks)
            for (const auto& l : lines) o << l.key << "=" << l.value.str() << "\n";
        return o.str();
    }
    if (fmt == Format::Tex) {
        o << "% " << head << "\n";
        for (const auto& [title, lines] : blocks) {
            o << "% " << title << "\n\\begin{align*}\n";
            bool any = false;
            for (const auto& l : lines) {
                if (l.value.is_zero()) continue;
                o << l.tex_label << " &= " << tex(l.value) << " \\\\\n";
                any = true;
            }
            if (!any) o << "0 &= 0\n";
            o << "\\end{align*}\n";
        }
        return o.str();
    }
    o << head << "\n";
    for (const auto& [title, lines] : blocks) {
        o << title << "\n";
        int zeros = 0;
        for (const auto& l : lines) {
            if (l.value.is_zero() && lines.size() > 9) {
                ++zeros;
                continue;
            }
            o << "  " << l.label << " = " << l.value.str() << "\n";
        }
        if (zeros) o << "  (" << zeros << " further components vanish)\n";
    }
    return o.str();
}

}  // namespace

JobModel parse_model(const std::string& s) {
    std::string v = lower(trim(s));
    if (v == "cpi") return JobModel::Cpi;
    if (v == "qpi") return JobModel::Qpi;
    if (v == "custom") return JobModel::Custom;
    throw Error("unknown model '" + s + "' (cpi, qpi, custom)");
}

Format parse_format(const std::string& s) {
    std::string v = lower(trim(s));
    if (v == "text") return Format::Text;
    if (v == "records") return Format::Records;
    if (v == "tex") return Format::Tex;
    throw Error("unknown format '" + s + "' (text, records, tex)");
}

Pi6Form parse_pi6_form(const std::string& s) {
    std::string v = lower(trim(s));
    if (v == "eq69" || v == "regularized") return Pi6Form::Regularized;
    if (v == "eq72" || v == "interpolating") return Pi6Form::Interpolating;
    throw Error("unknown pi6 form '" + s + "' (eq69, eq72)");
}

int parse_sign(const std::string& s) {
    std::string v = trim(s);
    if (v == "+" || v == "+1" || v == "1") return 1;
    if (v == "-" || v == "-1") return -1;
    throw Error("sign must be + or -, got '" + s + "'");
}

void add_binding(JobSpec& job, const std::string& assignment) {
    std::size_t eq = assignment.find('=');
    if (eq == std::string::npos) throw Error("binding '" + assignment + "' is not SYM=VALUE");
    std::string lhs = trim(assignment.substr(0, eq)), rhs = trim(assignment.substr(eq + 1));
    AstPtr a = parse_ast(lhs);
    if (a->kind != Ast::Kind::Symbol) throw Error("binding target '" + lhs + "' is not a symbol");
    SuperFunction v = parse_super(rhs);
    if (!v.soul().is_zero() || !v.body().is_constant())
        throw Error("binding value '" + rhs + "' for " + lhs + " is not a constant");
    job.bindings[intern(a->name, a->order)] = v.body();
}

JobSpec parse_job(const std::string& text, const std::string& source) {
    JobSpec job;
    std::istringstream in(text);
    std::string raw, section;
    int lineno = 0;
    SuperMatrix3 e, g;
    std::set<std::pair<int, int>> seen_e, seen_g;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        auto where = [&] { return source + ":" + std::to_string(lineno) + ": "; };
        try {
            if (line.front() == '[') {
                if (line.back() != ']') throw Error("unterminated section header");
                section = lower(trim(line.substr(1, line.size() - 2)));
                if (section != "model" && section != "vierbein" && section != "metric" && section != "bindings" &&
                    section != "options")
                    throw Error("unknown section [" + section + "]");
                continue;
            }
            std::size_t eq = line.find('=');
            if (eq == std::string::npos) throw Error("expected key = value");
            std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
            if (section == "model") {
                if (key != "name") throw Error("unknown [model] key '" + key + "'");
                job.model = parse_model(val);
            } else if (section == "vierbein") {
                auto [r, c] = entry_key(key, 'E');
                e(r, c) = parse_super(val);
                seen_e.insert({r, c});
            } else if (section == "metric") {
                auto [r, c] = entry_key(key, 'g');
                g(r, c) = parse_super(val);
                seen_g.insert({r, c});
            } else if (section == "bindings") {
                add_binding(job, key + "=" + val);
            } else if (section == "options") {
                std::string k = lower(key);
                if (k == "sign") job.sign = parse_sign(val);
                else if (k == "time_dependent") job.time_dependent = parse_bool(val);
                else if (k == "pi6_form") job.pi6 = parse_pi6_form(val);
                else if (k == "format") job.format = parse_format(val);
                else throw Error("unknown [options] key '" + key + "'");
            } else {
                throw Error("entry outside any section");
            }
        } catch (const ParseError& ex) {
            throw Error(where() + ex.what());
        } catch (const Error& ex) {
            throw Error(where() + ex.what());
        }
    }
    if (!seen_e.empty()) {
        if (seen_e.size() != 9) throw Error(source + ": [vierbein] needs all nine entries E_t_t .. E_thetabar_thetabar");
        grading_check(e);
        job.vierbein = e;
    }
    if (!seen_g.empty()) {
        if (seen_g.size() != 9) throw Error(source + ": [metric] needs all nine entries g_t_t .. g_thetabar_thetabar");
        grading_check(g);
        job.upper = g;
    }
    if (job.model == JobModel::Custom && !job.vierbein && !job.upper)
        throw Error(source + ": a custom model needs a [vierbein] or a [metric] section");
    return job;
}

JobSpec load_job(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_job(ss.str(), path);
}

std::string run_compute(const JobSpec& job) {
    Curvature c = job_curvature(job);
    auto bind = [&](const SuperFunction& f) { return job.bindings.empty() ? f : substitute(f, job.bindings); };
    std::vector<std::pair<std::string, std::vector<Line>>> blocks;
    auto pair_name = [](int a, int b) { return std::string(index_name(a)) + "," + index_name(b); };
    std::vector<Line> up, lo, gam, ric;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            std::string ta = tex_index(a), tb = tex_index(b);
            up.push_back({"metric.upper[" + pair_name(a, b) + "]", "g^" + std::string(index_name(a)) + " " + index_name(b),
                          "g^{" + ta + tb + "}", bind(c.metric.upper(a, b))});
            lo.push_back({"metric.lower[" + pair_name(a, b) + "]", "g_" + std::string(index_name(a)) + " " + index_name(b),
                          "g_{" + ta + tb + "}", bind(c.metric.lower(a, b))});
            ric.push_back({"ricci[" + pair_name(a, b) + "]", ricci_name(a, b), "R_{" + ta + tb + "}",
                           bind(c.curv.ric(a, b))});
        }
    for (int k = 0; k < 3; ++k)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                gam.push_back({"christoffel[" + std::string(index_name(k)) + ";" + pair_name(a, b) + "]",
                               "Gamma^" + std::string(index_name(k)) + "_" + index_name(a) + " " + index_name(b),
                               "\\Gamma^{" + tex_index(k) + "}_{" + tex_index(a) + tex_index(b) + "}",
                               bind(c.gamma(k, a, b))});
    blocks.push_back({"upper metric", up});
    blocks.push_back({"lower metric", lo});
    blocks.push_back({"Christoffel symbols", gam});
    blocks.push_back({"Ricci tensor", ric});
    blocks.push_back({"scalar curvature", {{"scalar", "R", "R", bind(c.curv.scalar)}}});

    std::string head = std::string("model ") + model_name(job.model);
    if (job.model != JobModel::Custom) head += std::string(job.model == JobModel::Cpi ? ", a=" : ", aB=") + (job.sign > 0 ? "+1" : "-1");
    head += job.time_dependent ? ", time-dependent" : ", time-independent";
    if (job.format == Format::Records) {
        std::string out = "model=" + std::string(model_name(job.model)) + "\n";
        return out + render(blocks, head, job.format);
    }
    return render(blocks, head, job.format);
}

FlatnessOutcome run_flatness(const JobSpec& job) {
    std::ostringstream o;
    FlatnessOutcome out;
    bool rec = job.format == Format::Records, tx = job.format == Format::Tex;
    auto residual_line = [&](const Residual& r) {
        if (rec) o << "residual." << r.component << "=" << r.value.str() << "\n";
        else if (tx) o << "% " << r.component << " = $" << tex(r.value) << "$\n";
        else o << "  " << r.component << " = " << r.value.str() << "\n";
    };
    if (job.model == JobModel::Cpi) {
        FlatnessReport r = cpi_flatness(CpiPis::symbolic(ScalarExpr(job.sign)), job.time_dependent, true);
        out.ok = r.flat;
        if (rec) {
            o << "model=cpi\nverdict=" << (r.flat ? "FLAT" : "NOT FLAT") << "\n";
            for (const auto& c : r.constraints) o << "constraint=" << c << "\n";
        } else {
            o << (tx ? "% " : "") << "cpi, a=" << (job.sign > 0 ? "+1" : "-1")
              << (job.time_dependent ? ", time-dependent" : ", time-independent") << "\n";
            o << (tx ? "% " : "") << "constraints:";
            for (const auto& c : r.constraints) o << " " << c << ";";
            o << "\n" << (tx ? "% " : "") << "residuals:\n";
        }
        for (const auto& res : r.residuals) residual_line(res);
        if (!rec) o << (tx ? "% " : "") << "verdict: " << (r.flat ? "FLAT" : "NOT FLAT") << "\n";
        out.report = o.str();
        return out;
    }
    if (job.model != JobModel::Qpi) throw Error("flatness needs --model cpi or qpi");
    ObstructionReport r = qpi_obstruction(QpiPis::symbolic());
    const char* skip = job.pi6 == Pi6Form::Regularized ? "(interpolating form)" : "(regularized form)";
    if (rec) {
        o << "model=qpi\nverdict=" << (r.obstructed ? "OBSTRUCTED" : "NOT OBSTRUCTED") << "\n";
        for (const auto& c : r.constraints) o << "constraint=" << c << "\n";
    } else {
        o << (tx ? "% " : "") << "qpi\n" << (tx ? "% " : "") << "vanishing constraints:";
        for (const auto& c : r.constraints) o << " " << c << ";";
        o << "\n" << (tx ? "% " : "") << "residuals under the constraints:\n";
    }
    for (const auto& res : r.residuals) residual_line(res);
    if (!rec) o << (tx ? "% " : "") << "evidence:\n";
    for (const auto& e : r.evidence) {
        if (e.label.find(skip) != std::string::npos) continue;
        if (rec) o << "evidence." << e.label << "=" << e.value << (e.holds ? "" : " (fails)") << "\n";
        else o << (tx ? "% " : "") << "  [" << (e.holds ? "holds" : "fails") << "] " << e.label << ": " << e.value << "\n";
    }
    if (!rec) o << (tx ? "% " : "") << "verdict: " << (r.obstructed ? "OBSTRUCTED" : "NOT OBSTRUCTED") << "\n";
    out.ok = r.obstructed;
    out.report = o.str();
    return out;
}

}  // namespace sgeo::verify
