#include "olines/report.hpp"

#include <cstdio>
#include <sstream>

namespace olines {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json doubles(const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(x);
    return a;
}

Json indices(const std::vector<std::size_t>& v) {
    Json a = Json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

const char* verdict_name(PropertyS v) {
    switch (v) {
        case PropertyS::satisfied: return "satisfied";
        case PropertyS::violated: return "violated";
        case PropertyS::unknown: return "unknown";
    }
    return "?";
}

}  // namespace

Json json_integer(const mpz_class& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

std::string rational_text(const Rational& r) { return r.get_str(); }

Json to_json(const RunManifest& m) {
    Json j;
    j["command"] = m.command;
    j["inputs"] = m.inputs;
    j["recipe"] = m.recipe;
    j["seed"] = m.seed;
    j["mode"] = m.mode;
    j["epsilon"] = m.epsilon;
    j["budget_cols"] = m.budget_cols;
    j["retries"] = m.retries;
    j["threads"] = m.threads;
    j["c0"] = rational_text(m.c0);
    j["c1"] = rational_text(m.c1);
    j["construction"] = m.construction;
    j["statement"] = m.statement;
    j["outputs"] = m.outputs;
    return j;
}

Json to_json(const VerdictReport& r) {
    Json j;
    j["statement"] = r.statement;
    j["applicable"] = r.applicable;
    j["pass"] = r.pass;
    j["claimed"] = r.applicable ? Json(rational_text(r.claimed)) : Json(nullptr);
    j["observed"] = r.applicable ? Json(rational_text(r.observed)) : Json(nullptr);
    j["margin_num"] = r.applicable ? json_integer(r.margin.get_num()) : Json(nullptr);
    j["margin_den"] = r.applicable ? json_integer(r.margin.get_den()) : Json(nullptr);
    j["witnesses"] = r.witnesses;
    Json h = Json::array();
    for (const auto& x : r.hypotheses) h.push_back({{"name", x.name}, {"passed", x.passed}, {"detail", x.detail}});
    j["hypotheses"] = h;
    j["branch"] = r.branch;
    if (r.fitted) {
        j["fitted_c"] = rational_text(*r.fitted);
    } else if (r.fitted_unbounded) {
        j["fitted_c"] = "inf";
    }
    return j;
}

Json to_json(const PruneTrace& t) {
    Json j;
    j["floor"] = to_string(t.floor);
    j["stop"] = to_string(t.stop);
    j["cap"] = t.cap;
    j["t2"] = t.t2;
    j["t2_final"] = t.t2_final;
    j["lower_bound"] = rational_text(t.lower_bound);
    j["floor_reached"] = t.floor_reached;
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        steps.push_back({{"removed", s.removed},
                         {"ordinary", s.ordinary},
                         {"special", s.special},
                         {"remaining", s.remaining},
                         {"affine_dim", s.affine_dim},
                         {"lower_bound", rational_text(s.lower_bound)}});
    }
    j["steps"] = steps;
    return j;
}

Json to_json(const PropertySResult& p) {
    Json j;
    j["verdict"] = verdict_name(p.verdict);
    j["exhaustive"] = p.exhaustive;
    j["m"] = p.m;
    j["n"] = p.n;
    if (p.witness) {
        j["witness_rows"] = indices(p.witness->rows);
        j["witness_cols"] = indices(p.witness->cols);
        j["score_num"] = json_integer(p.witness->score.get_num());
        j["score_den"] = json_integer(p.witness->score.get_den());
    }
    return j;
}

Json to_json(const ScalingReport& r) {
    Json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["epsilon"] = r.scaling.epsilon;
    j["converged"] = r.scaling.converged;
    j["iterations"] = r.scaling.iterations;
    j["target_col"] = r.scaling.target_col;
    j["min_col_sum"] = r.scaling.min_col_sum;
    j["max_row_sum"] = r.scaling.max_row_sum;
    j["rank_bound"] = r.gram.rank_bound;
    j["L"] = r.gram.L;
    j["offdiag"] = r.gram.offdiag;
    j["D"] = r.gram.D;
    j["E"] = r.gram.E;
    j["row_coefficients"] = doubles(r.scaling.row);
    j["col_coefficients"] = doubles(r.scaling.col);
    if (r.property_s) {
        const Json p = to_json(*r.property_s);
        j["property_s"] = p["verdict"];
        for (const char* k : {"witness_rows", "witness_cols", "score_num", "score_den"}) {
            if (p.contains(k)) j[k] = p[k];
        }
    }
    return j;
}

Json stats_json(const IncidenceStructure& s, std::size_t dim, std::size_t affine) {
    Json j;
    j["n"] = s.n;
    j["dim"] = dim;
    j["affine_dim"] = affine;
    Json t = Json::object();
    for (const auto& [r, c] : s.t_profile()) t["t" + std::to_string(r)] = c;
    j["t"] = t;
    j["lines"] = s.lines.size();
    return j;
}

std::string profile_text(const IncidenceStructure& s) {
    std::string out;
    for (const auto& [r, c] : s.t_profile()) {
        if (!out.empty()) out += ' ';
        out += "t" + std::to_string(r) + "=" + std::to_string(c);
    }
    // a configuration with no ordinary lines still reports t2
    if (s.t(2) == 0) out = "t2=0" + (out.empty() ? "" : " " + out);
    return out;
}

std::string verdict_text(const VerdictReport& r) {
    std::ostringstream o;
    o << "statement   " << r.statement << '\n';
    for (const auto& h : r.hypotheses) {
        o << "hypothesis  " << (h.passed ? "ok    " : "FAILED") << ' ' << h.name;
        if (!h.detail.empty()) o << " (" << h.detail << ')';
        o << '\n';
    }
    if (!r.applicable) {
        o << "verdict     inapplicable\n";
    } else {
        o << "claimed     " << rational_text(r.claimed) << '\n';
        o << "observed    " << rational_text(r.observed) << '\n';
        o << "margin      " << rational_text(r.margin) << '\n';
        if (!r.branch.empty()) o << "branch      " << r.branch << '\n';
        if (r.fitted) o << "fitted c    " << rational_text(*r.fitted) << '\n';
        if (r.fitted_unbounded) o << "fitted c    inf\n";
        o << "verdict     " << (r.pass ? "pass" : "FAIL") << '\n';
    }
    for (const auto& w : r.witnesses) o << "witness     " << w << '\n';
    return o.str();
}

std::string prune_text(const PruneTrace& t) {
    std::ostringstream o;
    o << "step  removed  ordinary  special  remaining  bound\n";
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& s = t.steps[i];
        o << i + 1 << "  " << s.removed << "  " << s.ordinary << "  " << s.special << "  " << s.remaining << "  "
          << rational_text(s.lower_bound) << '\n';
    }
    o << "stop " << to_string(t.stop) << " (cap " << t.cap << "), t2 = " << t.t2
      << ", bound = " << rational_text(t.lower_bound) << '\n';
    return o.str();
}

std::string scaling_text(const ScalingReport& r) {
    std::ostringstream o;
    o << "matrix        " << r.m << " x " << r.n << '\n';
    o << "epsilon       " << fmt17(r.scaling.epsilon) << '\n';
    o << "converged     " << (r.scaling.converged ? "yes" : "no") << " after " << r.scaling.iterations
      << " iterations\n";
    o << "max row l2^2  " << fmt17(r.scaling.max_row_sum) << '\n';
    o << "min col l2^2  " << fmt17(r.scaling.min_col_sum) << " (target " << fmt17(r.scaling.target_col) << ")\n";
    o << "rank bound    " << fmt17(r.gram.rank_bound) << '\n';
    o << "D             " << fmt17(r.gram.D) << '\n';
    o << "E             " << fmt17(r.gram.E) << '\n';
    if (r.property_s) o << "Property-S    " << verdict_name(r.property_s->verdict) << '\n';
    return o.str();
}

}  // namespace olines
