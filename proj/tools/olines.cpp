#include "olines/configgen.hpp"
#include "olines/depmat.hpp"
#include "olines/io.hpp"
#include "olines/latin.hpp"
#include "olines/report.hpp"
#include "olines/scalerank.hpp"
#include "olines/verify.hpp"

#include <CLI11/CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace olines;

namespace {

enum Exit { ok = 0, fail = 1, inapplicable = 2, usage = 3, unknown = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint64_t seed = 0;
    double epsilon = 1e-6;
    unsigned threads = 1;
    std::string format = "text";
    std::size_t budget_cols = 24;
    std::string c0 = "1/150";
    std::string c1;
    unsigned retries = 64;
};

Rational parse_rational(const std::string& text, const char* what) {
    try {
        Rational r(text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string("bad rational for ") + what + ": " + text);
    }
}

fs::path fixture_dir() {
    if (const char* env = std::getenv("OLINES_FIXTURES"); env && *env) return env;
#ifdef OLINES_FIXTURE_DIR
    return OLINES_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

// as given, else relative to the fixture directory
fs::path resolve(const std::string& path) {
    if (fs::exists(path)) return path;
    const fs::path alt = fixture_dir() / path;
    if (fs::exists(alt)) return alt;
    throw UsageError("no such file: " + path + " (also looked in " + fixture_dir().string() + ")");
}

std::string read_text(const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw UsageError("cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

RunManifest manifest(const Options& o, std::string command) {
    RunManifest m;
    m.command = std::move(command);
    m.seed = o.seed;
    m.epsilon = o.epsilon;
    m.budget_cols = o.budget_cols;
    m.retries = o.retries;
    m.threads = o.threads;
    m.c0 = parse_rational(o.c0, "--c0");
    m.c1 = o.c1.empty() ? Rational(m.c0 / 8) : parse_rational(o.c1, "--c1");
    return m;
}

void emit_json(Json body, const RunManifest& m) {
    Json out;
    out["manifest"] = to_json(m);
    for (auto& [k, v] : body.items()) out[k] = v;
    std::cout << out.dump(2) << '\n';
}

int verdict_exit(const VerdictReport& r) {
    if (r.applicable) return r.pass ? ok : fail;
    return r.budget_exhausted ? unknown : inapplicable;
}

// ---- gen ----

struct GenArgs {
    std::string recipe;
    int k = 3;
    int n = 0;
    int d = 2;
    std::string plane = "generic";
    std::string path;
    std::string out;
};

ConfigRecipe recipe_of(const GenArgs& g, std::uint64_t seed) {
    ConfigRecipe r;
    r.k = g.k;
    r.n = g.n;
    r.d = g.d;
    r.seed = seed;
    r.path = g.path;
    if (g.plane == "fermat") {
        r.plane = PlanePart::fermat;
    } else if (g.plane != "generic") {
        throw UsageError("--plane must be generic or fermat");
    }
    if (g.recipe == "fermat") {
        r.kind = RecipeKind::fermat;
    } else if (g.recipe == "fermat-affine") {
        r.kind = RecipeKind::fermat_affine;
    } else if (g.recipe == "fermat-apex") {
        r.kind = RecipeKind::fermat_with_apex;
    } else if (g.recipe == "coplanar-plus") {
        r.kind = RecipeKind::coplanar_plus;
    } else if (g.recipe == "random") {
        r.kind = RecipeKind::random_generic;
    } else if (g.recipe == "file") {
        r.kind = RecipeKind::explicit_file;
        r.path = resolve(g.path).string();
    } else {
        throw UsageError("unknown recipe: " + g.recipe);
    }
    return r;
}

int cmd_gen(const GenArgs& g, const Options& o) {
    ConfigRecipe r = recipe_of(g, o.seed);
    try {
        validate(r);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const PointConfig c = generate(r);
    const std::string text = serialize_config(c);
    RunManifest m = manifest(o, "gen");
    m.recipe = g.recipe;
    if (!g.out.empty()) m.outputs.push_back(g.out);
    if (g.out.empty()) {
        std::cout << text;
        std::cerr << "n=" << c.size() << " d=" << c.dim() << '\n';
        return ok;
    }
    write_text(g.out, text);
    if (o.format == "json") {
        emit_json({{"n", c.size()}, {"d", c.dim()}, {"path", g.out}}, m);
    } else {
        std::cout << "wrote " << g.out << ": n=" << c.size() << " d=" << c.dim() << '\n';
    }
    return ok;
}

// ---- stats ----

int cmd_stats(const std::string& path, const Options& o) {
    const fs::path p = resolve(path);
    const PointConfig c = read_config_file(p);
    const auto s = enumerate_lines(c, o.threads);
    const std::size_t ad = affine_dim(c);
    if (o.format == "json") {
        RunManifest m = manifest(o, "stats");
        m.inputs.push_back(path);
        emit_json(stats_json(s, c.dim(), ad), m);
    } else {
        std::cout << profile_text(s) << '\n';
        std::cout << "n=" << c.size() << " d=" << c.dim() << " affine_dim=" << ad << " lines=" << s.lines.size()
                  << '\n';
    }
    return ok;
}

// ---- depmat ----

int cmd_depmat(const std::string& path, const std::string& construction, const std::string& out, const Options& o) {
    Construction k;
    if (construction == "v1") {
        k = Construction::v1;
    } else if (construction == "v2") {
        k = Construction::v2;
    } else {
        throw UsageError("--construction must be v1 or v2");
    }
    const PointConfig c = read_config_file(resolve(path));
    const auto s = enumerate_lines(c, o.threads);
    const auto a = full_dep_matrix(c, s, k, o.seed, o.retries);
    const auto check = check_dependency_matrix(a, c, s);
    std::size_t certified = 0;
    bool all_required = true;
    for (const auto& l : a.lines) {
        certified += l.certified;
        all_required = all_required && (k == Construction::v1 || l.certified >= l.required);
    }
    const std::string dump = dump_dependency_matrix(a);
    RunManifest m = manifest(o, "depmat");
    m.inputs.push_back(path);
    m.construction = construction;
    if (!out.empty()) m.outputs.push_back(out);
    Json summary{{"m", a.m()},
                 {"n", a.n},
                 {"expected_rows", check.expected_rows},
                 {"certified_rows", certified},
                 {"certified_fraction", a.m() ? double(certified) / double(a.m()) : 0.0},
                 {"annihilates", check.annihilates},
                 {"support_three", check.support_three},
                 {"pair_counts", check.pair_counts},
                 {"row_count", check.row_count},
                 {"ok", check.ok()}};
    if (!out.empty()) write_text(out, dump);
    if (o.format == "json") {
        emit_json({{"summary", summary}}, m);
    } else {
        if (out.empty()) std::cout << dump;
        std::ostream& info = out.empty() ? std::cerr : std::cout;
        info << "m=" << a.m() << " n=" << a.n << " certified=" << certified << '/' << a.m()
             << (check.ok() ? " checks ok" : " CHECK FAILED") << '\n';
    }
    if (!check.ok()) return fail;
    return all_required ? ok : unknown;
}

// ---- scale ----

int cmd_scale(const std::string& path, const Options& o) {
    const auto a = parse_dependency_dump(read_text(resolve(path)));
    if (a.empty()) throw UsageError("empty dependency matrix: nothing to scale");
    const auto dense = to_complex_matrix(a.dense());
    ScalingReport r;
    r.m = a.m();
    r.n = a.n;
    const auto l2 = l2_scale(dense, o.epsilon);
    r.scaling = l2.result;
    r.gram = gram_summary(l2.scaled);
    r.property_s = property_s(a.support_mask(), o.budget_cols, o.seed);
    RunManifest m = manifest(o, "scale");
    m.mode = "float";
    m.inputs.push_back(path);
    if (o.format == "json") {
        emit_json(to_json(r), m);
    } else {
        std::cout << scaling_text(r);
    }
    return r.scaling.converged ? ok : fail;
}

// ---- verify ----

struct VerifyArgs {
    std::string statement;
    std::string path;
    std::string b_star = "3";
    std::size_t index = 0;
    std::string c_min = "0";
    std::string floor = "plane";
    std::string order = "prune-first";
};

int cmd_verify(const VerifyArgs& v, const Options& o) {
    const PointConfig c = read_config_file(resolve(v.path));
    RunManifest m = manifest(o, "verify");
    m.statement = v.statement;
    m.inputs.push_back(v.path);
    PropertySOptions ps{o.budget_cols, o.seed, o.retries};
    VerdictReport r;
    std::optional<PruneTrace> trace;
    const std::string& s = v.statement;
    if (s == "melchior") {
        r = check_melchior(c);
    } else if (s == "hirzebruch") {
        r = check_hirzebruch(c);
    } else if (s == "kelly") {
        r = check_kelly(c);
    } else if (s == "3n2") {
        r = check_3n2(c);
    } else if (s == "main") {
        r = check_main(c, parse_rational(v.c_min, "--c-min"));
    } else if (s == "higherdim") {
        r = check_higherdim(c);
    } else if (s == "dichotomy") {
        r = check_dichotomy(c, parse_rational(v.b_star, "--b-star"), ps);
    } else if (s == "propS" || s == "propS_bound") {
        r = check_propS_bound(c, ps);
    } else if (s == "removal") {
        r = check_removal_lemma(c, v.index);
    } else if (s == "prune") {
        PruneFloor f;
        if (v.floor == "plane") {
            f = PruneFloor::plane;
        } else if (v.floor == "3-flat") {
            f = PruneFloor::three_flat;
        } else {
            throw UsageError("--floor must be plane or 3-flat");
        }
        PruneOptions po;
        po.c1 = m.c1;
        if (v.order == "case2-first") {
            po.order = PruneOrder::case2_first;
        } else if (v.order != "prune-first") {
            throw UsageError("--order must be prune-first or case2-first");
        }
        auto res = run_prune(c, f, po);
        r = std::move(res.report);
        if (r.applicable) trace = std::move(res.trace);
    } else {
        throw UsageError("unknown statement: " + s);
    }
    if (o.format == "json") {
        Json body{{"report", to_json(r)}};
        if (trace) body["trace"] = to_json(*trace);
        emit_json(body, m);
    } else {
        std::cout << verdict_text(r);
        if (trace) std::cout << prune_text(*trace);
    }
    return verdict_exit(r);
}

// ---- latin ----

int cmd_latin(int r, const Options& o) {
    if (r < 3 || r > 64) throw UsageError("latin: r must be in [3, 64]");
    const LatinSquare l = diagonal_square(r);
    const auto check = check_triple_system(triple_system_from(l));
    if (o.format == "json") {
        Json rows = Json::array();
        for (int i = 1; i <= r; ++i) {
            Json row = Json::array();
            for (int j = 1; j <= r; ++j) row.push_back(l(i, j));
            rows.push_back(row);
        }
        RunManifest m = manifest(o, "latin");
        emit_json({{"r", r},
                   {"square", rows},
                   {"diagonal", is_diagonal(l)},
                   {"skew", is_skew(l)},
                   {"properties",
                    {{"size", check.size_ok},
                     {"distinct", check.distinct},
                     {"pairs_six", check.pairs_six},
                     {"distinct_third", check.distinct_third}}}},
                  m);
    } else {
        std::cout << format_grid(l);
        std::cout << "diagonal=" << is_diagonal(l) << " skew=" << is_skew(l) << " triple_system=" << check.ok()
                  << '\n';
    }
    return check.ok() ? ok : fail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ordinary lines: configurations, dependency matrices, scaling and checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--seed", o.seed, "Random seed");
    app.add_option("--epsilon", o.epsilon, "Scaling tolerance");
    app.add_option("--threads", o.threads, "Worker threads for line enumeration")->check(CLI::Range(1u, 256u));
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--budget-cols", o.budget_cols, "Exhaustive Property-S column cap");
    app.add_option("--c0", o.c0, "Squares-bound constant");
    app.add_option("--c1", o.c1, "Pruning constant (default c0/8)");
    app.add_option("--retries", o.retries, "Bijection retries per line");

    GenArgs g;
    auto* gen = app.add_subcommand("gen", "Write a configuration file");
    gen->add_option("recipe", g.recipe, "fermat | fermat-affine | fermat-apex | coplanar-plus | random | file")
        ->required();
    gen->add_option("--k", g.k);
    gen->add_option("--n", g.n);
    gen->add_option("--d", g.d);
    gen->add_option("--plane", g.plane, "coplanar-plus plane part: generic | fermat");
    gen->add_option("--path", g.path, "Source file for the file recipe");
    gen->add_option("-o,--out", g.out, "Output path (stdout when omitted)");

    std::string stats_path;
    auto* stats = app.add_subcommand("stats", "Line profile of a configuration");
    stats->add_option("config", stats_path)->required();

    std::string dep_path, dep_out, construction = "v1";
    auto* dep = app.add_subcommand("depmat", "Build a dependency matrix");
    dep->add_option("config", dep_path)->required();
    dep->add_option("--construction", construction, "v1 | v2");
    dep->add_option("-o,--out", dep_out, "Dump path");

    std::string scale_path;
    auto* scale = app.add_subcommand("scale", "l2-scale a dumped dependency matrix");
    scale->add_option("matrix", scale_path)->required();

    VerifyArgs v;
    auto* ver = app.add_subcommand("verify", "Check a statement on a configuration");
    ver->add_option("statement", v.statement,
                    "melchior | hirzebruch | kelly | 3n2 | main | higherdim | dichotomy | propS | removal | prune")
        ->required();
    ver->add_option("config", v.path)->required();
    ver->add_option("--b-star", v.b_star);
    ver->add_option("--index", v.index, "Point removed by the removal check");
    ver->add_option("--c-min", v.c_min);
    ver->add_option("--floor", v.floor, "prune: plane | 3-flat");
    ver->add_option("--order", v.order, "prune: prune-first | case2-first");

    int latin_r = 0;
    auto* lat = app.add_subcommand("latin", "Print the diagonal Latin square of order r");
    lat->add_option("r", latin_r)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*gen) return cmd_gen(g, o);
        if (*stats) return cmd_stats(stats_path, o);
        if (*dep) return cmd_depmat(dep_path, construction, dep_out, o);
        if (*scale) return cmd_scale(scale_path, o);
        if (*ver) return cmd_verify(v, o);
        if (*lat) return cmd_latin(latin_r, o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const olines::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return fail;
    }
    return usage;
}
