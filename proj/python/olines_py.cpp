#include "olines/configgen.hpp"
#include "olines/depmat.hpp"
#include "olines/io.hpp"
#include "olines/latin.hpp"
#include "olines/report.hpp"
#include "olines/scalerank.hpp"
#include "olines/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace olines;

namespace {

// reports cross the boundary as JSON and come back as plain dicts
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Rational rational_arg(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

VerdictReport run_check(const std::string& statement, const PointConfig& c, const std::string& b_star,
                        std::size_t index, const std::string& c_min, std::size_t budget_cols, std::uint64_t seed) {
    const PropertySOptions ps{budget_cols, seed, 64};
    if (statement == "melchior") return check_melchior(c);
    if (statement == "hirzebruch") return check_hirzebruch(c);
    if (statement == "kelly") return check_kelly(c);
    if (statement == "3n2") return check_3n2(c);
    if (statement == "main") return check_main(c, rational_arg(c_min));
    if (statement == "higherdim") return check_higherdim(c);
    if (statement == "dichotomy") return check_dichotomy(c, rational_arg(b_star), ps);
    if (statement == "propS") return check_propS_bound(c, ps);
    if (statement == "removal") return check_removal_lemma(c, index);
    throw py::value_error("unknown statement: " + statement);
}

}  // namespace

PYBIND11_MODULE(_olines, m) {
    m.doc() = "Exact point configurations and ordinary-line checks";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<PointConfig>(m, "Config")
        .def_static("parse", [](const std::string& text) { return parse_config(text); })
        .def_static("read", [](const std::string& path) { return read_config_file(path); })
        .def("__str__", [](const PointConfig& c) { return serialize_config(c); })
        .def("__len__", &PointConfig::size)
        .def_property_readonly("dim", &PointConfig::dim)
        .def("affine_dim", [](const PointConfig& c) { return affine_dim(c); })
        .def("without", &PointConfig::without)
        .def(
            "stats",
            [](const PointConfig& c, unsigned threads) {
                return to_py(stats_json(enumerate_lines(c, threads), c.dim(), affine_dim(c)));
            },
            py::arg("threads") = 1)
        .def(
            "lines",
            [](const PointConfig& c, unsigned threads) {
                std::vector<std::vector<std::size_t>> out;
                for (const auto& l : enumerate_lines(c, threads).lines) out.push_back(l.points);
                return out;
            },
            py::arg("threads") = 1);

    m.def("fermat", &fermat, py::arg("k"));
    m.def("fermat_affine", &fermat_affine, py::arg("k"));
    m.def("fermat_with_apex", &fermat_with_apex, py::arg("k"));
    m.def(
        "coplanar_plus",
        [](int n, int k, std::uint64_t seed, bool fermat_plane) {
            return coplanar_plus(n, k, seed, fermat_plane ? PlanePart::fermat : PlanePart::generic);
        },
        py::arg("n"), py::arg("k"), py::arg("seed") = 0, py::arg("fermat_plane") = false);
    m.def("random_generic", &random_generic, py::arg("n"), py::arg("d"), py::arg("seed") = 0);

    m.def(
        "verify",
        [](const std::string& statement, const PointConfig& c, const std::string& b_star, std::size_t index,
           const std::string& c_min, std::size_t budget_cols, std::uint64_t seed) {
            return to_py(to_json(run_check(statement, c, b_star, index, c_min, budget_cols, seed)));
        },
        py::arg("statement"), py::arg("config"), py::arg("b_star") = "3", py::arg("index") = 0,
        py::arg("c_min") = "0", py::arg("budget_cols") = 24, py::arg("seed") = 0);

    m.def(
        "prune",
        [](const PointConfig& c, const std::string& floor) {
            const auto f = floor == "3-flat" ? PruneFloor::three_flat : PruneFloor::plane;
            auto res = run_prune(c, f);
            py::dict d;
            d["report"] = to_py(to_json(res.report));
            d["trace"] = res.report.applicable ? to_py(to_json(res.trace)) : py::none();
            return d;
        },
        py::arg("config"), py::arg("floor") = "plane");

    m.def(
        "dependency_matrix",
        [](const PointConfig& c, const std::string& construction, std::uint64_t seed) {
            const auto k = construction == "v2" ? Construction::v2 : Construction::v1;
            return dump_dependency_matrix(full_dep_matrix(c, k, seed));
        },
        py::arg("config"), py::arg("construction") = "v1", py::arg("seed") = 0);

    m.def(
        "scale",
        [](const std::string& dump, double epsilon, std::size_t budget_cols, std::uint64_t seed) {
            const auto a = parse_dependency_dump(dump);
            if (a.empty()) throw py::value_error("empty dependency matrix");
            const auto l2 = l2_scale(to_complex_matrix(a.dense()), epsilon);
            ScalingReport r{a.m(), a.n, l2.result, gram_summary(l2.scaled),
                            property_s(a.support_mask(), budget_cols, seed)};
            return to_py(to_json(r));
        },
        py::arg("dump"), py::arg("epsilon") = 1e-6, py::arg("budget_cols") = 24, py::arg("seed") = 0);

    m.def(
        "property_s",
        [](const Mask& mask, std::size_t budget_cols, std::uint64_t seed) {
            return to_py(to_json(property_s(mask, budget_cols, seed)));
        },
        py::arg("mask"), py::arg("budget_cols") = 24, py::arg("seed") = 0);

    m.def("latin_square", [](int r) {
        const LatinSquare l = diagonal_square(r);
        std::vector<std::vector<int>> rows(r);
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j) rows[i - 1].push_back(l(i, j));
        return rows;
    });
    m.def("triple_system_ok", [](int r) { return check_triple_system(triple_system_from(diagonal_square(r))).ok(); });
}
