#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nok/checks.hpp"
#include "nok/dh.hpp"
#include "nok/io.hpp"
#include "nok/lp.hpp"
#include "nok/polytope.hpp"
#include "nok/semigroup.hpp"

namespace py = pybind11;
using namespace nok;

namespace {

NewtonPolygon named_polygon(const std::string& surface, const std::vector<std::string>& coeffs) {
    auto preset = SurfacePreset::from_name(surface);
    QVec c;
    if (coeffs.empty())
        c.assign(preset.picard_rank(), Rat(1));
    else
        for (const auto& s : coeffs) c.push_back(Rat::parse(s));
    return preset.polygon_of_class(c);
}

GammaSpec make_spec(int n, long r, const std::string& surface,
                    const std::vector<std::string>& coeffs) {
    if (surface.empty()) return GammaSpec(n, r);
    return GammaSpec(n, r, named_polygon(surface, coeffs));
}

using LongPair = std::pair<std::vector<long>, std::vector<long>>;

std::vector<LongPair> as_pairs(const std::vector<ValVector>& vs) {
    std::vector<LongPair> out;
    for (const auto& v : vs) out.push_back({v.p, v.q});
    return out;
}

}  // namespace

PYBIND11_MODULE(noklib, m) {
    m.doc() = "Exact Newton-Okounkov computations for Hilbert schemes of points on surfaces. "
              "All rational values cross the boundary as \"p/q\" strings; bodies cross as JSON "
              "strings in the same format the command line emits.";

    m.def(
        "mu_slope",
        [](const std::string& surface, int n, const std::vector<std::string>& coeffs) {
            auto preset = SurfacePreset::from_name(surface);
            QVec c;
            if (coeffs.empty())
                c.assign(preset.picard_rank(), Rat(1));
            else
                for (const auto& s : coeffs) c.push_back(Rat::parse(s));
            return mu_slope(preset, c, n).str();
        },
        py::arg("surface"), py::arg("n"), py::arg("coeffs") = std::vector<std::string>{},
        "Minimal t with the body of t*D_n + E nonempty, as an exact rational string.");

    m.def(
        "facet_check",
        [](const std::string& surface, int n, const std::vector<std::string>& coeffs) {
            QVec f;
            for (const auto& s : coeffs) f.push_back(Rat::parse(s));
            auto v = facet_check(SurfacePreset::from_name(surface), n, f);
            py::dict out;
            out["valid"] = v.valid;
            out["tight"] = v.tight;
            out["min_value"] = v.min_value.str();
            return out;
        },
        py::arg("surface"), py::arg("n"), py::arg("coeffs"),
        "Checks a candidate effective-cone inequality; coeffs lists the class coefficients "
        "followed by the E coefficient.");

    m.def(
        "body_json",
        [](int n, long r, const std::string& surface, const std::vector<std::string>& coeffs,
           bool vertices) {
            HPolyhedron H = surface.empty() ? build_c2_body(n, r)
                                            : build_toric_body(named_polygon(surface, coeffs), n, r);
            nlohmann::json out = hpoly_to_json(H);
            if (vertices) {
                auto V = vertex_enumerate(H);
                nlohmann::json vj = vpoly_to_json(V);
                out["vertices"] = vj["vertices"];
                out["rays"] = vj["rays"];
            }
            return out.dump();
        },
        py::arg("n"), py::arg("r"), py::arg("surface") = "",
        py::arg("coeffs") = std::vector<std::string>{}, py::arg("vertices") = false,
        "H-representation (and optionally the exact V-representation) as a JSON string. "
        "Empty surface means the body on (C^2)^[n].");

    m.def(
        "body_volume",
        [](int n, long r, const std::string& surface, const std::vector<std::string>& coeffs) {
            HPolyhedron H = surface.empty() ? build_c2_body(n, r)
                                            : build_toric_body(named_polygon(surface, coeffs), n, r);
            return volume(vertex_enumerate(H)).str();
        },
        py::arg("n"), py::arg("r"), py::arg("surface") = "",
        py::arg("coeffs") = std::vector<std::string>{},
        "Exact Lebesgue volume as a rational string; throws on unbounded bodies.");

    m.def(
        "gamma_member",
        [](const std::vector<long>& a, const std::vector<long>& b, long r,
           const std::string& surface, const std::vector<std::string>& coeffs) {
            return gamma_member(make_spec((int)a.size(), r, surface, coeffs), ValVector{a, b});
        },
        py::arg("a"), py::arg("b"), py::arg("r"), py::arg("surface") = "",
        py::arg("coeffs") = std::vector<std::string>{});

    m.def(
        "gamma_enumerate_box",
        [](int n, long r, long p_max, long q_max, const std::string& surface,
           const std::vector<std::string>& coeffs) {
            return as_pairs(gamma_enumerate_box(make_spec(n, r, surface, coeffs), p_max, q_max));
        },
        py::arg("n"), py::arg("r"), py::arg("p_max"), py::arg("q_max"), py::arg("surface") = "",
        py::arg("coeffs") = std::vector<std::string>{},
        "Members with all coordinates in the box, as (a, b) pairs in lex order.");

    m.def(
        "gamma_enumerate_graded",
        [](int n, long r, long p, long q, const std::string& surface,
           const std::vector<std::string>& coeffs) {
            return as_pairs(gamma_enumerate_graded(make_spec(n, r, surface, coeffs), p, q));
        },
        py::arg("n"), py::arg("r"), py::arg("p"), py::arg("q"), py::arg("surface") = "",
        py::arg("coeffs") = std::vector<std::string>{});

    m.def(
        "minkowski_decompose",
        [](const std::vector<long>& a, const std::vector<long>& b, long r) {
            return as_pairs(minkowski_decompose(ValVector{a, b}, r));
        },
        py::arg("a"), py::arg("b"), py::arg("r"),
        "Splits a Gamma_r member into r Gamma_1 members summing to it.");

    m.def("catalan_cells", &catalan_cells, py::arg("n"),
          "Bounded-cell count of the chamber subdivision; equals Catalan(n-1).");

    m.def(
        "dh_compare",
        [](int n, long r, const std::vector<std::pair<std::string, std::string>>& grid) {
            std::vector<std::pair<Rat, Rat>> g;
            for (const auto& [p, q] : grid) g.push_back({Rat::parse(p), Rat::parse(q)});
            auto rep = dh_compare(n, r, g);
            py::list entries;
            for (const auto& e : rep.entries) {
                py::dict d;
                d["p"] = e.p.str();
                d["q"] = e.q.str();
                d["count_scaled"] = e.scaled_count.str();
                d["fiber_volume"] = e.fiber_vol.str();
                d["abs_dev"] = e.deviation.str();
                entries.append(d);
            }
            py::dict out;
            out["n"] = rep.n;
            out["r"] = rep.r;
            out["max_deviation"] = rep.max_deviation.str();
            out["entries"] = entries;
            return out;
        },
        py::arg("n"), py::arg("r"), py::arg("grid"),
        "Rescaled graded counts against exact fiber volumes on a (p, q) grid of rational "
        "strings.");
}
