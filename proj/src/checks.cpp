#include "nok/checks.hpp"

#include "nok/dh.hpp"
#include "nok/io.hpp"
#include "nok/lp.hpp"
#include "nok/oracle.hpp"
#include "nok/polytope.hpp"
#include "nok/semigroup.hpp"

#include <fstream>
#include <random>
#include <set>

namespace nok {

using nlohmann::json;

ExpectedValues ExpectedValues::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("expected values file not found: " + path);
    json j = json::parse(in);
    ExpectedValues e;
    e.mu_n_start = j.at("mu").at("n_start").get<int>();
    for (const auto& [name, ray] : j.at("mu").at("rays").items())
        e.mu_rays[name] = qvec_from_json(ray);
    for (const auto& [name, vals] : j.at("mu").at("values").items()) {
        std::vector<Rat> v;
        for (const auto& x : vals) v.push_back(rat_from_json(x));
        e.mu_values[name] = std::move(v);
    }
    for (const auto& [n, c] : j.at("catalan").items())
        e.catalan[std::stoi(n)] = c.get<long>();
    e.n4_vertex_count = j.at("p2_hilbert").at("n4_vertex_count").get<long>();
    e.n5_vertex_count = j.at("p2_hilbert").at("n5_vertex_count").get<long>();
    e.n4_volume = rat_from_json(j.at("p2_hilbert").at("n4_volume"));
    for (const auto& f : j.at("p1xp1_n17_facets"))
        e.p1xp1_n17_facets.push_back({f.at(0).get<long>(), f.at(1).get<long>(), f.at(2).get<long>()});
    return e;
}

namespace {

void record(std::vector<CheckOutcome>& out, const std::string& name, bool pass,
            const std::string& detail) {
    out.push_back({name, pass, detail});
}

const std::vector<std::string> kSurfaceOrder = {"P2", "P1xP1", "H1", "H2"};

}  // namespace

std::vector<CheckOutcome> check_mu(const ExpectedValues& exp, int n_max) {
    std::vector<CheckOutcome> out;
    for (const auto& name : kSurfaceOrder) {
        auto preset = SurfacePreset::from_name(name);
        const auto& ray = exp.mu_rays.at(name);
        const auto& vals = exp.mu_values.at(name);
        auto got = mu_slope_sweep(preset, ray, exp.mu_n_start, n_max);
        for (int n = exp.mu_n_start; n <= n_max; ++n) {
            const Rat& want = vals.at(n - exp.mu_n_start);
            const Rat& have = got.at(n - exp.mu_n_start);
            record(out, "mu " + name + " n=" + std::to_string(n), have == want,
                   "got " + have.str() + ", expected " + want.str());
        }
    }
    return out;
}

std::vector<CheckOutcome> check_catalan(const ExpectedValues& exp) {
    std::vector<CheckOutcome> out;
    for (const auto& [n, want] : exp.catalan) {
        long got = catalan_cells(n);
        record(out, "catalan_cells(" + std::to_string(n) + ")", got == want,
               "got " + std::to_string(got) + ", expected " + std::to_string(want));
    }
    return out;
}

std::vector<CheckOutcome> check_volume(const ExpectedValues& exp) {
    std::vector<CheckOutcome> out;
    for (const auto& name : kSurfaceOrder) {
        auto preset = SurfacePreset::from_name(name);
        QVec coeffs(preset.picard_rank(), Rat(1));
        auto P = preset.polygon_of_class(coeffs);
        for (int n = 2; n <= 3; ++n) {
            Rat want(1);
            for (int k = 1; k <= n; ++k) want *= P.area() / Rat((long)k);
            Rat got = volume(vertex_enumerate(build_toric_body(P, n, 0)));
            record(out, "volume formula " + name + " n=" + std::to_string(n), got == want,
                   "got " + got.str() + ", expected area^n/n! = " + want.str());
        }
    }
    auto P4 = SurfacePreset::p2().polygon_of_class({Rat(4)});
    auto V = vertex_enumerate(build_toric_body(P4, 4, 1));
    record(out, "P2 n=4 vertex count", (long)V.vertices.size() == exp.n4_vertex_count,
           "got " + std::to_string(V.vertices.size()) + ", expected " +
               std::to_string(exp.n4_vertex_count));
    Rat vol = volume(V);
    record(out, "P2 n=4 volume", vol == exp.n4_volume,
           "got " + vol.str() + ", expected " + exp.n4_volume.str());
    return out;
}

std::vector<CheckOutcome> check_vertex_count_n5(const ExpectedValues& exp) {
    std::vector<CheckOutcome> out;
    auto P4 = SurfacePreset::p2().polygon_of_class({Rat(4)});
    auto V = vertex_enumerate(build_toric_body(P4, 5, 1));
    record(out, "P2 n=5 vertex count", (long)V.vertices.size() == exp.n5_vertex_count,
           "got " + std::to_string(V.vertices.size()) + ", expected " +
               std::to_string(exp.n5_vertex_count));
    return out;
}

std::vector<CheckOutcome> check_semigroup() {
    std::vector<CheckOutcome> out;
    for (int n = 1; n <= 3; ++n)
        for (long r = 0; r <= 3; ++r) {
            GammaSpec g(n, r);
            auto box = gamma_enumerate_box(g, 6, 6);
            bool forms_agree = true;
            for (const auto& v : box)
                if (!gamma_member_sumform(g, v)) forms_agree = false;
            record(out, "membership forms n=" + std::to_string(n) + " r=" + std::to_string(r),
                   forms_agree, std::to_string(box.size()) + " box members");
            if (r < 1) continue;
            bool round_trip = true;
            GammaSpec g1(n, 1);
            for (const auto& v : box) {
                auto parts = minkowski_decompose(v, r);
                if ((long)parts.size() != r) round_trip = false;
                ValVector sum = parts[0];
                for (size_t i = 1; i < parts.size(); ++i) sum = sum + parts[i];
                if (!(sum == v)) round_trip = false;
                for (const auto& part : parts)
                    if (!gamma_member(g1, part)) round_trip = false;
            }
            record(out, "decompose round trip n=" + std::to_string(n) + " r=" + std::to_string(r),
                   round_trip, std::to_string(box.size()) + " members decomposed");
        }
    return out;
}

namespace {

// r-fold Minkowski sumset of the Gamma_1 box members, clipped to the box.
std::vector<ValVector> minkowski_power_box(int n, long r, long box) {
    auto base = gamma_enumerate_box(GammaSpec(n, 1), box, box);
    std::vector<std::vector<long>> ground;
    for (const auto& v : base) {
        std::vector<long> flat = v.p;
        flat.insert(flat.end(), v.q.begin(), v.q.end());
        ground.push_back(std::move(flat));
    }
    std::vector<std::vector<long>> layer = ground;
    std::vector<long> s(2 * n);
    for (long k = 2; k <= r; ++k) {
        std::set<std::vector<long>> next;
        for (const auto& u : layer)
            for (const auto& v : ground) {
                bool ok = true;
                for (int i = 0; i < 2 * n; ++i) {
                    s[i] = u[i] + v[i];
                    if (s[i] > box) { ok = false; break; }
                }
                if (ok) next.insert(s);
            }
        layer.assign(next.begin(), next.end());
    }
    std::set<std::vector<long>> dedup(layer.begin(), layer.end());
    std::vector<ValVector> out;
    for (const auto& flat : dedup)
        out.push_back(ValVector{std::vector<long>(flat.begin(), flat.begin() + n),
                                std::vector<long>(flat.begin() + n, flat.end())});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<CheckOutcome> check_oracle(int n_max, long r_max, long box) {
    std::vector<CheckOutcome> out;
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> coord(0, 3);
    for (int n = 1; n <= n_max; ++n)
        for (long r = 1; r <= r_max; ++r) {
            std::string tag = " n=" + std::to_string(n) + " r=" + std::to_string(r);
            auto gamma = gamma_enumerate_box(GammaSpec(n, r), box, box);
            auto sumset = minkowski_power_box(n, r, box);
            record(out, "Gamma_r box = Minkowski power" + tag, gamma == sumset,
                   std::to_string(gamma.size()) + " vs " + std::to_string(sumset.size()) +
                       " members");
            auto vals = valuation_set_Ar(n, r, box, box);
            record(out, "Gamma_r box = valuation set" + tag, gamma == vals,
                   std::to_string(gamma.size()) + " vs " + std::to_string(vals.size()) +
                       " members");
            bool products_ok = true;
            for (int t = 0; t < 10; ++t) {
                std::vector<PointTuple> tuples;
                for (long k = 0; k < r; ++k) {
                    for (;;) {
                        std::vector<std::array<long, 2>> pts;
                        for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
                        PointTuple pt(pts);
                        bool distinct = true;
                        for (int i = 0; i + 1 < n; ++i)
                            if (pt.pts[i] == pt.pts[i + 1]) distinct = false;
                        if (distinct || n == 1) {
                            tuples.push_back(pt);
                            break;
                        }
                    }
                }
                if (!verify_product_valuation(tuples)) products_ok = false;
            }
            record(out, "symbolic product valuations" + tag, products_ok,
                   "10 expanded products checked");
        }
    return out;
}

std::vector<CheckOutcome> check_slice_identity() {
    std::vector<CheckOutcome> out;
    auto sliced = slice_shift(
        build_toric_body(SurfacePreset::p2().polygon_of_class({Rat(4)}), 4, 1), Rat(1));
    auto direct = build_toric_body(SurfacePreset::p2().polygon_of_class({Rat(3)}), 4, 1);
    record(out, "slice of 4H+E body at t=1 equals 3H+E body", hpoly_equivalent(sliced, direct),
           "double-inclusion LP over " + std::to_string(sliced.rows.size()) + "+" +
               std::to_string(direct.rows.size()) + " rows");
    return out;
}

std::vector<CheckOutcome> check_effective_cone() {
    std::vector<CheckOutcome> out;
    auto feasible_at = [&](const Rat& t) {
        auto H = build_toric_body(SurfacePreset::p2().polygon_of_class({t}), 4, 1);
        return lp_feasible_point(H.matrix(), H.offsets()).has_value();
    };
    record(out, "body of (3/2)H+E nonempty", feasible_at(Rat(3, 2)), "t = 3/2");
    record(out, "body of (3/2 - 1/1000)H+E empty", !feasible_at(Rat(3, 2) - Rat(1, 1000)),
           "t = 1499/1000");
    bool neg_ok = true;
    auto origin = SurfacePreset::p2().polygon_of_class({Rat(0)});
    for (long r = 0; r >= -3; --r) {
        auto H = build_toric_body(origin, 4, r);
        if (!lp_feasible_point(H.matrix(), H.offsets())) neg_ok = false;
    }
    record(out, "bodies along the -E ray nonempty", neg_ok, "r = 0, -1, -2, -3");
    return out;
}

std::vector<CheckOutcome> check_facets(const ExpectedValues& exp) {
    std::vector<CheckOutcome> out;
    for (const auto& f : exp.p1xp1_n17_facets) {
        auto v = facet_check(SurfacePreset::p1xp1(), 17,
                             {Rat(f[0]), Rat(f[1]), Rat(f[2])});
        record(out,
               "P1xP1 n=17 facet " + std::to_string(f[0]) + "x+" + std::to_string(f[1]) +
                   "y >= " + std::to_string(f[2]) + "z",
               v.valid && v.tight, "min value " + v.min_value.str());
    }
    return out;
}

std::vector<CheckOutcome> check_dh() {
    std::vector<CheckOutcome> out;
    std::vector<std::pair<Rat, Rat>> grid;
    for (long i = 2; i <= 6; ++i)
        for (long j = 2; j <= 6; ++j) grid.push_back({Rat(i, 2), Rat(j, 2)});
    Rat prev;
    bool monotone = true;
    Rat last;
    for (long r : {10L, 20L, 40L}) {
        auto rep = dh_compare(2, r, grid);
        if (r > 10 && rep.max_deviation > prev) monotone = false;
        prev = rep.max_deviation;
        last = rep.max_deviation;
    }
    record(out, "DH deviation monotone over r=10,20,40", monotone,
           "empirical rate; final deviation " + last.str());
    record(out, "DH deviation <= 10/r at r=40", last <= Rat(10, 40),
           "deviation " + last.str() + " vs empirical threshold 1/4");
    return out;
}

}  // namespace nok
