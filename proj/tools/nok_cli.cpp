#include "CLI11.hpp"

#include "nok/checks.hpp"
#include "nok/dh.hpp"
#include "nok/io.hpp"
#include "nok/lp.hpp"
#include "nok/oracle.hpp"
#include "nok/polytope.hpp"
#include "nok/semigroup.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

using namespace nok;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitInternalError = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw ConfigError("cannot open output file: " + path);
    return file;
}

NewtonPolygon resolve_polygon(const std::string& surface, const std::vector<std::string>& coeffs,
                              const std::string& polygon_file) {
    if (!polygon_file.empty()) {
        std::ifstream in(polygon_file);
        if (!in) throw ConfigError("cannot read polygon file: " + polygon_file);
        return polygon_from_json(json::parse(in));
    }
    auto preset = SurfacePreset::from_name(surface);
    QVec c;
    if (coeffs.empty()) {
        c.assign(preset.picard_rank(), Rat(1));
    } else {
        for (const auto& s : coeffs) c.push_back(Rat::parse(s));
    }
    return preset.polygon_of_class(c);
}

std::string maybe_approx(const Rat& x, bool approx) {
    if (!approx) return x.str();
    std::ostringstream os;
    os << x.str() << "," << x.approx();
    return os.str();
}

// Mapping of config-file keys to command-line flags; flags given on the
// command line take precedence because they are appended last and every
// scalar option uses a take-last policy.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> raw(argv + 1, argv + argc);
    std::string config_path;
    std::vector<std::string> rest;
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == "--config") {
            if (i + 1 >= raw.size()) throw ConfigError("--config requires a file path");
            config_path = raw[++i];
        } else {
            rest.push_back(raw[i]);
        }
    }
    if (config_path.empty()) return rest;
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot read config file: " + config_path);
    json j = json::parse(in);
    static const std::set<std::string> known = {
        "command", "suite",  "surface", "coeffs", "polygon-file", "n", "n-min", "n-max",
        "r",       "p-max",  "q-max",   "graded-p", "graded-q",   "a", "b",
        "format",  "output", "approx",  "vertices", "volume",     "data", "p", "q", "t"};
    std::vector<std::string> args;
    if (j.contains("command")) args.push_back(j.at("command").get<std::string>());
    for (const auto& [key, val] : j.items()) {
        if (!known.count(key)) throw ConfigError("unknown config field: " + key);
        if (key == "command") continue;
        if (key == "suite") {
            args.push_back(val.get<std::string>());
            continue;
        }
        auto push_one = [&](const json& v) {
            args.push_back("--" + key);
            if (v.is_string())
                args.push_back(v.get<std::string>());
            else if (!v.is_boolean())
                args.push_back(v.dump());
            else if (!v.get<bool>())
                args.pop_back();
        };
        if (val.is_array())
            for (const auto& v : val) push_one(v);
        else
            push_one(val);
    }
    args.insert(args.end(), rest.begin(), rest.end());
    return args;
}

int run(std::vector<std::string> args) {
    CLI::App app{"Newton-Okounkov bodies of Hilbert schemes of points: exact computations"};
    app.require_subcommand(1);
    auto take_last = [](CLI::Option* o) { o->multi_option_policy(CLI::MultiOptionPolicy::TakeLast); };

    // mu-table
    auto* mu = app.add_subcommand("mu-table", "Minimal slopes mu(surface, n)");
    std::vector<std::string> mu_surfaces;
    int mu_nmin = 2, mu_nmax = 10;
    std::string mu_format = "csv", mu_output;
    std::vector<std::string> mu_coeffs;
    bool mu_approx = false;
    mu->add_option("--surface", mu_surfaces, "Surface presets (default: all four)");
    take_last(mu->add_option("--n-min", mu_nmin));
    take_last(mu->add_option("--n-max", mu_nmax));
    mu->add_option("--coeffs", mu_coeffs, "Divisor class coefficients (default: all ones)");
    take_last(mu->add_option("--format", mu_format)->check(CLI::IsMember({"csv", "json"})));
    take_last(mu->add_option("--output", mu_output));
    mu->add_flag("--approx", mu_approx, "Add approximate decimal columns");

    // body
    auto* body = app.add_subcommand("body", "H-representation of a body, optional V-rep/volume");
    std::string body_surface = "P2", body_polygon_file, body_output;
    std::vector<std::string> body_coeffs;
    int body_n = 2;
    long body_r = 1;
    bool body_c2 = false, body_vertices = false, body_volume = false, body_approx = false;
    take_last(body->add_option("--surface", body_surface));
    body->add_option("--coeffs", body_coeffs);
    take_last(body->add_option("--polygon-file", body_polygon_file, "Raw polygon JSON"));
    body->add_flag("--c2", body_c2, "Body on (C^2)^[n] instead of a toric surface");
    take_last(body->add_option("--n", body_n)->check(CLI::PositiveNumber));
    take_last(body->add_option("--r", body_r));
    body->add_flag("--vertices", body_vertices);
    body->add_flag("--volume", body_volume);
    body->add_flag("--approx", body_approx);
    take_last(body->add_option("--output", body_output));

    // semigroup
    auto* sg = app.add_subcommand("semigroup", "Semigroup enumeration and decomposition");
    sg->require_subcommand(1);
    int sg_n = 2;
    long sg_r = 1, sg_pmax = 4, sg_qmax = 4, sg_gp = -1, sg_gq = -1;
    std::string sg_surface, sg_output;
    std::vector<std::string> sg_coeffs;
    std::vector<long> sg_a, sg_b;
    auto* sg_enum = sg->add_subcommand("enumerate", "Box or graded-piece members, lex order");
    take_last(sg_enum->add_option("--n", sg_n)->check(CLI::PositiveNumber));
    take_last(sg_enum->add_option("--r", sg_r));
    take_last(sg_enum->add_option("--p-max", sg_pmax));
    take_last(sg_enum->add_option("--q-max", sg_qmax));
    take_last(sg_enum->add_option("--graded-p", sg_gp, "Fix sum of a_i (with --graded-q)"));
    take_last(sg_enum->add_option("--graded-q", sg_gq, "Fix sum of b_i"));
    take_last(sg_enum->add_option("--surface", sg_surface, "Toric semigroup for this preset"));
    sg_enum->add_option("--coeffs", sg_coeffs);
    take_last(sg_enum->add_option("--output", sg_output));
    auto* sg_dec = sg->add_subcommand("decompose", "Split a Gamma_r member into Gamma_1 summands");
    take_last(sg_dec->add_option("--r", sg_r));
    sg_dec->add_option("--a", sg_a)->required();
    sg_dec->add_option("--b", sg_b)->required();
    take_last(sg_dec->add_option("--output", sg_output));
    auto* sg_mem = sg->add_subcommand("member", "Membership test");
    take_last(sg_mem->add_option("--r", sg_r));
    sg_mem->add_option("--a", sg_a)->required();
    sg_mem->add_option("--b", sg_b)->required();
    take_last(sg_mem->add_option("--surface", sg_surface));
    sg_mem->add_option("--coeffs", sg_coeffs);
    take_last(sg_mem->add_option("--output", sg_output));

    // dh-grid
    auto* dh = app.add_subcommand("dh-grid", "Fiber volumes vs rescaled lattice counts");
    int dh_n = 2;
    long dh_r = 10;
    std::vector<std::string> dh_p, dh_q;
    std::string dh_format = "csv", dh_output;
    bool dh_approx = false;
    take_last(dh->add_option("--n", dh_n)->check(CLI::PositiveNumber));
    take_last(dh->add_option("--r", dh_r)->check(CLI::PositiveNumber));
    dh->add_option("--p", dh_p, "Grid p values (default 1..3 step 1/2)");
    dh->add_option("--q", dh_q, "Grid q values (default 1..3 step 1/2)");
    take_last(dh->add_option("--format", dh_format)->check(CLI::IsMember({"csv", "json"})));
    take_last(dh->add_option("--output", dh_output));
    dh->add_flag("--approx", dh_approx);

    // check
    auto* check = app.add_subcommand("check", "Invariant suites against shipped expected values");
    std::string suite, check_data = "data/expected_values.json";
    int check_nmax = 20;
    check->add_option("suite", suite, "semigroup|oracle|catalan|dh|mu|volume")
        ->required()
        ->check(CLI::IsMember({"semigroup", "oracle", "catalan", "dh", "mu", "volume"}));
    take_last(check->add_option("--data", check_data, "Expected-values JSON path"));
    take_last(check->add_option("--n-max", check_nmax, "mu sweep upper end"));

    std::vector<const char*> argv_like;
    argv_like.push_back("nok");
    for (const auto& a : args) argv_like.push_back(a.c_str());
    app.parse((int)argv_like.size(), argv_like.data());

    if (*mu) {
        if (mu_surfaces.empty()) mu_surfaces = {"P2", "P1xP1", "H1", "H2"};
        std::ofstream file;
        auto& os = open_output(mu_output, file);
        json rows = json::array();
        if (mu_format == "csv")
            os << (mu_approx ? "surface,n,mu,mu_approx\n" : "surface,n,mu\n");
        for (const auto& name : mu_surfaces) {
            auto preset = SurfacePreset::from_name(name);
            QVec coeffs;
            if (mu_coeffs.empty())
                coeffs.assign(preset.picard_rank(), Rat(1));
            else
                for (const auto& s : mu_coeffs) coeffs.push_back(Rat::parse(s));
            auto sweep = mu_slope_sweep(preset, coeffs, mu_nmin, mu_nmax);
            for (int n = mu_nmin; n <= mu_nmax; ++n) {
                const Rat& m = sweep[n - mu_nmin];
                if (mu_format == "csv")
                    os << name << "," << n << "," << maybe_approx(m, mu_approx) << "\n";
                else
                    rows.push_back({{"surface", name}, {"n", n}, {"mu", m.str()}});
            }
        }
        if (mu_format == "json") os << rows.dump(2) << "\n";
        return kExitOk;
    }

    if (*body) {
        HPolyhedron H = body_c2
                            ? build_c2_body(body_n, body_r)
                            : build_toric_body(resolve_polygon(body_surface, body_coeffs,
                                                               body_polygon_file),
                                               body_n, body_r);
        json out = hpoly_to_json(H);
        if (body_vertices || body_volume) {
            auto V = vertex_enumerate(H);
            json vj = vpoly_to_json(V);
            out["vertices"] = vj["vertices"];
            out["rays"] = vj["rays"];
            out["unbounded"] = !V.rays.empty();
            if (body_volume) {
                if (!V.rays.empty())
                    throw ConfigError("volume requested but the body is unbounded");
                Rat vol = volume(V);
                out["volume"] = vol.str();
                if (body_approx) out["volume_approx"] = vol.approx();
            }
        }
        std::ofstream file;
        open_output(body_output, file) << out.dump(2) << "\n";
        return kExitOk;
    }

    if (*sg) {
        std::ofstream file;
        auto& os = open_output(sg_output, file);
        if (*sg_enum) {
            std::optional<NewtonPolygon> poly;
            if (!sg_surface.empty()) poly = resolve_polygon(sg_surface, sg_coeffs, "");
            GammaSpec spec(sg_n, sg_r, poly);
            bool graded = sg_gp >= 0 || sg_gq >= 0;
            if (graded && (sg_gp < 0 || sg_gq < 0))
                throw ConfigError("--graded-p and --graded-q must be given together");
            auto members = graded ? gamma_enumerate_graded(spec, sg_gp, sg_gq)
                                  : gamma_enumerate_box(spec, sg_pmax, sg_qmax);
            for (const auto& v : members) os << valvector_to_json(v).dump() << "\n";
        } else if (*sg_dec) {
            for (const auto& part : minkowski_decompose(ValVector{sg_a, sg_b}, sg_r))
                os << valvector_to_json(part).dump() << "\n";
        } else {
            std::optional<NewtonPolygon> poly;
            if (!sg_surface.empty()) poly = resolve_polygon(sg_surface, sg_coeffs, "");
            GammaSpec spec((int)sg_a.size(), sg_r, poly);
            os << json{{"member", gamma_member(spec, ValVector{sg_a, sg_b})}}.dump() << "\n";
        }
        return kExitOk;
    }

    if (*dh) {
        auto axis = [](const std::vector<std::string>& given) {
            std::vector<Rat> v;
            if (given.empty()) {
                for (long i = 2; i <= 6; ++i) v.push_back(Rat(i, 2));
            } else {
                for (const auto& s : given) v.push_back(Rat::parse(s));
            }
            return v;
        };
        std::vector<std::pair<Rat, Rat>> grid;
        for (const auto& p : axis(dh_p))
            for (const auto& q : axis(dh_q)) grid.push_back({p, q});
        auto rep = dh_compare(dh_n, dh_r, grid);
        std::ofstream file;
        auto& os = open_output(dh_output, file);
        if (dh_format == "csv") {
            os << "p,q,count_scaled,fiber_volume,abs_dev\n";
            for (const auto& e : rep.entries)
                os << e.p.str() << "," << e.q.str() << "," << e.scaled_count.str() << ","
                   << e.fiber_vol.str() << "," << maybe_approx(e.deviation, dh_approx) << "\n";
        } else {
            json rows = json::array();
            for (const auto& e : rep.entries)
                rows.push_back({{"p", e.p.str()},
                                {"q", e.q.str()},
                                {"count_scaled", e.scaled_count.str()},
                                {"fiber_volume", e.fiber_vol.str()},
                                {"abs_dev", e.deviation.str()}});
            os << json{{"n", rep.n},
                       {"r", rep.r},
                       {"max_deviation", rep.max_deviation.str()},
                       {"entries", rows}}
                      .dump(2)
               << "\n";
        }
        return kExitOk;
    }

    // check
    std::vector<CheckOutcome> outcomes;
    if (suite == "catalan" || suite == "mu" || suite == "volume") {
        ExpectedValues exp = ExpectedValues::load(check_data);
        if (suite == "catalan") outcomes = check_catalan(exp);
        if (suite == "mu") outcomes = check_mu(exp, check_nmax);
        if (suite == "volume") outcomes = check_volume(exp);
    } else if (suite == "semigroup") {
        outcomes = check_semigroup();
    } else if (suite == "oracle") {
        outcomes = check_oracle(3, 3, 6);
    } else {
        outcomes = check_dh();
    }
    bool all_pass = true;
    for (const auto& o : outcomes) {
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << o.name << ": " << o.detail << "\n";
        if (!o.pass) all_pass = false;
    }
    std::cout << (all_pass ? "all checks passed" : "CHECK FAILURES PRESENT") << " ("
              << outcomes.size() << " checks)\n";
    return all_pass ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(expand_config(argc, argv));
    } catch (const CLI::ParseError& e) {
        CLI::App dummy;
        int code = dummy.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}
