#include "nok/checks.hpp"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace nok;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<std::vector<CheckOutcome>()> run;
};

bool report(const Criterion& c) {
    std::vector<CheckOutcome> outcomes;
    try {
        outcomes = c.run();
    } catch (const std::exception& e) {
        std::cout << "criterion " << c.number << " [FAIL] " << c.title << " (exception: " << e.what()
                  << ")\n";
        return false;
    }
    bool pass = true;
    std::string first_fail;
    for (const auto& o : outcomes)
        if (!o.pass) {
            pass = false;
            if (first_fail.empty()) first_fail = o.name + ": " + o.detail;
        }
    std::cout << "criterion " << c.number << (pass ? " [PASS] " : " [FAIL] ") << c.title << " ("
              << outcomes.size() << " checks";
    if (!pass) std::cout << "; first failure: " << first_fail;
    std::cout << ")\n";
    return pass;
}

std::vector<CheckOutcome> filter(std::vector<CheckOutcome> all, const std::string& prefix,
                                 bool keep_matching) {
    std::vector<CheckOutcome> out;
    for (auto& o : all)
        if ((o.name.rfind(prefix, 0) == 0) == keep_matching) out.push_back(std::move(o));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::string data_path = "data/expected_values.json";
    if (const char* env = std::getenv("NOK_DATA")) data_path = env;
    bool full = false;
    if (const char* env = std::getenv("NOK_ACCEPT_FULL")) full = std::strcmp(env, "1") == 0;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--full")
            full = true;
        else if (arg == "--data" && i + 1 < argc)
            data_path = argv[++i];
        else if (arg == "--only" && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else {
            std::cerr << "usage: acceptance [--full] [--only N] [--data expected_values.json]\n";
            return 2;
        }
    }

    ExpectedValues exp;
    try {
        exp = ExpectedValues::load(data_path);
    } catch (const std::exception& e) {
        std::cerr << "cannot load expected values: " << e.what() << "\n";
        return 2;
    }

    int mu_n_max = full ? 40 : 20;
    std::vector<Criterion> criteria = {
        {1,
         "mu table exact for all four surfaces, n <= " + std::to_string(mu_n_max) +
             (full ? "" : " (full sweep to 40 with --full or NOK_ACCEPT_FULL=1)"),
         [&] { return check_mu(exp, mu_n_max); }},
        {2, "(P2)^[4] body of 4H+E: 186 vertices, volume 112811/2688",
         [&] { return filter(check_volume(exp), "P2 n=4", true); }},
        {3, "(P2)^[5] body of 4H+E: 581 vertices",
         [&] { return check_vertex_count_n5(exp); }},
        {4, "volume(body of D_n) = area(P_D)^n / n! for the presets, n = 2, 3",
         [&] { return filter(check_volume(exp), "volume formula", true); }},
        {5, "bounded cells of the DH chamber complex count Catalan numbers, n = 2..7",
         [&] { return check_catalan(exp); }},
        {6, "Gamma_r box = Minkowski power of Gamma_1 = valuation set, with symbolic products",
         [&] { return check_oracle(3, 3, 6); }},
        {7, "Minkowski decomposition round trip over the same budget",
         [&] { return check_semigroup(); }},
        {8, "slice of the 4H+E body at t=1 equals the 3H+E body",
         [&] { return check_slice_identity(); }},
        {9, "effective-cone endpoints on (P2)^[4]: 3/2 boundary and the -E ray",
         [&] { return check_effective_cone(); }},
        {10, "P1xP1 n=17 facets (8,5|40) and (5,8|40) valid and tight",
         [&] { return check_facets(exp); }},
        {11, "DH deviations shrink monotonically over r = 10, 20, 40 (empirical thresholds)",
         [&] { return check_dh(); }},
        {12, "exclusions acknowledged",
         [&] {
             return std::vector<CheckOutcome>{
                 {"exclusions", true,
                  "not reproduced at desk scale: the numerical n <= 171 agreement sweep "
                  "(superseded by the exact sweep of criterion 1), independent external "
                  "effective-cone computations, and the localization constant 1692165, which "
                  "enters criterion 2 as shipped ground truth"}};
         }},
    };

    bool all_pass = true;
    int ran = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.number != only) continue;
        ++ran;
        if (!report(c)) all_pass = false;
    }
    if (ran == 0) {
        std::cerr << "no criterion numbered " << only << "\n";
        return 2;
    }
    std::cout << (all_pass ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " (" << ran
              << " criteria)\n";
    return all_pass ? 0 : 1;
}
