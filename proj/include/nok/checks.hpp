#pragma once

#include "nok/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace nok {

/// Reference values shipped as data (the published table and counts), never
/// recomputed by the code under test.
struct ExpectedValues {
    int mu_n_start = 2;
    std::map<std::string, QVec> mu_rays;
    std::map<std::string, std::vector<Rat>> mu_values;  // index 0 is n = mu_n_start
    std::map<int, long> catalan;
    long n4_vertex_count = 0;
    long n5_vertex_count = 0;
    Rat n4_volume;
    std::vector<std::array<long, 3>> p1xp1_n17_facets;

    static ExpectedValues load(const std::string& path);
};

struct CheckOutcome {
    std::string name;
    bool pass;
    std::string detail;
};

/// Each suite returns one outcome per individual comparison; a suite passes
/// iff every outcome does.
std::vector<CheckOutcome> check_mu(const ExpectedValues& exp, int n_max);
std::vector<CheckOutcome> check_catalan(const ExpectedValues& exp);
std::vector<CheckOutcome> check_volume(const ExpectedValues& exp);
std::vector<CheckOutcome> check_vertex_count_n5(const ExpectedValues& exp);
std::vector<CheckOutcome> check_semigroup();
std::vector<CheckOutcome> check_oracle(int n_max, long r_max, long box);
std::vector<CheckOutcome> check_slice_identity();
std::vector<CheckOutcome> check_effective_cone();
std::vector<CheckOutcome> check_facets(const ExpectedValues& exp);
std::vector<CheckOutcome> check_dh();

}  // namespace nok
