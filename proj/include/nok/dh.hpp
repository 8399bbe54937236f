#pragma once

#include "nok/rational.hpp"

#include <utility>
#include <vector>

namespace nok {

/// Exact (2n-2)-volume of the fiber of (a,b) -> (sum a_i, sum b_i) over
/// (p,q), inside the body for excess budget 1 on (C^2)^[n]. Computed in the
/// affine slice after the unimodular elimination of (a_n, b_n). For n = 1
/// the fiber is a point: volume 1 on the quadrant, 0 outside.
Rat fiber_volume(int n, const Rat& p, const Rat& q);

/// One grid point of the lattice-count comparison.
struct DHEntry {
    Rat p, q;
    Rat scaled_count;  // #graded members at (rp, rq) divided by r^{2n-2}
    Rat fiber_vol;
    Rat deviation;  // |scaled_count - fiber_vol|
};

struct DHReport {
    int n;
    long r;
    std::vector<DHEntry> entries;
    Rat max_deviation;
};

/// Compares rescaled graded counts against exact fiber volumes on a grid.
/// Grid points where rp or rq is not an integer contribute count 0.
DHReport dh_compare(int n, long r, const std::vector<std::pair<Rat, Rat>>& grid);

}  // namespace nok
