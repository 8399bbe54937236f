#pragma once

#include "nok/polygon.hpp"
#include "nok/rational.hpp"

namespace nok {

/// One inequality normal.x >= offset.
struct HRow {
    QVec normal;
    Rat offset;
    bool operator==(const HRow&) const = default;
};

/// Intersection of halfspaces in R^dim.
struct HPolyhedron {
    int dim = 0;
    std::vector<HRow> rows;

    void add(QVec normal, Rat offset);
    QMat matrix() const;
    QVec offsets() const;

    /// Drops exact duplicates after scaling each row primitive.
    void dedupe();
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

/// Outcome of minimizing c.x over {x : A x >= b}. On Optimal, x is a
/// minimizer, dual is a certificate y >= 0 with A^T y = c and b.y = value;
/// both identities are re-checked exactly before returning.
struct LPResult {
    LPStatus status;
    Rat value;
    QVec x;
    QVec dual;
};

/// Exact simplex over the rationals: min c.x subject to A x >= b, x free.
LPResult lp_solve(const QMat& A, const QVec& b, const QVec& c);

/// Minimization over an HPolyhedron.
struct LPProblem {
    QVec objective;
    HPolyhedron constraints;
};
LPResult solve(const LPProblem& p);

/// A point of {x : A x >= b}, or nullopt when the system is infeasible.
std::optional<QVec> lp_feasible_point(const QMat& A, const QVec& b);

/// Whether row i of A x >= b is implied by the remaining rows (removing it
/// does not enlarge the feasible set).
bool lp_row_redundant(const QMat& A, const QVec& b, int row);

/// Whether normal.x >= offset holds everywhere on {x : A x >= b}. An
/// infeasible system satisfies every inequality.
bool lp_implies(const QMat& A, const QVec& b, const QVec& normal, const Rat& offset);

/// Whether every point of H1 satisfies every row of H2 and vice versa.
bool hpoly_equivalent(const HPolyhedron& h1, const HPolyhedron& h2);

/// Smallest t such that n points fit in t*P_D with the unit excess budget:
/// minimizes t over the incidence constraints for the scaled polygon of the
/// divisor class `coeffs` on the given surface.
Rat mu_slope(const SurfacePreset& surface, const QVec& coeffs, int n);

/// mu_slope for n = n_min..n_max. Per-n work items run on a worker pool
/// sized to the hardware; results are assembled in input order.
std::vector<Rat> mu_slope_sweep(const SurfacePreset& surface, const QVec& coeffs, int n_min,
                                int n_max);

/// Verdict on a candidate supporting inequality f_1 x_1 + ... + f_rho x_rho
/// >= f_E for the cone of classes (x, E-coefficient 1) whose body is
/// nonempty. `f` holds the rho class coefficients followed by f_E.
struct FacetVerdict {
    bool valid;  // min of f.x - f_E over the cone section is >= 0
    bool tight;  // the minimum is exactly 0
    Rat min_value;
};
FacetVerdict facet_check(const SurfacePreset& surface, int n, const QVec& f);

}  // namespace nok
