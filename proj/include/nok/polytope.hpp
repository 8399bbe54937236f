#pragma once

#include "nok/lp.hpp"
#include "nok/polygon.hpp"

namespace nok {

/// Vertex/ray description of a polyhedron, together with the irredundant
/// inequality rows it was enumerated from (kept so that volume can recover
/// the face lattice). Vertices and rays are lex sorted; rays are primitive
/// integer vectors.
struct VPolytope {
    int dim = 0;
    std::vector<QVec> vertices;
    std::vector<QVec> rays;
    std::vector<HRow> source_rows;
};

/// Inequalities of the body on (C^2)^[n] with excess budget r, in variables
/// (a_1..a_n, b_1..b_n): a_1 >= 0, a ordered, and for r >= 1 the rows
/// b_j >= (j-i)(r-a_j) + a_i+...+a_{j-1} over all pairs i <= j. For r <= 0
/// the system reduces to the simplicial cone (a ordered, b >= 0), and that
/// reduced form is emitted.
HPolyhedron build_c2_body(int n, long r);

/// Inequalities of the bounded body for n points on the toric surface with
/// Newton polygon P and excess budget r: the C^2 rows with l(a_j) folded in,
/// the cap a_n <= c, and the mirrored upper rows
/// b_j <= u(a_j) - (k-j)(r+a_j) + a_{j+1}+...+a_k over pairs j <= k.
/// For r <= 0: a ordered with each (a_j, b_j) in P.
HPolyhedron build_toric_body(const NewtonPolygon& P, int n, long r);

/// Exact vertex/ray enumeration by the double description method on the
/// homogenization, after LP-based removal of redundant rows. Empty lists
/// when the system is infeasible.
VPolytope vertex_enumerate(const HPolyhedron& H);

/// Exact Lebesgue volume via boundary triangulation from the lex-smallest
/// vertex. Throws on unbounded input; lower-dimensional bodies get 0.
Rat volume(const VPolytope& V);

/// The body of the shifted divisor: the slice a_1 >= t translated back to
/// the origin. The section cutting out the sliced divisor class has
/// valuation (1,...,1,0,...,0) -- the symmetrized x_1...x_n -- so dividing
/// by its t-th power subtracts t from every a-coordinate, not just a_1;
/// the slice condition itself becomes a_1 >= 0 (the remaining a_i >= t are
/// implied by the ordering). Requires t >= 0 and even dimension 2n.
HPolyhedron slice_shift(const HPolyhedron& H, const Rat& t);

/// Number of full-dimensional cells cut out of the (n-1)-cube in gap
/// coordinates t_j = a_j - a_{j-1} by the hyperplanes t_{i+1}+...+t_j = 1;
/// equals the Catalan number C_{n-1}. Cell feasibility is decided by an
/// exact interior-point LP (maximize the common slack).
long catalan_cells(int n);

}  // namespace nok
