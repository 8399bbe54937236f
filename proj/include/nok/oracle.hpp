#pragma once

#include "nok/polygon.hpp"
#include "nok/semigroup.hpp"

#include <array>
#include <map>
#include <vector>

namespace nok {

/// Sparse multivariate polynomial over the rationals. Exponent vectors are
/// fixed-length rows of nonnegative integers; the variable order is
/// x_1 > ... > x_n > y_1 > ... > y_n for the 2n point variables (auxiliary
/// variables, when present, come after).
class MPoly {
public:
    explicit MPoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    void add_term(const std::vector<int>& expo, const Rat& coef);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;

    static MPoly constant(int nvars, const Rat& c);
    static MPoly monomial(int nvars, const std::vector<int>& expo);

private:
    int nvars_;
    std::map<std::vector<int>, Rat> terms_;
};

/// A tuple of n lattice points (p_i, q_i), stored lex sorted.
struct PointTuple {
    std::vector<std::array<long, 2>> pts;

    explicit PointTuple(std::vector<std::array<long, 2>> p);
    int n() const { return (int)pts.size(); }
};

/// Trailing-term valuation: exponent vector of the lex-smallest term of f
/// in 2n point variables. Rejects the zero polynomial.
ValVector valuation(const MPoly& f);

/// Orbit sum of the monomial x^{p_1}y^{q_1} ... over distinct assignments
/// of the tuple's points to the n variable pairs.
MPoly monomial_symmetric(const PointTuple& t);

/// det(x_i^{p_j} y_i^{q_j}), fully expanded. Requires distinct points.
MPoly determinant(const PointTuple& t);

/// Membership in J^r = intersection over pairs i<j of (x_i-x_j, y_i-y_j)^r,
/// decided by substituting x_j -> x_i + s, y_j -> y_i + t and checking that
/// every surviving term has (s,t)-degree >= r.
bool jr_member(const MPoly& f, int n, long r);

/// Valuations of r-fold products of determinants whose coordinates stay in
/// the box p_i <= p_max, q_i <= q_max, as the r-fold sumset of the Gamma_1
/// box. Returned sorted lex.
std::vector<ValVector> valuation_set_Ar(int n, long r, long p_max, long q_max);

/// Confirms on an actual symbolic product that the valuation of the product
/// of the tuples' determinants is the sum of their valuations.
bool verify_product_valuation(const std::vector<PointTuple>& tuples);

/// Checks the two predicted Newton-polytope points per coordinate pair j:
/// (p_j, q_j - lower_sum_j) and (p_j, q_j + upper_sum_j) must lie in the
/// (a_j, b_j)-projection of the Newton polytope of f. LP membership.
bool newton_polytope_bounds(const MPoly& f, long r);

/// True iff every term of f has, for every i, its (x_i, y_i) exponent pair
/// inside the polygon P.
bool toric_restriction_filter(const MPoly& f, const NewtonPolygon& P);

}  // namespace nok
