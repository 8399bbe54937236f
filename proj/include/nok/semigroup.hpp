#pragma once

#include "nok/polygon.hpp"

#include <optional>
#include <vector>

namespace nok {

/// Point of Z^{2n} in coordinates (p_1..p_n, q_1..q_n).
struct ValVector {
    std::vector<long> p, q;

    ValVector() = default;
    ValVector(std::vector<long> pp, std::vector<long> qq);

    int n() const { return (int)p.size(); }
    bool operator==(const ValVector&) const = default;
    bool operator<(const ValVector& o) const;  // lex on (p_1..p_n, q_1..q_n)

    ValVector operator+(const ValVector& o) const;
};

/// Which valuation semigroup: Gamma_r on (C^2)^[n] when no polygon is
/// present, Gamma(D_n+rE) on a toric surface when one is. Negative r is
/// normalized on construction (even -> 0, odd -> 1).
class GammaSpec {
public:
    GammaSpec(int n, long r, std::optional<NewtonPolygon> polygon = std::nullopt);

    int n() const { return n_; }
    long r() const { return r_; }
    const std::optional<NewtonPolygon>& polygon() const { return polygon_; }

private:
    int n_;
    long r_;
    std::optional<NewtonPolygon> polygon_;
};

/// Membership via the pairwise-indexed bounds: ordering, the equal-p gap
/// rule, q_j >= l(p_j)+(j-i)(r-p_j)+p_i+...+p_{j-1}, and (toric only)
/// q_j <= u(p_j)-(k-j)(r+p_j)+p_{j+1}+...+p_k.
bool gamma_member(const GammaSpec& spec, const ValVector& v);

/// Membership via the single-sum bounds q_j >= l(p_j) + sum over i<j with
/// p_j-p_i<r of (r-p_j+p_i), and the mirrored upper sum. Agrees with
/// gamma_member everywhere; kept as an independent route.
bool gamma_member_sumform(const GammaSpec& spec, const ValVector& v);

/// Members with all p_i <= p_max and q_i <= q_max, in lex order.
std::vector<ValVector> gamma_enumerate_box(const GammaSpec& spec, long p_max, long q_max);

/// The graded piece: members with sum p_i = p and sum q_i = q, in lex order.
std::vector<ValVector> gamma_enumerate_graded(const GammaSpec& spec, long p, long q);

long graded_count(const GammaSpec& spec, long p, long q);

/// Splits v in Gamma_r (C^2 case, r >= 1) into r members of Gamma_1
/// summing to v, sorted lex. Throws if v is not in Gamma_r.
std::vector<ValVector> minkowski_decompose(const ValVector& v, long r);

}  // namespace nok
