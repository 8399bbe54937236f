#pragma once

#include "nok/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace nok {

/// One affine piece b = slope * a + intercept of a polygon boundary.
struct BoundaryPiece {
    Rat slope;
    Rat intercept;

    Rat eval(const Rat& a) const { return slope * a + intercept; }
    bool operator==(const BoundaryPiece&) const = default;
};

/// Planar Newton polygon {0 <= a <= c, lower(a) <= b <= upper(a)} of a
/// torus-invariant divisor on a toric surface. The lower boundary is the
/// pointwise max of its pieces (convex), the upper boundary the pointwise
/// min of its pieces (concave). Emptiness is rejected at construction.
class NewtonPolygon {
public:
    NewtonPolygon(Rat cap, std::vector<BoundaryPiece> lower,
                  std::vector<BoundaryPiece> upper);

    const Rat& cap() const { return cap_; }
    const std::vector<BoundaryPiece>& lower_pieces() const { return lower_; }
    const std::vector<BoundaryPiece>& upper_pieces() const { return upper_; }

    Rat lower(const Rat& a) const;
    Rat upper(const Rat& a) const;

    bool contains(const Rat& a, const Rat& b) const;

    /// Boundary cycle, counterclockwise starting at (0, lower(0)).
    std::vector<std::array<Rat, 2>> vertices() const;

    Rat area() const;

    /// Integer points (p,q) with 0 <= p <= c, lower(p) <= q <= upper(p).
    std::vector<std::array<long, 2>> lattice_points() const;

    /// t * P for t >= 0. Negative t is rejected.
    NewtonPolygon scaled(const Rat& t) const;

    bool operator==(const NewtonPolygon&) const = default;

private:
    Rat cap_;
    std::vector<BoundaryPiece> lower_, upper_;
};

enum class SurfaceKind { P2, P1xP1, Hirzebruch };

/// A preset toric surface together with its map from divisor class
/// coefficients to Newton polygons. P2(d): c=d, l=0, u(a)=d-a.
/// P1xP1(x,y): c=x, l=0, u(a)=y. Hirzebruch e, class (x,y): c=y, l=0,
/// u(a)=x+e*a, oriented so the square corner of the polygon sits at the
/// origin with the slanted edge on the right.
class SurfacePreset {
public:
    static SurfacePreset p2() { return SurfacePreset(SurfaceKind::P2, 0); }
    static SurfacePreset p1xp1() { return SurfacePreset(SurfaceKind::P1xP1, 0); }
    static SurfacePreset hirzebruch(long e) {
        if (e < 0) throw std::invalid_argument("hirzebruch: e must be >= 0");
        return SurfacePreset(SurfaceKind::Hirzebruch, e);
    }
    static SurfacePreset from_name(const std::string& name);

    SurfaceKind kind() const { return kind_; }
    long e() const { return e_; }
    int picard_rank() const { return kind_ == SurfaceKind::P2 ? 1 : 2; }
    std::string name() const;

    NewtonPolygon polygon_of_class(const QVec& coeffs) const;

    /// Boundary data of the polygon as linear forms in the class
    /// coefficients: cap = cap_form . coeffs, and each piece has a fixed
    /// slope with intercept = form . coeffs. Consumed by the LP module,
    /// where coefficients themselves become variables.
    struct LinearPolygon {
        QVec cap_form;
        std::vector<std::pair<Rat, QVec>> lower;  // (slope, intercept form)
        std::vector<std::pair<Rat, QVec>> upper;
    };
    LinearPolygon linear_polygon() const;

private:
    SurfacePreset(SurfaceKind k, long e) : kind_(k), e_(e) {}
    SurfaceKind kind_;
    long e_;
};

}  // namespace nok
