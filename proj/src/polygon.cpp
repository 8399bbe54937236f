#include "nok/polygon.hpp"

#include <algorithm>
#include <set>

namespace nok {

namespace {

Rat envelope_eval(const std::vector<BoundaryPiece>& pieces, const Rat& a, bool is_max) {
    Rat best = pieces.front().eval(a);
    for (size_t i = 1; i < pieces.size(); ++i) {
        Rat v = pieces[i].eval(a);
        if (is_max ? v > best : v < best) best = v;
    }
    return best;
}

// a-coordinates where the envelope of `pieces` can change slope, within [0, c].
std::vector<Rat> breakpoints(const std::vector<BoundaryPiece>& pieces, const Rat& c) {
    std::set<std::string> seen;
    std::vector<Rat> out;
    auto push = [&](const Rat& a) {
        if (seen.insert(a.str()).second) out.push_back(a);
    };
    push(Rat(0));
    push(c);
    for (size_t i = 0; i < pieces.size(); ++i)
        for (size_t j = i + 1; j < pieces.size(); ++j) {
            Rat ds = pieces[i].slope - pieces[j].slope;
            if (ds.is_zero()) continue;
            Rat a = (pieces[j].intercept - pieces[i].intercept) / ds;
            if (a > Rat(0) && a < c) push(a);
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool collinear(const std::array<Rat, 2>& p, const std::array<Rat, 2>& q,
               const std::array<Rat, 2>& r) {
    return ((q[0] - p[0]) * (r[1] - q[1]) - (q[1] - p[1]) * (r[0] - q[0])).is_zero();
}

}  // namespace

NewtonPolygon::NewtonPolygon(Rat cap, std::vector<BoundaryPiece> lower,
                             std::vector<BoundaryPiece> upper)
    : cap_(std::move(cap)), lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty() || upper_.empty())
        throw std::invalid_argument("NewtonPolygon: boundary pieces required");
    if (cap_ < Rat(0))
        throw std::invalid_argument("NewtonPolygon: negative cap");
    // upper - lower is concave, so emptiness shows up at an endpoint.
    for (const Rat& a : {Rat(0), cap_}) {
        if (this->lower(a) > this->upper(a)) {
            // Name the violated pair of boundary pieces.
            const BoundaryPiece* lo = &lower_.front();
            const BoundaryPiece* hi = &upper_.front();
            for (const auto& p : lower_)
                if (p.eval(a) > lo->eval(a)) lo = &p;
            for (const auto& p : upper_)
                if (p.eval(a) < hi->eval(a)) hi = &p;
            throw std::invalid_argument(
                "NewtonPolygon: empty at a=" + a.str() + ": lower piece (" +
                lo->slope.str() + "," + lo->intercept.str() + ") exceeds upper piece (" +
                hi->slope.str() + "," + hi->intercept.str() + ")");
        }
    }
}

Rat NewtonPolygon::lower(const Rat& a) const { return envelope_eval(lower_, a, true); }
Rat NewtonPolygon::upper(const Rat& a) const { return envelope_eval(upper_, a, false); }

bool NewtonPolygon::contains(const Rat& a, const Rat& b) const {
    return a >= Rat(0) && a <= cap_ && b >= lower(a) && b <= upper(a);
}

std::vector<std::array<Rat, 2>> NewtonPolygon::vertices() const {
    std::vector<std::array<Rat, 2>> cycle;
    auto push = [&](std::array<Rat, 2> p) {
        if (!cycle.empty() && cycle.back() == p) return;
        if (cycle.size() >= 2 && collinear(cycle[cycle.size() - 2], cycle.back(), p))
            cycle.back() = std::move(p);
        else
            cycle.push_back(std::move(p));
    };
    for (const Rat& a : breakpoints(lower_, cap_)) push({a, lower(a)});
    for (auto bp = breakpoints(upper_, cap_); !bp.empty(); bp.pop_back())
        push({bp.back(), upper(bp.back())});
    // Close up: drop a trailing repeat of the start and collinearity across the seam.
    while (cycle.size() >= 2 && cycle.back() == cycle.front()) cycle.pop_back();
    while (cycle.size() >= 3 && collinear(cycle[cycle.size() - 2], cycle.back(), cycle.front()))
        cycle.pop_back();
    while (cycle.size() >= 3 && collinear(cycle.back(), cycle.front(), cycle[1]))
        cycle.erase(cycle.begin());
    return cycle;
}

Rat NewtonPolygon::area() const {
    auto vs = vertices();
    if (vs.size() < 3) return Rat(0);
    Rat twice;
    for (size_t i = 0; i < vs.size(); ++i) {
        const auto& p = vs[i];
        const auto& q = vs[(i + 1) % vs.size()];
        twice += p[0] * q[1] - q[0] * p[1];
    }
    return abs(twice) / Rat(2);
}

std::vector<std::array<long, 2>> NewtonPolygon::lattice_points() const {
    std::vector<std::array<long, 2>> pts;
    long pmax = cap_.floor_long();
    for (long p = 0; p <= pmax; ++p) {
        Rat lo = lower(Rat(p)), hi = upper(Rat(p));
        long qlo = -((-lo).floor_long());  // ceil
        long qhi = hi.floor_long();
        for (long q = qlo; q <= qhi; ++q) pts.push_back({p, q});
    }
    return pts;
}

NewtonPolygon NewtonPolygon::scaled(const Rat& t) const {
    if (t < Rat(0)) throw std::invalid_argument("NewtonPolygon::scaled: negative factor");
    auto scale_pieces = [&](const std::vector<BoundaryPiece>& ps) {
        std::vector<BoundaryPiece> out;
        for (const auto& p : ps) out.push_back({p.slope, t * p.intercept});
        return out;
    };
    return NewtonPolygon(t * cap_, scale_pieces(lower_), scale_pieces(upper_));
}

SurfacePreset SurfacePreset::from_name(const std::string& name) {
    if (name == "P2") return p2();
    if (name == "P1xP1") return p1xp1();
    if (name == "H1") return hirzebruch(1);
    if (name == "H2") return hirzebruch(2);
    if (name.rfind("H", 0) == 0) {
        try {
            return hirzebruch(std::stol(name.substr(1)));
        } catch (...) {
        }
    }
    throw std::invalid_argument("SurfacePreset: unknown surface '" + name + "'");
}

std::string SurfacePreset::name() const {
    switch (kind_) {
        case SurfaceKind::P2: return "P2";
        case SurfaceKind::P1xP1: return "P1xP1";
        case SurfaceKind::Hirzebruch: return "H" + std::to_string(e_);
    }
    return "?";
}

NewtonPolygon SurfacePreset::polygon_of_class(const QVec& coeffs) const {
    if ((int)coeffs.size() != picard_rank())
        throw std::invalid_argument("polygon_of_class: expected " +
                                    std::to_string(picard_rank()) + " coefficients");
    auto lin = linear_polygon();
    auto eval = [&](const QVec& form) { return dot(form, coeffs); };
    std::vector<BoundaryPiece> lower, upper;
    for (const auto& [slope, form] : lin.lower) lower.push_back({slope, eval(form)});
    for (const auto& [slope, form] : lin.upper) upper.push_back({slope, eval(form)});
    return NewtonPolygon(eval(lin.cap_form), std::move(lower), std::move(upper));
}

SurfacePreset::LinearPolygon SurfacePreset::linear_polygon() const {
    LinearPolygon lin;
    switch (kind_) {
        case SurfaceKind::P2:
            // P_{dH}: c=d, l=0, u(a)=d-a.
            lin.cap_form = {Rat(1)};
            lin.lower = {{Rat(0), {Rat(0)}}};
            lin.upper = {{Rat(-1), {Rat(1)}}};
            break;
        case SurfaceKind::P1xP1:
            // P_{xH1+yH2}: c=x, l=0, u(a)=y.
            lin.cap_form = {Rat(1), Rat(0)};
            lin.lower = {{Rat(0), {Rat(0), Rat(0)}}};
            lin.upper = {{Rat(0), {Rat(0), Rat(1)}}};
            break;
        case SurfaceKind::Hirzebruch:
            // Class (x,y): c=y, l=0, u(a)=x+e*a.
            lin.cap_form = {Rat(0), Rat(1)};
            lin.lower = {{Rat(0), {Rat(0), Rat(0)}}};
            lin.upper = {{Rat(e_), {Rat(1), Rat(0)}}};
            break;
    }
    return lin;
}

}  // namespace nok
