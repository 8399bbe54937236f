#include "nok/oracle.hpp"

#include "nok/lp.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace nok {

void MPoly::add_term(const std::vector<int>& expo, const Rat& coef) {
    if ((int)expo.size() != nvars_)
        throw std::invalid_argument("MPoly: exponent vector has wrong length");
    if (coef.is_zero()) return;
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        terms_.emplace(expo, coef);
    } else {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MPoly: variable count mismatch");
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MPoly: variable count mismatch");
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MPoly: variable count mismatch");
    MPoly r(nvars_);
    std::vector<int> e(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MPoly MPoly::constant(int nvars, const Rat& c) {
    MPoly r(nvars);
    r.add_term(std::vector<int>(nvars, 0), c);
    return r;
}

MPoly MPoly::monomial(int nvars, const std::vector<int>& expo) {
    MPoly r(nvars);
    r.add_term(expo, Rat(1));
    return r;
}

PointTuple::PointTuple(std::vector<std::array<long, 2>> p) : pts(std::move(p)) {
    if (pts.empty()) throw std::invalid_argument("PointTuple: empty tuple");
    for (const auto& pt : pts)
        if (pt[0] < 0 || pt[1] < 0)
            throw std::invalid_argument("PointTuple: negative coordinates");
    std::sort(pts.begin(), pts.end());
}

ValVector valuation(const MPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("valuation: zero polynomial");
    if (f.nvars() % 2 != 0)
        throw std::invalid_argument("valuation: expected 2n point variables");
    const int n = f.nvars() / 2;
    // Map keys are in lex order on (x_1..x_n, y_1..y_n), matching the
    // monomial order x_1 > ... > x_n > y_1 > ... > y_n, so the trailing
    // term is the first key.
    const auto& e = f.terms().begin()->first;
    std::vector<long> p(n), q(n);
    for (int i = 0; i < n; ++i) {
        p[i] = e[i];
        q[i] = e[n + i];
    }
    return ValVector{std::move(p), std::move(q)};
}

MPoly monomial_symmetric(const PointTuple& t) {
    const int n = t.n();
    MPoly f(2 * n);
    auto pts = t.pts;  // already sorted: next_permutation walks distinct orders
    do {
        std::vector<int> e(2 * n, 0);
        for (int i = 0; i < n; ++i) {
            e[i] = (int)pts[i][0];
            e[n + i] = (int)pts[i][1];
        }
        f.add_term(e, Rat(1));
    } while (std::next_permutation(pts.begin(), pts.end()));
    return f;
}

MPoly determinant(const PointTuple& t) {
    const int n = t.n();
    for (int i = 0; i + 1 < n; ++i)
        if (t.pts[i] == t.pts[i + 1])
            throw std::invalid_argument("determinant: repeated point in tuple");
    MPoly f(2 * n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        std::vector<int> e(2 * n, 0);
        for (int i = 0; i < n; ++i) {
            e[i] = (int)t.pts[perm[i]][0];
            e[n + i] = (int)t.pts[perm[i]][1];
        }
        f.add_term(e, inversions % 2 == 0 ? Rat(1) : Rat(-1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return f;
}

namespace {

Rat binomial(long nn, long kk) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), (unsigned long)nn, (unsigned long)kk);
    return Rat(mpq_class(b));
}

}  // namespace

bool jr_member(const MPoly& f, int n, long r) {
    if (f.nvars() != 2 * n) throw std::invalid_argument("jr_member: variable count mismatch");
    if (f.is_zero() || r <= 0) return true;
    // Variables of the substituted polynomial: the original 2n, then s, t.
    const int sv = 2 * n, tv = 2 * n + 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            MPoly g(2 * n + 2);
            for (const auto& [e, c] : f.terms()) {
                const int ex = e[j], ey = e[n + j];
                for (int k = 0; k <= ex; ++k)
                    for (int l = 0; l <= ey; ++l) {
                        std::vector<int> ne(2 * n + 2, 0);
                        for (int v = 0; v < 2 * n; ++v) ne[v] = e[v];
                        ne[j] = 0;
                        ne[n + j] = 0;
                        ne[i] += k;
                        ne[n + i] += l;
                        ne[sv] = ex - k;
                        ne[tv] = ey - l;
                        g.add_term(ne, c * binomial(ex, k) * binomial(ey, l));
                    }
            }
            for (const auto& [e, c] : g.terms())
                if (e[sv] + e[tv] < r) return false;
        }
    return true;
}

std::vector<ValVector> valuation_set_Ar(int n, long r, long p_max, long q_max) {
    if (n < 1 || r < 0) throw std::invalid_argument("valuation_set_Ar: bad parameters");
    std::set<std::pair<std::vector<long>, std::vector<long>>> seen;
    std::vector<std::array<long, 2>> box_pts;
    for (long p = 0; p <= p_max; ++p)
        for (long q = 0; q <= q_max; ++q) box_pts.push_back({p, q});

    // Base layer, symbolically: valuations of the degree-r=1 determinants
    // (or of the symmetric orbit sums when r = 0) over tuples in the box.
    std::vector<ValVector> base;
    std::vector<int> choice(n);
    std::function<void(int, int)> pick = [&](int k, int from) {
        if (k == n) {
            std::vector<std::array<long, 2>> pts;
            for (int i = 0; i < n; ++i) pts.push_back(box_pts[choice[i]]);
            bool distinct = true;
            for (int i = 0; i + 1 < n; ++i)
                if (pts[i] == pts[i + 1]) distinct = false;
            PointTuple t(pts);
            if (r == 0) {
                base.push_back(valuation(monomial_symmetric(t)));
            } else if (distinct) {
                base.push_back(valuation(determinant(t)));
            }
            return;
        }
        for (int i = from; i < (int)box_pts.size(); ++i) {
            choice[k] = i;
            pick(k + 1, i);
        }
    };
    pick(0, 0);

    if (r == 0) {
        for (auto& v : base) seen.insert({v.p, v.q});
        std::vector<ValVector> out;
        for (const auto& [p, q] : seen) out.push_back(ValVector{p, q});
        std::sort(out.begin(), out.end());
        return out;
    }

    // r-fold sumset, flattened to (p..., q...) rows for the tight inner loop.
    std::set<std::vector<long>> layer0;
    for (const auto& v : base) {
        std::vector<long> flat = v.p;
        flat.insert(flat.end(), v.q.begin(), v.q.end());
        layer0.insert(std::move(flat));
    }
    std::vector<std::vector<long>> ground(layer0.begin(), layer0.end());
    std::vector<std::vector<long>> layer = ground;
    std::vector<long> lim(2 * n);
    for (int i = 0; i < n; ++i) {
        lim[i] = p_max;
        lim[n + i] = q_max;
    }
    std::vector<long> s(2 * n);
    for (long k = 2; k <= r; ++k) {
        std::set<std::vector<long>> next;
        for (const auto& u : layer)
            for (const auto& v : ground) {
                bool ok = true;
                for (int i = 0; i < 2 * n; ++i) {
                    s[i] = u[i] + v[i];
                    if (s[i] > lim[i]) { ok = false; break; }
                }
                if (ok) next.insert(s);
            }
        layer.assign(next.begin(), next.end());
    }
    std::vector<ValVector> out;
    for (const auto& flat : layer)
        out.push_back(ValVector{std::vector<long>(flat.begin(), flat.begin() + n),
                                std::vector<long>(flat.begin() + n, flat.end())});
    std::sort(out.begin(), out.end());
    return out;
}

bool verify_product_valuation(const std::vector<PointTuple>& tuples) {
    if (tuples.empty()) throw std::invalid_argument("verify_product_valuation: empty list");
    const int n = tuples[0].n();
    MPoly prod = MPoly::constant(2 * n, Rat(1));
    ValVector expect;
    for (size_t i = 0; i < tuples.size(); ++i) {
        if (tuples[i].n() != n)
            throw std::invalid_argument("verify_product_valuation: mixed tuple sizes");
        MPoly d = determinant(tuples[i]);
        prod = prod * d;
        expect = i == 0 ? valuation(d) : expect + valuation(d);
    }
    return valuation(prod) == expect;
}

namespace {

// LP membership of a 2d point in the convex hull of a point list.
bool in_hull_2d(const std::vector<std::array<Rat, 2>>& pts, const Rat& x, const Rat& y) {
    const int m = (int)pts.size();
    // Rows over weights w: both directions of sum w = 1, sum w p = target,
    // and w >= 0.
    QMat A(6 + m, m);
    QVec b(6 + m);
    for (int i = 0; i < m; ++i) {
        A.at(0, i) = Rat(1);
        A.at(1, i) = Rat(-1);
        A.at(2, i) = pts[i][0];
        A.at(3, i) = -pts[i][0];
        A.at(4, i) = pts[i][1];
        A.at(5, i) = -pts[i][1];
        A.at(6 + i, i) = Rat(1);
    }
    b[0] = Rat(1);
    b[1] = Rat(-1);
    b[2] = x;
    b[3] = -x;
    b[4] = y;
    b[5] = -y;
    return lp_feasible_point(A, b).has_value();
}

}  // namespace

bool newton_polytope_bounds(const MPoly& f, long r) {
    ValVector v = valuation(f);
    const int n = v.n();
    for (int j = 0; j < n; ++j) {
        long lo = 0, hi = 0;
        for (int i = 0; i < j; ++i)
            if (v.p[j] - v.p[i] < r) lo += r - v.p[j] + v.p[i];
        for (int k = j + 1; k < n; ++k)
            if (v.p[k] - v.p[j] < r) hi += r - v.p[k] + v.p[j];
        std::vector<std::array<Rat, 2>> proj;
        for (const auto& [e, c] : f.terms()) proj.push_back({Rat((long)e[j]), Rat((long)e[n + j])});
        if (!in_hull_2d(proj, Rat(v.p[j]), Rat(v.q[j] - lo))) return false;
        if (!in_hull_2d(proj, Rat(v.p[j]), Rat(v.q[j] + hi))) return false;
    }
    return true;
}

bool toric_restriction_filter(const MPoly& f, const NewtonPolygon& P) {
    if (f.nvars() % 2 != 0)
        throw std::invalid_argument("toric_restriction_filter: expected 2n point variables");
    const int n = f.nvars() / 2;
    for (const auto& [e, c] : f.terms())
        for (int i = 0; i < n; ++i)
            if (!P.contains(Rat((long)e[i]), Rat((long)e[n + i]))) return false;
    return true;
}

}  // namespace nok
