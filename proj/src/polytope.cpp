#include "nok/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace nok {

namespace {

void add_ordering_rows(HPolyhedron& H, int n) {
    QVec row(H.dim);
    row[0] = Rat(1);
    H.add(row, Rat(0));  // a_1 >= 0
    for (int j = 0; j + 1 < n; ++j) {
        QVec r(H.dim);
        r[j] = Rat(-1);
        r[j + 1] = Rat(1);
        H.add(std::move(r), Rat(0));
    }
}

}  // namespace

HPolyhedron build_c2_body(int n, long r) {
    if (n < 1) throw std::invalid_argument("build_c2_body: n must be >= 1");
    HPolyhedron H;
    H.dim = 2 * n;
    add_ordering_rows(H, n);
    if (r <= 0) {
        for (int j = 0; j < n; ++j) {
            QVec row(H.dim);
            row[n + j] = Rat(1);
            H.add(std::move(row), Rat(0));
        }
    } else {
        for (int j = 0; j < n; ++j)
            for (int i = 0; i <= j; ++i) {
                // b_j - (j-i)(r-a_j) - (a_i+...+a_{j-1}) >= 0
                QVec row(H.dim);
                row[n + j] = Rat(1);
                row[j] += Rat((long)(j - i));
                for (int t = i; t < j; ++t) row[t] -= Rat(1);
                H.add(std::move(row), Rat((long)(j - i) * r));
            }
    }
    H.dedupe();
    return H;
}

HPolyhedron build_toric_body(const NewtonPolygon& P, int n, long r) {
    if (n < 1) throw std::invalid_argument("build_toric_body: n must be >= 1");
    HPolyhedron H;
    H.dim = 2 * n;
    add_ordering_rows(H, n);
    {
        QVec row(H.dim);
        row[n - 1] = Rat(-1);
        H.add(std::move(row), -P.cap());  // a_n <= c
    }
    if (r <= 0) {
        for (int j = 0; j < n; ++j) {
            for (const auto& piece : P.lower_pieces()) {
                QVec row(H.dim);
                row[n + j] = Rat(1);
                row[j] = -piece.slope;
                H.add(std::move(row), piece.intercept);
            }
            for (const auto& piece : P.upper_pieces()) {
                QVec row(H.dim);
                row[n + j] = Rat(-1);
                row[j] = piece.slope;
                H.add(std::move(row), -piece.intercept);
            }
        }
    } else {
        for (int j = 0; j < n; ++j) {
            for (const auto& piece : P.lower_pieces())
                for (int i = 0; i <= j; ++i) {
                    // b_j >= l(a_j) + (j-i)(r-a_j) + a_i+...+a_{j-1}
                    QVec row(H.dim);
                    row[n + j] = Rat(1);
                    row[j] = -piece.slope + Rat((long)(j - i));
                    for (int t = i; t < j; ++t) row[t] -= Rat(1);
                    H.add(std::move(row), piece.intercept + Rat((long)(j - i) * r));
                }
            for (const auto& piece : P.upper_pieces())
                for (int k = j; k < n; ++k) {
                    // b_j <= u(a_j) - (k-j)(r+a_j) + a_{j+1}+...+a_k
                    QVec row(H.dim);
                    row[n + j] = Rat(-1);
                    row[j] = piece.slope - Rat((long)(k - j));
                    for (int t = j + 1; t <= k; ++t) row[t] += Rat(1);
                    H.add(std::move(row), Rat((long)(k - j) * r) - piece.intercept);
                }
        }
    }
    H.dedupe();
    return H;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool bit_get(const Bits& b, int i) { return (b[i / 64] >> (i % 64)) & 1; }
void bit_set(Bits& b, int i) { b[i / 64] |= std::uint64_t(1) << (i % 64); }

bool subset(const Bits& a, const Bits& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

Bits intersect(const Bits& a, const Bits& b) {
    Bits r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}

// Double description on a cone {x : h.x >= 0 for h in hrows}, starting from
// the whole space. Returns minimal generating rays (primitive integer);
// throws if a lineality direction survives.
std::vector<QVec> dd_cone(const std::vector<QVec>& hrows, int dim) {
    std::vector<QVec> lineality;
    for (int i = 0; i < dim; ++i) {
        QVec e(dim);
        e[i] = Rat(1);
        lineality.push_back(std::move(e));
    }
    std::vector<QVec> rays;
    std::vector<Bits> tight;  // per ray, over rows processed so far
    const int words = ((int)hrows.size() + 63) / 64;

    auto tight_of = [&](const QVec& ray, int upto) {
        Bits b(words, 0);
        for (int i = 0; i < upto; ++i)
            if (dot(hrows[i], ray).is_zero()) bit_set(b, i);
        return b;
    };

    for (int hi = 0; hi < (int)hrows.size(); ++hi) {
        const QVec& h = hrows[hi];
        int cross = -1;
        for (int i = 0; i < (int)lineality.size(); ++i)
            if (!dot(h, lineality[i]).is_zero()) { cross = i; break; }
        if (cross >= 0) {
            QVec dir = lineality[cross];
            lineality.erase(lineality.begin() + cross);
            Rat hd = dot(h, dir);
            if (hd.sign() < 0) {
                dir = Rat(-1) * dir;
                hd = -hd;
            }
            for (auto& l : lineality) {
                Rat f = dot(h, l) / hd;
                if (!f.is_zero()) l = l - f * dir;
            }
            for (auto& r : rays) {
                Rat f = dot(h, r) / hd;
                if (!f.is_zero()) r = primitive_scale(r - f * dir);
            }
            rays.push_back(primitive_scale(dir));
            tight.clear();
            for (const auto& r : rays) tight.push_back(tight_of(r, hi + 1));
            continue;
        }

        std::vector<int> plus, zero, minus;
        QVec hv(rays.size());
        for (int i = 0; i < (int)rays.size(); ++i) {
            hv[i] = dot(h, rays[i]);
            (hv[i].sign() > 0 ? plus : hv[i].sign() < 0 ? minus : zero).push_back(i);
        }
        if (minus.empty()) {
            for (int i : zero) bit_set(tight[i], hi);
            continue;
        }
        std::vector<QVec> next;
        std::vector<Bits> next_tight;
        for (int i : plus) {
            next.push_back(rays[i]);
            next_tight.push_back(tight[i]);
        }
        for (int i : zero) {
            next.push_back(rays[i]);
            Bits b = tight[i];
            bit_set(b, hi);
            next_tight.push_back(std::move(b));
        }
        for (int p : plus)
            for (int m : minus) {
                Bits common = intersect(tight[p], tight[m]);
                bool adjacent = true;
                for (int w = 0; w < (int)rays.size() && adjacent; ++w) {
                    if (w == p || w == m) continue;
                    if (subset(common, tight[w])) adjacent = false;
                }
                if (!adjacent) continue;
                QVec combo = primitive_scale(hv[p] * rays[m] - hv[m] * rays[p]);
                next.push_back(std::move(combo));
                next_tight.push_back(tight_of(next.back(), hi + 1));
            }
        rays = std::move(next);
        tight = std::move(next_tight);
    }
    if (!lineality.empty())
        throw std::logic_error("vertex_enumerate: cone is not pointed");
    return rays;
}

}  // namespace

VPolytope vertex_enumerate(const HPolyhedron& H) {
    HPolyhedron work = H;
    work.dedupe();
    VPolytope V;
    V.dim = H.dim;
    if (!lp_feasible_point(work.matrix(), work.offsets())) return V;

    // Strip redundant rows before the double description run.
    for (int i = (int)work.rows.size() - 1; i >= 0; --i) {
        if (work.rows.size() <= 1) break;
        if (lp_row_redundant(work.matrix(), work.offsets(), i))
            work.rows.erase(work.rows.begin() + i);
    }
    V.source_rows = work.rows;

    const int hd = H.dim + 1;
    std::vector<QVec> hrows;
    for (const auto& row : work.rows) {
        QVec h = row.normal;
        h.push_back(-row.offset);
        hrows.push_back(std::move(h));
    }
    {
        QVec t(hd);
        t[hd - 1] = Rat(1);
        hrows.push_back(std::move(t));
    }

    for (const auto& ray : dd_cone(hrows, hd)) {
        const Rat& t = ray[hd - 1];
        QVec x(ray.begin(), ray.end() - 1);
        if (t.is_zero()) {
            V.rays.push_back(primitive_scale(x));
        } else {
            V.vertices.push_back((Rat(1) / t) * x);
        }
    }
    std::sort(V.vertices.begin(), V.vertices.end());
    std::sort(V.rays.begin(), V.rays.end());
    return V;
}

namespace {

int affine_dim(const std::vector<QVec>& pts, const std::vector<int>& idx) {
    if (idx.size() <= 1) return 0;
    QMat M((int)idx.size() - 1, (int)pts[idx[0]].size());
    for (size_t i = 1; i < idx.size(); ++i) {
        QVec d = pts[idx[i]] - pts[idx[0]];
        for (size_t j = 0; j < d.size(); ++j) M.at((int)i - 1, (int)j) = d[j];
    }
    return rank(M);
}

struct Triangulator {
    const std::vector<QVec>& verts;
    const std::vector<HRow>& rows;
    std::vector<Bits> vtight;  // per vertex, rows tight at it
    std::map<std::vector<int>, std::vector<std::vector<int>>> memo;

    Triangulator(const std::vector<QVec>& v, const std::vector<HRow>& r)
        : verts(v), rows(r) {
        const int words = ((int)rows.size() + 63) / 64;
        for (const auto& x : verts) {
            Bits b(words, 0);
            for (int i = 0; i < (int)rows.size(); ++i)
                if (dot(rows[i].normal, x) == rows[i].offset) bit_set(b, i);
            vtight.push_back(std::move(b));
        }
    }

    // Simplices (as vertex index lists) of a face of dimension k with the
    // given vertex set. Vertex indices are ascending, which is lex order of
    // the vertices themselves, so the base vertex face[0] is deterministic
    // and shared ridges triangulate consistently.
    const std::vector<std::vector<int>>& triangulate(const std::vector<int>& face, int k) {
        auto it = memo.find(face);
        if (it != memo.end()) return it->second;
        std::vector<std::vector<int>> simplices;
        if (k == 0) {
            simplices.push_back({face[0]});
        } else {
            int base = face[0];
            std::vector<std::vector<int>> facets;
            for (int r = 0; r < (int)rows.size(); ++r) {
                std::vector<int> sub;
                for (int v : face)
                    if (bit_get(vtight[v], r)) sub.push_back(v);
                if (sub.size() < (size_t)k) continue;
                if (affine_dim(verts, sub) != k - 1) continue;
                if (std::find(facets.begin(), facets.end(), sub) == facets.end())
                    facets.push_back(std::move(sub));
            }
            for (const auto& facet : facets) {
                if (std::find(facet.begin(), facet.end(), base) != facet.end()) continue;
                for (const auto& s : triangulate(facet, k - 1)) {
                    std::vector<int> simplex = s;
                    simplex.push_back(base);
                    simplices.push_back(std::move(simplex));
                }
            }
        }
        return memo.emplace(face, std::move(simplices)).first->second;
    }
};

}  // namespace

Rat volume(const VPolytope& V) {
    if (!V.rays.empty())
        throw std::invalid_argument("volume: polyhedron is unbounded");
    const int d = V.dim;
    if ((int)V.vertices.size() < d + 1) return Rat(0);
    std::vector<int> all((int)V.vertices.size());
    for (int i = 0; i < (int)all.size(); ++i) all[i] = i;
    if (affine_dim(V.vertices, all) < d) return Rat(0);

    Triangulator tri(V.vertices, V.source_rows);
    Rat total;
    for (const auto& s : tri.triangulate(all, d)) {
        QMat M(d, d);
        for (int i = 0; i + 1 < (int)s.size(); ++i) {
            QVec diff = V.vertices[s[i]] - V.vertices[s.back()];
            for (int j = 0; j < d; ++j) M.at(i, j) = diff[j];
        }
        total += abs(determinant(M));
    }
    Rat fact(1);
    for (int i = 2; i <= d; ++i) fact *= Rat((long)i);
    return total / fact;
}

HPolyhedron slice_shift(const HPolyhedron& H, const Rat& t) {
    if (t < Rat(0)) throw std::invalid_argument("slice_shift: t must be >= 0");
    if (H.dim % 2 != 0) throw std::invalid_argument("slice_shift: dimension must be 2n");
    int n = H.dim / 2;
    HPolyhedron out;
    out.dim = H.dim;
    for (const auto& row : H.rows) {
        Rat a_sum;
        for (int i = 0; i < n; ++i) a_sum += row.normal[i];
        out.add(row.normal, row.offset - a_sum * t);
    }
    QVec e1(H.dim);
    e1[0] = Rat(1);
    out.add(std::move(e1), Rat(0));  // a_1 >= t before the shift
    out.dedupe();
    return out;
}

namespace {

// Recursive sign-pattern search over the pairs (i,j), i<j, asking whether
// t_{i+1}+...+t_j is below or above 1. Patterns are grown one pair at a
// time and pruned by an exact interior-point LP.
struct CellCounter {
    int n;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> signs;  // -1: sum < 1, +1: sum > 1
    long count = 0;

    explicit CellCounter(int nn) : n(nn) {
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
        std::sort(pairs.begin(), pairs.end(),
                  [](auto& a, auto& b) { return a.second - a.first < b.second - b.first; });
    }

    bool interior_feasible(size_t npairs) const {
        // Variables t_2..t_n and the slack e; maximize e.
        const int nt = n - 1, dim = nt + 1;
        HPolyhedron H;
        H.dim = dim;
        for (int i = 0; i < nt; ++i) {
            QVec lo(dim), hi(dim);
            lo[i] = Rat(1);
            lo[nt] = Rat(-1);
            H.add(std::move(lo), Rat(0));  // t >= e
            hi[i] = Rat(-1);
            hi[nt] = Rat(-1);
            H.add(std::move(hi), Rat(-1));  // t <= 1 - e
        }
        for (size_t k = 0; k < npairs; ++k) {
            auto [i, j] = pairs[k];
            QVec row(dim);
            Rat s((long)signs[k]);
            for (int m = i + 1; m <= j; ++m) row[m - 2] = s;
            row[nt] = Rat(-1);
            H.add(std::move(row), s);  // sign*(sum - 1) >= e
        }
        QVec c(dim);
        c[nt] = Rat(-1);
        LPResult res = lp_solve(H.matrix(), H.offsets(), c);
        if (res.status != LPStatus::Optimal)
            throw std::logic_error("catalan_cells: slack LP has no optimum");
        return (-res.value).sign() > 0;
    }

    void search() {
        if (signs.size() == pairs.size()) {
            ++count;
            return;
        }
        for (int s : {-1, 1}) {
            signs.push_back(s);
            if (interior_feasible(signs.size())) search();
            signs.pop_back();
        }
    }
};

}  // namespace

long catalan_cells(int n) {
    if (n < 2) throw std::invalid_argument("catalan_cells: n must be >= 2");
    CellCounter cc(n);
    cc.search();
    return cc.count;
}

}  // namespace nok
