#include "nok/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace nok {

namespace {

long ceil_rat(const Rat& x) { return -((-x).floor_long()); }

// Lower-bound sum of Definition-style membership: for column j (0-based),
// sum over i<j with p_j-p_i<r of (r-p_j+p_i).
long lower_sum(const std::vector<long>& p, int j, long r) {
    long s = 0;
    for (int i = 0; i < j; ++i)
        if (p[j] - p[i] < r) s += r - p[j] + p[i];
    return s;
}

long upper_sum(const std::vector<long>& p, int j, long r) {
    long s = 0;
    for (int k = j + 1; k < (int)p.size(); ++k)
        if (p[k] - p[j] < r) s += r - p[k] + p[j];
    return s;
}

bool basic_shape_ok(const GammaSpec& spec, const ValVector& v) {
    const int n = spec.n();
    if (v.n() != n || (int)v.q.size() != n)
        throw std::invalid_argument("gamma_member: dimension mismatch");
    for (int i = 0; i < n; ++i)
        if (v.p[i] < 0 || v.q[i] < 0) return false;
    for (int i = 0; i + 1 < n; ++i)
        if (v.p[i] > v.p[i + 1]) return false;
    if (spec.polygon() && Rat(v.p[n - 1]) > spec.polygon()->cap()) return false;
    for (int j = 0; j + 1 < n; ++j)
        if (v.p[j] == v.p[j + 1] && v.q[j + 1] < v.q[j] + spec.r()) return false;
    return true;
}

}  // namespace

ValVector::ValVector(std::vector<long> pp, std::vector<long> qq)
    : p(std::move(pp)), q(std::move(qq)) {
    if (p.size() != q.size())
        throw std::invalid_argument("ValVector: p and q must have equal length");
}

bool ValVector::operator<(const ValVector& o) const {
    if (p != o.p) return p < o.p;
    return q < o.q;
}

ValVector ValVector::operator+(const ValVector& o) const {
    if (n() != o.n()) throw std::invalid_argument("ValVector: dimension mismatch");
    ValVector s = *this;
    for (int i = 0; i < n(); ++i) {
        s.p[i] += o.p[i];
        s.q[i] += o.q[i];
    }
    return s;
}

GammaSpec::GammaSpec(int n, long r, std::optional<NewtonPolygon> polygon)
    : n_(n), r_(r), polygon_(std::move(polygon)) {
    if (n < 1) throw std::invalid_argument("GammaSpec: n must be >= 1");
    if (r_ < 0) r_ = (r_ % 2 == 0) ? 0 : 1;
}

bool gamma_member(const GammaSpec& spec, const ValVector& v) {
    if (!basic_shape_ok(spec, v)) return false;
    const int n = spec.n();
    const long r = spec.r();
    const auto& poly = spec.polygon();

    std::vector<long> prefix(n + 1, 0);
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + v.p[i];

    for (int j = 0; j < n; ++j) {
        Rat lo = poly ? poly->lower(Rat(v.p[j])) : Rat(0);
        for (int i = 0; i <= j; ++i) {
            // q_j >= l(p_j) + (j-i)(r-p_j) + p_i+...+p_{j-1}
            Rat bound = lo + Rat((long)(j - i)) * Rat(r - v.p[j]) + Rat(prefix[j] - prefix[i]);
            if (Rat(v.q[j]) < bound) return false;
        }
        if (poly) {
            Rat hi = poly->upper(Rat(v.p[j]));
            for (int k = j; k < n; ++k) {
                // q_j <= u(p_j) - (k-j)(r+p_j) + p_{j+1}+...+p_k
                Rat bound =
                    hi - Rat((long)(k - j)) * Rat(r + v.p[j]) + Rat(prefix[k + 1] - prefix[j + 1]);
                if (Rat(v.q[j]) > bound) return false;
            }
        }
    }
    return true;
}

bool gamma_member_sumform(const GammaSpec& spec, const ValVector& v) {
    if (!basic_shape_ok(spec, v)) return false;
    const int n = spec.n();
    const long r = spec.r();
    const auto& poly = spec.polygon();
    for (int j = 0; j < n; ++j) {
        Rat lo = poly ? poly->lower(Rat(v.p[j])) : Rat(0);
        if (Rat(v.q[j]) < lo + Rat(lower_sum(v.p, j, r))) return false;
        if (poly) {
            Rat hi = poly->upper(Rat(v.p[j]));
            if (Rat(v.q[j]) > hi - Rat(upper_sum(v.p, j, r))) return false;
        }
    }
    return true;
}

namespace {

// Shared backtracking over columns. A box target bounds every coordinate;
// a graded target fixes the coordinate sums.
struct EnumState {
    const GammaSpec& spec;
    bool graded;
    long p_limit, q_limit;  // per-coordinate caps (box) or sum targets (graded)
    std::vector<long> p, q;
    std::vector<ValVector> out;

    void run() {
        p.assign(spec.n(), 0);
        q.assign(spec.n(), 0);
        descend(0, 0, 0);
        std::sort(out.begin(), out.end());
    }

    void descend(int j, long psum, long qsum) {
        const int n = spec.n();
        if (j == n) {
            if (graded && (psum != p_limit || qsum != q_limit)) return;
            ValVector v{p, q};
            if (gamma_member(spec, v)) out.push_back(std::move(v));
            return;
        }
        long pmin = j == 0 ? 0 : p[j - 1];
        long pmax = graded ? p_limit - psum : p_limit;
        if (spec.polygon()) pmax = std::min(pmax, spec.polygon()->cap().floor_long());
        for (long pj = pmin; pj <= pmax; ++pj) {
            if (graded && pj * (n - 1 - j) > p_limit - psum - pj) break;
            p[j] = pj;
            long qlo = 0;
            if (j > 0 && p[j - 1] == pj) qlo = q[j - 1] + spec.r();
            qlo = std::max(qlo, lower_sum(p, j, spec.r()));
            Rat flo = spec.polygon() ? spec.polygon()->lower(Rat(pj)) : Rat(0);
            qlo = std::max(qlo, ceil_rat(flo) );
            long qhi = graded ? q_limit - qsum : q_limit;
            if (spec.polygon())
                qhi = std::min(qhi, spec.polygon()->upper(Rat(pj)).floor_long());
            for (long qj = qlo; qj <= qhi; ++qj) {
                q[j] = qj;
                descend(j + 1, psum + pj, qsum + qj);
            }
        }
    }
};

}  // namespace

std::vector<ValVector> gamma_enumerate_box(const GammaSpec& spec, long p_max, long q_max) {
    if (p_max < 0 || q_max < 0) return {};
    EnumState st{spec, false, p_max, q_max};
    st.run();
    return std::move(st.out);
}

std::vector<ValVector> gamma_enumerate_graded(const GammaSpec& spec, long p, long q) {
    if (p < 0 || q < 0) return {};
    EnumState st{spec, true, p, q};
    st.run();
    return std::move(st.out);
}

long graded_count(const GammaSpec& spec, long p, long q) {
    return (long)gamma_enumerate_graded(spec, p, q).size();
}

namespace {

// One deferred rewrite of a summand list, undoing a reduction step.
struct Patch {
    enum Kind { ShiftP, BumpQ } kind;
    int from;    // first affected column
    int to;      // last affected column (inclusive)
    long amount; // ShiftP only
};

// Base case of the decomposition: p_1 = 0, jumps at most r, every q at its
// lower bound. Builds summands carrying the bookkeeping q_n values that the
// cyclic reorder preserves.
std::vector<ValVector> decompose_reduced(const std::vector<long>& p,
                                         const std::vector<long>& q, long r) {
    const int n = (int)p.size();
    if (n == 1) {
        return std::vector<ValVector>((size_t)r, ValVector{{0}, {0}});
    }
    std::vector<long> ph(p.begin(), p.end() - 1), qh(q.begin(), q.end() - 1);
    auto sub = decompose_reduced(ph, qh, r);
    long step = p[n - 1] - p[n - 2];
    for (long k = 0; k < r; ++k) {
        long lastp = sub[k].p.back();
        long lastq = sub[k].q.back();
        if (k < step) {
            sub[k].p.push_back(lastp + 1);
            sub[k].q.push_back(0);
        } else {
            sub[k].p.push_back(lastp);
            sub[k].q.push_back(lastq + 1);
        }
    }
    std::rotate(sub.begin(), sub.begin() + step, sub.end());
    return sub;
}

bool strictly_lex_increasing(const ValVector& v) {
    for (int i = 0; i + 1 < v.n(); ++i) {
        if (v.p[i] > v.p[i + 1]) return false;
        if (v.p[i] == v.p[i + 1] && v.q[i] >= v.q[i + 1]) return false;
    }
    for (int i = 0; i < v.n(); ++i)
        if (v.p[i] < 0 || v.q[i] < 0) return false;
    return true;
}

}  // namespace

std::vector<ValVector> minkowski_decompose(const ValVector& v, long r) {
    if (r < 1) throw std::invalid_argument("minkowski_decompose: r must be >= 1");
    GammaSpec spec(v.n(), r);
    if (!gamma_member(spec, v))
        throw std::invalid_argument("minkowski_decompose: vector is not in Gamma_r");
    const int n = v.n();
    std::vector<long> p = v.p, q = v.q;
    std::vector<Patch> patches;

    // Shift so p_1 = 0.
    if (p[0] > 0) {
        patches.push_back({Patch::ShiftP, 0, n - 1, p[0]});
        long d = p[0];
        for (auto& x : p) x -= d;
    }
    // Peel p-jumps above r.
    for (int j = 0; j + 1 < n; ++j) {
        if (p[j + 1] > p[j] + r) {
            long d = p[j + 1] - p[j] - r;
            patches.push_back({Patch::ShiftP, j + 1, n - 1, d});
            for (int t = j + 1; t < n; ++t) p[t] -= d;
        }
    }
    // Peel q-slack, one unit at a time, smallest column first.
    for (;;) {
        int j = -1;
        for (int t = 0; t < n; ++t)
            if (q[t] > lower_sum(p, t, r)) { j = t; break; }
        if (j < 0) break;
        int k = j;
        while (k + 1 < n && p[k + 1] == p[j]) ++k;
        patches.push_back({Patch::BumpQ, j, k, 1});
        for (int t = j; t <= k; ++t) --q[t];
    }

    auto parts = decompose_reduced(p, q, r);

    for (auto it = patches.rbegin(); it != patches.rend(); ++it) {
        if (it->kind == Patch::ShiftP) {
            for (int t = it->from; t <= it->to; ++t) parts[0].p[t] += it->amount;
        } else {
            int k = it->to;
            int pick = -1;
            for (int ell = 0; ell < (int)parts.size(); ++ell) {
                if (k == n - 1 || parts[ell].p[k] < parts[ell].p[k + 1]) { pick = ell; break; }
            }
            if (pick < 0) throw std::logic_error("minkowski_decompose: no admissible summand");
            for (int t = it->from; t <= it->to; ++t) ++parts[pick].q[t];
        }
    }

    std::sort(parts.begin(), parts.end());

    ValVector total = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) total = total + parts[i];
    if (!(total == v)) throw std::logic_error("minkowski_decompose: summands do not add up");
    for (const auto& part : parts)
        if (!strictly_lex_increasing(part))
            throw std::logic_error("minkowski_decompose: summand not in Gamma_1");
    return parts;
}

}  // namespace nok
