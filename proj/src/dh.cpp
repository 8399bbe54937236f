#include "nok/dh.hpp"

#include "nok/polytope.hpp"
#include "nok/semigroup.hpp"

#include <stdexcept>

namespace nok {

Rat fiber_volume(int n, const Rat& p, const Rat& q) {
    if (n < 1) throw std::invalid_argument("fiber_volume: n must be >= 1");
    if (p < Rat(0) || q < Rat(0)) return Rat(0);
    if (n == 1) return Rat(1);

    HPolyhedron body = build_c2_body(n, 1);
    // Substitute a_n = p - (a_1+...+a_{n-1}), b_n = q - (b_1+...+b_{n-1});
    // the slice coordinates are (a_1..a_{n-1}, b_1..b_{n-1}) and the change
    // of variables is unimodular, so Lebesgue volume is preserved.
    HPolyhedron sliced;
    sliced.dim = 2 * (n - 1);
    for (const auto& row : body.rows) {
        QVec normal(sliced.dim);
        const Rat& ca = row.normal[n - 1];
        const Rat& cb = row.normal[2 * n - 1];
        for (int i = 0; i + 1 < n; ++i) {
            normal[i] = row.normal[i] - ca;
            normal[n - 1 + i] = row.normal[n + i] - cb;
        }
        Rat offset = row.offset - ca * p - cb * q;
        bool zero = true;
        for (const auto& x : normal)
            if (!x.is_zero()) zero = false;
        if (zero) {
            if (offset.sign() > 0) return Rat(0);  // slice misses the body
            continue;
        }
        sliced.add(std::move(normal), std::move(offset));
    }
    sliced.dedupe();
    return volume(vertex_enumerate(sliced));
}

DHReport dh_compare(int n, long r, const std::vector<std::pair<Rat, Rat>>& grid) {
    if (n < 1 || r < 1) throw std::invalid_argument("dh_compare: n and r must be >= 1");
    DHReport rep;
    rep.n = n;
    rep.r = r;
    Rat scale(1);
    for (int i = 0; i < 2 * (n - 1); ++i) scale *= Rat(r);
    for (const auto& [p, q] : grid) {
        DHEntry e;
        e.p = p;
        e.q = q;
        Rat rp = Rat(r) * p, rq = Rat(r) * q;
        long count = 0;
        if (rp.is_integer() && rq.is_integer() && rp.sign() >= 0 && rq.sign() >= 0)
            count = graded_count(GammaSpec(n, r), rp.floor_long(), rq.floor_long());
        e.scaled_count = Rat(count) / scale;
        e.fiber_vol = fiber_volume(n, p, q);
        e.deviation = abs(e.scaled_count - e.fiber_vol);
        if (rep.entries.empty() || e.deviation > rep.max_deviation)
            rep.max_deviation = e.deviation;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace nok
