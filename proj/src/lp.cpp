#include "nok/lp.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

namespace nok {

namespace {

// Simplex on the standard form min c.y s.t. M y = d, y >= 0. Full tableau
// with one artificial column per row; the artificials stay in the tableau
// through phase 2 so the final reduced costs expose B^{-1} and with it the
// equality multipliers.
struct Kernel {
    LPStatus status = LPStatus::Infeasible;
    Rat value;
    QVec y;     // structural solution, length M.cols()
    QVec dual;  // multiplier per equality row of the ORIGINAL system

    Kernel(const QMat& M, const QVec& d, const QVec& c) {
        const int m = M.rows(), nv = M.cols();
        const int rhs = nv + m;
        std::vector<int> sign(m, 1);
        T.assign(m, QVec(nv + m + 1));
        basis.resize(m);
        for (int i = 0; i < m; ++i) {
            if (d[i].sign() < 0) sign[i] = -1;
            Rat s((long)sign[i]);
            for (int j = 0; j < nv; ++j) T[i][j] = s * M.at(i, j);
            T[i][nv + i] = Rat(1);
            T[i][rhs] = s * d[i];
            basis[i] = nv + i;
        }

        // Phase 1: minimize the artificial total.
        obj.assign(nv + m + 1, Rat(0));
        for (int j = nv; j < nv + m; ++j) obj[j] = Rat(1);
        for (int i = 0; i < m; ++i) reduce_obj(i);
        if (!pivot_loop(nv + m)) throw std::logic_error("lp: phase 1 unbounded");
        if (!(-obj[rhs]).is_zero()) {
            status = LPStatus::Infeasible;
            return;
        }
        // Drive leftover artificials to nonbasic where possible. A row with
        // no structural entry is redundant; its artificial stays basic at
        // zero and can never move since artificials are barred from entering.
        for (int i = 0; i < m; ++i) {
            if (basis[i] < nv) continue;
            for (int j = 0; j < nv; ++j) {
                if (!T[i][j].is_zero()) {
                    pivot(i, j);
                    break;
                }
            }
        }

        // Phase 2.
        std::fill(obj.begin(), obj.end(), Rat(0));
        for (int j = 0; j < nv; ++j) obj[j] = c[j];
        for (int i = 0; i < m; ++i) reduce_obj(i);
        if (!pivot_loop(nv)) {
            status = LPStatus::Unbounded;
            return;
        }
        status = LPStatus::Optimal;
        value = -obj[rhs];
        y.assign(nv, Rat(0));
        for (int i = 0; i < m; ++i)
            if (basis[i] < nv) y[basis[i]] = T[i][rhs];
        dual.assign(m, Rat(0));
        for (int i = 0; i < m; ++i) dual[i] = Rat((long)sign[i]) * -obj[nv + i];
    }

private:
    std::vector<QVec> T;
    QVec obj;
    std::vector<int> basis;

    void reduce_obj(int i) {
        Rat f = obj[basis[i]];
        if (f.is_zero()) return;
        for (size_t j = 0; j < obj.size(); ++j) obj[j] -= f * T[i][j];
    }

    void pivot(int row, int col) {
        Rat inv = Rat(1) / T[row][col];
        for (auto& x : T[row]) x *= inv;
        for (int i = 0; i < (int)T.size(); ++i) {
            if (i == row || T[i][col].is_zero()) continue;
            Rat f = T[i][col];
            for (size_t j = 0; j < T[i].size(); ++j) T[i][j] -= f * T[row][j];
        }
        Rat f = obj[col];
        if (!f.is_zero())
            for (size_t j = 0; j < obj.size(); ++j) obj[j] -= f * T[row][j];
        basis[row] = col;
    }

    // Entering columns range over [0, ncols). Returns false on unbounded.
    bool pivot_loop(int ncols) {
        const int rhs = (int)obj.size() - 1;
        bool bland = false;
        long stalled = 0;
        Rat last_value = -obj[rhs];
        for (;;) {
            int col = -1;
            if (bland) {
                for (int j = 0; j < ncols; ++j)
                    if (obj[j].sign() < 0) { col = j; break; }
            } else {
                for (int j = 0; j < ncols; ++j)
                    if (obj[j].sign() < 0 && (col < 0 || obj[j] < obj[col])) col = j;
            }
            if (col < 0) return true;
            int row = -1;
            for (int i = 0; i < (int)T.size(); ++i) {
                if (T[i][col].sign() <= 0) continue;
                if (row < 0) { row = i; continue; }
                Rat cur = T[i][rhs] / T[i][col];
                Rat best = T[row][rhs] / T[row][col];
                if (cur < best || (cur == best && basis[i] < basis[row])) row = i;
            }
            if (row < 0) return false;
            pivot(row, col);
            Rat v = -obj[rhs];
            if (v == last_value) {
                if (++stalled > 2 * (long)(T.size() + obj.size())) bland = true;
            } else {
                // Strict progress: the stall is over, so the anti-cycling
                // rule can yield back to the faster Dantzig selection.
                stalled = 0;
                bland = false;
                last_value = v;
            }
        }
    }
};

QMat transpose(const QMat& A) {
    QMat M(A.cols(), A.rows());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) M.at(j, i) = A.at(i, j);
    return M;
}

void audit_optimal(const QMat& A, const QVec& b, const QVec& c, const LPResult& res) {
    QVec Ax = A.apply(res.x);
    for (int i = 0; i < A.rows(); ++i)
        if (Ax[i] < b[i]) throw std::logic_error("lp: optimal witness violates a constraint");
    Rat primal = dot(c, res.x);
    if (primal != res.value) throw std::logic_error("lp: objective mismatch at optimum");
    QVec Aty(A.cols());
    for (int i = 0; i < A.rows(); ++i) {
        if (res.dual[i].sign() < 0) throw std::logic_error("lp: negative dual multiplier");
        for (int j = 0; j < A.cols(); ++j) Aty[j] += res.dual[i] * A.at(i, j);
    }
    for (int j = 0; j < A.cols(); ++j)
        if (Aty[j] != c[j]) throw std::logic_error("lp: dual certificate fails A^T y = c");
    if (dot(b, res.dual) != res.value) throw std::logic_error("lp: duality gap at optimum");
}

}  // namespace

void HPolyhedron::add(QVec normal, Rat offset) {
    if ((int)normal.size() != dim)
        throw std::invalid_argument("HPolyhedron: row dimension mismatch");
    bool zero = std::all_of(normal.begin(), normal.end(), [](const Rat& x) { return x.is_zero(); });
    if (zero) throw std::invalid_argument("HPolyhedron: zero normal");
    rows.push_back({std::move(normal), std::move(offset)});
}

QMat HPolyhedron::matrix() const {
    QMat A((int)rows.size(), dim);
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < dim; ++j) A.at(i, j) = rows[i].normal[j];
    return A;
}

QVec HPolyhedron::offsets() const {
    QVec b(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) b[i] = rows[i].offset;
    return b;
}

void HPolyhedron::dedupe() {
    std::vector<HRow> kept;
    std::vector<std::string> seen;
    for (const auto& row : rows) {
        QVec full = row.normal;
        full.push_back(row.offset);
        full = primitive_scale(full);
        std::string key;
        for (const auto& x : full) key += x.str() + ",";
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(std::move(key));
        kept.push_back(row);
    }
    rows = std::move(kept);
}

LPResult solve(const LPProblem& p) {
    return lp_solve(p.constraints.matrix(), p.constraints.offsets(), p.objective);
}

bool hpoly_equivalent(const HPolyhedron& h1, const HPolyhedron& h2) {
    if (h1.dim != h2.dim) return false;
    QMat A1 = h1.matrix(), A2 = h2.matrix();
    QVec b1 = h1.offsets(), b2 = h2.offsets();
    for (const auto& row : h2.rows)
        if (!lp_implies(A1, b1, row.normal, row.offset)) return false;
    for (const auto& row : h1.rows)
        if (!lp_implies(A2, b2, row.normal, row.offset)) return false;
    return true;
}

LPResult lp_solve(const QMat& A, const QVec& b, const QVec& c) {
    const int m = A.rows(), n = A.cols();
    if ((int)b.size() != m || (int)c.size() != n)
        throw std::invalid_argument("lp_solve: shape mismatch");
    if (m == 0) {
        // No constraints: optimal iff the objective vanishes.
        bool zero = std::all_of(c.begin(), c.end(), [](const Rat& x) { return x.is_zero(); });
        if (zero) return {LPStatus::Optimal, Rat(0), QVec(n), QVec()};
        return {LPStatus::Unbounded, Rat(0), {}, {}};
    }

    // Solve the dual min (-b).y s.t. A^T y = c, y >= 0 in standard form; its
    // equality multipliers z satisfy A z <= -b, so x = -z solves the primal.
    QVec negb(m);
    for (int i = 0; i < m; ++i) negb[i] = -b[i];
    Kernel k(transpose(A), c, negb);

    if (k.status == LPStatus::Optimal) {
        LPResult res;
        res.status = LPStatus::Optimal;
        res.value = -k.value;
        res.x.resize(n);
        for (int j = 0; j < n; ++j) res.x[j] = -k.dual[j];
        res.dual = k.y;
        audit_optimal(A, b, c, res);
        return res;
    }
    if (k.status == LPStatus::Unbounded) return {LPStatus::Infeasible, Rat(0), {}, {}};

    // Dual infeasible: the primal is either infeasible or unbounded. Decide
    // with min t s.t. A x + 1 t >= b, t >= 0, which always has an optimum.
    QMat Aux(m + 1, n + 1);
    QVec baux(m + 1), caux(n + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) Aux.at(i, j) = A.at(i, j);
        Aux.at(i, n) = Rat(1);
        baux[i] = b[i];
    }
    Aux.at(m, n) = Rat(1);
    caux[n] = Rat(1);
    LPResult aux = lp_solve(Aux, baux, caux);
    if (aux.status != LPStatus::Optimal)
        throw std::logic_error("lp: feasibility probe did not reach an optimum");
    if (aux.value.sign() > 0) return {LPStatus::Infeasible, Rat(0), {}, {}};
    return {LPStatus::Unbounded, Rat(0), {}, {}};
}

std::optional<QVec> lp_feasible_point(const QMat& A, const QVec& b) {
    LPResult res = lp_solve(A, b, QVec(A.cols()));
    if (res.status != LPStatus::Optimal) return std::nullopt;
    return res.x;
}

bool lp_row_redundant(const QMat& A, const QVec& b, int row) {
    const int m = A.rows(), n = A.cols();
    if (row < 0 || row >= m) throw std::invalid_argument("lp_row_redundant: bad row index");
    QMat rest(m - 1, n);
    QVec brest(m - 1), normal(n);
    for (int i = 0, t = 0; i < m; ++i) {
        if (i == row) continue;
        for (int j = 0; j < n; ++j) rest.at(t, j) = A.at(i, j);
        brest[t] = b[i];
        ++t;
    }
    for (int j = 0; j < n; ++j) normal[j] = A.at(row, j);
    return lp_implies(rest, brest, normal, b[row]);
}

bool lp_implies(const QMat& A, const QVec& b, const QVec& normal, const Rat& offset) {
    LPResult res = lp_solve(A, b, normal);
    if (res.status == LPStatus::Infeasible) return true;
    if (res.status == LPStatus::Unbounded) return false;
    return res.value >= offset;
}

namespace {

// Rows of the incidence system shared by mu_slope and facet_check: points
// (a_1..a_n, b_1..b_n) inside the polygon whose boundary forms are linear in
// trailing "class" variables, with excess budget r folded into the offsets.
// Variable layout: a_1..a_n, b_1..b_n, then ncls class variables.
struct RowSet {
    std::vector<QVec> normals;
    QVec offsets;

    void add(QVec normal, Rat offset) {
        normals.push_back(std::move(normal));
        offsets.push_back(std::move(offset));
    }

    QMat matrix() const {
        QMat A((int)normals.size(), (int)normals.front().size());
        for (int i = 0; i < A.rows(); ++i)
            for (int j = 0; j < A.cols(); ++j) A.at(i, j) = normals[i][j];
        return A;
    }
};

RowSet incidence_rows(const SurfacePreset::LinearPolygon& lin, int n, long r, int ncls) {
    const int dim = 2 * n + ncls;
    auto blank = [&] { return QVec(dim); };
    auto cls = [&](QVec& row, const QVec& form, const Rat& s) {
        for (int k = 0; k < ncls; ++k) row[2 * n + k] += s * form[k];
    };
    RowSet rows;

    {
        QVec row = blank();
        row[0] = Rat(1);
        rows.add(std::move(row), Rat(0));
    }
    for (int j = 0; j + 1 < n; ++j) {
        QVec row = blank();
        row[j] = Rat(-1);
        row[j + 1] = Rat(1);
        rows.add(std::move(row), Rat(0));
    }
    {
        QVec row = blank();
        row[n - 1] = Rat(-1);
        cls(row, lin.cap_form, Rat(1));
        rows.add(std::move(row), Rat(0));
    }
    for (const auto& [slope, form] : lin.lower) {
        for (int j = 0; j < n; ++j)
            for (int i = 0; i <= j; ++i) {
                // b_j >= slope*a_j + form.cls + (j-i)(r - a_j) + a_i+...+a_{j-1}
                QVec row = blank();
                row[n + j] = Rat(1);
                row[j] = -slope + Rat((long)(j - i));
                for (int t = i; t < j; ++t) row[t] -= Rat(1);
                cls(row, form, Rat(-1));
                rows.add(std::move(row), Rat((long)(j - i) * r));
            }
    }
    for (const auto& [slope, form] : lin.upper) {
        for (int j = 0; j < n; ++j)
            for (int k = j; k < n; ++k) {
                // b_j <= slope*a_j + form.cls - (k-j)(r + a_j) + a_{j+1}+...+a_k
                QVec row = blank();
                row[n + j] = Rat(-1);
                row[j] = slope - Rat((long)(k - j));
                for (int t = j + 1; t <= k; ++t) row[t] += Rat(1);
                cls(row, form, Rat(1));
                rows.add(std::move(row), Rat((long)(k - j) * r));
            }
    }
    return rows;
}

}  // namespace

Rat mu_slope(const SurfacePreset& surface, const QVec& coeffs, int n) {
    if (n < 1) throw std::invalid_argument("mu_slope: n must be >= 1");
    auto lin = surface.linear_polygon();
    // Collapse the class coefficients onto a single scale variable t.
    SurfacePreset::LinearPolygon scaled;
    scaled.cap_form = {dot(lin.cap_form, coeffs)};
    for (const auto& [slope, form] : lin.lower) scaled.lower.push_back({slope, {dot(form, coeffs)}});
    for (const auto& [slope, form] : lin.upper) scaled.upper.push_back({slope, {dot(form, coeffs)}});

    RowSet rows = incidence_rows(scaled, n, 1, 1);
    {
        QVec row(2 * n + 1);
        row[2 * n] = Rat(1);
        rows.add(std::move(row), Rat(0));  // t >= 0
    }
    QVec c(2 * n + 1);
    c[2 * n] = Rat(1);
    LPResult res = lp_solve(rows.matrix(), rows.offsets, c);
    if (res.status != LPStatus::Optimal)
        throw std::logic_error("mu_slope: incidence system has no optimum");
    return res.value;
}

std::vector<Rat> mu_slope_sweep(const SurfacePreset& surface, const QVec& coeffs, int n_min,
                                int n_max) {
    if (n_max < n_min) return {};
    std::vector<Rat> out(n_max - n_min + 1);
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, out.size());
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (int i = next.fetch_add(1); i < (int)out.size(); i = next.fetch_add(1))
                    out[i] = mu_slope(surface, coeffs, n_min + i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

FacetVerdict facet_check(const SurfacePreset& surface, int n, const QVec& f) {
    if (n < 1) throw std::invalid_argument("facet_check: n must be >= 1");
    const int rho = surface.picard_rank();
    if ((int)f.size() != rho + 1)
        throw std::invalid_argument("facet_check: expected " + std::to_string(rho + 1) +
                                    " facet coefficients");
    RowSet rows = incidence_rows(surface.linear_polygon(), n, 1, rho);
    QVec c(2 * n + rho);
    for (int k = 0; k < rho; ++k) c[2 * n + k] = f[k];
    LPResult res = lp_solve(rows.matrix(), rows.offsets, c);
    if (res.status != LPStatus::Optimal)
        throw std::logic_error("facet_check: cone section LP has no optimum");
    Rat minval = res.value - f[rho];
    return {minval.sign() >= 0, minval.is_zero(), minval};
}

}  // namespace nok
