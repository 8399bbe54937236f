#include "nok/rational.hpp"

#include <climits>

namespace nok {

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(mpq_class(mpz_class(s)));
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("Rat::parse: zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Rat(std::move(q));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rat::parse: malformed rational '" + s + "'");
    }
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rat::floor_long() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    if (!f.fits_slong_p()) throw std::overflow_error("Rat::floor_long: out of range");
    return f.get_si();
}

QVec operator+(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("QVec: shape mismatch");
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec operator-(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("QVec: shape mismatch");
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec operator*(const Rat& t, const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
    return r;
}

Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("QVec: shape mismatch");
    Rat s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec QMat::apply(const QVec& x) const {
    if ((int)x.size() != cols_) throw std::invalid_argument("QMat: shape mismatch");
    QVec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * x[j];
    return r;
}

Rat determinant(QMat M) {
    const int n = M.rows();
    if (M.cols() != n) throw std::invalid_argument("determinant: matrix not square");
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!M.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(M.at(piv, j), M.at(col, j));
            det = -det;
        }
        det *= M.at(col, col);
        Rat inv = Rat(1) / M.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (M.at(i, col).is_zero()) continue;
            Rat f = M.at(i, col) * inv;
            for (int j = col; j < n; ++j) M.at(i, j) -= f * M.at(col, j);
        }
    }
    return det;
}

QVec primitive_scale(const QVec& v) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& x : v) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.raw().get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.raw().get_den().get_mpz_t());
    }
    if (num_gcd == 0) return v;
    Rat scale(mpq_class(den_lcm, num_gcd));
    return scale * v;
}

std::optional<QVec> solve_linear(QMat M, QVec v) {
    const int n = M.rows();
    if (M.cols() != n || (int)v.size() != n)
        throw std::invalid_argument("solve_linear: M must be square and conform to v");
    // Gaussian elimination with exact pivoting.
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!M.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(M.at(piv, j), M.at(col, j));
            std::swap(v[piv], v[col]);
        }
        Rat inv = Rat(1) / M.at(col, col);
        for (int j = col; j < n; ++j) M.at(col, j) *= inv;
        v[col] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || M.at(i, col).is_zero()) continue;
            Rat f = M.at(i, col);
            for (int j = col; j < n; ++j) M.at(i, j) -= f * M.at(col, j);
            v[i] -= f * v[col];
        }
    }
    return v;
}

int rank(QMat M) {
    int r = 0;
    const int rows = M.rows(), cols = M.cols();
    for (int col = 0; col < cols && r < rows; ++col) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!M.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(M.at(piv, j), M.at(r, j));
        Rat inv = Rat(1) / M.at(r, col);
        for (int j = col; j < cols; ++j) M.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || M.at(i, col).is_zero()) continue;
            Rat f = M.at(i, col);
            for (int j = col; j < cols; ++j) M.at(i, j) -= f * M.at(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace nok
