#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nok {

/// Exact rational number. Always stored reduced with positive denominator;
/// equality and comparison are exact. Backed by GMP.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(int n) : v_(n) {}
    Rat(long num, long den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
    static Rat parse(const std::string& s);

    /// Renders as "p/q", or "p" when the denominator is 1.
    std::string str() const;

    double approx() const { return v_.get_d(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Floor as a machine integer. Throws if out of range of long.
    long floor_long() const;

    const mpq_class& raw() const { return v_; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

using QVec = std::vector<Rat>;

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator*(const Rat& t, const QVec& a);
Rat dot(const QVec& a, const QVec& b);

/// Dense rational matrix with fixed shape.
class QMat {
public:
    QMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return data_[i * cols_ + j]; }
    const Rat& at(int i, int j) const { return data_[i * cols_ + j]; }

    QVec apply(const QVec& x) const;

private:
    int rows_, cols_;
    std::vector<Rat> data_;
};

/// Determinant of a square matrix.
Rat determinant(QMat M);

/// The unique positive multiple of v whose entries are coprime integers.
/// The zero vector is returned unchanged.
QVec primitive_scale(const QVec& v);

/// Exact solution of M x = v for square M; empty when M is singular.
std::optional<QVec> solve_linear(QMat M, QVec v);

/// Rank of the matrix over the rationals.
int rank(QMat M);

}  // namespace nok
