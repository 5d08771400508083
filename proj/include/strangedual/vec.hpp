#pragma once

#include <array>
#include <string>
#include <vector>

#include "strangedual/rational.hpp"

namespace strangedual {

// Point/vector of R^3 with exact rational coordinates.
struct Vec3Q {
    std::array<Rat, 3> c{};

    Vec3Q() = default;
    Vec3Q(Rat x, Rat y, Rat z) : c{std::move(x), std::move(y), std::move(z)} {}

    const Rat& operator[](int i) const { return c[static_cast<size_t>(i)]; }
    Rat& operator[](int i) { return c[static_cast<size_t>(i)]; }

    friend Vec3Q operator+(const Vec3Q& a, const Vec3Q& b) {
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
    }
    friend Vec3Q operator-(const Vec3Q& a, const Vec3Q& b) {
        return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    }
    friend Vec3Q operator-(const Vec3Q& a) { return {-a[0], -a[1], -a[2]}; }
    friend Vec3Q operator*(const Rat& s, const Vec3Q& a) {
        return {s * a[0], s * a[1], s * a[2]};
    }
    friend bool operator==(const Vec3Q& a, const Vec3Q& b) { return a.c == b.c; }
    friend bool operator!=(const Vec3Q& a, const Vec3Q& b) { return a.c != b.c; }
    // lexicographic; the canonical vertex order everywhere
    friend bool operator<(const Vec3Q& a, const Vec3Q& b) { return a.c < b.c; }

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
    bool is_integral() const {
        return is_integer(c[0]) && is_integer(c[1]) && is_integer(c[2]);
    }
};

inline Rat dot(const Vec3Q& a, const Vec3Q& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3Q cross(const Vec3Q& a, const Vec3Q& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

std::string to_string(const Vec3Q& v);

// Scale a nonzero rational vector to the integral vector with coprime
// entries, preserving direction.
Vec3Q primitive(const Vec3Q& v);

// Rank of the linear span.
int linear_rank(const std::vector<Vec3Q>& vecs);

// Rank of the affine hull (dimension of the polytope spanned by points).
int affine_rank(const std::vector<Vec3Q>& points);

bool in_linear_span(const Vec3Q& v, const std::vector<Vec3Q>& basis);

// 3x3 matrix, rows of rationals.
struct Matrix3Q {
    std::array<Vec3Q, 3> rows{};

    Matrix3Q() = default;
    Matrix3Q(Vec3Q r0, Vec3Q r1, Vec3Q r2)
        : rows{std::move(r0), std::move(r1), std::move(r2)} {}

    static Matrix3Q identity() {
        return {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    }
    static Matrix3Q from_columns(const Vec3Q& c0, const Vec3Q& c1, const Vec3Q& c2) {
        return {{c0[0], c1[0], c2[0]}, {c0[1], c1[1], c2[1]}, {c0[2], c1[2], c2[2]}};
    }

    const Rat& at(int i, int j) const { return rows[static_cast<size_t>(i)][j]; }

    Rat det() const;
    Matrix3Q transpose() const;
    Matrix3Q inverse() const; // throws SingularMatrix

    // column-vector action A*v
    Vec3Q operator*(const Vec3Q& v) const {
        return {dot(rows[0], v), dot(rows[1], v), dot(rows[2], v)};
    }
    Matrix3Q operator*(const Matrix3Q& o) const;

    bool is_integral() const {
        return rows[0].is_integral() && rows[1].is_integral() && rows[2].is_integral();
    }
    friend bool operator==(const Matrix3Q& a, const Matrix3Q& b) { return a.rows == b.rows; }
    friend bool operator!=(const Matrix3Q& a, const Matrix3Q& b) { return a.rows != b.rows; }
};

// row-vector action q*A (points as rows; used for the row-of-A coordinates)
inline Vec3Q row_mul(const Vec3Q& q, const Matrix3Q& a) {
    Vec3Q r;
    for (int j = 0; j < 3; ++j)
        r[j] = q[0] * a.at(0, j) + q[1] * a.at(1, j) + q[2] * a.at(2, j);
    return r;
}

std::string to_string(const Matrix3Q& m);

} // namespace strangedual
