#include "strangedual/vec.hpp"

#include <sstream>

namespace strangedual {

std::string to_string(const Vec3Q& v) {
    std::ostringstream os;
    os << "(" << v[0].str() << ", " << v[1].str() << ", " << v[2].str() << ")";
    return os.str();
}

Vec3Q primitive(const Vec3Q& v) {
    if (v.is_zero()) fail("ZeroVector", "primitive of zero vector");
    Int l = 1;
    for (int i = 0; i < 3; ++i) l = ilcm(l, den(v[i]));
    Int g = 0;
    std::array<Int, 3> w;
    for (int i = 0; i < 3; ++i) {
        w[static_cast<size_t>(i)] = num(v[i]) * (l / den(v[i]));
        g = igcd(g, w[static_cast<size_t>(i)]);
    }
    return {Rat(w[0] / g), Rat(w[1] / g), Rat(w[2] / g)};
}

namespace {

// Gaussian elimination on a copy; returns rank.
int rank_of(std::vector<Vec3Q> rows) {
    int r = 0;
    const int m = static_cast<int>(rows.size());
    for (int col = 0; col < 3 && r < m; ++col) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (rows[static_cast<size_t>(i)][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(piv)]);
        for (int i = 0; i < m; ++i) {
            if (i == r || rows[static_cast<size_t>(i)][col] == 0) continue;
            Rat f = rows[static_cast<size_t>(i)][col] / rows[static_cast<size_t>(r)][col];
            rows[static_cast<size_t>(i)] = rows[static_cast<size_t>(i)] - f * rows[static_cast<size_t>(r)];
        }
        ++r;
    }
    return r;
}

} // namespace

int linear_rank(const std::vector<Vec3Q>& vecs) { return rank_of(vecs); }

int affine_rank(const std::vector<Vec3Q>& points) {
    if (points.empty()) return -1;
    std::vector<Vec3Q> difs;
    for (size_t i = 1; i < points.size(); ++i) difs.push_back(points[i] - points[0]);
    return rank_of(std::move(difs));
}

bool in_linear_span(const Vec3Q& v, const std::vector<Vec3Q>& basis) {
    if (v.is_zero()) return true;
    std::vector<Vec3Q> ext = basis;
    int r = rank_of(ext);
    ext.push_back(v);
    return rank_of(ext) == r;
}

Rat Matrix3Q::det() const { return dot(rows[0], cross(rows[1], rows[2])); }

Matrix3Q Matrix3Q::transpose() const {
    return {{at(0, 0), at(1, 0), at(2, 0)},
            {at(0, 1), at(1, 1), at(2, 1)},
            {at(0, 2), at(1, 2), at(2, 2)}};
}

Matrix3Q Matrix3Q::inverse() const {
    Rat d = det();
    if (d == 0) fail("SingularMatrix", "inverse of singular matrix");
    auto cof = [&](int i, int j) {
        int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
        return at(i1, j1) * at(i2, j2) - at(i1, j2) * at(i2, j1);
    };
    Matrix3Q inv;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            inv.rows[static_cast<size_t>(i)][j] = cof(j, i) / d;
    return inv;
}

Matrix3Q Matrix3Q::operator*(const Matrix3Q& o) const {
    Matrix3Q r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat s = 0;
            for (int k = 0; k < 3; ++k) s += at(i, k) * o.at(k, j);
            r.rows[static_cast<size_t>(i)][j] = s;
        }
    return r;
}

std::string to_string(const Matrix3Q& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 3; ++i) {
        os << "[" << m.at(i, 0).str() << ", " << m.at(i, 1).str() << ", " << m.at(i, 2).str() << "]";
        if (i < 2) os << ", ";
    }
    os << "]";
    return os.str();
}

} // namespace strangedual
