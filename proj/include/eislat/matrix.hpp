// Dense vectors and matrices over the exact rings, plus field linear algebra.
#pragma once

#include "eislat/ring.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace eislat {

template <class R>
using Vec = std::vector<R>;

using EVec = Vec<Eint>;
using CVec = Vec<Cint>;

template <class R>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<R> d;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), d(r * c, R(0)) {}

    R& operator()(std::size_t i, std::size_t j) { return d[i * cols + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return d[i * cols + j]; }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }
    static Mat from_rows(const std::vector<Vec<R>>& rs) {
        if (rs.empty()) return Mat();
        Mat m(rs.size(), rs[0].size());
        for (std::size_t i = 0; i < rs.size(); ++i) {
            if (rs[i].size() != m.cols) throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rs[i][j];
        }
        return m;
    }
    static Mat from_cols(const std::vector<Vec<R>>& cs) { return from_rows(cs).transpose(); }

    Vec<R> row(std::size_t i) const { return Vec<R>(d.begin() + i * cols, d.begin() + (i + 1) * cols); }
    Vec<R> col(std::size_t j) const {
        Vec<R> v(rows);
        for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
        return v;
    }
    Mat transpose() const {
        Mat t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    Mat adjoint() const {  // conjugate transpose
        Mat t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j).conj();
        return t;
    }
    bool is_identity() const {
        if (rows != cols) return false;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if ((*this)(i, j) != R(i == j ? 1 : 0)) return false;
        return true;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.d == y.d;
    }
};

using EMat = Mat<Eint>;
using RMat = Mat<Erat>;

template <class R>
Mat<R> operator*(const Mat<R>& x, const Mat<R>& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix product: dimension mismatch");
    Mat<R> z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const R& a = x(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z(i, j) += a * y(k, j);
        }
    return z;
}

template <class R>
Vec<R> operator*(const Mat<R>& m, const Vec<R>& v) {
    if (m.cols != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    Vec<R> out(m.rows, R(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!v[j].is_zero()) out[i] += m(i, j) * v[j];
    return out;
}

template <class R>
Mat<R> operator+(Mat<R> x, const Mat<R>& y) {
    for (std::size_t i = 0; i < x.d.size(); ++i) x.d[i] += y.d[i];
    return x;
}

template <class R>
Mat<R> operator-(Mat<R> x, const Mat<R>& y) {
    for (std::size_t i = 0; i < x.d.size(); ++i) x.d[i] -= y.d[i];
    return x;
}

template <class R>
Mat<R> scale(const R& s, Mat<R> m) {
    for (auto& x : m.d) x = s * x;
    return m;
}

template <class R>
Vec<R> operator+(Vec<R> x, const Vec<R>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
}

template <class R>
Vec<R> operator-(Vec<R> x, const Vec<R>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
    return x;
}

template <class R>
Vec<R> scale(const R& s, Vec<R> v) {
    for (auto& x : v) x = s * x;
    return v;
}

template <class R>
Mat<R> power(Mat<R> m, unsigned long n) {
    Mat<R> acc = Mat<R>::identity(m.rows);
    while (n) {
        if (n & 1) acc = acc * m;
        n >>= 1;
        if (n) m = m * m;
    }
    return acc;
}

template <class R>
bool is_zero(const Vec<R>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// conj(u)^T G v
template <class R>
R hermitian_ip(const Vec<R>& u, const Vec<R>& v, const Mat<R>& g) {
    if (u.size() != g.rows || v.size() != g.cols) throw std::invalid_argument("hermitian_ip: dimension mismatch");
    R s(0);
    for (std::size_t i = 0; i < g.rows; ++i) {
        if (u[i].is_zero()) continue;
        R t(0);
        for (std::size_t j = 0; j < g.cols; ++j)
            if (!g(i, j).is_zero() && !v[j].is_zero()) t += g(i, j) * v[j];
        s += u[i].conj() * t;
    }
    return s;
}

template <class R>
Mat<R> gram(const std::vector<Vec<R>>& rows, const Mat<R>& g) {
    Mat<R> out(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) out(i, j) = hermitian_ip(rows[i], rows[j], g);
    return out;
}

RMat to_rat(const EMat& m);
std::optional<EMat> to_int(const RMat& m);
EVec to_int(const Vec<Erat>& v);  // throws if not integral
Vec<Erat> to_rat(const EVec& v);
Mat<Cint> embed(const EMat& m);
CVec embed(const EVec& v);

// Linear algebra over Q(w).
Erat det(RMat m);
std::size_t rank(RMat m);
std::optional<RMat> inverse(const RMat& m);
// Solve A x = b for square nonsingular A.
std::optional<Vec<Erat>> solve(const RMat& a, const Vec<Erat>& b);
// Indices of a maximal linearly independent subset of the vectors, greedy in order.
std::vector<std::size_t> independent_subset(const std::vector<Vec<Erat>>& vs);
// Linear map sending src[k] to dst[k]; determined by an independent subset of
// src spanning the whole space, and checked on every pair. nullopt if inconsistent.
std::optional<RMat> map_from_images(const std::vector<Vec<Erat>>& src, const std::vector<Vec<Erat>>& dst);

// Characteristic polynomial det(xI - M), coefficients low degree first.
std::vector<Erat> charpoly(const RMat& m);

// Nearest-coordinate quotient: |x - q p| < |p|.
Eint round_div(const Eint& x, const Eint& p);

// Row-style Hermite reduction over the Euclidean ring Z[w]: returns a basis of
// the Z[w]-row-module spanned by the rows, in echelon form.
std::vector<EVec> row_basis(std::vector<EVec> rows);
// Z[w]-basis of {x : x M = 0} for an integer matrix M (rows of M indexed by x).
std::vector<EVec> left_kernel(const EMat& m);

}  // namespace eislat
