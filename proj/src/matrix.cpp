#include "eislat/matrix.hpp"

#include <algorithm>

namespace eislat {

RMat to_rat(const EMat& m) {
    RMat r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.d.size(); ++i) r.d[i] = to_rat(m.d[i]);
    return r;
}

std::optional<EMat> to_int(const RMat& m) {
    EMat r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.d.size(); ++i) {
        if (!is_integral(m.d[i])) return std::nullopt;
        r.d[i] = to_int(m.d[i]);
    }
    return r;
}

EVec to_int(const Vec<Erat>& v) {
    EVec r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(to_int(x));
    return r;
}

Vec<Erat> to_rat(const EVec& v) {
    Vec<Erat> r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(to_rat(x));
    return r;
}

Mat<Cint> embed(const EMat& m) {
    Mat<Cint> r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.d.size(); ++i) r.d[i] = embed(m.d[i]);
    return r;
}

CVec embed(const EVec& v) {
    CVec r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(embed(x));
    return r;
}

namespace {

// Gauss-Jordan to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RMat& m, Erat* det_acc = nullptr) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m(p, c).is_zero()) ++p;
        if (p == m.rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
            if (det_acc) *det_acc = -*det_acc;
        }
        Erat inv = inverse(m(r, c));
        if (det_acc) *det_acc = *det_acc * m(r, c);
        for (std::size_t j = c; j < m.cols; ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Erat f = m(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

}  // namespace

Erat det(RMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
    Erat acc(1);
    auto piv = rref(m, &acc);
    if (piv.size() < m.rows) return Erat(0);
    return acc;
}

std::size_t rank(RMat m) { return rref(m).size(); }

std::optional<RMat> inverse(const RMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse: matrix not square");
    std::size_t n = m.rows;
    RMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Erat(1);
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    RMat out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

std::optional<Vec<Erat>> solve(const RMat& a, const Vec<Erat>& b) {
    std::size_t n = a.rows;
    if (a.cols != n || b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
    RMat aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Vec<Erat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

std::vector<std::size_t> independent_subset(const std::vector<Vec<Erat>>& vs) {
    std::vector<std::size_t> keep;
    std::vector<Vec<Erat>> basis;  // echelon rows with pivots
    std::vector<std::size_t> pivots;
    for (std::size_t k = 0; k < vs.size(); ++k) {
        Vec<Erat> v = vs[k];
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (v[pivots[i]].is_zero()) continue;
            Erat f = v[pivots[i]];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[i][j];
        }
        std::size_t p = 0;
        while (p < v.size() && v[p].is_zero()) ++p;
        if (p == v.size()) continue;
        Erat inv = inverse(v[p]);
        for (auto& x : v) x = x * inv;
        basis.push_back(std::move(v));
        pivots.push_back(p);
        keep.push_back(k);
    }
    return keep;
}

std::optional<RMat> map_from_images(const std::vector<Vec<Erat>>& src, const std::vector<Vec<Erat>>& dst) {
    if (src.empty() || src.size() != dst.size()) throw std::invalid_argument("map_from_images: size mismatch");
    std::size_t n = src[0].size();
    auto idx = independent_subset(src);
    if (idx.size() != n) return std::nullopt;
    std::vector<Vec<Erat>> s, t;
    for (auto k : idx) {
        s.push_back(src[k]);
        t.push_back(dst[k]);
    }
    // M S = T with S, T having the chosen vectors as columns
    auto sinv = inverse(RMat::from_cols(s));
    if (!sinv) return std::nullopt;
    RMat m = RMat::from_cols(t) * *sinv;
    for (std::size_t k = 0; k < src.size(); ++k)
        if (m * src[k] != dst[k]) return std::nullopt;
    return m;
}

std::vector<Erat> charpoly(const RMat& a) {
    // Faddeev-LeVerrier; fine in characteristic zero
    std::size_t n = a.rows;
    std::vector<Erat> c(n + 1);
    c[n] = Erat(1);
    RMat mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        RMat t = a * mk;
        for (std::size_t i = 0; i < n; ++i) t(i, i) += c[n - k + 1];
        mk = t;
        RMat am = a * mk;
        Erat tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -(tr * Erat(Rat(1, static_cast<long>(k)), Rat(0)));
    }
    return c;
}

// Nearest-coordinate quotient: |x - q p| < |p|.
Eint round_div(const Eint& x, const Eint& p) {
    Eint t = x * p.conj();
    Int n = p.norm();
    auto rnd = [&](const Int& v) {
        Int r;
        Int num = 2 * v + n, den = 2 * n;
        mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return r;
    };
    return Eint(rnd(t.a), rnd(t.b));
}

namespace {

void axpy(EVec& y, const Eint& q, const EVec& x) {
    for (std::size_t j = 0; j < y.size(); ++j)
        if (!x[j].is_zero()) y[j] -= q * x[j];
}

}  // namespace

std::vector<EVec> row_basis(std::vector<EVec> rows) {
    if (rows.empty()) return rows;
    std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        while (true) {
            // smallest nonzero entry in column c at or below r
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c].is_zero()) continue;
                if (best == rows.size() || rows[i][c].norm() < rows[best][c].norm()) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c].is_zero()) continue;
                axpy(rows[i], round_div(rows[i][c], rows[r][c]), rows[r]);
                if (!rows[i][c].is_zero()) clean = false;
            }
            if (clean) {
                ++r;
                break;
            }
        }
    }
    rows.resize(r);
    return rows;
}

std::vector<EVec> left_kernel(const EMat& m) {
    std::size_t n = m.rows, k = m.cols;
    std::vector<EVec> aug(n, EVec(k + n, Eint(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = m(i, j);
        aug[i][k + i] = Eint(1);
    }
    // echelonize on the first k columns only; unimodular row operations
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < n; ++c) {
        while (true) {
            std::size_t best = n;
            for (std::size_t i = r; i < n; ++i) {
                if (aug[i][c].is_zero()) continue;
                if (best == n || aug[i][c].norm() < aug[best][c].norm()) best = i;
            }
            if (best == n) break;
            std::swap(aug[r], aug[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (aug[i][c].is_zero()) continue;
                axpy(aug[i], round_div(aug[i][c], aug[r][c]), aug[r]);
                if (!aug[i][c].is_zero()) clean = false;
            }
            if (clean) {
                ++r;
                break;
            }
        }
    }
    std::vector<EVec> ker;
    for (std::size_t i = r; i < n; ++i) ker.emplace_back(aug[i].begin() + k, aug[i].end());
    return ker;
}

}  // namespace eislat
