#include "qgw/linalg.hpp"

#include <algorithm>

#include "qgw/error.hpp"

namespace qgw {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = CycNum(1);
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
    Mat m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.r_; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, int rows) {
    Mat m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.c_; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

Vec Mat::row(int i) const { return Vec(d_.begin() + static_cast<long>(i) * c_, d_.begin() + static_cast<long>(i + 1) * c_); }

Vec Mat::col(int j) const {
    Vec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_) throw Error("ShapeError", "linalg", "matrix product");
    Mat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const CycNum& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) m(i, j).add_mul(a, o(k, j));
        }
    return m;
}

Vec Mat::operator*(const Vec& v) const {
    Vec out(r_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            if (v[k].is_zero()) continue;
            out[i].add_mul((*this)(i, k), v[k]);
        }
    return out;
}

Mat Mat::transpose() const {
    Mat m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Mat Mat::conj_transpose() const {
    Mat m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j).conj();
    return m;
}

bool Mat::operator==(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (size_t i = 0; i < d_.size(); ++i)
        if (d_[i] != o.d_[i]) return false;
    return true;
}

Vec zero_vec(int n) { return Vec(n); }
Vec unit_vec(int n, int i) {
    Vec v(n);
    v[i] = CycNum(1);
    return v;
}
bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const CycNum& x) { return x.is_zero(); });
}
Vec add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i)
        if (!b[i].is_zero()) r[i] += b[i];
    return r;
}
Vec sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i)
        if (!b[i].is_zero()) r[i] -= b[i];
    return r;
}
Vec scale(const Vec& a, const CycNum& s) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) r[i] = a[i] * s;
    return r;
}
Vec conj(const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].conj();
    return r;
}
void axpy(Vec& y, const CycNum& a, const Vec& x) {
    if (a.is_zero()) return;
    for (size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i].add_mul(a, x[i]);
}

std::vector<int> rref(Mat& m) {
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        CycNum f = m(row, col).inv();
        for (int j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero()) m(row, j) *= f;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            CycNum g = -m(i, col);
            for (int j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j).add_mul(g, m(row, j));
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::vector<Vec> nullspace(Mat m) {
    auto piv = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (int p : piv) is_piv[p] = true;
    std::vector<Vec> out;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        Vec v(m.cols());
        v[f] = CycNum(1);
        for (size_t r = 0; r < piv.size(); ++r)
            if (!m(static_cast<int>(r), f).is_zero()) v[piv[r]] = -m(static_cast<int>(r), f);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    Mat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
    Vec x(a.cols());
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), a.cols());
    return x;
}

std::optional<Mat> inverse(const Mat& a) {
    int n = a.rows();
    if (n != a.cols()) return std::nullopt;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = CycNum(1);
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

CycNum det(Mat m) {
    int n = m.rows();
    CycNum d(1);
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (p < n && m(p, col).is_zero()) ++p;
        if (p == n) return CycNum(0);
        if (p != col) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
            d = -d;
        }
        d *= m(col, col);
        CycNum f = m(col, col).inv();
        for (int i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            CycNum g = -(m(i, col) * f);
            for (int j = col; j < n; ++j)
                if (!m(col, j).is_zero()) m(i, j).add_mul(g, m(col, j));
        }
    }
    return d;
}

Subspace::Subspace(int ambient, const std::vector<Vec>& gens) : n_(ambient) {
    for (const auto& g : gens) add(g);
}

Vec Subspace::reduce(const Vec& v) const {
    Vec r = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        const CycNum& c = r[piv_[i]];
        if (c.is_zero()) continue;
        CycNum g = -c;
        axpy(r, g, rows_[i]);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::add(const Vec& v) {
    Vec r = reduce(v);
    int p = -1;
    for (int i = 0; i < n_; ++i)
        if (!r[i].is_zero()) {
            p = i;
            break;
        }
    if (p < 0) return false;
    CycNum f = r[p].inv();
    for (auto& x : r)
        if (!x.is_zero()) x *= f;
    for (auto& row : rows_) {
        if (row[p].is_zero()) continue;
        CycNum g = -row[p];
        axpy(row, g, r);
    }
    auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
    piv_.insert(piv_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
}

Vec Subspace::coords(const Vec& v) const {
    Vec c(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) c[i] = v[piv_[i]];
    return c;
}

bool Subspace::operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    if (piv_ != o.piv_) return piv_ < o.piv_;
    for (size_t i = 0; i < rows_.size(); ++i)
        for (int j = 0; j < n_; ++j) {
            if (rows_[i][j] == o.rows_[i][j]) continue;
            return rows_[i][j].str() < o.rows_[i][j].str();
        }
    return false;
}

bool Subspace::contains_space(const Subspace& o) const {
    return std::all_of(o.rows_.begin(), o.rows_.end(), [&](const Vec& v) { return contains(v); });
}

bool is_hermitian(const Mat& h) {
    if (h.rows() != h.cols()) return false;
    for (int i = 0; i < h.rows(); ++i)
        for (int j = i; j < h.cols(); ++j)
            if (h(i, j) != h(j, i).conj()) return false;
    return true;
}

Real min_eigenvalue_hermitian(const Mat& h, unsigned bits) {
    int n = h.rows();
    if (n == 0) return Real(0);
    PrecisionGuard g(bits);
    int m = 2 * n;
    // [[A, -B], [B, A]] for H = A + iB
    std::vector<Real> a(static_cast<size_t>(m) * m, Real(0));
    auto at = [&](int i, int j) -> Real& { return a[static_cast<size_t>(i) * m + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (h(i, j).is_zero()) continue;
            ComplexApprox z = cyc_embed(h(i, j), bits);
            at(i, j) = z.re;
            at(i + n, j + n) = z.re;
            at(i, j + n) = -z.im;
            at(i + n, j) = z.im;
        }
    Real eps = pow(Real(2), -static_cast<long>(bits) + 8);
    for (int sweep = 0; sweep < 100; ++sweep) {
        Real off = 0, total = 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                Real s = at(i, j) * at(i, j);
                total += s;
                if (i != j) off += s;
            }
        if (off <= eps * eps * (total + 1)) break;
        for (int p = 0; p < m - 1; ++p)
            for (int q = p + 1; q < m; ++q) {
                if (at(p, q) == 0) continue;
                Real theta = (at(q, q) - at(p, p)) / (2 * at(p, q));
                Real t = (theta >= 0 ? Real(1) : Real(-1)) / (abs(theta) + sqrt(theta * theta + 1));
                Real c = 1 / sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < m; ++k) {
                    Real akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < m; ++k) {
                    Real apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    Real best = at(0, 0);
    for (int i = 1; i < m; ++i)
        if (at(i, i) < best) best = at(i, i);
    return best;
}

} // namespace qgw
