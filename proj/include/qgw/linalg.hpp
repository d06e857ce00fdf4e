#pragma once
#include <optional>
#include <vector>

#include "qgw/cyclo.hpp"

namespace qgw {

using Vec = std::vector<CycNum>;

// Dense row-major matrix over CycNum.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * cols) {}
    static Mat identity(int n);
    static Mat from_rows(const std::vector<Vec>& rows, int cols);
    static Mat from_cols(const std::vector<Vec>& cols, int rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    CycNum& operator()(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
    const CycNum& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }
    Vec row(int i) const;
    Vec col(int j) const;

    Mat operator*(const Mat& o) const;
    Vec operator*(const Vec& v) const;
    Mat transpose() const;
    Mat conj_transpose() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

private:
    int r_ = 0, c_ = 0;
    std::vector<CycNum> d_;
};

Vec zero_vec(int n);
Vec unit_vec(int n, int i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const CycNum& s);
Vec conj(const Vec& a);
void axpy(Vec& y, const CycNum& a, const Vec& x);  // y += a x

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& m);
int rank(Mat m);
// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(Mat m);
// One solution of m x = b, if any.
std::optional<Vec> solve(const Mat& m, const Vec& b);
std::optional<Mat> inverse(const Mat& m);
CycNum det(Mat m);

// Incrementally built subspace kept in reduced row echelon form.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : n_(ambient) {}
    Subspace(int ambient, const std::vector<Vec>& gens);

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    // Returns true if v enlarged the space.
    bool add(const Vec& v);
    bool contains(const Vec& v) const;
    Vec reduce(const Vec& v) const;
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return piv_; }
    // Coordinates of v in the echelon basis (v must lie in the space).
    Vec coords(const Vec& v) const;
    bool operator==(const Subspace& o) const { return rows_ == o.rows_; }
    bool operator<(const Subspace& o) const;
    bool contains_space(const Subspace& o) const;

private:
    int n_ = 0;
    std::vector<Vec> rows_;
    std::vector<int> piv_;
};

// Smallest eigenvalue of a Hermitian matrix via the real symmetric 2n x 2n
// embedding and cyclic Jacobi at the given precision.
Real min_eigenvalue_hermitian(const Mat& h, unsigned bits);
bool is_hermitian(const Mat& h);

} // namespace qgw
