#pragma once
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qgw/linalg.hpp"

namespace qgw {

struct MultTerm {
    int k;
    CycNum c;
};
struct ComultTerm {
    int j, k;
    CycNum c;
};

// Finite-dimensional Hopf *-algebra given by structure constants.
struct HopfAlgebraData {
    int dim = 0;
    std::vector<std::string> labels;
    int cyc_order = 1;
    std::vector<std::vector<MultTerm>> mult;      // index i*dim+j: b_i b_j = sum c b_k
    std::vector<std::vector<ComultTerm>> comult;  // index i: Δ b_i = sum c b_j ⊗ b_k
    Vec unit, counit;
    Mat antipode;  // column i is S(b_i)
    Mat star;      // column i is b_i^*; extended conjugate-linearly

    const std::vector<MultTerm>& mult_of(int i, int j) const { return mult[static_cast<size_t>(i) * dim + j]; }
    Vec basis(int i) const { return unit_vec(dim, i); }
    Vec product(const Vec& a, const Vec& b) const;
    Vec basis_product(int i, int j) const;
    Mat coproduct(const Vec& a) const;  // n x n tensor coefficients
    Vec apply_star(const Vec& a) const;
    Vec apply_antipode(const Vec& a) const { return antipode * a; }
    CycNum counit_of(const Vec& a) const;
    bool is_commutative() const;
    bool is_cocommutative() const;
    // Sets entry (i,j) of the multiplication table from a dense vector.
    void set_product(int i, int j, const Vec& v);
};

using HopfPtr = std::shared_ptr<const HopfAlgebraData>;

struct AxiomResult {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct AxiomReport {
    std::vector<AxiomResult> items;
    bool ok() const;
    const AxiomResult* find(const std::string& name) const;
};

// Dense tensor helpers: element of H⊗H as n x n coefficient matrix.
Mat tensor_product_elems(const HopfAlgebraData& h, const Mat& x, const Mat& y);

AxiomReport verify_hopf(const HopfAlgebraData& h);
AxiomResult verify_star(const HopfAlgebraData& h);

struct Functional {
    HopfPtr parent;
    Vec coeffs;
    CycNum operator()(const Vec& x) const;
};

Functional convolve(const Functional& a, const Functional& b);
Functional counit_functional(const HopfPtr& h);

struct HaarResult {
    Functional h;
    bool positive = false;
    bool faithful = false;
    bool hermitian = false;
    Real min_eigenvalue;
};

// Throws NotCQG when the invariance system has no unique normalized solution.
HaarResult haar_state(const HopfPtr& h, unsigned bits = 128);
bool is_kac(const HopfPtr& h);

struct CqgCertificate {
    AxiomReport hopf;
    bool haar_exists = false;
    bool haar_positive = false;
    bool haar_faithful = false;
    bool star_compatible = false;
    bool kac = false;
    Real min_eigenvalue;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

CqgCertificate check_cqg(const HopfPtr& h, unsigned bits = 128);

// Gram matrix [φ(b_i^* b_j)].
Mat gram_matrix(const HopfAlgebraData& h, const Vec& phi);

// Convolution inverse of the identity, solved as a linear system.
std::optional<Mat> solve_antipode(const HopfAlgebraData& h);

// 2^-64 threshold used for every positivity decision.
Real positivity_threshold(unsigned bits);

} // namespace qgw
