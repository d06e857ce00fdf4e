#pragma once
#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qgw {

using Real = boost::multiprecision::mpfr_float;

struct CycCtx;

// Element of Q(zeta_N), power basis modulo the N-th cyclotomic polynomial.
class CycNum {
public:
    CycNum();
    CycNum(long n);  // NOLINT: rationals convert implicitly
    CycNum(long n, long d);
    explicit CycNum(const mpq_class& q);

    static CycNum zeta(int order, long power = 1);
    static CycNum from_coeffs(int order, std::vector<mpq_class> coeffs);

    int order() const;
    const std::vector<mpq_class>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    const mpq_class& rational() const { return c_[0]; }

    CycNum promote(int order) const;
    // Back to a smaller order when the value lives there; throws otherwise.
    CycNum demote(int order) const;
    bool representable_at(int order) const;

    CycNum conj() const;
    CycNum inv() const;

    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator/=(const CycNum& o) { return *this *= o.inv(); }
    CycNum operator-() const;

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    // a += b*c without temporaries when orders agree
    void add_mul(const CycNum& b, const CycNum& c);

    std::string str() const;

private:
    const CycCtx* ctx_;
    std::vector<mpq_class> c_;
    CycNum(const CycCtx* ctx, std::vector<mpq_class> c) : ctx_(ctx), c_(std::move(c)) {}
    friend struct CycOps;
};

std::ostream& operator<<(std::ostream& os, const CycNum& a);

int euler_phi(int n);
// Integer coefficients of Phi_n, lowest degree first.
std::vector<long> cyclotomic_poly(int n);
// Orders above this bound raise OrderLimit.
void set_order_limit(int bound);
int order_limit();

struct ComplexApprox {
    Real re, im;
};
// Numerical value at `bits` of precision.  Requires bits >= 53.
ComplexApprox cyc_embed(const CycNum& a, unsigned bits);
double to_double(const CycNum& a);

// RAII guard for the working precision of Real.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

} // namespace qgw
