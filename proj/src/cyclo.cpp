#include "qgw/cyclo.hpp"

#include <boost/math/constants/constants.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "qgw/error.hpp"

namespace qgw {

struct CycCtx {
    int N = 1;
    int phi = 1;
    // red[j] = x^j mod Phi_N for 0 <= j < max(N, 2 phi - 1)
    std::vector<std::vector<long>> red;
};

namespace {

std::mutex g_ctx_mutex;
std::map<int, std::unique_ptr<CycCtx>> g_ctx;
int g_order_limit = 4096;

std::vector<long> poly_divexact(const std::vector<long>& a, const std::vector<long>& b) {
    // b monic; exact division
    std::vector<long> r = a, q(a.size() - b.size() + 1, 0);
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        long c = r[i + b.size() - 1];
        q[i] = c;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
    }
    return q;
}

const CycCtx* ctx_for(int N) {
    if (N < 1) throw Error("OrderLimit", "cyclo", "order " + std::to_string(N));
    std::lock_guard<std::mutex> lk(g_ctx_mutex);
    if (N > g_order_limit) throw Error("OrderLimit", "cyclo", "order " + std::to_string(N));
    auto it = g_ctx.find(N);
    if (it != g_ctx.end()) return it->second.get();
    auto ctx = std::make_unique<CycCtx>();
    ctx->N = N;
    std::vector<long> phiN = cyclotomic_poly(N);
    int d = static_cast<int>(phiN.size()) - 1;
    ctx->phi = d;
    int top = std::max(N, 2 * d - 1);
    ctx->red.assign(top, std::vector<long>(d, 0));
    std::vector<long> cur(d, 0);
    cur[0] = 1;
    for (int j = 0; j < top; ++j) {
        ctx->red[j] = cur;
        // multiply by x, reduce with the monic Phi_N
        long carry = cur[d - 1];
        for (int i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (carry != 0)
            for (int i = 0; i < d; ++i) cur[i] -= carry * phiN[i];
    }
    const CycCtx* p = ctx.get();
    g_ctx.emplace(N, std::move(ctx));
    return p;
}

const CycCtx* rational_ctx() {
    static const CycCtx* c = ctx_for(1);
    return c;
}

} // namespace

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

std::vector<long> cyclotomic_poly(int n) {
    // x^n - 1 divided by Phi_d for proper divisors d
    std::vector<long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = poly_divexact(num, cyclotomic_poly(d));
    return num;
}

void set_order_limit(int bound) {
    std::lock_guard<std::mutex> lk(g_ctx_mutex);
    g_order_limit = bound;
}
int order_limit() {
    std::lock_guard<std::mutex> lk(g_ctx_mutex);
    return g_order_limit;
}

struct CycOps {
    static std::vector<mpq_class> reduce(const CycCtx* k, const std::vector<mpq_class>& wide) {
        std::vector<mpq_class> out(k->phi);
        for (size_t j = 0; j < wide.size(); ++j) {
            if (sgn(wide[j]) == 0) continue;
            if (static_cast<int>(j) < k->phi) {
                out[j] += wide[j];
                continue;
            }
            const auto& r = k->red[j];
            for (int i = 0; i < k->phi; ++i)
                if (r[i] != 0) out[i] += wide[j] * r[i];
        }
        return out;
    }
    static void align(CycNum& a, CycNum& b) {
        if (a.ctx_ == b.ctx_) return;
        if (a.ctx_->N == 1) {
            a = a.promote(b.ctx_->N);
            return;
        }
        if (b.ctx_->N == 1) {
            b = b.promote(a.ctx_->N);
            return;
        }
        int L = std::lcm(a.ctx_->N, b.ctx_->N);
        a = a.promote(L);
        b = b.promote(L);
    }
};

CycNum::CycNum() : ctx_(rational_ctx()), c_(1) {}
CycNum::CycNum(long n) : ctx_(rational_ctx()), c_{mpq_class(n)} {}
CycNum::CycNum(long n, long d) : ctx_(rational_ctx()), c_{mpq_class(n, d)} {
    if (d == 0) throw Error("DivisionByZero", "cyclo", "zero denominator");
    c_[0].canonicalize();
}
CycNum::CycNum(const mpq_class& q) : ctx_(rational_ctx()), c_{q} { c_[0].canonicalize(); }

CycNum CycNum::zeta(int order, long power) {
    const CycCtx* k = ctx_for(order);
    long p = ((power % order) + order) % order;
    std::vector<mpq_class> c(k->phi);
    for (int i = 0; i < k->phi; ++i) c[i] = k->red[p][i];
    return CycNum(k, std::move(c));
}

CycNum CycNum::from_coeffs(int order, std::vector<mpq_class> coeffs) {
    const CycCtx* k = ctx_for(order);
    if (static_cast<int>(coeffs.size()) != k->phi)
        throw Error("SchemaError", "cyclo", "coefficient count " + std::to_string(coeffs.size()) +
                                                " != phi(" + std::to_string(order) + ")");
    for (auto& q : coeffs) q.canonicalize();
    return CycNum(k, std::move(coeffs));
}

int CycNum::order() const { return ctx_->N; }

bool CycNum::is_zero() const {
    for (const auto& q : c_)
        if (sgn(q) != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

bool CycNum::is_one() const { return is_rational() && c_[0] == 1; }

CycNum CycNum::promote(int order) const {
    if (order == ctx_->N) return *this;
    if (order % ctx_->N != 0)
        throw Error("OrderLimit", "cyclo",
                    "cannot promote order " + std::to_string(ctx_->N) + " to " + std::to_string(order));
    const CycCtx* k = ctx_for(order);
    std::vector<mpq_class> out(k->phi);
    int step = order / ctx_->N;
    for (int j = 0; j < ctx_->phi; ++j) {
        if (sgn(c_[j]) == 0) continue;
        const auto& r = k->red[j * step];
        for (int i = 0; i < k->phi; ++i)
            if (r[i] != 0) out[i] += c_[j] * r[i];
    }
    return CycNum(k, std::move(out));
}

bool CycNum::representable_at(int order) const {
    try {
        (void)demote(order);
        return true;
    } catch (const Error&) {
        return false;
    }
}

CycNum CycNum::demote(int order) const {
    if (order == ctx_->N) return *this;
    if (is_rational()) return CycNum(c_[0]).promote(order);
    if (ctx_->N % order != 0) throw Error("NotRepresentable", "cyclo", str());
    // Solve sum_j y_j * promote(zeta_order^j) = this over Q.
    const CycCtx* k = ctx_for(order);
    int m = k->phi, n = ctx_->phi, step = ctx_->N / order;
    std::vector<std::vector<mpq_class>> A(n, std::vector<mpq_class>(m + 1));
    for (int j = 0; j < m; ++j) {
        const auto& r = ctx_->red[j * step];
        for (int i = 0; i < n; ++i) A[i][j] = r[i];
    }
    for (int i = 0; i < n; ++i) A[i][m] = c_[i];
    int row = 0;
    std::vector<int> piv;
    for (int col = 0; col < m && row < n; ++col) {
        int p = row;
        while (p < n && sgn(A[p][col]) == 0) ++p;
        if (p == n) continue;
        std::swap(A[p], A[row]);
        mpq_class f = A[row][col];
        for (int c = col; c <= m; ++c) A[row][c] /= f;
        for (int i = 0; i < n; ++i)
            if (i != row && sgn(A[i][col]) != 0) {
                mpq_class g = A[i][col];
                for (int c = col; c <= m; ++c) A[i][c] -= g * A[row][c];
            }
        piv.push_back(col);
        ++row;
    }
    for (int i = row; i < n; ++i)
        if (sgn(A[i][m]) != 0) throw Error("NotRepresentable", "cyclo", str());
    std::vector<mpq_class> y(m);
    for (int i = 0; i < row; ++i) y[piv[i]] = A[i][m];
    return CycNum(k, std::move(y));
}

CycNum CycNum::conj() const {
    if (ctx_->N <= 2) return *this;
    std::vector<mpq_class> out(ctx_->phi);
    for (int j = 0; j < ctx_->phi; ++j) {
        if (sgn(c_[j]) == 0) continue;
        const auto& r = ctx_->red[(ctx_->N - j) % ctx_->N];
        for (int i = 0; i < ctx_->phi; ++i)
            if (r[i] != 0) out[i] += c_[j] * r[i];
    }
    return CycNum(ctx_, std::move(out));
}

CycNum CycNum::inv() const {
    if (is_zero()) throw Error("DivisionByZero", "cyclo", "inverse of zero");
    if (is_rational()) {
        std::vector<mpq_class> c(ctx_->phi);
        c[0] = 1 / c_[0];
        return CycNum(ctx_, std::move(c));
    }
    // Multiplication-by-this matrix, solve M y = e_0.
    int n = ctx_->phi;
    std::vector<std::vector<mpq_class>> A(n, std::vector<mpq_class>(n + 1));
    for (int j = 0; j < n; ++j) {
        CycNum col = *this * CycNum::zeta(ctx_->N, j);
        for (int i = 0; i < n; ++i) A[i][j] = col.c_[i];
    }
    A[0][n] = 1;
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (sgn(A[p][col]) == 0) ++p;
        std::swap(A[p], A[col]);
        mpq_class f = A[col][col];
        for (int c = col; c <= n; ++c) A[col][c] /= f;
        for (int i = 0; i < n; ++i)
            if (i != col && sgn(A[i][col]) != 0) {
                mpq_class g = A[i][col];
                for (int c = col; c <= n; ++c) A[i][c] -= g * A[col][c];
            }
    }
    std::vector<mpq_class> y(n);
    for (int i = 0; i < n; ++i) y[i] = A[i][n];
    return CycNum(ctx_, std::move(y));
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (ctx_ == o.ctx_) {
        for (size_t i = 0; i < c_.size(); ++i)
            if (sgn(o.c_[i]) != 0) c_[i] += o.c_[i];
        return *this;
    }
    CycNum b = o;
    CycOps::align(*this, b);
    return *this += b;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    if (ctx_ == o.ctx_) {
        for (size_t i = 0; i < c_.size(); ++i)
            if (sgn(o.c_[i]) != 0) c_[i] -= o.c_[i];
        return *this;
    }
    CycNum b = o;
    CycOps::align(*this, b);
    return *this -= b;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    if (a.ctx_ != b.ctx_) {
        if (a.ctx_->N == 1 || a.is_rational()) {
            CycNum r = b;
            if (a.ctx_->N != 1 && b.ctx_->N % a.ctx_->N != 0) r = r.promote(std::lcm(a.ctx_->N, b.ctx_->N));
            const mpq_class s = a.c_[0];
            for (auto& q : r.c_)
                if (sgn(q) != 0) q *= s;
            return r;
        }
        if (b.ctx_->N == 1 || b.is_rational()) return b * a;
        CycNum x = a, y = b;
        CycOps::align(x, y);
        return x * y;
    }
    const CycCtx* k = a.ctx_;
    if (b.is_rational()) {
        CycNum r = a;
        const mpq_class s = b.c_[0];
        for (auto& q : r.c_)
            if (sgn(q) != 0) q *= s;
        return r;
    }
    if (a.is_rational()) return b * a;
    std::vector<mpq_class> wide(2 * k->phi - 1);
    for (int i = 0; i < k->phi; ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (int j = 0; j < k->phi; ++j)
            if (sgn(b.c_[j]) != 0) wide[i + j] += a.c_[i] * b.c_[j];
    }
    return CycNum(k, CycOps::reduce(k, wide));
}

CycNum& CycNum::operator*=(const CycNum& o) {
    *this = *this * o;
    return *this;
}

void CycNum::add_mul(const CycNum& b, const CycNum& c) {
    if (b.is_zero() || c.is_zero()) return;
    if (ctx_ == b.ctx_ && ctx_ == c.ctx_ && c.is_rational()) {
        const mpq_class& s = c.c_[0];
        for (size_t i = 0; i < c_.size(); ++i)
            if (sgn(b.c_[i]) != 0) c_[i] += b.c_[i] * s;
        return;
    }
    if (ctx_ == b.ctx_ && ctx_ == c.ctx_ && b.is_rational()) {
        const mpq_class& s = b.c_[0];
        for (size_t i = 0; i < c_.size(); ++i)
            if (sgn(c.c_[i]) != 0) c_[i] += c.c_[i] * s;
        return;
    }
    *this += b * c;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.ctx_ == b.ctx_) return a.c_ == b.c_;
    CycNum x = a, y = b;
    CycOps::align(x, y);
    return x.c_ == y.c_;
}

std::string CycNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < ctx_->phi; ++j) {
        if (sgn(c_[j]) == 0) continue;
        if (!first) os << (sgn(c_[j]) > 0 ? "+" : "");
        first = false;
        if (j == 0) {
            os << c_[j];
        } else {
            if (c_[j] == -1) os << "-";
            else if (c_[j] != 1) os << c_[j] << "*";
            os << "z" << ctx_->N;
            if (j > 1) os << "^" << j;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& a) { return os << a.str(); }

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_(Real::default_precision()) {
    // digits10 with margin; mpfr rounds the binary precision up
    Real::default_precision(static_cast<unsigned>(bits * 0.30103) + 2);
}
PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

ComplexApprox cyc_embed(const CycNum& a, unsigned bits) {
    if (bits < 53) throw Error("BadPrecision", "cyclo", std::to_string(bits) + " < 53");
    PrecisionGuard g(bits + 16);
    int N = a.order();
    ComplexApprox out{Real(0), Real(0)};
    Real two_pi = 2 * boost::math::constants::pi<Real>();
    const auto& c = a.coeffs();
    for (size_t j = 0; j < c.size(); ++j) {
        if (sgn(c[j]) == 0) continue;
        Real q = Real(c[j].get_num().get_str()) / Real(c[j].get_den().get_str());
        if (j == 0) {
            out.re += q;
            continue;
        }
        Real t = two_pi * Real(static_cast<long>(j)) / Real(N);
        out.re += q * cos(t);
        out.im += q * sin(t);
    }
    return out;
}

double to_double(const CycNum& a) { return cyc_embed(a, 64).re.convert_to<double>(); }

} // namespace qgw
