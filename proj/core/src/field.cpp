#include "wdparam/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace wdparam {

namespace {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

using ZPoly = std::vector<mpz_class>;  // coefficients, index = degree

// Exact division of integer polynomials, remainder must vanish.
ZPoly zpoly_div_exact(const ZPoly& a, const ZPoly& b) {
    ZPoly rem = a;
    ZPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
    while (rem.size() >= b.size() && !(rem.size() == 1 && rem[0] == 0)) {
        size_t shift = rem.size() - b.size();
        mpz_class c = rem.back() / b.back();
        quot[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
        if (rem.size() < b.size()) break;
    }
    return quot;
}

ZPoly cyclotomic_poly(unsigned n, std::map<unsigned, ZPoly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    // x^n - 1 divided by the product of Phi_d for proper divisors d.
    ZPoly num(n + 1, mpz_class(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) num = zpoly_div_exact(num, cyclotomic_poly(d, memo));
    }
    memo[n] = num;
    return num;
}

}  // namespace

FieldContext::FieldContext(unsigned M, unsigned q) : M_(M), q_(q) {
    if (M == 0) throw validation_error("tame level M must be positive");
    if (q < 2) throw validation_error("q must be a prime power >= 2");
    unsigned p = 0, rest = q;
    for (unsigned d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = rest;
    unsigned t = q;
    while (t % p == 0) t /= p;
    if (t != 1) throw validation_error("q is not a prime power");
    p_ = p;
    if (M % p == 0) throw validation_error("residue characteristic p must not divide M");
    q_z_ = q;

    unsigned r = static_cast<unsigned>(std::sqrt(static_cast<double>(q)));
    for (unsigned c : {r, r + 1, r > 0 ? r - 1 : 0}) {
        if (c * c == q) {
            q_square_ = true;
            q_sqrt_ = c;
        }
    }

    phi_ = euler_phi(M);
    std::map<unsigned, ZPoly> memo;
    cyclo_ = cyclotomic_poly(M, memo);

    // zeta^t on the power basis: reduce x^t mod Phi_M.
    zeta_pow_.resize(M);
    std::vector<mpz_class> cur(phi_, mpz_class(0));
    // running representative of x^t, degree < phi
    cur[0] = 1;
    for (unsigned tpow = 0; tpow < M; ++tpow) {
        zeta_pow_[tpow] = cur;
        // multiply by x and reduce
        std::vector<mpz_class> next(phi_ + 1, mpz_class(0));
        for (unsigned i = 0; i < phi_; ++i) next[i + 1] = cur[i];
        if (next[phi_] != 0) {
            mpz_class lead = next[phi_];
            for (unsigned i = 0; i < phi_; ++i) next[i] -= lead * cyclo_[i];
        }
        next.resize(phi_);
        cur = std::move(next);
    }
}

FieldElem::FieldElem(const FieldContext* ctx)
    : ctx_(ctx), num_(ctx ? 2 * ctx->phi() : 0, mpz_class(0)), den_(1) {}

FieldElem FieldElem::one(const FieldContext* ctx) {
    FieldElem r(ctx);
    r.num_[0] = 1;
    return r;
}

FieldElem FieldElem::from_int(const FieldContext* ctx, long v) {
    FieldElem r(ctx);
    r.num_[0] = v;
    return r;
}

FieldElem FieldElem::from_mpq(const FieldContext* ctx, const mpq_class& v) {
    FieldElem r(ctx);
    r.num_[0] = v.get_num();
    r.den_ = v.get_den();
    r.normalize();
    return r;
}

FieldElem FieldElem::zeta(const FieldContext* ctx, long a) {
    FieldElem r(ctx);
    long m = static_cast<long>(ctx->M());
    long t = ((a % m) + m) % m;
    const auto& rep = ctx->zeta_power(static_cast<unsigned>(t));
    for (unsigned i = 0; i < ctx->phi(); ++i) r.num_[i] = rep[i];
    r.normalize();
    return r;
}

FieldElem FieldElem::sqrt_q_pow(const FieldContext* ctx, long k) {
    // sqrt(q)^k = q^{floor(k/2)} * sqrt(q)^{k mod 2}
    long half = (k >= 0) ? k / 2 : -((-k + 1) / 2);
    long parity = k - 2 * half;  // 0 or 1
    FieldElem r(ctx);
    if (parity == 0) {
        r.num_[0] = 1;
    } else if (ctx->sqrt_q_is_integer()) {
        r.num_[0] = ctx->sqrt_q_integer();
    } else {
        r.num_[ctx->phi()] = 1;
    }
    return r * q_pow(ctx, half);
}

FieldElem FieldElem::q_pow(const FieldContext* ctx, long k) {
    mpq_class v(1);
    mpz_class qz = ctx->q_z();
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) v *= qz;
    if (k < 0) v = 1 / v;
    return from_mpq(ctx, v);
}

FieldElem FieldElem::from_monomial(const FieldContext* ctx, const Monomial& m) {
    return from_mpq(ctx, m.c) * zeta(ctx, m.zeta_exp) * sqrt_q_pow(ctx, m.sqrt_pow);
}

FieldElem FieldElem::from_raw(const FieldContext* ctx, std::vector<mpz_class> num,
                              mpz_class den) {
    FieldElem r(ctx);
    if (num.size() != 2 * ctx->phi()) throw validation_error("bad coefficient vector size");
    if (den == 0) throw validation_error("zero denominator");
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize();
    return r;
}

void FieldElem::normalize() {
    unsigned phi = ctx_->phi();
    if (ctx_->sqrt_q_is_integer()) {
        mpz_class rt(ctx_->sqrt_q_integer());
        for (unsigned i = 0; i < phi; ++i) {
            num_[i] += rt * num_[i + phi];
            num_[i + phi] = 0;
        }
    }
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    mpz_class g = den_;
    for (const auto& c : num_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1) {
        den_ /= g;
        for (auto& c : num_) c /= g;
    }
    if (den_ == 0) throw compute_error("denormalized field element");
}

void FieldElem::require_same_ctx(const FieldElem& o) const {
    if (ctx_ != o.ctx_) throw validation_error("field elements from different contexts");
}

bool FieldElem::is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
}

bool FieldElem::is_one() const {
    if (den_ != 1 || num_[0] != 1) return false;
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

bool FieldElem::is_rational() const {
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

std::optional<mpq_class> FieldElem::as_rational() const {
    if (!is_rational()) return std::nullopt;
    mpq_class v(num_[0], den_);
    v.canonicalize();
    return v;
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    require_same_ctx(o);
    FieldElem r(ctx_);
    r.den_ = den_ * o.den_;
    for (size_t i = 0; i < num_.size(); ++i)
        r.num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
    r.normalize();
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    require_same_ctx(o);
    unsigned phi = ctx_->phi();
    // (x0 + x1 t)(y0 + y1 t) = (x0 y0 + q x1 y1) + (x0 y1 + x1 y0) t
    auto conv = [&](const mpz_class* a, const mpz_class* b, std::vector<mpz_class>& out) {
        for (unsigned i = 0; i < phi; ++i) {
            if (a[i] == 0) continue;
            for (unsigned j = 0; j < phi; ++j) {
                if (b[j] == 0) continue;
                out[i + j] += a[i] * b[j];
            }
        }
    };
    std::vector<mpz_class> p00(2 * phi - 1, mpz_class(0)), p11(2 * phi - 1, mpz_class(0)),
        p01(2 * phi - 1, mpz_class(0)), p10(2 * phi - 1, mpz_class(0));
    conv(num_.data(), o.num_.data(), p00);
    conv(num_.data() + phi, o.num_.data() + phi, p11);
    conv(num_.data(), o.num_.data() + phi, p01);
    conv(num_.data() + phi, o.num_.data(), p10);

    const auto& cy = ctx_->cyclotomic();
    auto reduce = [&](std::vector<mpz_class>& v) {
        for (size_t d = v.size(); d-- > phi;) {
            if (v[d] == 0) continue;
            mpz_class lead = v[d];
            v[d] = 0;
            for (unsigned i = 0; i < phi; ++i) v[d - phi + i] -= lead * cy[i];
        }
        v.resize(phi);
    };
    for (size_t i = 0; i < p00.size(); ++i) p00[i] += ctx_->q_z() * p11[i];
    for (size_t i = 0; i < p01.size(); ++i) p01[i] += p10[i];
    reduce(p00);
    reduce(p01);

    FieldElem r(ctx_);
    for (unsigned i = 0; i < phi; ++i) {
        r.num_[i] = p00[i];
        r.num_[i + phi] = p01[i];
    }
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

namespace {

using QPoly = std::vector<mpq_class>;

void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qpoly_rem(QPoly a, const QPoly& b) {
    qpoly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        qpoly_trim(a);
    }
    return a;
}

// Extended gcd against the (irreducible) modulus: returns u with u*a = 1 mod m.
QPoly qpoly_invmod(const QPoly& a, const QPoly& m) {
    // classic extended Euclid on (m, a)
    QPoly r0 = m, r1 = a, s0 = {}, s1 = {mpq_class(1)};
    qpoly_trim(r1);
    if (r1.empty()) throw compute_error("division by zero in coefficient field");
    while (true) {
        // r0 = q*r1 + r2
        QPoly q;
        QPoly rem = r0;
        qpoly_trim(rem);
        q.assign(rem.size() > r1.size() ? rem.size() - r1.size() + 1 : 1, mpq_class(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            mpq_class c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] += c;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            qpoly_trim(rem);
        }
        QPoly s2 = s0;
        s2.resize(std::max(s0.size(), q.size() + s1.size()), mpq_class(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        qpoly_trim(s2);
        if (rem.empty()) {
            // r1 is the gcd, must be a nonzero constant
            if (r1.size() != 1)
                throw compute_error("non-invertible element (modulus not irreducible?)");
            QPoly u = s1;
            for (auto& c : u) c /= r1[0];
            return u;
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

}  // namespace

FieldElem FieldElem::inv() const {
    if (is_zero()) throw compute_error("division by zero in K");
    unsigned phi = ctx_->phi();

    auto to_qpoly = [&](size_t offset) {
        QPoly p(phi);
        for (unsigned i = 0; i < phi; ++i) p[i] = mpq_class(num_[offset + i], den_);
        for (auto& c : p) c.canonicalize();
        qpoly_trim(p);
        return p;
    };
    QPoly modulus(phi + 1);
    for (unsigned i = 0; i <= phi; ++i) modulus[i] = mpq_class(ctx_->cyclotomic()[i]);

    auto mul_mod = [&](const QPoly& a, const QPoly& b) {
        QPoly prod(a.size() + b.size(), mpq_class(0));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
        }
        qpoly_trim(prod);
        return qpoly_rem(prod, modulus);
    };

    QPoly x = to_qpoly(0), y = to_qpoly(phi);

    auto from_parts = [&](const QPoly& a, const QPoly& b) {
        FieldElem r(ctx_);
        mpz_class lcm(1);
        auto fold_lcm = [&](const QPoly& p) {
            for (const auto& c : p) {
                mpz_class d = c.get_den();
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
                lcm = lcm / g * d;
            }
        };
        fold_lcm(a);
        fold_lcm(b);
        for (size_t i = 0; i < a.size(); ++i)
            r.num_[i] = mpz_class(a[i].get_num() * (lcm / a[i].get_den()));
        for (size_t i = 0; i < b.size(); ++i)
            r.num_[i + phi] = mpz_class(b[i].get_num() * (lcm / b[i].get_den()));
        r.den_ = lcm;
        r.normalize();
        return r;
    };

    if (y.empty()) {
        QPoly u = qpoly_invmod(x, modulus);
        return from_parts(u, {});
    }
    // 1/(x + y t) = (x - y t) / (x^2 - q y^2)
    QPoly x2 = mul_mod(x, x), y2 = mul_mod(y, y);
    QPoly D = x2;
    D.resize(std::max(x2.size(), y2.size()), mpq_class(0));
    for (size_t i = 0; i < y2.size(); ++i) D[i] -= mpq_class(ctx_->q_z()) * y2[i];
    qpoly_trim(D);
    QPoly Dinv = qpoly_invmod(D, modulus);
    QPoly a = mul_mod(x, Dinv);
    QPoly b = mul_mod(y, Dinv);
    for (auto& c : b) c = -c;
    return from_parts(a, b);
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem FieldElem::pow(long e) const {
    if (e == 0) return one(ctx_);
    FieldElem base = e > 0 ? *this : inv();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    FieldElem acc = one(ctx_);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

FieldElem FieldElem::galois(long k) const {
    unsigned M = ctx_->M();
    long kk = ((k % static_cast<long>(M)) + M) % M;
    unsigned g = std::gcd(static_cast<unsigned>(kk), M);
    if (g != 1) throw validation_error("Galois exponent not coprime to M");
    unsigned phi = ctx_->phi();
    FieldElem r(ctx_);
    // Need zeta^i -> zeta^{ik}; our basis elements are the power basis, but
    // elements are stored reduced, so map each basis power through the table.
    for (unsigned j = 0; j < 2; ++j) {
        for (unsigned i = 0; i < phi; ++i) {
            const mpz_class& c = num_[i + phi * j];
            if (c == 0) continue;
            const auto& rep = ctx_->zeta_power(static_cast<unsigned>((i * kk) % M));
            for (unsigned t = 0; t < phi; ++t) r.num_[t + phi * j] += c * rep[t];
        }
    }
    r.den_ = den_;
    r.normalize();
    return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (ctx_ != o.ctx_) return false;
    return den_ == o.den_ && num_ == o.num_;
}

bool FieldElem::operator<(const FieldElem& o) const {
    require_same_ctx(o);
    if (den_ != o.den_) return den_ < o.den_;
    for (size_t i = 0; i < num_.size(); ++i)
        if (num_[i] != o.num_[i]) return num_[i] < o.num_[i];
    return false;
}

std::optional<Monomial> FieldElem::as_monomial() const {
    if (is_zero()) return std::nullopt;
    unsigned M = ctx_->M();
    unsigned bmax = ctx_->sqrt_q_is_integer() ? 0u : 1u;
    for (unsigned b = 0; b <= bmax; ++b) {
        for (unsigned a = 0; a < M; ++a) {
            FieldElem probe = *this * zeta(ctx_, -static_cast<long>(a)) *
                              sqrt_q_pow(ctx_, -static_cast<long>(b));
            if (auto r = probe.as_rational()) {
                if (*r == 0) continue;
                return Monomial{*r, a, b};
            }
        }
    }
    return std::nullopt;
}

std::optional<long> FieldElem::as_q_power(long bound) const {
    auto r = as_rational();
    if (!r) return std::nullopt;
    if (*r == 1) return 0;
    mpq_class qq(ctx_->q_z());
    mpq_class up = qq, down = 1 / qq;
    for (long j = 1; j <= bound; ++j) {
        if (*r == up) return j;
        if (*r == down) return -j;
        up *= qq;
        down /= qq;
    }
    return std::nullopt;
}

std::string FieldElem::str() const {
    if (is_zero()) return "0";
    if (auto m = as_monomial()) {
        // powers of q (half-integral allowed) print as q^{k} / q^{k/2}
        if (m->zeta_exp == 0) {
            mpq_class c = m->c;
            bool neg = c < 0;
            if (neg) c = -c;
            mpq_class qq(ctx_->q_z());
            for (long j = -16; j <= 16; ++j) {
                mpq_class pw(1);
                for (long t = 0; t < (j >= 0 ? j : -j); ++t) pw *= qq;
                if (j < 0) pw = 1 / pw;
                if (c != pw) continue;
                long half = 2 * j + static_cast<long>(m->sqrt_pow);
                if (half == 0) return neg ? "-1" : "1";
                std::ostringstream os;
                if (neg) os << "-";
                os << "q";
                if (half != 2) {
                    os << "^{";
                    if (half % 2 == 0) os << half / 2;
                    else os << half << "/2";
                    os << "}";
                }
                return os.str();
            }
        }
        std::ostringstream os;
        bool printed = false;
        if (m->c == -1 && (m->zeta_exp != 0 || m->sqrt_pow != 0)) {
            os << "-";
        } else if (m->c != 1 || (m->zeta_exp == 0 && m->sqrt_pow == 0)) {
            os << m->c.get_str();
            printed = true;
        }
        if (m->zeta_exp != 0) {
            if (printed) os << "*";
            os << "z";
            if (m->zeta_exp != 1) os << "^" << m->zeta_exp;
            printed = true;
        }
        if (m->sqrt_pow) {
            if (printed) os << "*";
            os << "rq";
        }
        return os.str();
    }
    unsigned phi = ctx_->phi();
    std::ostringstream os;
    bool first = true;
    for (unsigned j = 0; j < 2; ++j) {
        for (unsigned i = 0; i < phi; ++i) {
            const mpz_class& c = num_[i + phi * j];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            mpz_class a = abs(c);
            bool unit = (a == 1) && (i > 0 || j > 0);
            if (!unit) os << a.get_str();
            if (i > 0) {
                if (!unit) os << "*";
                os << "z";
                if (i > 1) os << "^" << i;
            }
            if (j > 0) {
                if (i > 0 || !unit) os << "*";
                os << "rq";
            }
            first = false;
        }
    }
    std::string s = os.str();
    if (den_ != 1) s = "(" + s + ")/" + den_.get_str();
    return s;
}

long ell_valuation(const FieldElem& x, unsigned long ell) {
    const FieldContext* ctx = x.ctx();
    if (ell < 2) throw validation_error("ell must be a prime");
    if (ell == 2 || ctx->M() % ell == 0 || ctx->q() % ell == 0)
        throw validation_error("ell must not divide 2*M*q");
    auto m = x.as_monomial();
    if (!m) throw compute_error("eigenvalue not in monomial form c*zeta^a*sqrt(q)^b");
    mpz_class num = m->c.get_num(), den = m->c.get_den();
    mpz_class L(static_cast<unsigned long>(ell));
    long v = 0;
    while (num != 0 && mpz_divisible_p(num.get_mpz_t(), L.get_mpz_t())) {
        num /= L;
        ++v;
    }
    while (den != 0 && mpz_divisible_p(den.get_mpz_t(), L.get_mpz_t())) {
        den /= L;
        --v;
    }
    return v;
}

}  // namespace wdparam
