#include "wdparam/ratfun.hpp"

#include <sstream>

namespace wdparam {

Poly::Poly(const FieldContext* ctx, std::vector<FieldElem> coeffs)
    : ctx_(ctx), c_(std::move(coeffs)) {
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldElem& c) {
    return Poly(c.ctx(), {c});
}

Poly Poly::one_minus(const FieldElem& lambda, unsigned power) {
    const FieldContext* ctx = lambda.ctx();
    std::vector<FieldElem> v(power + 1, FieldElem::zero(ctx));
    v[0] = FieldElem::one(ctx);
    v[power] = -lambda;
    return Poly(ctx, std::move(v));
}

Poly Poly::monomial(const FieldElem& c, unsigned deg) {
    std::vector<FieldElem> v(deg + 1, FieldElem::zero(c.ctx()));
    v[deg] = c;
    return Poly(c.ctx(), std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<FieldElem> v(std::max(c_.size(), o.c_.size()), FieldElem::zero(ctx_));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < c_.size() && i < o.c_.size()) v[i] = c_[i] + o.c_[i];
        else if (i < c_.size()) v[i] = c_[i];
        else v[i] = o.c_[i];
    }
    return Poly(ctx_, std::move(v));
}

Poly Poly::operator-() const {
    std::vector<FieldElem> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(-c);
    return Poly(ctx_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(ctx_);
    std::vector<FieldElem> v(c_.size() + o.c_.size() - 1, FieldElem::zero(ctx_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            v[i + j] = v[i + j] + c_[i] * o.c_[j];
        }
    }
    return Poly(ctx_, std::move(v));
}

Poly Poly::operator*(const FieldElem& c) const {
    std::vector<FieldElem> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(x * c);
    return Poly(ctx_, std::move(v));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) throw compute_error("polynomial division by zero");
    Poly rem = *this;
    if (rem.degree() < d.degree()) return {Poly(ctx_), rem};
    std::vector<FieldElem> q(rem.degree() - d.degree() + 1, FieldElem::zero(ctx_));
    FieldElem lead_inv = d.c_.back().inv();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        size_t shift = rem.degree() - d.degree();
        FieldElem c = rem.c_.back() * lead_inv;
        q[shift] = c;
        for (size_t i = 0; i < d.c_.size(); ++i)
            rem.c_[shift + i] = rem.c_[shift + i] - c * d.c_[i];
        rem.trim();
    }
    return {Poly(ctx_, std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
    // monic-normalizing every remainder keeps coefficient heights tame
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * c_.back().inv();
}

FieldElem Poly::eval(const FieldElem& x) const {
    FieldElem acc = FieldElem::zero(x.ctx());
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

unsigned Poly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<unsigned>(i);
    return 0;
}

Poly Poly::shift_down(unsigned k) const {
    if (k == 0) return *this;
    if (c_.size() <= k) throw compute_error("shift_down underflow");
    return Poly(ctx_, std::vector<FieldElem>(c_.begin() + k, c_.end()));
}

unsigned Poly::root_multiplicity(const FieldElem& x) const {
    Poly p = *this;
    unsigned m = 0;
    while (!p.is_zero() && p.eval(x).is_zero()) {
        p = p.deflate(x);
        ++m;
    }
    return m;
}

Poly Poly::deflate(const FieldElem& x) const {
    // synthetic division by (T - x)
    if (is_zero()) throw compute_error("deflating zero polynomial");
    std::vector<FieldElem> q(c_.size() - 1, FieldElem::zero(ctx_));
    FieldElem carry = FieldElem::zero(ctx_);
    for (size_t i = c_.size(); i-- > 1;) {
        carry = c_[i] + carry * x;
        q[i - 1] = carry;
    }
    if (!(c_[0] + carry * x).is_zero()) throw compute_error("deflate: not a root");
    return Poly(ctx_, std::move(q));
}

Poly Poly::subst_scale(const FieldElem& c) const {
    std::vector<FieldElem> v = c_;
    FieldElem pw = FieldElem::one(ctx_);
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] = v[i] * pw;
        pw = pw * c;
    }
    return Poly(ctx_, std::move(v));
}

Poly Poly::subst_power(unsigned k) const {
    if (k == 0) throw validation_error("subst_power needs k >= 1");
    if (is_zero()) return *this;
    std::vector<FieldElem> v(c_.size() * k - k + 1, FieldElem::zero(ctx_));
    for (size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return Poly(ctx_, std::move(v));
}

Poly Poly::galois(long k) const {
    std::vector<FieldElem> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c.galois(k));
    return Poly(ctx_, std::move(v));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        auto mono = c_[i].as_monomial();
        bool neg = mono && mono->c < 0;
        std::string cs = neg ? (-c_[i]).str() : c_[i].str();
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (i == 0) {
            os << cs;
        } else {
            if (cs != "1") os << (mono ? cs : "(" + cs + ")") << "*";
            os << "T";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw compute_error("rational function with zero denominator");
    reduce();
}

RatFun RatFun::from_poly(Poly p) {
    const FieldContext* ctx = p.ctx();
    return RatFun(std::move(p), Poly::one(ctx));
}

void RatFun::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::one(den_.ctx());
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    FieldElem lead = den_.coeffs().back();
    if (!lead.is_one()) {
        FieldElem li = lead.inv();
        num_ = num_ * li;
        den_ = den_ * li;
    }
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}
RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw compute_error("division by zero rational function");
    return RatFun(num_ * o.den_, den_ * o.num_);
}
RatFun RatFun::inv() const {
    if (is_zero()) throw compute_error("inverting zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::subst_monomial(const FieldElem& c, int e) const {
    if (e == 0) throw validation_error("degenerate substitution T -> c");
    unsigned k = static_cast<unsigned>(e > 0 ? e : -e);
    Poly n = num_.subst_scale(c).subst_power(k);
    Poly d = den_.subst_scale(c).subst_power(k);
    if (e > 0) return RatFun(std::move(n), std::move(d));
    // T -> c*T^{-k}: reverse both Laurent parts and clear T powers.
    auto reverse = [](const Poly& p) {
        std::vector<FieldElem> v(p.coeffs().rbegin(), p.coeffs().rend());
        return Poly(p.ctx(), std::move(v));
    };
    int dn = n.degree(), dd = d.degree();
    Poly rn = reverse(n), rd = reverse(d);
    // f(c T^-k) = T^{-dn} rn / (T^{-dd} rd) = rn * T^{dd - dn} / rd
    if (dd >= dn) return RatFun(rn * Poly::monomial(FieldElem::one(ctx()), dd - dn), rd);
    return RatFun(rn, rd * Poly::monomial(FieldElem::one(ctx()), dn - dd));
}

RatFun RatFun::galois(long k) const { return RatFun(num_.galois(k), den_.galois(k)); }

RatFun RatFun::monomial_canonical() const {
    if (is_zero()) return *this;
    unsigned vn = num_.valuation(), vd = den_.valuation();
    Poly n = num_.shift_down(vn), d = den_.shift_down(vd);
    FieldElem n0 = n[0];
    FieldElem d0 = d[0];
    n = n * n0.inv();
    d = d * d0.inv();
    return RatFun(std::move(n), std::move(d));
}

bool RatFun::is_monomial() const {
    if (is_zero()) return false;
    RatFun c = monomial_canonical();
    return c.num().degree() == 0 && c.den().degree() == 0;
}

std::string RatFun::str() const {
    if (den_.degree() == 0 && den_[0].is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace wdparam
