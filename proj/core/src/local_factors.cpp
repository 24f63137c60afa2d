#include "wdparam/local_factors.hpp"

#include <algorithm>
#include <sstream>

namespace wdparam {

Poly l_denominator(const MonomialRep& rep) {
    Poly den = Poly::one(rep.ctx());
    for (const auto& c : rep.invariant_cycles())
        den = den * Poly::one_minus(c.wrap, c.length);
    return den;
}

Poly l_denominator(const SemisimpleParam& p) {
    return l_denominator(MonomialRep::from_param(p));
}

// det(1 - T Phi) on ker(N) cap (inertia invariants), computed in the basis
// of the given monomial action.
Poly l_denominator(const MonomialRep& rep, const Matrix& N) {
    const FieldContext* ctx = rep.ctx();
    std::vector<size_t> inv;
    for (size_t i = 0; i < rep.dim(); ++i)
        if (rep.exponents()[i] % ctx->M() == 0) inv.push_back(i);
    if (inv.empty()) return Poly::one(ctx);
    // kernel of N restricted to the invariant coordinate subspace
    Matrix ncols = N.select_columns(inv);
    Matrix W = ncols.kernel_basis();  // |inv| x k
    if (W.cols() == 0) return Poly::one(ctx);
    // Phi restricted to the invariant coordinates
    Matrix P = rep.phi_matrix().select_rows(inv).select_columns(inv);
    Matrix C = W.solve(P * W);
    return C.det_one_minus_T();
}

Poly l_denominator(const WDParam& w) {
    if (w.monodromy().is_zero()) return l_denominator(w.ss());
    return l_denominator(MonomialRep::from_param(w.ss()), w.monodromy());
}

Poly l_denominator_dual(const WDParam& w) {
    MonomialRep dual_rep = MonomialRep::from_param(w.ss()).dual();
    if (w.monodromy().is_zero()) return l_denominator(dual_rep);
    return l_denominator(dual_rep, w.monodromy().transpose());
}

RatFun l_factor(const SemisimpleParam& p) {
    return RatFun(Poly::one(p.ctx()), l_denominator(p));
}

RatFun l_factor(const WDParam& w) {
    return RatFun(Poly::one(w.ss().ctx()), l_denominator(w));
}

RatFun l_factor(const SL2Param& p) { return l_factor(sl2_to_wd(p)); }

namespace {

RatFun gamma_from_denominators(const FieldContext* ctx, long deg, const Poly& den_s,
                               const Poly& den_dual) {
    // L(1-s, dual)/L(s, .) = den_s(T) / den_dual(q^{-deg} T^{-1})
    RatFun dual_shift = RatFun::from_poly(den_dual).subst_monomial(
        FieldElem::q_pow(ctx, -deg), -1);
    RatFun g = RatFun::from_poly(den_s) / dual_shift;
    return g.monomial_canonical();
}

}  // namespace

RatFun gamma_ratio(const WDParam& w) {
    return gamma_from_denominators(w.ss().ctx(), w.ss().frobenius_degree(),
                                   l_denominator(w), l_denominator_dual(w));
}

RatFun gamma_ratio(const SemisimpleParam& p) { return gamma_ratio(WDParam(p)); }

RatFun gamma_ratio(const MonomialRep& rep) {
    long deg = rep.base() == BaseField::E ? 2 : 1;
    return gamma_from_denominators(rep.ctx(), deg, l_denominator(rep),
                                   l_denominator(rep.dual()));
}

void BinomialProduct::mul_factor(unsigned c, const FieldElem& a, int e) {
    if (e == 0) return;
    if (c == 0) throw validation_error("binomial factor needs a positive T power");
    auto key = std::make_pair(c, a);
    auto it = factors_.find(key);
    if (it == factors_.end()) {
        factors_.emplace(key, e);
    } else {
        it->second += e;
        if (it->second == 0) factors_.erase(it);
    }
}

BinomialProduct BinomialProduct::operator*(const BinomialProduct& o) const {
    BinomialProduct r = *this;
    for (const auto& [key, e] : o.factors_) r.mul_factor(key.first, key.second, e);
    return r;
}

BinomialProduct BinomialProduct::inv() const {
    BinomialProduct r(ctx_);
    for (const auto& [key, e] : factors_) r.factors_.emplace(key, -e);
    return r;
}

BinomialProduct BinomialProduct::subst_power(unsigned k) const {
    if (k == 0) throw validation_error("degenerate substitution");
    BinomialProduct r(ctx_);
    for (const auto& [key, e] : factors_) r.mul_factor(key.first * k, key.second, e);
    return r;
}

BinomialProduct BinomialProduct::subst_invert() const {
    // 1 - A T^{-c} = -A T^{-c} (1 - A^{-1} T^c)
    BinomialProduct r(ctx_);
    for (const auto& [key, e] : factors_) r.mul_factor(key.first, key.second.inv(), e);
    return r;
}

BinomialProduct BinomialProduct::galois(long k) const {
    BinomialProduct r(ctx_);
    for (const auto& [key, e] : factors_) r.mul_factor(key.first, key.second.galois(k), e);
    return r;
}

Poly BinomialProduct::expand(bool positive_part) const {
    Poly p = Poly::one(ctx_);
    for (const auto& [key, e] : factors_) {
        if ((e > 0) != positive_part) continue;
        for (int i = 0; i < std::abs(e); ++i)
            p = p * Poly::one_minus(key.second, key.first);
    }
    return p;
}

bool BinomialProduct::value_equals(const BinomialProduct& o) const {
    if (factors_ == o.factors_) return true;
    // fallback: cross-multiplied polynomials equal up to monomial
    Poly lhs = expand(true) * o.expand(false);
    Poly rhs = o.expand(true) * expand(false);
    Poly ln = lhs.shift_down(lhs.valuation());
    Poly rn = rhs.shift_down(rhs.valuation());
    if (ln.degree() != rn.degree()) return false;
    return ln * rn[0] == rn * ln[0];
}

RatFun BinomialProduct::to_ratfun() const {
    return RatFun(expand(true), expand(false));
}

std::string BinomialProduct::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, e] : factors_) {
        if (!first) os << " ";
        os << "(1 - (" << key.second.str() << ")T";
        if (key.first > 1) os << "^" << key.first;
        os << ")^" << e;
        first = false;
    }
    return os.str();
}

BinomialProduct gamma_factors(const MonomialRep& rep) {
    const FieldContext* ctx = rep.ctx();
    long deg = rep.base() == BaseField::E ? 2 : 1;
    BinomialProduct g(ctx);
    for (const auto& c : rep.invariant_cycles()) g.mul_factor(c.length, c.wrap, +1);
    for (const auto& c : rep.dual().invariant_cycles()) {
        // factor of L(1-s, dual): 1 - B (q^{-deg} T^{-1})^len, which is
        // (1 - B^{-1} q^{deg*len} T^{len}) up to monomial, inverted
        FieldElem a = c.wrap.inv() * FieldElem::q_pow(ctx, deg * c.length);
        g.mul_factor(c.length, a, -1);
    }
    return g;
}

void GammaDivisor::add(unsigned orbit, unsigned f, const FieldElem& point, int mult) {
    auto it = std::find_if(families_.begin(), families_.end(),
                           [&](const GammaFamily& fam) { return fam.orbit == orbit; });
    if (it == families_.end()) {
        families_.push_back(GammaFamily{orbit, f, Divisor{}});
        std::sort(families_.begin(), families_.end(),
                  [](const GammaFamily& a, const GammaFamily& b) { return a.orbit < b.orbit; });
        it = std::find_if(families_.begin(), families_.end(),
                          [&](const GammaFamily& fam) { return fam.orbit == orbit; });
    }
    it->div.add(point, mult);
    if (it->div.empty()) families_.erase(it);
}

const GammaFamily* GammaDivisor::family(unsigned orbit) const {
    for (const auto& fam : families_)
        if (fam.orbit == orbit) return &fam;
    return nullptr;
}

GammaDivisor GammaDivisor::operator+(const GammaDivisor& o) const {
    GammaDivisor r = *this;
    for (const auto& fam : o.families_)
        for (const auto& [pt, m] : fam.div.support()) r.add(fam.orbit, fam.f, pt, m);
    return r;
}

GammaDivisor GammaDivisor::operator*(int k) const {
    GammaDivisor r;
    if (k == 0) return r;
    for (const auto& fam : families_)
        for (const auto& [pt, m] : fam.div.support()) r.add(fam.orbit, fam.f, pt, m * k);
    return r;
}

GammaDivisor GammaDivisor::galois(long k, const FieldContext* ctx,
                                  unsigned long q_act) const {
    GammaDivisor r;
    long m = static_cast<long>(ctx->M());
    unsigned long kk = static_cast<unsigned long>(((k % m) + m) % m);
    for (const auto& fam : families_) {
        unsigned e = static_cast<unsigned>((fam.orbit * kk) % ctx->M());
        unsigned orbit = orbit_min(e, q_act, ctx->M());
        for (const auto& [pt, m] : fam.div.support()) r.add(orbit, fam.f, pt.galois(k), m);
    }
    return r;
}

std::string GammaDivisor::str() const {
    std::ostringstream os;
    for (const auto& fam : families_) {
        os << "family(orbit z^" << fam.orbit << ", f=" << fam.f
           << ", u=T^" << fam.f << "): " << fam.div.str() << "\n";
    }
    return os.str();
}

GammaDivisor big_gamma(const SemisimpleParam& phi1, const SemisimpleParam& phi2) {
    if (phi1.ctx() != phi2.ctx() || phi1.base() != phi2.base())
        throw validation_error("gamma pairing of incompatible parameters");
    const FieldContext* ctx = phi1.ctx();
    long deg = phi1.frobenius_degree();
    GammaDivisor out;
    for (const auto& t : phi1.summands()) {
        FieldElem qf = FieldElem::q_pow(ctx, deg * static_cast<long>(t.f));
        for (const auto& s : phi2.summands()) {
            if (s.zeta_exp != t.zeta_exp) continue;  // no unramified twist relation
            // L-ratio contribution of the matched pair, on the chain
            // coordinate u = T^f: zeros of order 2 at u = a/b, poles at one
            // nu-step either side.
            FieldElem u = t.alpha / s.alpha;
            out.add(t.zeta_exp, t.f, u, 2);
            out.add(t.zeta_exp, t.f, u / qf, -1);
            out.add(t.zeta_exp, t.f, u * qf, -1);
        }
    }
    return out;
}

}  // namespace wdparam
