#include "wdparam/divisor.hpp"

#include <sstream>

namespace wdparam {

void Divisor::add(const FieldElem& point, int mult) {
    if (mult == 0) return;
    if (point.is_zero()) throw validation_error("divisor point at T = 0 excluded");
    auto it = support_.find(point);
    if (it == support_.end()) {
        support_.emplace(point, mult);
    } else {
        it->second += mult;
        if (it->second == 0) support_.erase(it);
    }
}

int Divisor::multiplicity(const FieldElem& point) const {
    auto it = support_.find(point);
    return it == support_.end() ? 0 : it->second;
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor r = *this;
    for (const auto& [pt, m] : o.support_) r.add(pt, m);
    return r;
}

Divisor Divisor::operator-() const {
    Divisor r;
    for (const auto& [pt, m] : support_) r.support_.emplace(pt, -m);
    return r;
}

Divisor Divisor::operator-(const Divisor& o) const { return *this + (-o); }

Divisor Divisor::operator*(int k) const {
    Divisor r;
    if (k == 0) return r;
    for (const auto& [pt, m] : support_) r.support_.emplace(pt, m * k);
    return r;
}

Divisor Divisor::galois(long k) const {
    Divisor r;
    for (const auto& [pt, m] : support_) r.add(pt.galois(k), m);
    return r;
}

std::string Divisor::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [pt, m] : support_) {
        if (!first) os << ", ";
        os << "[T=" << pt.str() << "]: " << m;
        first = false;
    }
    os << "}";
    return os.str();
}

namespace {

// Peel all candidate roots out of p; returns remaining factor.
Poly peel(Poly p, const std::vector<FieldElem>& candidates, int sign, Divisor& out) {
    for (const auto& cand : candidates) {
        if (cand.is_zero()) continue;
        while (!p.is_zero() && p.degree() >= 1 && p.eval(cand).is_zero()) {
            p = p.deflate(cand);
            out.add(cand, sign);
        }
    }
    return p;
}

bool is_T_monomial(const Poly& p) {
    if (p.is_zero()) return false;
    return p.valuation() == static_cast<unsigned>(p.degree());
}

}  // namespace

Divisor ratfun_divisor(const RatFun& f, const std::vector<FieldElem>& candidates) {
    if (f.is_zero()) throw validation_error("divisor of the zero function");
    Divisor d;
    Poly rn = peel(f.num(), candidates, +1, d);
    Poly rd = peel(f.den(), candidates, -1, d);
    if (!is_T_monomial(rn))
        throw compute_error("non-split factor in numerator: " + rn.str());
    if (!is_T_monomial(rd))
        throw compute_error("non-split factor in denominator: " + rd.str());
    return d;
}

Divisor ratfun_divisor(const RatFun& f) {
    if (f.is_zero()) throw validation_error("divisor of the zero function");
    const FieldContext* ctx = f.ctx();
    // Candidate window: q-power monomials times roots of unity, wide enough
    // for every factor produced by the local-factor substitutions.
    long w = 2 * (std::max(f.num().degree(), f.den().degree()) + 2);
    std::vector<FieldElem> cands;
    for (long k = -w; k <= w; ++k) {
        for (unsigned a = 0; a < ctx->M(); ++a) {
            FieldElem base = FieldElem::sqrt_q_pow(ctx, k) * FieldElem::zeta(ctx, a);
            cands.push_back(base);
            cands.push_back(-base);
        }
    }
    return ratfun_divisor(f, cands);
}

}  // namespace wdparam
