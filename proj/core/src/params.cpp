#include "wdparam/params.hpp"

#include <algorithm>
#include <sstream>

namespace wdparam {

std::vector<unsigned> frobenius_orbit(unsigned e, unsigned long q_act, unsigned M) {
    std::vector<unsigned> orbit;
    unsigned long cur = e % M;
    do {
        orbit.push_back(static_cast<unsigned>(cur));
        cur = (cur * (q_act % M)) % M;
    } while (cur != e % M);
    return orbit;
}

unsigned orbit_size(unsigned e, unsigned long q_act, unsigned M) {
    return static_cast<unsigned>(frobenius_orbit(e, q_act, M).size());
}

unsigned orbit_min(unsigned e, unsigned long q_act, unsigned M) {
    auto orbit = frobenius_orbit(e, q_act, M);
    return *std::min_element(orbit.begin(), orbit.end());
}

SemisimpleParam::SemisimpleParam(const FieldContext* ctx, BaseField base,
                                 std::vector<IrredSummand> summands)
    : ctx_(ctx), base_(base), summands_(std::move(summands)) {
    unsigned long qa = q_act();
    for (auto& s : summands_) {
        s.zeta_exp %= ctx_->M();
        unsigned fs = orbit_size(s.zeta_exp, qa, ctx_->M());
        if (s.f != 0 && s.f != fs)
            throw validation_error("summand dimension does not match its orbit size");
        s.f = fs;
        s.zeta_exp = orbit_min(s.zeta_exp, qa, ctx_->M());
        if (s.alpha.ctx() != ctx_) throw validation_error("summand alpha context mismatch");
        if (s.alpha.is_zero()) throw validation_error("summand alpha must be nonzero");
    }
    std::sort(summands_.begin(), summands_.end());
}

SemisimpleParam SemisimpleParam::character(const FieldElem& alpha, BaseField base) {
    return SemisimpleParam(alpha.ctx(), base, {IrredSummand{0, 1, alpha}});
}

unsigned long SemisimpleParam::q_act() const {
    unsigned long q = ctx_->q() % ctx_->M();
    return over_E() ? (q * q) % ctx_->M() : q;
}

unsigned SemisimpleParam::dimension() const {
    unsigned n = 0;
    for (const auto& s : summands_) n += s.f;
    return n;
}

bool SemisimpleParam::operator==(const SemisimpleParam& o) const {
    return ctx_ == o.ctx_ && base_ == o.base_ && summands_ == o.summands_;
}

bool SemisimpleParam::operator<(const SemisimpleParam& o) const {
    if (summands_.size() != o.summands_.size())
        return summands_.size() < o.summands_.size();
    for (size_t i = 0; i < summands_.size(); ++i) {
        if (!(summands_[i] == o.summands_[i])) return summands_[i] < o.summands_[i];
    }
    return false;
}

std::string SemisimpleParam::str() const {
    std::ostringstream os;
    if (over_E()) os << "E:";
    os << "[";
    for (size_t i = 0; i < summands_.size(); ++i) {
        if (i) os << " + ";
        const auto& s = summands_[i];
        os << "(z^" << s.zeta_exp << ", f=" << s.f << ", a=" << s.alpha.str() << ")";
    }
    os << "]";
    return os.str();
}

bool is_isomorphic(const SemisimpleParam& a, const SemisimpleParam& b) { return a == b; }

Realization realize(const SemisimpleParam& p) {
    const FieldContext* ctx = p.ctx();
    unsigned n = p.dimension();
    unsigned long qa = p.q_act();
    Realization r{Matrix(ctx, n, n), Matrix(ctx, n, n), {}, {}};
    r.exponent.reserve(n);
    r.label.reserve(n);
    size_t base = 0;
    for (size_t si = 0; si < p.summands().size(); ++si) {
        const auto& s = p.summands()[si];
        unsigned long e = s.zeta_exp;
        for (unsigned i = 0; i < s.f; ++i) {
            r.sigma.at(base + i, base + i) = FieldElem::zeta(ctx, static_cast<long>(e));
            r.exponent.push_back(static_cast<unsigned>(e));
            r.label.emplace_back(si, i);
            e = (e * qa) % ctx->M();
            if (i + 1 < s.f) {
                r.phi.at(base + i + 1, base + i) = FieldElem::one(ctx);
            } else {
                r.phi.at(base, base + i) = s.alpha;
            }
        }
        base += s.f;
    }
    return r;
}

SL2Param::SL2Param(const FieldContext* ctx, BaseField base, std::vector<Segment> segments)
    : ctx_(ctx), base_(base), segments_(std::move(segments)) {
    for (auto& seg : segments_) {
        if (seg.d == 0) throw validation_error("segment length d must be >= 1");
        // canonicalize sigma through a one-summand parameter
        SemisimpleParam tmp(ctx_, base_, {seg.sigma});
        seg.sigma = tmp.summands()[0];
    }
    std::sort(segments_.begin(), segments_.end());
}

unsigned SL2Param::dimension() const {
    unsigned n = 0;
    for (const auto& s : segments_) n += s.sigma.f * s.d;
    return n;
}

bool SL2Param::operator==(const SL2Param& o) const {
    return ctx_ == o.ctx_ && base_ == o.base_ && segments_ == o.segments_;
}

std::string SL2Param::str() const {
    std::ostringstream os;
    if (base_ == BaseField::E) os << "E:";
    os << "[";
    for (size_t i = 0; i < segments_.size(); ++i) {
        if (i) os << " + ";
        const auto& s = segments_[i];
        os << "(z^" << s.sigma.zeta_exp << ", f=" << s.sigma.f
           << ", a=" << s.sigma.alpha.str() << ") x Sp(" << s.d << ")";
    }
    os << "]";
    return os.str();
}

WDParam::WDParam(SemisimpleParam ss, Matrix N) : ss_(std::move(ss)), N_(std::move(N)) {
    const FieldContext* ctx = ss_.ctx();
    unsigned n = ss_.dimension();
    if (N_.rows() != n || N_.cols() != n)
        throw validation_error("monodromy matrix size mismatch");
    if (!N_.pow(n).is_zero()) throw validation_error("monodromy must be nilpotent");
    Realization r = realize(ss_);
    Matrix lhs = r.sigma * N_;
    Matrix rhs = N_ * r.sigma;
    if (!(lhs == rhs)) throw validation_error("monodromy does not commute with inertia");
    FieldElem qinv = FieldElem::q_pow(ctx, -ss_.frobenius_degree());
    if (!(r.phi * N_ == (N_ * r.phi) * qinv))
        throw validation_error("monodromy violates Phi N Phi^{-1} = q^{-1} N");
}

WDParam::WDParam(SemisimpleParam ss) : ss_(std::move(ss)) {
    N_ = Matrix(ss_.ctx(), ss_.dimension(), ss_.dimension());
}

}  // namespace wdparam
