#include "wdparam/classical.hpp"

#include "wdparam/param_ops.hpp"

namespace wdparam {

std::string kind_name(ClassicalKind k) {
    switch (k) {
        case ClassicalKind::Sp: return "Sp";
        case ClassicalKind::SOodd: return "SOodd";
        case ClassicalKind::Ueven: return "Ueven";
        case ClassicalKind::Uodd: return "Uodd";
    }
    return "?";
}

SemisimpleParam self_duality_dual(const SemisimpleParam& p) {
    return p.over_E() ? conj_dual(p) : dual(p);
}

ClassicalParam::ClassicalParam(ClassicalKind kind, SemisimpleParam avatar)
    : kind_(kind), avatar_(std::move(avatar)) {
    validate();
}

ClassicalParam::ClassicalParam(ClassicalKind kind, const SL2Param& avatar)
    : kind_(kind), avatar_(semisimplify(avatar)), sl2_(avatar) {
    validate();
}

void ClassicalParam::validate() const {
    bool unitary = over_E();
    if (unitary != avatar_.over_E())
        throw validation_error("avatar base field does not match the classical kind");
    if (!is_isomorphic(self_duality_dual(avatar_), avatar_))
        throw validation_error(std::string("avatar is not ") +
                               (unitary ? "conjugate self-dual" : "self-dual"));
    unsigned n = avatar_.dimension();
    if (n == 0) return;  // trivial group, any kind
    switch (kind_) {
        case ClassicalKind::Sp:
            if (n % 2 == 0) throw validation_error("Sp avatar must have odd dimension");
            break;
        case ClassicalKind::SOodd:
            if (n % 2 != 0) throw validation_error("SOodd avatar must have even dimension");
            break;
        case ClassicalKind::Ueven:
            if (n % 2 != 0) throw validation_error("Ueven avatar must have even dimension");
            break;
        case ClassicalKind::Uodd:
            if (n % 2 == 0) throw validation_error("Uodd avatar must have odd dimension");
            break;
    }
}

bool classical_iso(const ClassicalParam& a, const ClassicalParam& b) {
    if (a.kind() != b.kind()) return false;
    if (a.sl2_avatar().has_value() && b.sl2_avatar().has_value())
        return *a.sl2_avatar() == *b.sl2_avatar();
    return is_isomorphic(a.avatar(), b.avatar());
}

}  // namespace wdparam
