#pragma once

#include "wdparam/dictionary.hpp"

namespace wdparam {

/// Supported classical types: symplectic, odd special orthogonal, and
/// unitary of even/odd dimension.  Even orthogonal groups are out of scope.
enum class ClassicalKind { Sp, SOodd, Ueven, Uodd };

std::string kind_name(ClassicalKind k);

/// A classical-group parameter recorded through its GL_m avatar:
///  - Sp:     self-dual avatar of odd dimension (2n+1) over F;
///  - SOodd:  self-dual avatar of even dimension (2n) over F;
///  - Ueven/Uodd: conjugate-self-dual avatar over E of even/odd dimension.
/// The avatar may carry segment data; the semisimple avatar drives the
/// Plancherel formulas.
class ClassicalParam {
public:
    ClassicalParam(ClassicalKind kind, SemisimpleParam avatar);
    ClassicalParam(ClassicalKind kind, const SL2Param& avatar);

    ClassicalKind kind() const { return kind_; }
    const SemisimpleParam& avatar() const { return avatar_; }
    const std::optional<SL2Param>& sl2_avatar() const { return sl2_; }
    bool over_E() const { return kind_ == ClassicalKind::Ueven || kind_ == ClassicalKind::Uodd; }
    unsigned dimension() const { return avatar_.dimension(); }

private:
    void validate() const;
    ClassicalKind kind_;
    SemisimpleParam avatar_;
    std::optional<SL2Param> sl2_;
};

/// Classical parameters are compared through their GL_m avatars (plus the
/// type tag).
bool classical_iso(const ClassicalParam& a, const ClassicalParam& b);

/// dual over F, conjugate-dual over E.
SemisimpleParam self_duality_dual(const SemisimpleParam& p);

}  // namespace wdparam
