#pragma once

#include <json.hpp>

#include "wdparam/classical.hpp"
#include "wdparam/local_factors.hpp"

namespace wdparam {

using nlohmann::json;

/// FieldElem <-> {"coeffs": [[i, j, num, den], ...]}; numerators and
/// denominators are emitted as integers when they fit in 64 bits and as
/// decimal strings otherwise (both are accepted on input).
json field_to_json(const FieldElem& x);
FieldElem field_from_json(const FieldContext* ctx, const json& j,
                          const std::string& where);

json ratfun_to_json(const RatFun& f);

/// A parsed parameter file: the context is owned here, everything else
/// points into it.
struct ParsedParam {
    std::unique_ptr<FieldContext> ctx;
    BaseField base = BaseField::F;
    std::optional<ClassicalKind> classical;
    SemisimpleParam ss;
    std::optional<SL2Param> sl2;
    std::optional<WDParam> wd;

    /// The Weil-Deligne form: explicit N, else from segments, else N = 0.
    WDParam as_wd() const;
};

/// Schema:
/// {"q":..., "M":..., "group":"GLn"|"WE"|{"classical":"Sp"|"SOodd"|"U"},
///  "summands":[{"zeta":e,"f":f,"alpha":<FieldElem>}],
///  "segments":[{"summand":{...},"d":d}],        (optional, SL2 form)
///  "N": dense matrix of FieldElem               (optional)}
ParsedParam param_from_json(const json& j);
json param_to_json(const SemisimpleParam& p);
json param_to_json(const SL2Param& p);

json gamma_divisor_to_json(const GammaDivisor& d);
GammaDivisor gamma_divisor_from_json(const FieldContext* ctx, const json& j,
                                     const std::string& where);

}  // namespace wdparam
