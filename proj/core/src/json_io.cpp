#include "wdparam/json_io.hpp"

#include "wdparam/dictionary.hpp"

namespace wdparam {

namespace {

json mpz_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

mpz_class mpz_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw validation_error(where + ": expected an integer or decimal string");
}

void expect(bool cond, const std::string& where, const std::string& what) {
    if (!cond) throw validation_error(where + ": " + what);
}

}  // namespace

json field_to_json(const FieldElem& x) {
    const FieldContext* ctx = x.ctx();
    json coeffs = json::array();
    unsigned phi = ctx->phi();
    for (unsigned j = 0; j < 2; ++j) {
        for (unsigned i = 0; i < phi; ++i) {
            const mpz_class& c = x.raw_num()[i + phi * j];
            if (c == 0) continue;
            coeffs.push_back(json::array(
                {i, j, mpz_to_json(c), mpz_to_json(x.raw_den())}));
        }
    }
    json out;
    out["coeffs"] = coeffs;
    if (auto m = x.as_monomial()) out["pretty"] = x.str();
    return out;
}

FieldElem field_from_json(const FieldContext* ctx, const json& j,
                          const std::string& where) {
    expect(j.is_object() && j.contains("coeffs"), where, "expected {\"coeffs\": [...]}");
    const json& coeffs = j["coeffs"];
    expect(coeffs.is_array(), where + "/coeffs", "expected an array");
    unsigned phi = ctx->phi();
    // entries may carry different denominators; accumulate over a common one
    FieldElem acc = FieldElem::zero(ctx);
    size_t idx = 0;
    for (const auto& entry : coeffs) {
        std::string here = where + "/coeffs/" + std::to_string(idx++);
        expect(entry.is_array() && entry.size() == 4, here, "expected [i, j, num, den]");
        unsigned i = entry[0].get<unsigned>();
        unsigned jj = entry[1].get<unsigned>();
        expect(i < phi, here, "zeta index out of range (must be < phi(M))");
        expect(jj < 2, here, "sqrt(q) index out of range (must be 0 or 1)");
        mpz_class num = mpz_from_json(entry[2], here + "/2");
        mpz_class den = mpz_from_json(entry[3], here + "/3");
        expect(den != 0, here, "zero denominator");
        std::vector<mpz_class> vec(2 * phi, mpz_class(0));
        vec[i + phi * jj] = num;
        acc = acc + FieldElem::from_raw(ctx, std::move(vec), den);
    }
    return acc;
}

json ratfun_to_json(const RatFun& f) {
    auto poly = [](const Poly& p) {
        json arr = json::array();
        for (const auto& c : p.coeffs()) arr.push_back(field_to_json(c));
        return arr;
    };
    json out;
    out["num"] = poly(f.num());
    out["den"] = poly(f.den());
    out["pretty"] = f.str();
    return out;
}

WDParam ParsedParam::as_wd() const {
    if (wd) return *wd;
    if (sl2) return sl2_to_wd(*sl2);
    return WDParam(ss);
}

ParsedParam param_from_json(const json& j) {
    expect(j.is_object(), "/", "parameter file must be a JSON object");
    expect(j.contains("q"), "/q", "missing");
    expect(j.contains("M"), "/M", "missing");
    ParsedParam out;
    unsigned q = j["q"].get<unsigned>();
    unsigned M = j["M"].get<unsigned>();
    out.ctx = std::make_unique<FieldContext>(M, q);

    out.base = BaseField::F;
    if (j.contains("group")) {
        const json& g = j["group"];
        if (g.is_string()) {
            std::string s = g.get<std::string>();
            if (s == "GLn") out.base = BaseField::F;
            else if (s == "WE") out.base = BaseField::E;
            else throw validation_error("/group: expected \"GLn\", \"WE\" or {\"classical\": ...}");
        } else if (g.is_object() && g.contains("classical")) {
            std::string s = g["classical"].get<std::string>();
            if (s == "Sp") out.classical = ClassicalKind::Sp;
            else if (s == "SOodd") out.classical = ClassicalKind::SOodd;
            else if (s == "U") out.classical = ClassicalKind::Ueven;  // parity fixed below
            else throw validation_error("/group/classical: expected Sp, SOodd or U");
            if (s == "U") out.base = BaseField::E;
        } else {
            throw validation_error("/group: malformed");
        }
    }

    const FieldContext* ctx = out.ctx.get();
    std::vector<IrredSummand> summands;
    if (j.contains("summands")) {
        expect(j["summands"].is_array(), "/summands", "expected an array");
        size_t idx = 0;
        for (const auto& s : j["summands"]) {
            std::string here = "/summands/" + std::to_string(idx++);
            expect(s.is_object() && s.contains("zeta") && s.contains("alpha"), here,
                   "expected {zeta, f, alpha}");
            IrredSummand sum;
            sum.zeta_exp = s["zeta"].get<unsigned>();
            sum.f = s.contains("f") ? s["f"].get<unsigned>() : 0;
            sum.alpha = field_from_json(ctx, s["alpha"], here + "/alpha");
            summands.push_back(std::move(sum));
        }
    }

    if (j.contains("segments")) {
        expect(j["segments"].is_array(), "/segments", "expected an array");
        expect(summands.empty(), "/segments", "give either summands or segments, not both");
        std::vector<Segment> segs;
        size_t idx = 0;
        for (const auto& s : j["segments"]) {
            std::string here = "/segments/" + std::to_string(idx++);
            expect(s.is_object() && s.contains("summand") && s.contains("d"), here,
                   "expected {summand, d}");
            const json& su = s["summand"];
            IrredSummand sum;
            sum.zeta_exp = su["zeta"].get<unsigned>();
            sum.f = su.contains("f") ? su["f"].get<unsigned>() : 0;
            sum.alpha = field_from_json(ctx, su["alpha"], here + "/summand/alpha");
            segs.push_back(Segment{std::move(sum), s["d"].get<unsigned>()});
        }
        out.sl2 = SL2Param(ctx, out.base, std::move(segs));
        out.ss = semisimplify(*out.sl2);
    } else {
        out.ss = SemisimpleParam(ctx, out.base, std::move(summands));
    }

    if (j.contains("N")) {
        expect(!out.sl2.has_value(), "/N", "give either segments or N, not both");
        const json& nj = j["N"];
        unsigned n = out.ss.dimension();
        expect(nj.is_array() && nj.size() == n, "/N",
               "expected an " + std::to_string(n) + "-row matrix");
        Matrix N(ctx, n, n);
        for (unsigned r = 0; r < n; ++r) {
            expect(nj[r].is_array() && nj[r].size() == n, "/N/" + std::to_string(r),
                   "expected " + std::to_string(n) + " entries");
            for (unsigned c = 0; c < n; ++c) {
                const json& e = nj[r][c];
                std::string here = "/N/" + std::to_string(r) + "/" + std::to_string(c);
                if (e.is_number_integer())
                    N.at(r, c) = FieldElem::from_int(ctx, e.get<long>());
                else
                    N.at(r, c) = field_from_json(ctx, e, here);
            }
        }
        out.wd = WDParam(out.ss, std::move(N));
    }

    if (out.classical) {
        // parity of a unitary kind comes from the avatar dimension
        if (*out.classical == ClassicalKind::Ueven && out.ss.dimension() % 2 == 1)
            out.classical = ClassicalKind::Uodd;
    }
    return out;
}

json param_to_json(const SemisimpleParam& p) {
    json out;
    out["q"] = p.ctx()->q();
    out["M"] = p.ctx()->M();
    out["group"] = p.over_E() ? "WE" : "GLn";
    json arr = json::array();
    for (const auto& s : p.summands()) {
        json sj;
        sj["zeta"] = s.zeta_exp;
        sj["f"] = s.f;
        sj["alpha"] = field_to_json(s.alpha);
        arr.push_back(std::move(sj));
    }
    out["summands"] = std::move(arr);
    return out;
}

json param_to_json(const SL2Param& p) {
    json out;
    out["q"] = p.ctx()->q();
    out["M"] = p.ctx()->M();
    out["group"] = p.base() == BaseField::E ? "WE" : "GLn";
    json arr = json::array();
    for (const auto& s : p.segments()) {
        json sj;
        sj["summand"]["zeta"] = s.sigma.zeta_exp;
        sj["summand"]["f"] = s.sigma.f;
        sj["summand"]["alpha"] = field_to_json(s.sigma.alpha);
        sj["d"] = s.d;
        arr.push_back(std::move(sj));
    }
    out["segments"] = std::move(arr);
    return out;
}

json gamma_divisor_to_json(const GammaDivisor& d) {
    json fams = json::array();
    for (const auto& fam : d.families()) {
        json fj;
        fj["orbit"] = fam.orbit;
        fj["f"] = fam.f;
        json entries = json::array();
        for (const auto& [pt, m] : fam.div.support())
            entries.push_back(json::array({field_to_json(pt), m}));
        fj["entries"] = std::move(entries);
        fams.push_back(std::move(fj));
    }
    return fams;
}

GammaDivisor gamma_divisor_from_json(const FieldContext* ctx, const json& j,
                                     const std::string& where) {
    expect(j.is_array(), where, "expected an array of families");
    GammaDivisor out;
    size_t idx = 0;
    for (const auto& fam : j) {
        std::string here = where + "/" + std::to_string(idx++);
        expect(fam.is_object() && fam.contains("orbit") && fam.contains("f") &&
                   fam.contains("entries"),
               here, "expected {orbit, f, entries}");
        unsigned orbit = fam["orbit"].get<unsigned>();
        unsigned f = fam["f"].get<unsigned>();
        size_t eidx = 0;
        for (const auto& e : fam["entries"]) {
            std::string ehere = here + "/entries/" + std::to_string(eidx++);
            expect(e.is_array() && e.size() == 2, ehere, "expected [point, mult]");
            out.add(orbit, f, field_from_json(ctx, e[0], ehere + "/0"),
                    e[1].get<int>());
        }
    }
    return out;
}

}  // namespace wdparam
