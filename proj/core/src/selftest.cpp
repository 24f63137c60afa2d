#include "wdparam/selftest.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "wdparam/converse.hpp"
#include "wdparam/integral.hpp"
#include "wdparam/moduli_count.hpp"
#include "wdparam/parallel.hpp"
#include "wdparam/plancherel.hpp"

namespace wdparam {

namespace {

class ContextCache {
public:
    const FieldContext* get(unsigned M, unsigned q) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(M, q);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, std::make_unique<FieldContext>(M, q)).first;
        return it->second.get();
    }

private:
    std::mutex mu_;
    std::map<std::pair<unsigned, unsigned>, std::unique_ptr<FieldContext>> cache_;
};

std::vector<unsigned> valid_levels(unsigned q, unsigned cap) {
    unsigned p = q;
    for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::vector<unsigned> out;
    for (unsigned M = 1; M <= cap; ++M)
        if (M % p != 0) out.push_back(M);
    return out;
}

WDParam wd_union(const WDParam& a, const WDParam& b) {
    SL2Param sa = wd_to_sl2(a), sb = wd_to_sl2(b);
    std::vector<Segment> segs = sa.segments();
    segs.insert(segs.end(), sb.segments().begin(), sb.segments().end());
    return sl2_to_wd(SL2Param(a.ss().ctx(), a.ss().base(), segs));
}

// ---- exhaustive sweep enumeration (criteria 4 and 5) ----

// sorted offset multisets of size k over [0, k] containing 0
void offset_multisets(unsigned k, unsigned max_val, unsigned min_allowed,
                      std::vector<unsigned>& acc,
                      std::vector<std::vector<unsigned>>& out) {
    if (acc.size() == k) {
        if (!acc.empty() && acc[0] == 0) out.push_back(acc);
        return;
    }
    for (unsigned v = min_allowed; v <= max_val; ++v) {
        acc.push_back(v);
        offset_multisets(k, max_val, v, acc, out);
        acc.pop_back();
    }
}

struct ChainSpec {
    unsigned orbit = 0;
    unsigned f = 1;
    std::vector<unsigned> offsets;
};

// all parameters (up to the geometric equivalences noted in the build notes)
// with dimension <= n_max over the given context
std::vector<SemisimpleParam> sweep_parameters(const FieldContext* ctx, unsigned n_max) {
    unsigned M = ctx->M();
    unsigned long qa = ctx->q() % M;
    // orbit representatives
    std::vector<std::pair<unsigned, unsigned>> orbits;  // (rep, size)
    std::vector<bool> seen(M, false);
    for (unsigned e = 0; e < M; ++e) {
        if (seen[e]) continue;
        for (unsigned x : frobenius_orbit(e, qa, M)) seen[x] = true;
        orbits.emplace_back(e, orbit_size(e, qa, M));
    }

    // shapes per chain size
    std::map<unsigned, std::vector<std::vector<unsigned>>> shapes_by_count;
    for (unsigned k = 1; k <= n_max; ++k) {
        std::vector<unsigned> acc;
        offset_multisets(k, k, 0, acc, shapes_by_count[k]);
    }

    std::vector<std::vector<ChainSpec>> configs;
    std::vector<ChainSpec> current;
    // chains are appended orbit by orbit; within an orbit, shape indices are
    // non-decreasing so multisets are enumerated once
    std::function<void(size_t, unsigned)> rec_orbit = [&](size_t oi, unsigned budget) {
        if (oi == orbits.size()) {
            configs.push_back(current);
            return;
        }
        auto [rep, f] = orbits[oi];
        // flatten the shape choices for this orbit
        std::vector<std::vector<unsigned>> shapes;
        for (unsigned k = 1; k * f <= budget && k <= n_max; ++k)
            for (const auto& s : shapes_by_count[k]) shapes.push_back(s);
        std::function<void(size_t, unsigned)> rec_chain = [&](size_t min_shape,
                                                              unsigned left) {
            rec_orbit(oi + 1, left);  // no further chain on this orbit
            for (size_t si = min_shape; si < shapes.size(); ++si) {
                unsigned dim = static_cast<unsigned>(shapes[si].size()) * f;
                if (dim > left) continue;
                current.push_back(ChainSpec{rep, f, shapes[si]});
                rec_chain(si, left - dim);
                current.pop_back();
            }
        };
        rec_chain(0, budget);
    };
    rec_orbit(0, n_max);

    std::vector<SemisimpleParam> out;
    FieldElem u = FieldElem::from_int(ctx, 7);
    for (const auto& cfg : configs) {
        if (cfg.empty()) continue;
        std::map<unsigned, unsigned> chain_index;  // per-orbit counter
        std::vector<IrredSummand> summands;
        for (const auto& chain : cfg) {
            unsigned idx = chain_index[chain.orbit]++;
            FieldElem base = u.pow(idx);
            for (unsigned off : chain.offsets) {
                FieldElem alpha =
                    base * FieldElem::q_pow(ctx, -static_cast<long>(chain.f) *
                                                     static_cast<long>(off));
                summands.push_back(IrredSummand{chain.orbit, chain.f, alpha});
            }
        }
        out.push_back(SemisimpleParam(ctx, BaseField::F, std::move(summands)));
    }
    return out;
}

// ---- criterion harness ----

struct Runner {
    SelftestOptions opt;
    ContextCache ctxs;
    std::vector<CriterionResult> results;
    std::ostream* progress = nullptr;

    unsigned scaled(unsigned full) const {
        unsigned v = full * opt.scale / 100;
        return v ? v : 1;
    }

    void run(const std::string& id, const std::string& description,
             const std::function<std::string()>& body) {
        CriterionResult r;
        r.id = id;
        r.description = description;
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = body();
            r.passed = true;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (progress) {
            (*progress) << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " "
                        << r.description << " (" << r.detail << ", "
                        << static_cast<int>(r.seconds * 1000) << " ms)\n";
            progress->flush();
        }
        results.push_back(std::move(r));
    }
};

struct failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const unsigned kQs[] = {2, 3, 5};

}  // namespace

std::vector<CriterionResult> run_acceptance(const SelftestOptions& opt,
                                            std::ostream* progress) {
    Runner R;
    R.opt = opt;
    R.progress = progress;

    // C1: gamma only depends on the semisimplification
    R.run("C1", "gamma semisimplification invariance", [&]() -> std::string {
        ParamRng rng(opt.seed ^ 0xC1);
        unsigned count = R.scaled(200);
        for (unsigned i = 0; i < count; ++i) {
            unsigned q = kQs[rng.below(3)];
            auto levels = valid_levels(q, 12);
            unsigned M = levels[rng.below(levels.size())];
            const FieldContext* ctx = R.ctxs.get(M, q);
            WDParam w = random_wd(rng, ctx, BaseField::F, 4);
            if (gamma_ratio(w) != gamma_ratio(WDParam(w.ss())))
                throw failure("mismatch at instance " + std::to_string(i) + " for " +
                              w.ss().str());
        }
        return std::to_string(count) + " instances";
    });

    // C2: gamma multiplicativity and pair-divisor additivity
    R.run("C2", "gamma multiplicativity and Gamma additivity", [&]() -> std::string {
        ParamRng rng(opt.seed ^ 0xC2);
        unsigned count = R.scaled(200);
        for (unsigned i = 0; i < count; ++i) {
            unsigned q = kQs[rng.below(3)];
            auto levels = valid_levels(q, 12);
            unsigned M = levels[rng.below(levels.size())];
            const FieldContext* ctx = R.ctxs.get(M, q);
            WDParam w1 = random_wd(rng, ctx, BaseField::F, 3);
            WDParam w2 = random_wd(rng, ctx, BaseField::F, 3);
            RatFun lhs = gamma_ratio(wd_union(w1, w2));
            RatFun rhs = (gamma_ratio(w1) * gamma_ratio(w2)).monomial_canonical();
            if (lhs != rhs) throw failure("gamma product mismatch at " + std::to_string(i));

            SemisimpleParam tau(ctx, BaseField::F,
                                {random_summand(rng, ctx, BaseField::F, 2)});
            SemisimpleParam p1 = random_ss(rng, ctx, BaseField::F, 3);
            SemisimpleParam p2 = random_ss(rng, ctx, BaseField::F, 3);
            if (big_gamma(tau, direct_sum(p1, p2)) !=
                big_gamma(tau, p1) + big_gamma(tau, p2))
                throw failure("pair divisor not additive in the second argument at " +
                              std::to_string(i));
            if (big_gamma(direct_sum(tau, tau), p1) != big_gamma(tau, p1) * 2)
                throw failure("pair divisor not additive in the first argument at " +
                              std::to_string(i));
        }
        return std::to_string(count) + " pairs";
    });

    // C3: converse round trip
    R.run("C3", "semisimple converse round trip", [&]() -> std::string {
        ParamRng rng(opt.seed ^ 0xC3);
        unsigned count = R.scaled(100);
        for (unsigned i = 0; i < count; ++i) {
            unsigned q = kQs[rng.below(3)];
            auto levels = valid_levels(q, 12);
            unsigned M = levels[rng.below(levels.size())];
            const FieldContext* ctx = R.ctxs.get(M, q);
            SemisimpleParam hidden = random_ss(rng, ctx, BaseField::F, 5);
            SemisimpleParam got = reconstruct(
                [&](const SemisimpleParam& tau) { return big_gamma(tau, hidden); }, 5,
                ctx, BaseField::F);
            if (!is_isomorphic(got, hidden))
                throw failure("round trip failed at instance " + std::to_string(i) +
                              ": hidden " + hidden.str() + " got " + got.str());
        }
        return std::to_string(count) + " parameters";
    });

    // C4 + C5: exhaustive maximal-monodromy sweep
    std::vector<std::string> sweep_failures_c4, sweep_failures_c5;
    std::uint64_t sweep_params_total = 0, sweep_orbits_total = 0;
    R.run("C4", "three-way maximal-monodromy equivalence (exhaustive)", [&]() -> std::string {
        std::vector<SemisimpleParam> all;
        for (unsigned q : kQs)
            for (unsigned M : valid_levels(q, opt.sweep_max_M)) {
                auto part = sweep_parameters(R.ctxs.get(M, q), opt.sweep_max_n);
                all.insert(all.end(), part.begin(), part.end());
            }
        sweep_params_total = all.size();
        std::vector<std::string> fail4(all.size()), fail5(all.size());
        std::atomic<std::uint64_t> orbit_count{0};
        parallel_for(all.size(), [&](size_t i) {
            const SemisimpleParam& r = all[i];
            try {
                Matrix er = twisted_fixed_space(r);
                Matrix vr = monodromy_space(r);
                auto orbits = enumerate_orbits(r, opt.sweep_max_n);
                orbit_count += orbits.size();
                std::vector<size_t> open_idx, holo_idx, max_idx;
                for (size_t oi = 0; oi < orbits.size(); ++oi) {
                    const Matrix& N = orbits[oi].representative;
                    bool open = er.cols() == 0 ||
                                (ad_operator(N) * er).rank() == er.cols();
                    unsigned pole = pole_order_at_1_via_lfactor(WDParam(r, N));
                    if (open) open_idx.push_back(oi);
                    if (pole == 0) holo_idx.push_back(oi);
                    if (open != (pole == 0)) {
                        fail4[i] = "open/holomorphic mismatch for " + r.str();
                        return;
                    }
                }
                for (size_t oi = 0; oi < orbits.size(); ++oi) {
                    bool is_max = true;
                    for (size_t oj = 0; oj < orbits.size(); ++oj)
                        if (oj != oi && !rank_lex_less(orbits[oj].rank_sequence,
                                                       orbits[oi].rank_sequence))
                            is_max = oj == oi;
                    if (is_max) max_idx.push_back(oi);
                }
                if (open_idx.size() != 1)
                    fail4[i] = "open orbit count " + std::to_string(open_idx.size()) +
                               " for " + r.str();
                else if (holo_idx != open_idx)
                    fail4[i] = "holomorphic set differs from open set for " + r.str();
                else if (max_idx != open_idx)
                    fail4[i] = "rank-lex maximal orbit differs for " + r.str();

                // C5: dim V_r = pole order at N = 0, via both routes
                unsigned pole0 = static_cast<unsigned>(er.cols());
                unsigned pole0_l = pole_order_at_1_via_lfactor(WDParam(r));
                if (vr.cols() != pole0 || pole0 != pole0_l)
                    fail5[i] = "dim V_r = " + std::to_string(vr.cols()) +
                               " vs pole orders " + std::to_string(pole0) + "/" +
                               std::to_string(pole0_l) + " for " + r.str();
            } catch (const std::exception& e) {
                fail4[i] = std::string("exception: ") + e.what() + " for " + r.str();
            }
        });
        sweep_orbits_total = orbit_count.load();
        for (auto& f : fail4)
            if (!f.empty()) sweep_failures_c4.push_back(f);
        for (auto& f : fail5)
            if (!f.empty()) sweep_failures_c5.push_back(f);
        if (!sweep_failures_c4.empty()) throw failure(sweep_failures_c4.front());
        return std::to_string(sweep_params_total) + " parameters, " +
               std::to_string(sweep_orbits_total) + " orbits";
    });

    R.run("C5", "dim V_r equals the pole order at s=1 with N=0", [&]() -> std::string {
        if (!sweep_failures_c5.empty()) throw failure(sweep_failures_c5.front());
        if (sweep_params_total == 0) throw failure("sweep did not run");
        return std::to_string(sweep_params_total) + " parameters (shared sweep)";
    });

    // C6: integrality equivalences
    R.run("C6", "integrality equivalences and the discrete-case determinant test",
          [&]() -> std::string {
              ParamRng rng(opt.seed ^ 0xC6);
              unsigned count = R.scaled(200);
              const unsigned long ells[] = {5, 7, 11, 13};
              for (unsigned i = 0; i < count; ++i) {
                  unsigned q = kQs[rng.below(3)];
                  auto levels = valid_levels(q, 12);
                  unsigned M = levels[rng.below(levels.size())];
                  const FieldContext* ctx = R.ctxs.get(M, q);
                  unsigned long ell = 0;
                  for (unsigned t = 0; t < 8 && ell == 0; ++t) {
                      unsigned long cand = ells[rng.below(4)];
                      if (q % cand != 0 && M % cand != 0) ell = cand;
                  }
                  if (ell == 0) ell = 17;
                  WDParam w = random_wd(rng, ctx, BaseField::F, 4);
                  auto rep = integral_predicates(w, ell);
                  if (!rep.all_agree())
                      throw failure("predicate disagreement at " + std::to_string(i));

                  SL2Param single(ctx, BaseField::F,
                                  {Segment{random_summand(rng, ctx, BaseField::F, 2),
                                           1 + static_cast<unsigned>(rng.below(2))}});
                  WDParam ws = sl2_to_wd(single);
                  auto rs = integral_predicates(ws, ell);
                  if (rs.integral != det_integral(ws.ss(), ell))
                      throw failure("discrete-case determinant criterion failed at " +
                                    std::to_string(i));
              }
              return std::to_string(count) + " instances";
          });

    // C7: dictionary bijectivity
    R.run("C7", "SL2/Weil-Deligne dictionary bijectivity", [&]() -> std::string {
        ParamRng rng(opt.seed ^ 0xC7);
        unsigned count = R.scaled(200);
        for (unsigned i = 0; i < count; ++i) {
            unsigned q = kQs[rng.below(3)];
            auto levels = valid_levels(q, 12);
            unsigned M = levels[rng.below(levels.size())];
            const FieldContext* ctx = R.ctxs.get(M, q);
            SL2Param p = random_sl2(rng, ctx, BaseField::F, 5);
            if (wd_to_sl2(sl2_to_wd(p)) != p)
                throw failure("sl2 -> wd -> sl2 failed at " + std::to_string(i));
            WDParam w = random_wd(rng, ctx, BaseField::F, 5);
            if (!wd_isomorphic(sl2_to_wd(wd_to_sl2(w)), w))
                throw failure("wd -> sl2 -> wd failed at " + std::to_string(i));
        }
        return std::to_string(count) + " instances each way";
    });

    // C8: structural identities
    R.run("C8", "Sym2+wedge2 = tensor square; Asai restriction", [&]() -> std::string {
        ParamRng rng(opt.seed ^ 0xC8);
        unsigned count = R.scaled(100);
        for (unsigned i = 0; i < count; ++i) {
            unsigned q = kQs[rng.below(3)];
            auto levels = small_orbit_levels(q, BaseField::F, 2);
            unsigned M = levels[rng.below(levels.size())];
            const FieldContext* ctx = R.ctxs.get(M, q);
            SemisimpleParam p = random_ss(rng, ctx, BaseField::F, 3, true);
            auto [s2, e2] = sym2_ext2(p);
            unsigned n = p.dimension();
            if (s2.dimension() != n * (n + 1) / 2 || e2.dimension() != n * (n - 1) / 2)
                throw failure("Sym2/wedge2 dimensions off at " + std::to_string(i));
            if (!is_isomorphic(direct_sum(s2, e2), tensor(p, p)))
                throw failure("Sym2 + wedge2 != tensor square at " + std::to_string(i));
        }
        unsigned count_asai = R.scaled(50);
        for (unsigned i = 0; i < count_asai; ++i) {
            unsigned q = kQs[rng.below(3)];
            auto levels = small_orbit_levels(q, BaseField::E, 2);
            unsigned M = levels[rng.below(levels.size())];
            const FieldContext* ctx = R.ctxs.get(M, q);
            SemisimpleParam rho = random_ss(rng, ctx, BaseField::E, 3, true);
            MonomialRep rep = MonomialRep::from_param(rho);
            MonomialRep plus = rep.asai(false), minus = rep.asai(true);
            unsigned n = rho.dimension();
            if (plus.dim() != n * n || minus.dim() != n * n)
                throw failure("Asai dimension off at " + std::to_string(i));
            SemisimpleParam both = direct_sum(plus.restrict_to_E().to_param(),
                                              minus.restrict_to_E().to_param());
            SemisimpleParam expect = tensor(rho, conj(rho));
            if (!is_isomorphic(both, direct_sum(expect, expect)))
                throw failure("Asai restriction identity failed at " + std::to_string(i));
        }
        return std::to_string(count) + " + " + std::to_string(count_asai) + " instances";
    });

    // C9: Plancherel multiplicativity
    R.run("C9", "Plancherel multiplicativity identities", [&]() -> std::string {
        ParamRng rng(opt.seed ^ 0xC9);
        unsigned count = R.scaled(100);
        for (unsigned i = 0; i < count; ++i) {
            unsigned q = kQs[rng.below(3)];
            auto levels = valid_levels(q, 8);
            unsigned M = levels[rng.below(levels.size())];
            const FieldContext* ctx = R.ctxs.get(M, q);
            ClassicalKind kind = static_cast<ClassicalKind>(rng.below(4));
            bool unitary =
                kind == ClassicalKind::Ueven || kind == ClassicalKind::Uodd;
            BaseField base = unitary ? BaseField::E : BaseField::F;

            // self-dual (or conjugate-self-dual) core avatar
            SemisimpleParam core_av = SemisimpleParam::empty(ctx, base);
            unsigned pairs = static_cast<unsigned>(rng.below(2)) + (unitary ? 1 : 0);
            for (unsigned t = 0; t < pairs; ++t) {
                SemisimpleParam rho = random_ss(rng, ctx, base, 2);
                core_av = direct_sum(core_av, direct_sum(rho, self_duality_dual(rho)));
            }
            bool want_odd = kind == ClassicalKind::Sp || kind == ClassicalKind::Uodd;
            if (core_av.dimension() % 2 != (want_odd ? 1u : 0u)) {
                FieldElem pm = rng.coin() ? FieldElem::one(ctx) : -FieldElem::one(ctx);
                core_av = direct_sum(core_av, SemisimpleParam::character(pm, base));
            }
            ClassicalParam core(kind, core_av);

            unsigned blocks = 1 + static_cast<unsigned>(rng.below(2));
            std::vector<SemisimpleParam> gl;
            for (unsigned b = 0; b < blocks; ++b)
                gl.push_back(random_ss(rng, ctx, base, 3));

            SemisimpleParam tau = random_ss(rng, ctx, base, 3);
            auto c1 = check_multiplicativity_classical(tau, ClassicalLevi{core, gl});
            if (!c1.holds)
                throw failure("case (1) failed at " + std::to_string(i) + ": lhs " +
                              c1.lhs + " rhs " + c1.rhs);
            auto c2 = check_multiplicativity_gl_blocks(gl, core);
            if (!c2.holds) throw failure("case (2) failed at " + std::to_string(i));
            std::vector<SemisimpleParam> gl2;
            for (unsigned b = 0; b < 1 + rng.below(2); ++b)
                gl2.push_back(random_ss(rng, ctx, base, 3));
            auto c3 = check_multiplicativity_gl_pair(gl, gl2);
            if (!c3.holds) throw failure("case (3) failed at " + std::to_string(i));
        }
        return std::to_string(count) + " Levi instances";
    });

    // C10: Steinberg golden value
    R.run("C10", "Steinberg L-factor across q (convention lock)", [&]() -> std::string {
        for (unsigned q : {2u, 3u, 4u, 5u}) {
            unsigned M = q % 3 == 0 ? 4 : 3;
            const FieldContext* ctx = R.ctxs.get(M, q);
            SL2Param st(ctx, BaseField::F,
                        {Segment{IrredSummand{0, 1, FieldElem::one(ctx)}, 2}});
            RatFun expect(Poly::one(ctx),
                          Poly::one_minus(FieldElem::sqrt_q_pow(ctx, -1)));
            if (l_factor(st) != expect)
                throw failure("Steinberg L-factor wrong for q = " + std::to_string(q));
        }
        return "q in {2,3,4,5}";
    });

    // C11: moduli counts
    R.run("C11", "tame cocycle counts over finite fields", [&]() -> std::string {
        for (unsigned long q : {2ul, 3ul, 4ul, 5ul})
            for (unsigned long ell : {3ul, 5ul, 7ul, 11ul}) {
                if (q % ell == 0) continue;
                if (count_points_pairs(1, q, ell) != count_points_n1_closed_form(q, ell))
                    throw failure("closed form mismatch at q=" + std::to_string(q) +
                                  ", ell=" + std::to_string(ell));
            }
        if (count_points_pairs(2, 2, 3) != count_points_centralizer(2, 2, 3))
            throw failure("n=2 oracles disagree");
        return "n=1 grid and the n=2 double-loop oracle";
    });

    // C12: Galois equivariance of the pair divisor
    R.run("C12", "Galois equivariance of pair divisors", [&]() -> std::string {
        ParamRng rng(opt.seed ^ 0xC12);
        unsigned count = R.scaled(100);
        for (unsigned i = 0; i < count; ++i) {
            unsigned q = kQs[rng.below(3)];
            auto levels = valid_levels(q, 12);
            unsigned M = levels[rng.below(levels.size())];
            const FieldContext* ctx = R.ctxs.get(M, q);
            SemisimpleParam tau(ctx, BaseField::F,
                                {random_summand(rng, ctx, BaseField::F, 3)});
            SemisimpleParam phi = random_ss(rng, ctx, BaseField::F, 4);
            std::vector<long> units;
            for (unsigned k = 1; k < M; ++k)
                if (std::gcd(k, M) == 1) units.push_back(k);
            if (units.empty()) units.push_back(1);
            long k = units[rng.below(units.size())];
            GammaDivisor lhs = big_gamma(tau, phi).galois(k, ctx, phi.q_act());
            GammaDivisor rhs = big_gamma(galois(tau, k), galois(phi, k));
            if (lhs != rhs)
                throw failure("equivariance failed at " + std::to_string(i) +
                              " with k=" + std::to_string(k));
        }
        return std::to_string(count) + " instances";
    });

    return R.results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace wdparam
