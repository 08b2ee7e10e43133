#include "jackal/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

namespace jackal {

bool Report::regressions() const {
    for (const Failure& f : failures)
        if (f.regression) return true;
    return false;
}

nlohmann::json Report::to_json() const {
    nlohmann::json fs = nlohmann::json::array();
    for (const Failure& f : failures)
        fs.push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return {{"suite", suite}, {"bound", bound}, {"cases", cases}, {"failures", fs}, {"ms", ms}};
}

std::string Report::text() const {
    std::ostringstream os;
    os << "suite " << suite << " (bound " << bound.dump() << "): " << cases << " cases, ";
    if (failures.empty())
        os << "pass";
    else
        os << failures.size() << " failure" << (failures.size() == 1 ? "" : "s");
    os << " [" << ms << " ms]\n";
    for (const Failure& f : failures)
        os << "  " << (f.regression ? "regression " : "finding    ") << f.input.dump()
           << "\n    lhs: " << f.lhs << "\n    rhs: " << f.rhs << "\n";
    return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

struct SuiteTimer {
    Clock::time_point t0 = Clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    }
};

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Failure fail(nlohmann::json input, std::string lhs, std::string rhs, bool regression = true) {
    Failure f;
    f.input = std::move(input);
    f.lhs = std::move(lhs);
    f.rhs = std::move(rhs);
    f.regression = regression;
    return f;
}

// Runs body(), converting a thrown exception into a single regression failure
// carrying the case input, so a broken internal assertion surfaces in the
// report instead of aborting the sweep.
template <typename Body>
std::vector<Failure> guarded(const nlohmann::json& input, Body&& body) {
    try {
        return body();
    } catch (const std::exception& ex) {
        nlohmann::json in = input;
        in["exception"] = true;
        return {fail(std::move(in), ex.what(), "no exception")};
    }
}

// Runs fn(i) for i in [0, count), optionally across opt.jobs threads; the
// per-case failure lists are merged in index order, keeping reports
// deterministic regardless of scheduling.
template <typename Fn>
void run_cases(std::size_t count, const RunOptions& opt, Report* rep, Fn&& fn) {
    rep->cases += count;
    std::vector<std::vector<Failure>> got(count);
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) got[i] = fn(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < count; i = next++) got[i] = fn(i);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    for (std::vector<Failure>& v : got)
        for (Failure& f : v) rep->failures.push_back(std::move(f));
}

std::vector<SkewShape> all_skew_shapes(int max_size) {
    std::vector<SkewShape> out;
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            for (const Partition& mu : subpartitions(lam)) out.push_back(SkewShape(lam, mu));
    return out;
}

Partition ones(int n) { return Partition(std::vector<int>(n, 1)); }

using FactorMap = std::map<std::pair<long, long>, int>;

void bump_factors(FactorMap& m, const std::vector<std::pair<long, long>>& fs, int d) {
    for (const auto& f : fs) {
        auto it = m.find(f);
        if (it == m.end())
            m.emplace(f, d);
        else if ((it->second += d) == 0)
            m.erase(it);
    }
}

// alpha^power * p(1/alpha) as a polynomial, or nullopt when the shift runs
// negative.
std::optional<AlphaPoly> inv_alpha_scaled(const AlphaPoly& p, int power) {
    if (p.is_zero()) return AlphaPoly();
    auto [q, shift] = p.invert_alpha();
    if (power < shift) return std::nullopt;
    return q * AlphaPoly::alpha(power - shift);
}

}  // namespace

Report suite_translation(Engine& e, int max_size, const RunOptions& opt) {
    SuiteTimer timer;
    Report rep;
    rep.suite = "translation";
    rep.bound = max_size;
    std::vector<SkewShape> shapes = all_skew_shapes(max_size);
    run_cases(shapes.size(), opt, &rep, [&](std::size_t idx) {
        const SkewShape& shape = shapes[idx];
        nlohmann::json input{{"shape", shape.str()}};
        return guarded(input, [&]() -> std::vector<Failure> {
            std::vector<Failure> fails;
            Translation tr = translate_minimal(shape);
            const SkewShape& tsh = tr.shape;
            MixedHookData big = mixed_products(shape.inner, shape.outer);
            MixedHookData small = mixed_products(tsh.inner, tsh.outer);
            AlphaPoly fl = big.c * big.cp;
            AlphaPoly fr = small.c * small.cp;

            SymFuncM lhs = e.skew_def(tsh).f;
            lhs *= AlphaRat(fl);
            SymFuncM rhs = e.skew_def(shape).f;
            rhs *= AlphaRat(fr);
            if (!(lhs == rhs)) {
                nlohmann::json in = input;
                in["check"] = "theorem";
                fails.push_back(fail(std::move(in), lhs.str(), rhs.str()));
            }

            for (const Partition& nu : enumerate_partitions(shape.size()))
                for (const Chain& ch : standard_chains(shape, nu)) {
                    Chain tch;
                    for (const Partition& st : ch.steps)
                        tch.steps.push_back(
                            translate_partition(st, tr.rows_removed, tr.cols_removed));
                    FactorMap lm = w_factor_exponents(tch);
                    bump_factors(lm, big.c_fac, 1);
                    bump_factors(lm, big.cp_fac, 1);
                    FactorMap rm = w_factor_exponents(ch);
                    bump_factors(rm, small.c_fac, 1);
                    bump_factors(rm, small.cp_fac, 1);
                    if (lm == rm) continue;
                    AlphaRat lw = w_weight(tch) * AlphaRat(fl);
                    AlphaRat rw = w_weight(ch) * AlphaRat(fr);
                    if (lw == rw) continue;
                    nlohmann::json in = input;
                    in["check"] = "tableau";
                    in["content"] = nu.str();
                    nlohmann::json steps = nlohmann::json::array();
                    for (const Partition& st : ch.steps) steps.push_back(st.str());
                    in["chain"] = steps;
                    fails.push_back(fail(std::move(in), lw.str(), rw.str()));
                }

            if (tsh.inner.empty()) {
                AlphaPoly lhsg = e.g_poly(shape.outer, shape.inner, tsh.outer);
                HookData ht = hook_products(tsh.outer);
                AlphaPoly rhsg = fl * ht.c;
                rhsg *= ht.cp;
                if (!(lhsg == rhsg)) {
                    nlohmann::json in = input;
                    in["check"] = "g-form";
                    fails.push_back(fail(std::move(in), lhsg.str(), rhsg.str()));
                }
            }
            return fails;
        });
    });
    rep.ms = timer.ms();
    return rep;
}

Report suite_rotation(Engine& e, int max_area, const RunOptions& opt) {
    SuiteTimer timer;
    Report rep;
    rep.suite = "rotation";
    rep.bound = max_area;
    struct Case {
        int b, h;
        Partition lam, mu;
    };
    std::vector<Case> cases;
    for (int h = 1; h <= max_area; ++h)
        for (int b = 1; b * h <= max_area; ++b) {
            Partition beta(std::vector<int>(h, b));
            for (const Partition& lam : subpartitions(beta))
                for (const Partition& mu : subpartitions(lam))
                    cases.push_back({b, h, lam, mu});
        }
    run_cases(cases.size(), opt, &rep, [&](std::size_t idx) {
        const Case& cs = cases[idx];
        nlohmann::json input{{"rectangle", Partition(std::vector<int>(cs.h, cs.b)).str()},
                             {"lambda", cs.lam.str()},
                             {"mu", cs.mu.str()}};
        return guarded(input, [&]() -> std::vector<Failure> {
            std::vector<Failure> fails;
            Partition lhat = rotated_complement(cs.lam, cs.b, cs.h);
            Partition mhat = rotated_complement(cs.mu, cs.b, cs.h);
            SkewShape shape(cs.lam, cs.mu);
            SkewShape rshape(mhat, lhat);
            MixedHookData big = mixed_products(cs.mu, cs.lam);
            MixedHookData rot = mixed_products(lhat, mhat);
            AlphaPoly fl = big.c * big.cp;
            AlphaPoly fr = rot.c * rot.cp;

            SymFuncM lhs = e.skew_def(rshape).f;
            lhs *= AlphaRat(fl);
            SymFuncM rhs = e.skew_def(shape).f;
            rhs *= AlphaRat(fr);
            if (!(lhs == rhs)) {
                nlohmann::json in = input;
                in["check"] = "theorem";
                fails.push_back(fail(std::move(in), lhs.str(), rhs.str()));
            }

            for (const Partition& nu : enumerate_partitions(shape.size()))
                for (const Chain& ch : standard_chains(shape, nu)) {
                    Chain hat;
                    for (std::size_t k = ch.steps.size(); k-- > 0;)
                        hat.steps.push_back(rotated_complement(ch.steps[k], cs.b, cs.h));
                    FactorMap lm = w_factor_exponents(hat);
                    bump_factors(lm, big.c_fac, 1);
                    bump_factors(lm, big.cp_fac, 1);
                    FactorMap rm = w_factor_exponents(ch);
                    bump_factors(rm, rot.c_fac, 1);
                    bump_factors(rm, rot.cp_fac, 1);
                    if (lm == rm) continue;
                    AlphaRat lw = w_weight(hat) * AlphaRat(fl);
                    AlphaRat rw = w_weight(ch) * AlphaRat(fr);
                    if (lw == rw) continue;
                    nlohmann::json in = input;
                    in["check"] = "tableau";
                    in["content"] = nu.str();
                    nlohmann::json steps = nlohmann::json::array();
                    for (const Partition& st : ch.steps) steps.push_back(st.str());
                    in["chain"] = steps;
                    fails.push_back(fail(std::move(in), lw.str(), rw.str()));
                }

            if (cs.lam == Partition(std::vector<int>(cs.h, cs.b))) {
                AlphaPoly g = e.g_poly(cs.lam, cs.mu, mhat);
                HookData hm = hook_products(mhat);
                AlphaPoly form1 = fl * hm.c;
                form1 *= hm.cp;
                MixedHookData alt = mixed_products(mhat, cs.lam);
                HookData hmu = hook_products(cs.mu);
                AlphaPoly form2 = alt.c * alt.cp;
                form2 *= hmu.c;
                form2 *= hmu.cp;
                if (!(g == form1)) {
                    nlohmann::json in = input;
                    in["check"] = "g-form-outer";
                    fails.push_back(fail(std::move(in), g.str(), form1.str()));
                }
                if (!(g == form2)) {
                    nlohmann::json in = input;
                    in["check"] = "g-form-inner";
                    fails.push_back(fail(std::move(in), g.str(), form2.str()));
                }
            }
            return fails;
        });
    });
    rep.ms = timer.ms();
    return rep;
}

Report suite_duality(Engine& e, int max_size, const RunOptions& opt) {
    SuiteTimer timer;
    Report rep;
    rep.suite = "duality";
    rep.bound = max_size;

    std::vector<Partition> parts;
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& nu : enumerate_partitions(n)) parts.push_back(nu);
    run_cases(parts.size(), opt, &rep, [&](std::size_t idx) {
        const Partition& nu = parts[idx];
        nlohmann::json input{{"nu", nu.str()}, {"check", "norm"}};
        return guarded(input, [&]() -> std::vector<Failure> {
            AlphaPoly lhs = hook_products(nu.conjugate()).j;
            std::optional<AlphaPoly> rhs = inv_alpha_scaled(hook_products(nu).j, 2 * nu.size());
            if (rhs && lhs == *rhs) return {};
            return {fail(input, lhs.str(), rhs ? rhs->str() : "negative shift")};
        });
    });

    std::vector<SkewShape> shapes = all_skew_shapes(max_size);
    run_cases(shapes.size(), opt, &rep, [&](std::size_t idx) {
        const SkewShape& shape = shapes[idx];
        nlohmann::json input{{"shape", shape.str()}, {"check", "skew"}};
        return guarded(input, [&]() -> std::vector<Failure> {
            int n = shape.size();
            SkewShape conj(shape.outer.conjugate(), shape.inner.conjugate());
            SymFuncM lhs = e.skew_def(conj).f;
            std::vector<AlphaRat> phat = to_p_coeffs(e.skew_def(shape).f);
            AlphaRat theta(AlphaPoly(-1), AlphaPoly::alpha(1));  // -1/alpha
            AlphaRat scale = AlphaRat(AlphaPoly::linear(-1, 0))
                                 .pow(shape.outer.size() + shape.inner.size());
            const TransitionTable& t = transition(n);
            for (std::size_t i = 0; i < phat.size(); ++i) {
                if (phat[i].is_zero()) continue;
                phat[i] = phat[i].subst_inv_alpha() * theta.pow(t.parts[i].length()) * scale;
            }
            SymFuncM rhs = from_p_coeffs(n, phat);
            if (lhs == rhs) return {};
            return {fail(input, lhs.str(), rhs.str())};
        });
    });

    std::vector<Partition> lams;
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& lam : enumerate_partitions(n)) lams.push_back(lam);
    run_cases(lams.size(), opt, &rep, [&](std::size_t idx) {
        const Partition& lam = lams[idx];
        nlohmann::json input{{"lambda", lam.str()}, {"check", "g"}};
        return guarded(input, [&]() -> std::vector<Failure> {
            std::vector<Failure> fails;
            int m = lam.size();
            Partition lamc = lam.conjugate();
            for (int k = 0; k <= m; ++k)
                for (const Partition& mu : enumerate_partitions(k))
                    for (const Partition& nu : enumerate_partitions(m - k)) {
                        AlphaPoly lhs = e.g_poly(lamc, mu.conjugate(), nu.conjugate());
                        std::optional<AlphaPoly> rhs =
                            inv_alpha_scaled(e.g_poly(lam, mu, nu), 2 * m);
                        if (rhs && lhs == *rhs) continue;
                        nlohmann::json in = input;
                        in["mu"] = mu.str();
                        in["nu"] = nu.str();
                        fails.push_back(
                            fail(std::move(in), lhs.str(), rhs ? rhs->str() : "negative shift"));
                    }
            return fails;
        });
    });

    rep.ms = timer.ms();
    return rep;
}

Report suite_prefix(Engine& e, int max_size, const RunOptions& opt) {
    SuiteTimer timer;
    Report rep;
    rep.suite = "prefix";
    rep.bound = max_size;
    std::vector<SkewShape> shapes;
    for (const SkewShape& sh : all_skew_shapes(max_size)) {
        bool eligible = true;
        for (int i = 1; i < sh.inner.length(); ++i)
            if (sh.inner.part(i) != sh.outer.part(i)) {
                eligible = false;
                break;
            }
        if (eligible) shapes.push_back(sh);
    }
    run_cases(shapes.size(), opt, &rep, [&](std::size_t idx) {
        const SkewShape& shape = shapes[idx];
        nlohmann::json input{{"shape", shape.str()}};
        return guarded(input, [&]() -> std::vector<Failure> {
            std::vector<Failure> fails;
            AlphaRat cp(hook_products(shape.inner).cp);
            for (const Partition& nu : enumerate_partitions(shape.size())) {
                AlphaRat lhs = e.skew_coeff(shape, nu);
                Partition target = combine(shape.inner, nu, CombineMode::set_union);
                AlphaRat rhs = cp * e.jack(shape.outer).coeff(target);
                if (lhs == rhs) continue;
                nlohmann::json in = input;
                in["nu"] = nu.str();
                fails.push_back(fail(std::move(in), lhs.str(), rhs.str()));
            }
            return fails;
        });
    });
    rep.ms = timer.ms();
    return rep;
}

Report suite_split(Engine& e, int max_size, int xvars, int yvars, const RunOptions& opt) {
    SuiteTimer timer;
    Report rep;
    rep.suite = "split";
    rep.bound = {{"max_size", max_size}, {"xvars", xvars}, {"yvars", yvars}};
    std::vector<SkewShape> shapes = all_skew_shapes(max_size);
    run_cases(shapes.size(), opt, &rep, [&](std::size_t idx) {
        const SkewShape& shape = shapes[idx];
        nlohmann::json input{{"shape", shape.str()}};
        return guarded(input, [&]() -> std::vector<Failure> {
            int total = xvars + yvars;
            MultiPoly lhs = eval_finite(e.skew_def(shape).f, total);
            MultiPoly rhs(total);
            for (const Partition& nu : subpartitions(shape.outer)) {
                if (!nu.contains(shape.inner)) continue;
                MultiPoly px =
                    eval_finite(e.skew_def(SkewShape(shape.outer, nu)).f, xvars).embed(total, 0);
                MultiPoly py =
                    eval_finite(e.skew_def(SkewShape(nu, shape.inner)).f, yvars)
                        .embed(total, xvars);
                MultiPoly term = px * py;
                term *= AlphaRat(AlphaPoly(1), hook_products(nu).j);
                rhs += term;
            }
            if (lhs == rhs) return {};
            return {fail(input, "evaluation in x,y variables", "split sum over middle shapes")};
        });
    });
    rep.ms = timer.ms();
    return rep;
}

Report suite_consistency(Engine& e, int max_size, const RunOptions& opt) {
    SuiteTimer timer;
    Report rep;
    rep.suite = "consistency";
    rep.bound = max_size;

    std::vector<Partition> lams;
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& lam : enumerate_partitions(n)) lams.push_back(lam);
    run_cases(lams.size(), opt, &rep, [&](std::size_t idx) {
        const Partition& lam = lams[idx];
        nlohmann::json input{{"lambda", lam.str()}};
        return guarded(input, [&]() -> std::vector<Failure> {
            std::vector<Failure> fails;
            int n = lam.size();
            const SymFuncM& f = e.jack(lam);
            HookData h = hook_products(lam);
            if (!(f.coeff(ones(n)) == AlphaRat(Rational(factorial(n))))) {
                nlohmann::json in = input;
                in["check"] = "lowest-coefficient";
                fails.push_back(fail(std::move(in), f.coeff(ones(n)).str(),
                                     rat_str(Rational(factorial(n)))));
            }
            if (!(f.coeff(lam) == AlphaRat(h.c))) {
                nlohmann::json in = input;
                in["check"] = "leading-coefficient";
                fails.push_back(fail(std::move(in), f.coeff(lam).str(), h.c.str()));
            }
            if (!(f == e.jack_gs(lam))) {
                nlohmann::json in = input;
                in["check"] = "orthogonalization-route";
                fails.push_back(fail(std::move(in), f.str(), e.jack_gs(lam).str()));
            }
            return fails;
        });
    });

    std::vector<std::pair<Partition, Partition>> pairs;
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            for (const Partition& mu : enumerate_partitions(n)) pairs.emplace_back(lam, mu);
    run_cases(pairs.size(), opt, &rep, [&](std::size_t idx) {
        const auto& [lam, mu] = pairs[idx];
        nlohmann::json input{{"lambda", lam.str()}, {"mu", mu.str()}, {"check", "inner"}};
        return guarded(input, [&]() -> std::vector<Failure> {
            AlphaRat got = inner(e.jack(lam), e.jack(mu));
            AlphaRat want = lam == mu ? AlphaRat(hook_products(lam).j) : AlphaRat();
            if (got == want) return {};
            return {fail(input, got.str(), want.str())};
        });
    });

    std::vector<SkewShape> shapes = all_skew_shapes(max_size);
    run_cases(shapes.size(), opt, &rep, [&](std::size_t idx) {
        const SkewShape& shape = shapes[idx];
        nlohmann::json input{{"shape", shape.str()}};
        return guarded(input, [&]() -> std::vector<Failure> {
            std::vector<Failure> fails;
            SymFuncM st = e.skew_stanley(shape).f;
            SymFuncM df = e.skew_def(shape).f;
            if (!(st == df)) {
                nlohmann::json in = input;
                in["check"] = "tableau-vs-definition";
                fails.push_back(fail(std::move(in), st.str(), df.str()));
            }
            MaxFilling mf = max_filling_weight(shape);
            AlphaRat lead = df.coeff(mf.nu0);
            if (!(lead == AlphaRat(leading_formula(shape)))) {
                nlohmann::json in = input;
                in["check"] = "leading-closed-form";
                fails.push_back(fail(std::move(in), lead.str(), leading_formula(shape).str()));
            }
            for (const auto& [nu, v] : df.terms())
                if (!v.is_zero() && !dominates(mf.nu0, nu)) {
                    nlohmann::json in = input;
                    in["check"] = "triangularity";
                    in["nu"] = nu.str();
                    fails.push_back(fail(std::move(in), nu.str(), "dominated by " + mf.nu0.str()));
                }
            if (shape.inner == shape.outer) {
                AlphaRat cst = df.coeff(Partition());
                if (!(cst == AlphaRat(hook_products(shape.outer).j))) {
                    nlohmann::json in = input;
                    in["check"] = "norm-as-constant";
                    fails.push_back(
                        fail(std::move(in), cst.str(), hook_products(shape.outer).j.str()));
                }
            }
            return fails;
        });
    });

    rep.ms = timer.ms();
    return rep;
}

std::vector<Report> verify_all(Engine& e, int max_size, const RunOptions& opt) {
    std::vector<Report> out;
    out.push_back(suite_translation(e, max_size, opt));
    out.push_back(suite_rotation(e, max_size, opt));
    out.push_back(suite_duality(e, max_size, opt));
    out.push_back(suite_prefix(e, max_size, opt));
    out.push_back(suite_split(e, max_size, 2, 2, opt));
    out.push_back(suite_consistency(e, max_size, opt));
    return out;
}

Report conjecture_main(Engine& e, int max_size, const RunOptions& opt) {
    SuiteTimer timer;
    Report rep;
    rep.suite = "main";
    rep.bound = max_size;
    std::vector<SkewShape> shapes = all_skew_shapes(max_size);
    run_cases(shapes.size(), opt, &rep, [&](std::size_t idx) {
        const SkewShape& shape = shapes[idx];
        nlohmann::json input{{"shape", shape.str()}};
        return guarded(input, [&]() -> std::vector<Failure> {
            std::vector<Failure> fails;
            SymFuncM f = e.skew_def(shape).f;
            for (const auto& [nu, v] : f.terms()) {
                if (v.is_zero()) continue;
                AlphaRat tv = v / AlphaRat(Rational(stats(nu).u));
                if (tv.is_poly() && tv.as_poly().nonneg_int()) continue;
                nlohmann::json in = input;
                in["nu"] = nu.str();
                fails.push_back(fail(std::move(in), tv.str(),
                                     "polynomial with nonnegative integer coefficients", false));
            }
            return fails;
        });
    });
    rep.ms = timer.ms();
    return rep;
}

Report conjecture_stanley(Engine& e, int max_size, const RunOptions& opt) {
    SuiteTimer timer;
    Report rep;
    rep.suite = "stanley";
    rep.bound = max_size;
    std::vector<Partition> lams;
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& lam : enumerate_partitions(n)) lams.push_back(lam);
    run_cases(lams.size(), opt, &rep, [&](std::size_t idx) {
        const Partition& lam = lams[idx];
        nlohmann::json input{{"lambda", lam.str()}};
        return guarded(input, [&]() -> std::vector<Failure> {
            std::vector<Failure> fails;
            int m = lam.size();
            for (int k = 0; k <= m; ++k)
                for (const Partition& mu : enumerate_partitions(k))
                    for (const Partition& nu : enumerate_partitions(m - k)) {
                        AlphaPoly g = e.g_poly(lam, mu, nu);  // integrality asserted inside
                        if (g.nonneg_int()) continue;
                        nlohmann::json in = input;
                        in["mu"] = mu.str();
                        in["nu"] = nu.str();
                        fails.push_back(
                            fail(std::move(in), g.str(), "nonnegative integer coefficients",
                                 false));
                    }
            return fails;
        });
    });
    rep.ms = timer.ms();
    return rep;
}

namespace {

struct FactorOption {
    std::pair<long, long> prim;
    Int content;
    bool constant;
};

FactorOption make_option(long a, long b) {
    long d = std::gcd(a, b);
    if (d == 0) d = 1;
    return {{a / d, b / d}, Int(d), a == 0};
}

// Picks one of the two options per slot so that the primitive factors match
// `need` exactly, the contents multiply to `unit`, and each side stays within
// its budget. Budgets of slots.size() make the count unconstrained.
struct AssignmentSearch {
    const std::vector<std::array<FactorOption, 2>>* slots = nullptr;
    FactorMap need;
    long need_total = 0;
    Int unit = 1;
    long budget[2] = {0, 0};

    bool run() { return go(0); }

    bool go(std::size_t k) {
        if (k == slots->size()) return need_total == 0 && unit == 1;
        if (need_total > static_cast<long>(slots->size() - k)) return false;
        for (int side = 0; side < 2; ++side) {
            if (budget[side] <= 0) continue;
            const FactorOption& o = (*slots)[k][side];
            if (unit % o.content != 0) continue;
            int* cnt = nullptr;
            if (!o.constant) {
                auto it = need.find(o.prim);
                if (it == need.end() || it->second == 0) continue;
                cnt = &it->second;
            }
            --budget[side];
            unit /= o.content;
            if (cnt) {
                --*cnt;
                --need_total;
            }
            bool ok = go(k + 1);
            if (cnt) {
                ++*cnt;
                ++need_total;
            }
            unit *= o.content;
            ++budget[side];
            if (ok) return true;
        }
        return false;
    }
};

// Assignment existence for a factored polynomial over hook-choice slots.
// Returns 0 when found within the balanced budgets, 1 when found only
// unconstrained, 2 when no assignment exists at all.
int assignment_status(const LinearFactorization& fac,
                      const std::vector<std::array<FactorOption, 2>>& slots, long balanced) {
    if (!is_integer(fac.unit) || fac.unit <= 0) return 2;
    AssignmentSearch s;
    s.slots = &slots;
    for (const LinearFactor& f : fac.factors) {
        s.need[{f.a, f.b}] = f.mult;
        s.need_total += f.mult;
    }
    s.unit = fac.unit.get_num();
    s.budget[0] = s.budget[1] = balanced;
    if (s.run()) return 0;
    s.budget[0] = s.budget[1] = static_cast<long>(slots.size());
    return s.run() ? 1 : 2;
}

std::vector<std::array<FactorOption, 2>> hook_slots(const Partition& pi) {
    std::vector<std::array<FactorOption, 2>> slots;
    for (int i = 1; i <= pi.length(); ++i)
        for (int j = 1; j <= pi.part(i); ++j) {
            auto [a, l] = arm_leg(pi, {i, j});
            slots.push_back({make_option(a, l + 1), make_option(a + 1, l)});
        }
    return slots;
}

}  // namespace

Report conjecture_linear_factors(Engine& e, int max_size, const RunOptions& opt) {
    SuiteTimer timer;
    Report rep;
    rep.suite = "linear-factors";
    rep.bound = max_size;
    std::vector<Partition> lams;
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& lam : enumerate_partitions(n)) lams.push_back(lam);
    run_cases(lams.size(), opt, &rep, [&](std::size_t idx) {
        const Partition& lam = lams[idx];
        nlohmann::json input{{"lambda", lam.str()}};
        return guarded(input, [&]() -> std::vector<Failure> {
            std::vector<Failure> fails;
            int m = lam.size();
            for (int k = 0; k <= m; ++k)
                for (const Partition& mu : enumerate_partitions(k))
                    for (const Partition& nu : enumerate_partitions(m - k)) {
                        AlphaPoly g = e.g_poly(lam, mu, nu);
                        nlohmann::json in = input;
                        in["mu"] = mu.str();
                        in["nu"] = nu.str();

                        // Proven closed forms when they apply, regardless of
                        // the structure coefficient.
                        if (lam.contains(mu)) {
                            SkewShape sh(lam, mu);
                            if (max_filling_weight(sh).nu0 == nu) {
                                AlphaPoly want = leading_formula(sh) * hook_products(nu).cp;
                                if (!(g == want)) {
                                    nlohmann::json j = in;
                                    j["check"] = "top-content-closed-form";
                                    fails.push_back(fail(std::move(j), g.str(), want.str()));
                                }
                            }
                            std::vector<int> diffs;
                            for (int i = 1; i <= lam.length(); ++i)
                                if (lam.part(i) > mu.part(i))
                                    diffs.push_back(lam.part(i) - mu.part(i));
                            std::sort(diffs.rbegin(), diffs.rend());
                            if (Partition(diffs) == nu)
                                for (const std::vector<int>& sg : prv_sigmas(lam, mu)) {
                                    AlphaPoly want = prv_formula(lam, mu, sg);
                                    if (g == want) continue;
                                    nlohmann::json j = in;
                                    j["check"] = "row-difference-closed-form";
                                    j["sigma"] = sg;
                                    fails.push_back(fail(std::move(j), g.str(), want.str()));
                                }
                        }

                        if (g.is_zero() || e.lr_coeff(lam, mu, nu) != 1) continue;
                        std::optional<LinearFactorization> fac = linear_factorize(g);
                        if (!fac) {
                            nlohmann::json j = in;
                            j["check"] = "linear-factorization";
                            fails.push_back(
                                fail(std::move(j), g.str(), "product of linear factors", false));
                            continue;
                        }
                        std::vector<std::array<FactorOption, 2>> slots = hook_slots(lam);
                        for (auto& s : hook_slots(mu)) slots.push_back(s);
                        for (auto& s : hook_slots(nu)) slots.push_back(s);
                        int status = assignment_status(*fac, slots, m);
                        if (status == 1) {
                            nlohmann::json j = in;
                            j["check"] = "factor-assignment-balance";
                            fails.push_back(fail(std::move(j), g.str(),
                                                 "hook assignment with both choices used " +
                                                     std::to_string(m) + " times",
                                                 false));
                        } else if (status == 2) {
                            nlohmann::json j = in;
                            j["check"] = "factor-assignment";
                            fails.push_back(
                                fail(std::move(j), g.str(), "hook factor assignment", false));
                        }
                    }
            return fails;
        });
    });
    rep.ms = timer.ms();
    return rep;
}

Report conjecture_ratio(Engine& e, int max_size, const RunOptions& opt) {
    SuiteTimer timer;
    Report rep;
    rep.suite = "ratio";
    rep.bound = max_size;
    std::vector<Partition> lams;
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& lam : enumerate_partitions(n)) lams.push_back(lam);
    run_cases(lams.size(), opt, &rep, [&](std::size_t idx) {
        const Partition& lam = lams[idx];
        nlohmann::json input{{"lambda", lam.str()}};
        return guarded(input, [&]() -> std::vector<Failure> {
            std::vector<Failure> fails;
            for (int h = 1; h < lam.length(); ++h)
                for (int b = std::max(1, lam.part(h + 1)); b <= lam.part(h); ++b) {
                    std::vector<int> phiv, psiv;
                    for (int i = 1; i <= h; ++i)
                        if (lam.part(i) > b) phiv.push_back(lam.part(i) - b);
                    for (int i = h + 1; i <= lam.length(); ++i) psiv.push_back(lam.part(i));
                    Partition phi(phiv), psi(psiv);
                    if (phi.empty() || psi.empty()) continue;
                    Partition mu(std::vector<int>(h, b));
                    Partition sum = combine(phi, psi, CombineMode::row_sum);
                    Partition uni = combine(phi, psi, CombineMode::set_union);
                    for (const Partition& nu : enumerate_partitions(lam.size() - b * h)) {
                        if (e.lr_coeff(lam, mu, nu) != 1) continue;
                        bool proven = nu == sum || nu == uni;
                        nlohmann::json in = input;
                        in["mu"] = mu.str();
                        in["nu"] = nu.str();
                        in["phi"] = phi.str();
                        in["psi"] = psi.str();
                        AlphaPoly g = e.g_poly(lam, mu, nu);
                        AlphaPoly gden = e.g_poly(nu, phi, psi);
                        if (gden.is_zero()) {
                            in["check"] = "component-denominator";
                            fails.push_back(
                                fail(std::move(in), "0", "nonzero component product", proven));
                            continue;
                        }
                        AlphaPoly q;
                        try {
                            q = g.divexact(gden);
                        } catch (const std::domain_error&) {
                            in["check"] = "divisibility";
                            fails.push_back(fail(std::move(in), g.str(), gden.str(), proven));
                            continue;
                        }
                        std::optional<LinearFactorization> fac = linear_factorize(q);
                        if (!fac) {
                            in["check"] = "linear-factorization";
                            fails.push_back(
                                fail(std::move(in), q.str(), "product of linear factors", proven));
                            continue;
                        }
                        std::vector<std::array<FactorOption, 2>> slots;
                        for (int i = 1; i <= mu.length(); ++i)
                            for (int j = 1; j <= mu.part(i); ++j) {
                                auto [al, ll] = arm_leg(lam, {i, j});
                                slots.push_back(
                                    {make_option(al, ll + 1), make_option(al + 1, ll)});
                                auto [am, lm] = arm_leg(mu, {i, j});
                                slots.push_back(
                                    {make_option(am, lm + 1), make_option(am + 1, lm)});
                            }
                        int status = assignment_status(*fac, slots, mu.size());
                        if (status != 0) {
                            in["check"] =
                                status == 1 ? "factor-assignment-balance" : "factor-assignment";
                            fails.push_back(fail(std::move(in), q.str(),
                                                 "hook assignment over the rectangle", proven));
                        }
                    }
                }
            return fails;
        });
    });
    rep.ms = timer.ms();
    return rep;
}

std::vector<Partition> lowest_default_family(const Partition& mu, int max_size) {
    std::vector<Partition> fam;
    for (int n = mu.size(); n <= max_size; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            if (lam.contains(mu)) fam.push_back(lam);
    return fam;
}

PiTable solve_lowest(Engine& e, const Partition& mu, const std::vector<Partition>& family) {
    PiTable t;
    t.mu = mu;
    t.family = family;
    std::vector<Configuration> classes;
    std::map<Configuration, std::size_t> col_of;
    std::vector<std::map<std::size_t, long>> sparse;
    std::vector<AlphaPoly> rhs;
    for (const Partition& lam : family) {
        if (!lam.contains(mu))
            throw std::invalid_argument("family member " + lam.str() + " does not contain " +
                                        mu.str());
        std::map<Configuration, long> counts;
        for (const Configuration& cf : admissible_configs(mu, lam))
            ++counts[config_canonical(cf)];
        int n = lam.size() - mu.size();
        AlphaRat v = e.skew_coeff(SkewShape(lam, mu), ones(n));
        v = v / AlphaRat(Rational(factorial(n)));
        if (!v.is_poly()) {
            t.consistent = false;
            t.notes.push_back("lowest coefficient of " + lam.str() + "/" + mu.str() +
                              " is not a polynomial: " + v.str());
            continue;
        }
        std::map<std::size_t, long> row;
        for (const auto& [cls, cnt] : counts) {
            auto [it, fresh] = col_of.try_emplace(cls, classes.size());
            if (fresh) classes.push_back(cls);
            row[it->second] = cnt;
        }
        sparse.push_back(std::move(row));
        rhs.push_back(v.as_poly());
    }

    std::size_t m = classes.size();
    std::vector<std::vector<Rational>> A(sparse.size(), std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < sparse.size(); ++i)
        for (const auto& [c, cnt] : sparse[i]) A[i][c] = Rational(cnt);

    std::vector<int> pivot_of_col(m, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < A.size(); ++c) {
        std::size_t pr = r;
        while (pr < A.size() && A[pr][c] == 0) ++pr;
        if (pr == A.size()) continue;
        std::swap(A[pr], A[r]);
        std::swap(rhs[pr], rhs[r]);
        Rational piv = A[r][c];
        for (std::size_t j = c; j < m; ++j) A[r][j] /= piv;
        rhs[r] *= Rational(1) / piv;
        for (std::size_t i = 0; i < A.size(); ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rational f = A[i][c];
            for (std::size_t j = c; j < m; ++j) A[i][j] -= f * A[r][j];
            AlphaPoly sub = rhs[r];
            sub *= f;
            rhs[i] -= sub;
        }
        pivot_of_col[c] = static_cast<int>(r);
        ++r;
    }
    for (std::size_t i = r; i < A.size(); ++i)
        if (!rhs[i].is_zero()) {
            t.consistent = false;
            t.notes.push_back("inconsistent equation with residual " + rhs[i].str());
        }
    for (std::size_t c = 0; c < m; ++c) {
        int pr = pivot_of_col[c];
        bool determined = pr >= 0;
        if (determined)
            for (std::size_t j = 0; j < m; ++j)
                if (j != c && A[pr][j] != 0) {
                    determined = false;
                    break;
                }
        if (!determined) {
            t.undetermined.push_back(classes[c]);
            t.unique = false;
            continue;
        }
        t.pi.emplace_back(classes[c], rhs[pr]);
        if (t.consistent && !rhs[pr].nonneg_int()) {
            t.nonneg = false;
            t.notes.push_back("pi for class " + classes[c].str() + " = " + rhs[pr].str() +
                              " is not a nonnegative integer polynomial");
        }
    }
    return t;
}

nlohmann::json PiTable::to_json() const {
    nlohmann::json fam = nlohmann::json::array();
    for (const Partition& lam : family) fam.push_back(lam.str());
    nlohmann::json table = nlohmann::json::array();
    for (const auto& [cls, poly] : pi)
        table.push_back({{"class", cls.str()}, {"pi", poly.str()}});
    nlohmann::json und = nlohmann::json::array();
    for (const Configuration& cls : undetermined) und.push_back(cls.str());
    return {{"mu", mu.str()},     {"family", fam},     {"pi", table},
            {"undetermined", und}, {"consistent", consistent}, {"unique", unique},
            {"nonneg", nonneg},   {"notes", notes}};
}

std::string PiTable::text() const {
    std::ostringstream os;
    os << "lowest-coefficient table for mu = " << mu.str() << " (" << family.size()
       << " equations)\n";
    for (const auto& [cls, poly] : pi) os << "  pi[" << cls.str() << "] = " << poly.str() << "\n";
    for (const Configuration& cls : undetermined)
        os << "  pi[" << cls.str() << "] undetermined\n";
    os << "  consistent: " << (consistent ? "yes" : "no") << ", unique: "
       << (unique ? "yes" : "no") << ", nonnegative integers: " << (nonneg ? "yes" : "no")
       << "\n";
    for (const std::string& n : notes) os << "  note: " << n << "\n";
    return os.str();
}

std::optional<std::string> lowest_residual(Engine& e, const PiTable& table,
                                           const Partition& lambda) {
    if (!lambda.contains(table.mu))
        return lambda.str() + " does not contain " + table.mu.str();
    std::map<Configuration, long> counts;
    for (const Configuration& cf : admissible_configs(table.mu, lambda))
        ++counts[config_canonical(cf)];
    AlphaPoly acc;
    for (const auto& [cls, cnt] : counts) {
        const AlphaPoly* pi = nullptr;
        for (const auto& [rep, poly] : table.pi)
            if (rep == cls) {
                pi = &poly;
                break;
            }
        if (!pi) return "class " + cls.str() + " in " + lambda.str() + " is not determined";
        AlphaPoly term = *pi;
        term *= Rational(cnt);
        acc += term;
    }
    int n = lambda.size() - table.mu.size();
    AlphaRat v = e.skew_coeff(SkewShape(lambda, table.mu), ones(n));
    v = v / AlphaRat(Rational(factorial(n)));
    if (!v.is_poly())
        return "lowest coefficient of " + lambda.str() + " is not a polynomial: " + v.str();
    if (!(v.as_poly() == acc))
        return "residual " + (v.as_poly() - acc).str() + " on " + lambda.str();
    return std::nullopt;
}

Report conjecture_lowest(Engine& e, const Partition& mu, int max_size, const RunOptions& opt,
                         PiTable* out) {
    SuiteTimer timer;
    Report rep;
    rep.suite = "lowest";
    rep.bound = {{"mu", mu.str()}, {"max_size", max_size}};
    int solve_bound = std::min(max_size, mu.size() + 4);
    std::vector<Partition> family = lowest_default_family(mu, solve_bound);
    PiTable table = solve_lowest(e, mu, family);
    if (out) *out = table;
    rep.cases += family.size();
    if (!table.consistent) {
        std::string all;
        for (const std::string& n : table.notes) all += (all.empty() ? "" : "; ") + n;
        rep.failures.push_back(fail({{"mu", mu.str()}, {"check", "consistency"}}, all,
                                    "consistent linear system", false));
    }
    if (!table.unique) {
        std::string cls;
        for (const Configuration& c : table.undetermined)
            cls += (cls.empty() ? "" : " ") + c.str();
        rep.failures.push_back(fail({{"mu", mu.str()}, {"check", "uniqueness"}}, cls,
                                    "all classes determined", false));
    }
    if (table.consistent && !table.nonneg)
        rep.failures.push_back(fail({{"mu", mu.str()}, {"check", "nonneg"}}, table.text(),
                                    "nonnegative integer polynomials", false));

    std::vector<Partition> held;
    for (int n = solve_bound + 1; n <= max_size; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            if (lam.contains(mu)) held.push_back(lam);
    run_cases(held.size(), opt, &rep, [&](std::size_t i) {
        const Partition& lam = held[i];
        nlohmann::json input{{"mu", mu.str()}, {"lambda", lam.str()}, {"check", "held-out"}};
        return guarded(input, [&]() -> std::vector<Failure> {
            std::optional<std::string> res = lowest_residual(e, table, lam);
            if (!res) return {};
            return {fail(input, *res, "zero residual", false)};
        });
    });
    rep.ms = timer.ms();
    return rep;
}

}  // namespace jackal
