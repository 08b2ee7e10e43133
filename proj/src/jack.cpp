#include "jackal/jack.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>

#include "jackal/json_io.hpp"

namespace jackal {

namespace {
Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}
}  // namespace

HookData hook_products(const Partition& lambda) {
    HookData h;
    h.lambda = lambda;
    h.c = AlphaPoly(1);
    h.cp = AlphaPoly(1);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) {
            auto [a, l] = arm_leg(lambda, {i, j});
            h.boxes.push_back({i, j});
            h.c_fac.emplace_back(a, l + 1);
            h.cp_fac.emplace_back(a + 1, l);
            h.c *= AlphaPoly::linear(a, l + 1);
            h.cp *= AlphaPoly::linear(a + 1, l);
        }
    h.j = h.c * h.cp;
    return h;
}

MixedHookData mixed_products(const Partition& mu, const Partition& lambda) {
    if (!lambda.contains(mu))
        throw std::invalid_argument("mixed products need " + mu.str() + " inside " + lambda.str());
    MixedHookData m;
    m.mu = mu;
    m.lambda = lambda;
    m.c = AlphaPoly(1);
    m.cp = AlphaPoly(1);
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.part(i); ++j) {
            auto [am, lm] = arm_leg(mu, {i, j});
            auto [al, ll] = arm_leg(lambda, {i, j});
            m.boxes.push_back({i, j});
            m.c_fac.emplace_back(am, ll + 1);
            m.cp_fac.emplace_back(al + 1, lm);
            m.c *= AlphaPoly::linear(am, ll + 1);
            m.cp *= AlphaPoly::linear(al + 1, lm);
        }
    return m;
}

namespace {

// Multiset of linear factors a*alpha + b with integer exponents; products of
// hook factors stay in this form, so tableau weights never need polynomial
// gcds.
using FactorExp = std::map<std::pair<long, long>, int>;

void bump(FactorExp& e, long a, long b, int d) {
    auto it = e.find({a, b});
    if (it == e.end()) {
        if (d != 0) e.emplace(std::make_pair(a, b), d);
    } else {
        it->second += d;
        if (it->second == 0) e.erase(it);
    }
}

AlphaPoly factor_pow(long a, long b, int k) {
    AlphaPoly p(1);
    AlphaPoly f = AlphaPoly::linear(a, b);
    for (int i = 0; i < k; ++i) p *= f;
    return p;
}

void validate_chain(const Chain& chain) {
    if (chain.steps.empty()) throw std::invalid_argument("chain has no steps");
    for (std::size_t i = 1; i < chain.steps.size(); ++i) {
        const Partition& inner = chain.steps[i - 1];
        const Partition& outer = chain.steps[i];
        if (!outer.contains(inner) || !is_horizontal_strip(SkewShape(outer, inner)))
            throw std::invalid_argument("chain step " + std::to_string(i) +
                                        " is not a horizontal strip");
    }
}

FactorExp chain_factors(const Chain& chain) {
    validate_chain(chain);
    FactorExp e;
    const Partition& mu = chain.steps.front();
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.part(i); ++j) {
            auto [a, l] = arm_leg(mu, {i, j});
            bump(e, a, l + 1, 1);       // c factor of j_mu
            bump(e, a + 1, l, 1);       // c' factor of j_mu
        }
    for (std::size_t step = 1; step < chain.steps.size(); ++step) {
        const Partition& gamma = chain.steps[step - 1];
        const Partition& beta = chain.steps[step];
        Partition bc = beta.conjugate();
        Partition gc = gamma.conjugate();
        auto strip_col = [&](int j) { return bc.part(j) > gc.part(j); };
        for (int i = 1; i <= beta.length(); ++i)
            for (int j = 1; j <= beta.part(i); ++j) {
                auto [a, l] = arm_leg(beta, {i, j});
                if (strip_col(j))
                    bump(e, a, l + 1, 1);
                else
                    bump(e, a + 1, l, 1);
            }
        for (int i = 1; i <= gamma.length(); ++i)
            for (int j = 1; j <= gamma.part(i); ++j) {
                auto [a, l] = arm_leg(gamma, {i, j});
                if (strip_col(j))
                    bump(e, a, l + 1, -1);
                else
                    bump(e, a + 1, l, -1);
            }
    }
    return e;
}

}  // namespace

std::map<std::pair<long, long>, int> w_factor_exponents(const Chain& chain) {
    return chain_factors(chain);
}

AlphaRat w_weight(const Chain& chain) {
    FactorExp e = chain_factors(chain);
    AlphaPoly num(1), den(1);
    for (const auto& [f, k] : e)
        (k > 0 ? num : den) *= factor_pow(f.first, f.second, k > 0 ? k : -k);
    return AlphaRat(num, den);
}

namespace {

// Sum of tableau weights over all chains of the shape with strip sizes nu,
// assembled over the common denominator so only one normalization happens.
AlphaRat stanley_coeff(const SkewShape& shape, const Partition& nu) {
    auto chains = standard_chains(shape, nu);
    if (chains.empty()) return AlphaRat();
    std::vector<FactorExp> es;
    es.reserve(chains.size());
    for (const Chain& ch : chains) es.push_back(chain_factors(ch));
    FactorExp dens;
    for (const FactorExp& e : es)
        for (const auto& [f, k] : e)
            if (k < 0) {
                int& d = dens[f];
                d = std::max(d, -k);
            }
    AlphaPoly den(1);
    for (const auto& [f, k] : dens) den *= factor_pow(f.first, f.second, k);
    AlphaPoly num;
    for (const FactorExp& e : es) {
        AlphaPoly t(1);
        for (const auto& [f, d] : dens) {
            auto it = e.find(f);
            int k = (it == e.end() ? 0 : it->second) + d;
            t *= factor_pow(f.first, f.second, k);
        }
        for (const auto& [f, k] : e)
            if (!dens.count(f)) t *= factor_pow(f.first, f.second, k);
        num += t;
    }
    return AlphaRat(num, den);
}

}  // namespace

AlphaPoly leading_formula(const SkewShape& shape) {
    MaxFilling mf = max_filling_weight(shape);
    const Partition& lam = shape.outer;
    const Partition& mu = shape.inner;
    auto rr = [&](int i) { return (i >= 1 && i <= static_cast<int>(mf.r.size())) ? mf.r[i - 1] : 0; };
    auto cc = [&](int j) { return (j >= 1 && j <= static_cast<int>(mf.c.size())) ? mf.c[j - 1] : 0; };
    AlphaPoly out(1);
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) {
            auto [a, l] = arm_leg(lam, {i, j});
            out *= (rr(i) <= cc(j)) ? AlphaPoly::linear(a, l + 1) : AlphaPoly::linear(a + 1, l);
        }
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.part(i); ++j) {
            auto [a, l] = arm_leg(mu, {i, j});
            out *= (rr(i + cc(j)) > cc(j)) ? AlphaPoly::linear(a, l + 1)
                                           : AlphaPoly::linear(a + 1, l);
        }
    return out;
}

namespace {
void sigma_backtrack(const std::vector<int>& diff, const std::vector<int>& nuv, std::size_t k,
                     std::vector<int>& cur, std::vector<bool>& used,
                     std::vector<std::vector<int>>& out) {
    if (k == nuv.size()) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = 0; i < diff.size(); ++i) {
        if (used[i] || diff[i] != nuv[k]) continue;
        used[i] = true;
        cur.push_back(static_cast<int>(i) + 1);
        sigma_backtrack(diff, nuv, k + 1, cur, used, out);
        cur.pop_back();
        used[i] = false;
    }
}
}  // namespace

std::vector<std::vector<int>> prv_sigmas(const Partition& lam, const Partition& mu) {
    if (!lam.contains(mu)) return {};
    std::vector<int> diff(lam.length());
    for (int i = 1; i <= lam.length(); ++i) diff[i - 1] = lam.part(i) - mu.part(i);
    std::vector<int> nuv;
    for (int d : diff)
        if (d > 0) nuv.push_back(d);
    std::sort(nuv.rbegin(), nuv.rend());
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<bool> used(diff.size(), false);
    sigma_backtrack(diff, nuv, 0, cur, used, out);
    return out;
}

AlphaPoly prv_formula(const Partition& lam, const Partition& mu, const std::vector<int>& sigma) {
    if (!lam.contains(mu))
        throw std::invalid_argument("row-difference formula needs " + mu.str() + " inside " +
                                    lam.str());
    std::vector<int> nuv;
    for (int i = 1; i <= lam.length(); ++i) {
        int d = lam.part(i) - mu.part(i);
        if (d > 0) nuv.push_back(d);
    }
    std::sort(nuv.rbegin(), nuv.rend());
    Partition nu(nuv);
    if (static_cast<int>(sigma.size()) != nu.length())
        throw std::invalid_argument("sigma length does not match the row difference");
    std::vector<int> r(lam.length() + 1, 0);
    std::vector<bool> used(lam.length() + 1, false);
    for (int k = 0; k < nu.length(); ++k) {
        int row = sigma[k];
        if (row < 1 || row > lam.length() || used[row])
            throw std::invalid_argument("sigma is not an injective row assignment");
        if (lam.part(row) - mu.part(row) != nu.part(k + 1))
            throw std::invalid_argument("sigma does not reproduce the row differences");
        used[row] = true;
        r[row] = nu.part(k + 1);
    }
    for (int i = 1; i <= lam.length(); ++i)
        if (lam.part(i) != mu.part(i) && r[i] == 0)
            throw std::invalid_argument("sigma misses a changed row");

    Partition lamc = lam.conjugate();
    std::vector<int> c(lam.part(1) + 1, 0);
    for (int j = 1; j <= lam.part(1); ++j) c[j] = j - mu.part(lamc.part(j));
    AlphaPoly out(1);
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) {
            auto [a, l] = arm_leg(lam, {i, j});
            out *= (c[j] <= r[i]) ? AlphaPoly::linear(a + 1, l) : AlphaPoly::linear(a, l + 1);
        }
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.part(i); ++j) {
            auto [a, l] = arm_leg(mu, {i, j});
            out *= (c[j + r[i]] > r[i]) ? AlphaPoly::linear(a + 1, l)
                                        : AlphaPoly::linear(a, l + 1);
        }
    out *= hook_products(nu).c;
    return out;
}

namespace {

// DFS over admissible fillings with a fixed content, bucketing fillings by
// their critical-box set (bit k = k-th box in column-major order).
struct KsEnum {
    std::vector<Box> order;
    std::vector<int> rem;
    std::vector<std::vector<int>> T;
    std::map<std::uint64_t, long>* buckets = nullptr;
    int L = 0;

    void go(std::size_t k, std::uint64_t mask) {
        if (k == order.size()) {
            ++(*buckets)[mask];
            return;
        }
        int i = order[k].row, j = order[k].col;
        for (int v = 1; v <= L; ++v) {
            if (!rem[v]) continue;
            bool ok = true;
            for (int r = 1; r < i && ok; ++r)
                if (T[r][j] == v || (j > 1 && T[r][j - 1] == v)) ok = false;
            if (!ok) continue;
            std::uint64_t m2 = mask;
            if (j > 1 && T[i][j - 1] == v) m2 |= std::uint64_t(1) << k;
            T[i][j] = v;
            --rem[v];
            go(k + 1, m2);
            T[i][j] = 0;
            ++rem[v];
        }
    }
};

AlphaPoly mask_product(std::map<std::uint64_t, AlphaPoly>& memo,
                       const std::vector<AlphaPoly>& dbox, std::uint64_t mask) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int low = __builtin_ctzll(mask);
    AlphaPoly p = mask_product(memo, dbox, mask & (mask - 1)) * dbox[low];
    memo.emplace(mask, p);
    return p;
}

}  // namespace

SymFuncM Engine::jack_ks_fresh(const Partition& lam) const {
    int n = lam.size();
    if (n > 60) throw std::invalid_argument("filling enumeration limited to 60 boxes");
    SymFuncM f(n);

    KsEnum e;
    Partition lamc = lam.conjugate();
    for (int j = 1; j <= lam.part(1); ++j)
        for (int i = 1; i <= lamc.part(j); ++i) e.order.push_back({i, j});
    e.T.assign(lam.length() + 1, std::vector<int>(lam.part(1) + 1, 0));

    std::vector<AlphaPoly> dbox;  // d factor per box, aligned with order
    for (const Box& s : e.order) {
        auto [a, l] = arm_leg(lam, s);
        dbox.push_back(AlphaPoly::linear(a + 1, l + 1));
    }
    std::map<std::uint64_t, AlphaPoly> dmemo;
    dmemo.emplace(0, AlphaPoly(1));

    for (const Partition& nu : enumerate_partitions(n)) {
        if (!dominates(lam, nu)) continue;
        e.L = nu.length();
        e.rem.assign(e.L + 1, 0);
        for (int v = 1; v <= e.L; ++v) e.rem[v] = nu.part(v);
        std::map<std::uint64_t, long> buckets;
        e.buckets = &buckets;
        e.go(0, 0);
        AlphaPoly coeff;
        for (const auto& [mask, cnt] : buckets) {
            AlphaPoly t = mask_product(dmemo, dbox, mask);
            t *= Rational(cnt);
            coeff += t;
        }
        f.add_term(nu, coeff);
    }
    return f;
}

const SymFuncM* Engine::find_or_insert(std::map<Partition, SymFuncM, RevLexLess>& memo,
                                       const Partition& key, SymFuncM value) {
    std::lock_guard lk(mutex_);
    auto [it, fresh] = memo.try_emplace(key, std::move(value));
    return &it->second;
}

const SymFuncM& Engine::jack(const Partition& lam) {
    {
        std::lock_guard lk(mutex_);
        auto it = jack_memo_.find(lam);
        if (it != jack_memo_.end()) return it->second;
    }
    SymFuncM f(lam.size());
    if (cache_dir_.empty() || !load_cached(lam, &f)) {
        f = jack_ks_fresh(lam);
        if (!cache_dir_.empty()) store_cached(lam, f);
    }
    return *find_or_insert(jack_memo_, lam, std::move(f));
}

const SymFuncM& Engine::jack_gs(const Partition& lam) {
    int n = lam.size();
    const TransitionTable& t = transition(n);
    {
        std::lock_guard lk(mutex_);
        auto it = gs_memo_.find(n);
        if (it != gs_memo_.end()) return it->second[t.index(lam)];
    }
    std::size_t k = t.parts.size();
    std::vector<SymFuncM> funcs(k, SymFuncM(n));
    // Ascending lexicographic order is compatible with dominance, so each
    // function is made orthogonal to everything strictly below it.
    for (int idx = static_cast<int>(k) - 1; idx >= 0; --idx) {
        SymFuncM g = SymFuncM::monomial(t.parts[idx]);
        for (std::size_t prev = idx + 1; prev < k; ++prev) {
            AlphaRat c = inner(g, funcs[prev]) / inner(funcs[prev], funcs[prev]);
            if (!c.is_zero()) {
                SymFuncM proj = funcs[prev];
                proj *= c;
                g -= proj;
            }
        }
        funcs[idx] = std::move(g);
    }
    Partition ones(std::vector<int>(n, 1));
    for (SymFuncM& g : funcs) {
        AlphaRat low = g.coeff(ones);
        g *= AlphaRat(Rational(factorial(n))) / low;
    }
    std::lock_guard lk(mutex_);
    auto [it, fresh] = gs_memo_.try_emplace(n, std::move(funcs));
    return it->second[t.index(lam)];
}

JackExpansion Engine::skew_stanley(const SkewShape& shape) {
    {
        std::lock_guard lk(mutex_);
        auto it = stanley_memo_.find(shape);
        if (it != stanley_memo_.end()) return it->second;
    }
    int n = shape.size();
    SymFuncM f(n);
    for (const Partition& nu : enumerate_partitions(n)) f.add_term(nu, stanley_coeff(shape, nu));
    JackExpansion out{shape, std::move(f), Provenance::stanley};
    std::lock_guard lk(mutex_);
    auto [it, fresh] = stanley_memo_.try_emplace(shape, std::move(out));
    return it->second;
}

JackExpansion Engine::skew_def(const SkewShape& shape) {
    {
        std::lock_guard lk(mutex_);
        auto it = def_memo_.find(shape);
        if (it != def_memo_.end()) return it->second;
    }
    int n = shape.size();
    SymFuncM f(n);
    for (const Partition& nu : enumerate_partitions(n)) {
        AlphaPoly g = g_poly(shape.outer, shape.inner, nu);
        if (g.is_zero()) continue;
        AlphaRat c(g, hook_products(nu).j);
        for (const auto& [m, v] : jack(nu).terms()) f.add_term(m, c * v);
    }
    JackExpansion out{shape, std::move(f), Provenance::definition};
    std::lock_guard lk(mutex_);
    auto [it, fresh] = def_memo_.try_emplace(shape, std::move(out));
    return it->second;
}

AlphaRat Engine::skew_coeff(const SkewShape& shape, const Partition& nu) {
    if (nu.size() != shape.size()) return AlphaRat();
    return skew_def(shape).f.coeff(nu);
}

AlphaRat Engine::tilde_v(const SkewShape& shape, const Partition& nu) {
    return skew_coeff(shape, nu) / AlphaRat(Rational(stats(nu).u));
}

AlphaPoly Engine::g_poly(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != lam.size()) return AlphaPoly();
    const TransitionTable& t = transition(lam.size());
    const auto& pl = jack_p(lam);
    const auto& pp = product_p(mu, nu);
    AlphaRat acc;
    for (std::size_t i = 0; i < pl.size(); ++i) {
        if (pl[i].is_zero() || pp[i].is_zero()) continue;
        PartitionStats st = stats(t.parts[i]);
        AlphaPoly w = AlphaPoly::alpha(st.length);
        w *= Rational(st.zee);
        acc = acc + pl[i] * pp[i] * w;
    }
    std::string name = "g[" + lam.str() + "; " + mu.str() + ", " + nu.str() + "]";
    if (!acc.is_poly()) throw std::logic_error(name + " is not a polynomial: " + acc.str());
    AlphaPoly g = acc.as_poly();
    for (const Rational& cf : g.coeffs())
        if (!is_integer(cf))
            throw std::logic_error(name + " has a non-integer coefficient: " + g.str());
    return g;
}

Int Engine::lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != lam.size())
        throw std::invalid_argument("degree mismatch in structure coefficient");
    Rational g1 = g_poly(lam, mu, nu).eval(1);
    Rational h = hook_products(lam).c.eval(1) * hook_products(mu).c.eval(1) *
                 hook_products(nu).c.eval(1);
    Rational q = g1 / h;
    if (!is_integer(q) || q < 0)
        throw std::logic_error("structure coefficient [" + lam.str() + "; " + mu.str() + ", " +
                               nu.str() + "] is not a nonnegative integer: " + rat_str(q));
    return q.get_num();
}

const std::vector<AlphaRat>& Engine::jack_p(const Partition& lam) {
    {
        std::lock_guard lk(mutex_);
        auto it = p_memo_.find(lam);
        if (it != p_memo_.end()) return it->second;
    }
    std::vector<AlphaRat> v = to_p_coeffs(jack(lam));
    std::lock_guard lk(mutex_);
    auto [it, fresh] = p_memo_.try_emplace(lam, std::move(v));
    return it->second;
}

const std::vector<AlphaRat>& Engine::product_p(const Partition& mu, const Partition& nu) {
    const Partition* a = &mu;
    const Partition* b = &nu;
    if (revlex_less(*b, *a)) std::swap(a, b);
    std::pair<std::vector<int>, std::vector<int>> key{a->parts(), b->parts()};
    {
        std::lock_guard lk(mutex_);
        auto it = prod_memo_.find(key);
        if (it != prod_memo_.end()) return it->second;
    }
    // Power sums multiply by concatenation, so the product of two expansions
    // is a convolution over part unions.
    const TransitionTable& tn = transition(a->size() + b->size());
    const TransitionTable& ta = transition(a->size());
    const TransitionTable& tb = transition(b->size());
    const auto& pa = jack_p(*a);
    const auto& pb = jack_p(*b);
    std::vector<AlphaRat> out(tn.parts.size());
    for (std::size_t i = 0; i < pa.size(); ++i) {
        if (pa[i].is_zero()) continue;
        for (std::size_t j = 0; j < pb.size(); ++j) {
            if (pb[j].is_zero()) continue;
            Partition rho = combine(ta.parts[i], tb.parts[j], CombineMode::set_union);
            int idx = tn.index(rho);
            out[idx] = out[idx] + pa[i] * pb[j];
        }
    }
    std::lock_guard lk(mutex_);
    auto [it, fresh] = prod_memo_.try_emplace(std::move(key), std::move(out));
    return it->second;
}

std::filesystem::path Engine::jack_file(const Partition& lam) const {
    return cache_dir_ / "J" / std::to_string(lam.size()) / (lam.str() + ".json");
}

bool Engine::load_cached(const Partition& lam, SymFuncM* out) const {
    std::ifstream in(jack_file(lam));
    if (!in) return false;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (!j.is_object() || j.value("format_version", 0) != 1) return false;
        SymFuncM f = symfunc_from_json(j.at("function"));
        if (f.degree() != lam.size()) return false;
        AlphaRat low = f.coeff(Partition(std::vector<int>(lam.size(), 1)));
        if (!(low == AlphaRat(Rational(factorial(lam.size()))))) return false;
        *out = std::move(f);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void Engine::store_cached(const Partition& lam, const SymFuncM& f) const {
    std::filesystem::path path = jack_file(lam);
    std::filesystem::create_directories(path.parent_path());
    nlohmann::json j;
    j["format_version"] = 1;
    j["function"] = symfunc_to_json(f);
    atomic_write(path, j.dump());
}

CacheStats Engine::cache_stats() const {
    CacheStats st;
    if (cache_dir_.empty()) return st;
    std::filesystem::path root = cache_dir_ / "J";
    std::error_code ec;
    if (!std::filesystem::exists(root, ec)) return st;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(root, ec)) {
        if (!entry.is_regular_file()) continue;
        ++st.files;
        st.bytes += entry.file_size();
    }
    return st;
}

void Engine::cache_clear() {
    if (cache_dir_.empty()) return;
    std::error_code ec;
    std::filesystem::remove_all(cache_dir_ / "J", ec);
}

}  // namespace jackal
