#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>

#include "jackal/symfunc.hpp"

namespace jackal {

// Per-box linear hook factors of a straight shape:
//   c  the arm-emphasized factor  a*alpha + leg + 1
//   cp the coarm-emphasized one  (a+1)*alpha + leg
// j = c * cp is the squared norm of the Jack function.
struct HookData {
    Partition lambda;
    std::vector<Box> boxes;                          // row-major
    std::vector<std::pair<long, long>> c_fac, cp_fac;  // (alpha coeff, constant)
    AlphaPoly c, cp, j;
};
HookData hook_products(const Partition& lambda);

// Mixed products over the boxes of mu inside lambda (mu contained in lambda):
//   c  = prod over s in mu of  a_mu(s)*alpha + leg_lambda(s) + 1
//   cp = prod over s in mu of (a_lambda(s)+1)*alpha + leg_mu(s)
struct MixedHookData {
    Partition mu, lambda;
    std::vector<Box> boxes;
    std::vector<std::pair<long, long>> c_fac, cp_fac;
    AlphaPoly c, cp;
};
MixedHookData mixed_products(const Partition& mu, const Partition& lambda);

enum class Provenance { ks, gs, stanley, definition };

struct JackExpansion {
    SkewShape shape;
    SymFuncM f;
    Provenance prov;
};

// Weight of a standard tableau encoded as a chain: the hook-ratio product of
// its strips times the squared norm of the inner shape. Trailing identity
// factors beyond the last label cancel exactly and are omitted. Throws
// std::invalid_argument on a malformed chain.
AlphaRat w_weight(const Chain& chain);

// Exponents of the linear hook factors a*alpha + b making up w_weight
// (numerator positive, denominator negative). Equal maps imply equal weights
// without expanding any polynomial.
std::map<std::pair<long, long>, int> w_factor_exponents(const Chain& chain);

// Coefficient of the maximal-weight monomial of the skew expansion, as a
// closed product of hooks of the outer and inner shapes.
AlphaPoly leading_formula(const SkewShape& shape);

// All row assignments sigma (sigma[k-1] = row receiving the k-th part of the
// sorted difference nu, rows 1..len(lambda)) with lambda = mu + sigma(nu).
std::vector<std::vector<int>> prv_sigmas(const Partition& lam, const Partition& mu);
// Closed product formula for g when lambda differs from mu by a row
// permutation of nu; sigma must be valid for the pair.
AlphaPoly prv_formula(const Partition& lam, const Partition& mu, const std::vector<int>& sigma);

struct CacheStats {
    std::uintmax_t files = 0;
    std::uintmax_t bytes = 0;
};

// Computation hub: memoizes Jack expansions (optionally mirrored to a disk
// cache), their power-sum coordinates, products of pairs, and skew
// expansions. Safe for concurrent use.
class Engine {
  public:
    Engine() = default;
    explicit Engine(std::filesystem::path cache_dir) : cache_dir_(std::move(cache_dir)) {}

    const std::filesystem::path& cache_dir() const { return cache_dir_; }

    // Combinatorial-formula expansion (admissible fillings), memoized.
    const SymFuncM& jack(const Partition& lam);
    // Same computation, bypassing memory and disk caches.
    SymFuncM jack_ks_fresh(const Partition& lam) const;
    // Orthogonalization route: triangular solve against the scalar product,
    // normalized like jack(). Independent of the filling formula.
    const SymFuncM& jack_gs(const Partition& lam);

    JackExpansion skew_stanley(const SkewShape& shape);  // tableau sum
    JackExpansion skew_def(const SkewShape& shape);      // via g-polynomials
    AlphaRat skew_coeff(const SkewShape& shape, const Partition& nu);
    // skew coefficient divided by u_nu
    AlphaRat tilde_v(const SkewShape& shape, const Partition& nu);

    // <J_lambda, J_mu J_nu>; requires |mu|+|nu| == |lambda|. The result is
    // asserted to be a polynomial with integer coefficients.
    AlphaPoly g_poly(const Partition& lam, const Partition& mu, const Partition& nu);
    // g(1) / (H_lambda H_mu H_nu), asserted to be a nonnegative integer.
    Int lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu);

    const std::vector<AlphaRat>& jack_p(const Partition& lam);
    const std::vector<AlphaRat>& product_p(const Partition& mu, const Partition& nu);

    CacheStats cache_stats() const;
    void cache_clear();

  private:
    const SymFuncM* find_or_insert(std::map<Partition, SymFuncM, RevLexLess>& memo,
                                   const Partition& key, SymFuncM value);
    std::filesystem::path jack_file(const Partition& lam) const;
    bool load_cached(const Partition& lam, SymFuncM* out) const;
    void store_cached(const Partition& lam, const SymFuncM& f) const;

    std::filesystem::path cache_dir_;
    mutable std::mutex mutex_;
    std::map<Partition, SymFuncM, RevLexLess> jack_memo_;
    std::map<int, std::vector<SymFuncM>> gs_memo_;  // per degree, transition order
    std::map<Partition, std::vector<AlphaRat>, RevLexLess> p_memo_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<AlphaRat>> prod_memo_;
    std::map<SkewShape, JackExpansion> stanley_memo_, def_memo_;
};

}  // namespace jackal
