#include "jackal/symfunc.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace jackal {

SymFuncM SymFuncM::monomial(const Partition& lam, AlphaRat c) {
    SymFuncM f(lam.size());
    f.add_term(lam, c);
    return f;
}

AlphaRat SymFuncM::coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? AlphaRat() : it->second;
}

void SymFuncM::add_term(const Partition& lam, const AlphaRat& c) {
    if (lam.size() != degree_)
        throw std::invalid_argument("term of degree " + std::to_string(lam.size()) +
                                    " in a function of degree " + std::to_string(degree_));
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(lam, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFuncM& SymFuncM::operator+=(const SymFuncM& o) {
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch in sum");
    for (const auto& [lam, c] : o.terms_) add_term(lam, c);
    return *this;
}

SymFuncM& SymFuncM::operator-=(const SymFuncM& o) {
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch in sum");
    for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
    return *this;
}

SymFuncM& SymFuncM::operator*=(const AlphaRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [lam, v] : terms_) v = v * c;
    return *this;
}

std::string SymFuncM::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [lam, c] : terms_) {
        std::string cs = c.str();
        bool bare = true;
        if (c.is_poly()) {
            int nonzero = 0;
            for (const Rational& q : c.num().coeffs())
                if (q != 0) ++nonzero;
            bare = nonzero <= 1;
        }
        std::string sign = " + ";
        if (bare && !cs.empty() && cs[0] == '-') {
            sign = " - ";
            cs = cs.substr(1);
        }
        std::string term;
        if (lam.empty())
            term = bare ? cs : "(" + cs + ")";
        else if (bare && cs == "1")
            term = "m[" + lam.str() + "]";
        else
            term = (bare ? cs : "(" + cs + ")") + "·m[" + lam.str() + "]";
        if (out.empty())
            out = (sign == " - " ? "-" : "") + term;
        else
            out += sign + term;
    }
    return out;
}

namespace {

// Distinct rearrangements of lam padded with zeros to nvars entries.
std::vector<std::vector<int>> distinct_perms(const Partition& lam, int nvars) {
    std::vector<int> v(nvars, 0);
    for (int i = 0; i < lam.length(); ++i) v[i] = lam.parts()[i];
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// m_lam * m_mu over the m basis. The coefficient of m_nu counts pairs of
// rearrangements (a, b) of lam, mu with a + b = nu componentwise; it is
// enough to work in |lam|+|mu| variables.
std::vector<std::pair<Partition, Int>> mono_mul_build(const Partition& lam, const Partition& mu) {
    if (lam.empty()) return {{mu, 1}};
    if (mu.empty()) return {{lam, 1}};
    int nv = lam.size() + mu.size();
    auto A = distinct_perms(lam, nv);
    auto B = distinct_perms(mu, nv);
    std::map<Partition, Int, RevLexLess> acc;
    std::vector<int> sum(nv);
    for (const auto& a : A)
        for (const auto& b : B) {
            bool sorted = true;
            for (int i = 0; i < nv; ++i) {
                sum[i] = a[i] + b[i];
                if (i > 0 && sum[i] > sum[i - 1]) {
                    sorted = false;
                    break;
                }
            }
            if (sorted) ++acc[Partition(sum)];
        }
    return {acc.begin(), acc.end()};
}

using MonoKey = std::pair<std::vector<int>, std::vector<int>>;

const std::vector<std::pair<Partition, Int>>& mono_mul(const Partition& lam, const Partition& mu) {
    static std::mutex mx;
    static std::map<MonoKey, std::vector<std::pair<Partition, Int>>> memo;
    const Partition* a = &lam;
    const Partition* b = &mu;
    if (revlex_less(mu, lam)) std::swap(a, b);
    MonoKey key{a->parts(), b->parts()};
    std::lock_guard lk(mx);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(std::move(key), mono_mul_build(*a, *b)).first;
    return it->second;
}

}  // namespace

SymFuncM m_mul(const SymFuncM& f, const SymFuncM& g) {
    SymFuncM out(f.degree() + g.degree());
    for (const auto& [lf, cf] : f.terms())
        for (const auto& [lg, cg] : g.terms()) {
            AlphaRat c = cf * cg;
            for (const auto& [nu, n] : mono_mul(lf, lg)) out.add_term(nu, c * Rational(n));
        }
    return out;
}

int TransitionTable::index(const Partition& lam) const {
    auto it = std::lower_bound(parts.begin(), parts.end(), lam, RevLexLess{});
    if (it == parts.end() || !(*it == lam)) return -1;
    return static_cast<int>(it - parts.begin());
}

namespace {

std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> a) {
    std::size_t k = a.size();
    std::vector<std::vector<Rational>> inv(k, std::vector<Rational>(k, Rational(0)));
    for (std::size_t i = 0; i < k; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && a[piv][col] == 0) ++piv;
        if (piv == k) throw std::logic_error("transition matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = a[col][col];
        for (std::size_t j = 0; j < k; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < k; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

TransitionTable build_transition(int n) {
    TransitionTable t;
    t.n = n;
    t.parts = enumerate_partitions(n);
    std::size_t k = t.parts.size();
    t.p2m.assign(k, std::vector<Rational>(k, Rational(0)));
    for (std::size_t i = 0; i < k; ++i) {
        SymFuncM p = SymFuncM::monomial(Partition());
        for (int part : t.parts[i].parts())
            p = m_mul(p, SymFuncM::monomial(Partition({part})));
        for (std::size_t j = 0; j < k; ++j) {
            AlphaRat c = p.coeff(t.parts[j]);
            if (!c.is_zero()) t.p2m[i][j] = c.as_poly().constant();
        }
    }
    t.m2p = invert_matrix(t.p2m);
    return t;
}

}  // namespace

const TransitionTable& transition(int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    static std::mutex mx;
    static std::map<int, std::unique_ptr<TransitionTable>> cache;
    std::lock_guard lk(mx);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<TransitionTable>(build_transition(n));
    return *slot;
}

std::vector<AlphaRat> to_p_coeffs(const SymFuncM& f) {
    const TransitionTable& t = transition(f.degree());
    std::size_t k = t.parts.size();
    std::vector<AlphaRat> phat(k);
    for (const auto& [lam, c] : f.terms()) {
        int i = t.index(lam);
        for (std::size_t j = 0; j < k; ++j)
            if (t.m2p[i][j] != 0) phat[j] = phat[j] + c * t.m2p[i][j];
    }
    return phat;
}

SymFuncM from_p_coeffs(int n, const std::vector<AlphaRat>& phat) {
    const TransitionTable& t = transition(n);
    if (phat.size() != t.parts.size()) throw std::invalid_argument("coefficient vector length");
    SymFuncM f(n);
    for (std::size_t i = 0; i < phat.size(); ++i) {
        if (phat[i].is_zero()) continue;
        for (std::size_t j = 0; j < t.parts.size(); ++j)
            if (t.p2m[i][j] != 0) f.add_term(t.parts[j], phat[i] * t.p2m[i][j]);
    }
    return f;
}

AlphaRat inner(const SymFuncM& f, const SymFuncM& g) {
    if (f.degree() != g.degree() || f.is_zero() || g.is_zero()) return AlphaRat();
    auto pf = to_p_coeffs(f);
    auto pg = to_p_coeffs(g);
    const TransitionTable& t = transition(f.degree());
    AlphaRat out;
    for (std::size_t i = 0; i < pf.size(); ++i) {
        if (pf[i].is_zero() || pg[i].is_zero()) continue;
        PartitionStats st = stats(t.parts[i]);
        AlphaPoly norm = AlphaPoly::alpha(st.length);
        norm *= Rational(st.zee);
        out = out + pf[i] * pg[i] * norm;
    }
    return out;
}

SymFuncM omega(const SymFuncM& f, const AlphaRat& theta) {
    if (f.is_zero()) return f;
    auto ph = to_p_coeffs(f);
    const TransitionTable& t = transition(f.degree());
    for (std::size_t i = 0; i < ph.size(); ++i)
        if (!ph[i].is_zero()) ph[i] = ph[i] * theta.pow(t.parts[i].length());
    return from_p_coeffs(f.degree(), ph);
}

void MultiPoly::add_term(std::vector<int> expo, const AlphaRat& c) {
    if (static_cast<int>(expo.size()) != nvars_)
        throw std::invalid_argument("exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(expo), c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
    MultiPoly out(a.nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            std::vector<int> e(a.nvars());
            for (int i = 0; i < a.nvars(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(std::move(e), ca * cb);
        }
    return out;
}

MultiPoly& MultiPoly::operator*=(const AlphaRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v = v * c;
    return *this;
}

MultiPoly MultiPoly::embed(int total, int offset) const {
    if (offset < 0 || offset + nvars_ > total)
        throw std::invalid_argument("embedding window out of range");
    MultiPoly out(total);
    for (const auto& [e, c] : terms_) {
        std::vector<int> e2(total, 0);
        std::copy(e.begin(), e.end(), e2.begin() + offset);
        out.add_term(std::move(e2), c);
    }
    return out;
}

MultiPoly eval_finite(const SymFuncM& f, int nvars) {
    MultiPoly out(nvars);
    for (const auto& [lam, c] : f.terms()) {
        if (lam.length() > nvars) continue;
        std::vector<int> v(nvars, 0);
        for (int i = 0; i < lam.length(); ++i) v[i] = lam.parts()[i];
        std::sort(v.begin(), v.end());
        do {
            out.add_term(v, c);
        } while (std::next_permutation(v.begin(), v.end()));
    }
    return out;
}

}  // namespace jackal
