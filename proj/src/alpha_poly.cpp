#include "jackal/alpha_poly.hpp"

#include <algorithm>
#include <map>

namespace jackal {

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    strip();
    return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    strip();
    return *this;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
    if (a.is_zero() || b.is_zero()) return AlphaPoly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return AlphaPoly(std::move(c));
}

AlphaPoly& AlphaPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

AlphaPoly operator*(const Rational& c, AlphaPoly p) { return p *= c; }

std::pair<AlphaPoly, AlphaPoly> AlphaPoly::divmod(const AlphaPoly& a, const AlphaPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = a.coeffs_;
    int db = b.degree();
    if (a.degree() < db) return {AlphaPoly(), a};
    std::vector<Rational> q(a.degree() - db + 1, Rational(0));
    for (int k = a.degree(); k >= db; --k) {
        if (r[k] == 0) continue;
        Rational t = r[k] / b.coeffs_[db];
        q[k - db] = t;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= t * b.coeffs_[j];
    }
    return {AlphaPoly(std::move(q)), AlphaPoly(std::move(r))};
}

AlphaPoly AlphaPoly::divexact(const AlphaPoly& b) const {
    auto [q, r] = divmod(*this, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Rational AlphaPoly::eval(const Rational& x) const {
    Rational v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
    return v;
}

std::pair<AlphaPoly, int> AlphaPoly::invert_alpha() const {
    if (is_zero()) return {AlphaPoly(), 0};
    std::vector<Rational> rev(coeffs_.rbegin(), coeffs_.rend());
    return {AlphaPoly(std::move(rev)), degree()};
}

bool AlphaPoly::nonneg_int() const {
    for (const auto& c : coeffs_)
        if (!is_integer(c) || c < 0) return false;
    return true;
}

AlphaPoly AlphaPoly::primitive_part(Rational* content) const {
    if (is_zero()) {
        if (content) *content = 0;
        return AlphaPoly();
    }
    Int den_lcm = 1, num_gcd = 0;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Rational cont = make_rational(num_gcd, den_lcm);
    if (lead() < 0) cont = -cont;
    if (content) *content = cont;
    AlphaPoly p = *this;
    p *= Rational(1) / cont;
    return p;
}

AlphaPoly AlphaPoly::gcd(AlphaPoly a, AlphaPoly b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        AlphaPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.primitive_part();
    }
    return a;
}

std::string superscript(int k) {
    static const char* digits[10] = {"⁰", "¹", "²", "³", "⁴",
                                     "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s = std::to_string(k), out;
    for (char ch : s) {
        if (ch == '-') out += "⁻";
        else out += digits[ch - '0'];
    }
    return out;
}

std::string AlphaPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        std::string body;
        if (k == 0) {
            body = rat_str(mag);
        } else {
            if (mag != 1) body = is_integer(mag) ? rat_str(mag) : "(" + rat_str(mag) + ")";
            body += "α";
            if (k > 1) body += superscript(k);
        }
        if (out.empty()) out = (neg ? "-" : "") + body;
        else out += (neg ? "-" : "+") + body;
    }
    return out;
}

AlphaPoly LinearFactorization::expand() const {
    AlphaPoly p(unit);
    for (const auto& f : factors) {
        AlphaPoly lin = AlphaPoly::linear(Rational(f.a), Rational(f.b));
        for (int i = 0; i < f.mult; ++i) p *= lin;
    }
    return p;
}

namespace {

std::vector<Int> divisors(const Int& v) {
    Int n = abs(v);
    std::vector<Int> small, large;
    for (Int i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            small.push_back(i);
            if (i * i != n) large.push_back(n / i);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::optional<LinearFactorization> linear_factorize(const AlphaPoly& p) {
    if (p.is_zero()) throw std::domain_error("cannot factorize the zero polynomial");
    Rational unit;
    AlphaPoly q = p.primitive_part(&unit);

    std::map<std::pair<long, long>, int> found;
    int low = 0;
    while (q.coeff(low) == 0) ++low;
    if (low > 0) {
        found[{1, 0}] = low;
        std::vector<Rational> shifted(q.coeffs().begin() + low, q.coeffs().end());
        q = AlphaPoly(std::move(shifted));
    }

    while (q.degree() >= 1) {
        // Rational root theorem: roots -b/a with a | lead, b | constant.
        struct Cand {
            Int a, b;
        };
        std::vector<Cand> cands;
        for (const Int& a : divisors(q.lead().get_num()))
            for (const Int& b : divisors(q.constant().get_num())) {
                Int g;
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                if (g != 1) continue;
                cands.push_back({a, b});
                cands.push_back({a, -b});
            }
        std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
            Int lx = abs(x.b) * y.a, ly = abs(y.b) * x.a;
            if (lx != ly) return lx < ly;
            if (x.a != y.a) return x.a < y.a;
            return x.b < y.b;
        });
        bool progress = false;
        for (const Cand& cd : cands) {
            if (q.eval(make_rational(-cd.b, cd.a)) != 0) continue;
            AlphaPoly lin = AlphaPoly::linear(Rational(cd.a), Rational(cd.b));
            while (true) {
                auto [quo, rem] = AlphaPoly::divmod(q, lin);
                if (!rem.is_zero()) break;
                ++found[{cd.a.get_si(), cd.b.get_si()}];
                q = quo;
            }
            progress = true;
            break;
        }
        if (!progress) return std::nullopt;
    }
    unit *= q.constant();

    LinearFactorization out;
    out.unit = unit;
    for (const auto& [key, mult] : found) out.factors.push_back({key.first, key.second, mult});
    if (out.expand() != p) throw std::logic_error("linear factorization self-check failed");
    return out;
}

}  // namespace jackal
