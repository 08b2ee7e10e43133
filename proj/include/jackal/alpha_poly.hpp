#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jackal/rational.hpp"

namespace jackal {

// Polynomial in the parameter alpha with rational coefficients.
// Dense coefficient list, coeffs_[k] is the coefficient of alpha^k,
// never with trailing zeros (so the zero polynomial has an empty list).
class AlphaPoly {
  public:
    AlphaPoly() = default;
    AlphaPoly(const Rational& c) {  // NOLINT: implicit constant embedding
        if (c != 0) coeffs_.push_back(c);
    }
    AlphaPoly(long c) : AlphaPoly(Rational(c)) {}  // NOLINT
    explicit AlphaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

    // a*alpha + b
    static AlphaPoly linear(const Rational& a, const Rational& b) {
        return AlphaPoly(std::vector<Rational>{b, a});
    }
    static AlphaPoly alpha(int k = 1) {
        std::vector<Rational> c(k + 1, Rational(0));
        c[k] = 1;
        return AlphaPoly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
        return coeffs_[k];
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational lead() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational constant() const { return coeff(0); }

    friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const AlphaPoly& a, const AlphaPoly& b) { return !(a == b); }

    AlphaPoly& operator+=(const AlphaPoly& o);
    AlphaPoly& operator-=(const AlphaPoly& o);
    friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
    friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
    friend AlphaPoly operator-(const AlphaPoly& a) { return AlphaPoly() - a; }
    friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
    AlphaPoly& operator*=(const AlphaPoly& o) { return *this = *this * o; }
    AlphaPoly& operator*=(const Rational& c);

    // Quotient and remainder of division in Q[alpha]; divisor must be nonzero.
    static std::pair<AlphaPoly, AlphaPoly> divmod(const AlphaPoly& a, const AlphaPoly& b);
    // Exact division; throws std::domain_error when the remainder is nonzero.
    AlphaPoly divexact(const AlphaPoly& b) const;

    Rational eval(const Rational& x) const;

    // p(alpha) = q(alpha^-1) * alpha^shift with q(0) != 0; zero maps to (0, 0).
    std::pair<AlphaPoly, int> invert_alpha() const;

    // All coefficients are nonnegative integers.
    bool nonneg_int() const;

    // Integer-coefficient polynomial with content 1 and positive leading
    // coefficient; *content (if given) receives the stripped rational factor,
    // so that *this == content * primitive_part. Zero polynomial maps to zero
    // with content 0.
    AlphaPoly primitive_part(Rational* content = nullptr) const;

    // Monic gcd convention: result is primitive with positive leading coeff.
    static AlphaPoly gcd(AlphaPoly a, AlphaPoly b);

    // Compact rendering, e.g. "2α³+2α²", "α+1", "-α", "0".
    std::string str() const;

  private:
    void strip() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

AlphaPoly operator*(const Rational& c, AlphaPoly p);

struct LinearFactor {
    long a = 0;  // alpha coefficient, >= 1
    long b = 0;  // constant term, coprime with a
    int mult = 1;
    friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

struct LinearFactorization {
    Rational unit;
    std::vector<LinearFactor> factors;  // sorted by (a, b)
    AlphaPoly expand() const;
};

// Complete factorization of p into rational-linear factors, or nullopt when a
// factor of degree >= 2 remains. Throws std::domain_error on the zero
// polynomial. The result is re-expanded and checked against p internally.
std::optional<LinearFactorization> linear_factorize(const AlphaPoly& p);

// Digits to Unicode superscripts, for exponent rendering.
std::string superscript(int k);

}  // namespace jackal
