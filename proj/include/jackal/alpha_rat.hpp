#pragma once

#include "jackal/alpha_poly.hpp"

namespace jackal {

// Rational function in alpha, kept in canonical form: gcd(num, den) = 1 and
// den is an integer polynomial with content 1 and positive leading
// coefficient (den = 1 exactly when the value is a polynomial). Equality of
// values is therefore equality of representations.
class AlphaRat {
  public:
    AlphaRat() : den_(1) {}
    AlphaRat(AlphaPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
    AlphaRat(const Rational& c) : num_(c), den_(1) {}           // NOLINT
    AlphaRat(long c) : num_(Rational(c)), den_(1) {}            // NOLINT
    AlphaRat(AlphaPoly num, AlphaPoly den);

    const AlphaPoly& num() const { return num_; }
    const AlphaPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_ == AlphaPoly(1); }
    // Throws std::domain_error when the denominator is nontrivial.
    const AlphaPoly& as_poly() const;

    friend bool operator==(const AlphaRat& a, const AlphaRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const AlphaRat& a, const AlphaRat& b) { return !(a == b); }

    friend AlphaRat operator+(const AlphaRat& a, const AlphaRat& b);
    friend AlphaRat operator-(const AlphaRat& a, const AlphaRat& b);
    friend AlphaRat operator*(const AlphaRat& a, const AlphaRat& b);
    friend AlphaRat operator/(const AlphaRat& a, const AlphaRat& b);
    friend AlphaRat operator-(const AlphaRat& a);
    AlphaRat& operator+=(const AlphaRat& o) { return *this = *this + o; }
    AlphaRat& operator-=(const AlphaRat& o) { return *this = *this - o; }
    AlphaRat& operator*=(const AlphaRat& o) { return *this = *this * o; }
    AlphaRat& operator/=(const AlphaRat& o) { return *this = *this / o; }

    AlphaRat pow(int k) const;  // k >= 0

    // Value at alpha^-1, as a rational function of alpha.
    AlphaRat subst_inv_alpha() const;

    std::string str() const;

  private:
    AlphaPoly num_, den_;
};

}  // namespace jackal
