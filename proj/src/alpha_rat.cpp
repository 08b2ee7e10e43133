#include "jackal/alpha_rat.hpp"

namespace jackal {

AlphaRat::AlphaRat(AlphaPoly num, AlphaPoly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = AlphaPoly();
        den_ = AlphaPoly(1);
        return;
    }
    if (den.is_constant()) {
        num *= Rational(1) / den.constant();
        num_ = std::move(num);
        den_ = AlphaPoly(1);
        return;
    }
    AlphaPoly g = AlphaPoly::gcd(num, den);
    if (g.degree() > 0) {
        num = num.divexact(g);
        den = den.divexact(g);
    }
    Rational content;
    den_ = den.primitive_part(&content);
    num *= Rational(1) / content;
    num_ = std::move(num);
}

const AlphaPoly& AlphaRat::as_poly() const {
    if (!is_poly()) throw std::domain_error("rational function is not a polynomial");
    return num_;
}

AlphaRat operator+(const AlphaRat& a, const AlphaRat& b) {
    if (a.is_poly() && b.is_poly()) return AlphaRat(a.num_ + b.num_);
    return AlphaRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

AlphaRat operator-(const AlphaRat& a, const AlphaRat& b) {
    if (a.is_poly() && b.is_poly()) return AlphaRat(a.num_ - b.num_);
    return AlphaRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

AlphaRat operator*(const AlphaRat& a, const AlphaRat& b) {
    if (a.is_poly() && b.is_poly()) return AlphaRat(a.num_ * b.num_);
    return AlphaRat(a.num_ * b.num_, a.den_ * b.den_);
}

AlphaRat operator/(const AlphaRat& a, const AlphaRat& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero rational function");
    return AlphaRat(a.num_ * b.den_, a.den_ * b.num_);
}

AlphaRat operator-(const AlphaRat& a) {
    AlphaRat r = a;
    r.num_ *= Rational(-1);
    return r;
}

AlphaRat AlphaRat::pow(int k) const {
    if (k < 0) throw std::domain_error("negative power");
    AlphaRat r(1);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
}

AlphaRat AlphaRat::subst_inv_alpha() const {
    if (is_zero()) return AlphaRat();
    auto [qn, sn] = num_.invert_alpha();
    auto [qd, sd] = den_.invert_alpha();
    if (sd >= sn) return AlphaRat(qn * AlphaPoly::alpha(sd - sn), qd);
    return AlphaRat(qn, qd * AlphaPoly::alpha(sn - sd));
}

namespace {
// single power of alpha with coefficient 1, or a bare nonnegative integer
bool plain_atom(const AlphaPoly& p) {
    if (p.is_constant()) return is_integer(p.constant()) && p.constant() >= 0;
    if (p.lead() != 1) return false;
    for (int k = 0; k < p.degree(); ++k)
        if (p.coeff(k) != 0) return false;
    return true;
}
}  // namespace

std::string AlphaRat::str() const {
    if (is_poly()) return num_.str();
    std::string n = plain_atom(num_) ? num_.str() : "(" + num_.str() + ")";
    std::string d = plain_atom(den_) ? den_.str() : "(" + den_.str() + ")";
    return n + "/" + d;
}

}  // namespace jackal
