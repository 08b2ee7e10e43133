#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jackal/alpha_rat.hpp"

using namespace jackal;

namespace {

AlphaPoly rand_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), num(-6, 6), den(1, 4);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c) x = make_rational(num(rng), den(rng));
    return AlphaPoly(std::move(c));
}

const AlphaPoly A = AlphaPoly::alpha();

}  // namespace

TEST_CASE("rational canonicalization") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(1, -2) == make_rational(-1, 2));
    CHECK(make_rational(-3, -6) == make_rational(1, 2));
    CHECK(make_rational(0, 5) == 0);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    CHECK(is_integer(make_rational(4, 2)));
    CHECK_FALSE(is_integer(make_rational(1, 2)));
    CHECK(rat_str(make_rational(-3, 6)) == "-1/2");
}

TEST_CASE("alpha poly construction and accessors") {
    CHECK(AlphaPoly().is_zero());
    CHECK(AlphaPoly().degree() == -1);
    CHECK(AlphaPoly(0).is_zero());
    CHECK(AlphaPoly(3).degree() == 0);
    CHECK(AlphaPoly(3).constant() == 3);
    CHECK(A.degree() == 1);
    CHECK(A.coeff(1) == 1);
    CHECK(A.coeff(0) == 0);
    CHECK(A.coeff(5) == 0);
    CHECK(AlphaPoly::alpha(3).degree() == 3);
    CHECK(AlphaPoly::linear(2, 3) == AlphaPoly(2) * A + AlphaPoly(3));
    CHECK(AlphaPoly(std::vector<Rational>{Rational(1), Rational(0), Rational(0)}) == AlphaPoly(1));
    CHECK(AlphaPoly::linear(2, 3).lead() == 2);
    CHECK(AlphaPoly::linear(2, 3).is_constant() == false);
    CHECK(AlphaPoly(5).is_constant());
}

TEST_CASE("ring axioms hold on random polynomials") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        AlphaPoly a = rand_poly(rng, 5), b = rand_poly(rng, 5), c = rand_poly(rng, 5);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == AlphaPoly());
        CHECK(a + AlphaPoly() == a);
        CHECK(a * AlphaPoly(1) == a);
        CHECK(a * AlphaPoly() == AlphaPoly());
        if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("evaluation") {
    AlphaPoly p = AlphaPoly::linear(2, 1);  // 2a+1
    CHECK(p.eval(3) == 7);
    CHECK(p.eval(make_rational(1, 2)) == 2);
    CHECK(AlphaPoly().eval(5) == 0);
    CHECK((p * p).eval(3) == 49);
}

TEST_CASE("divmod and exact division") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        AlphaPoly a = rand_poly(rng, 6), b = rand_poly(rng, 3);
        if (b.is_zero()) continue;
        auto [q, r] = AlphaPoly::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        CHECK((a * b).divexact(b) == a);
    }
    CHECK_THROWS_AS((A * A + AlphaPoly(1)).divexact(A + AlphaPoly(1)), std::domain_error);
    CHECK_THROWS((void)AlphaPoly::divmod(A, AlphaPoly()));
}

TEST_CASE("gcd") {
    AlphaPoly f = (A + AlphaPoly(1)) * AlphaPoly::linear(2, 3);
    AlphaPoly g = (A + AlphaPoly(1)) * AlphaPoly::linear(1, 5);
    CHECK(AlphaPoly::gcd(f, g) == A + AlphaPoly(1));
    CHECK(AlphaPoly::gcd(f, AlphaPoly()) == f.primitive_part());
    CHECK(AlphaPoly::gcd(AlphaPoly(), AlphaPoly()) == AlphaPoly());
    // gcd of coprime polynomials is 1
    CHECK(AlphaPoly::gcd(A, A + AlphaPoly(1)) == AlphaPoly(1));
    // result divides both and is primitive with positive lead
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        AlphaPoly a = rand_poly(rng, 4), b = rand_poly(rng, 4), m = rand_poly(rng, 2);
        if (a.is_zero() || b.is_zero() || m.is_zero()) continue;
        AlphaPoly d = AlphaPoly::gcd(a * m, b * m);
        CHECK((a * m).divexact(d) * d == a * m);
        CHECK((b * m).divexact(d) * d == b * m);
        CHECK(d.lead() > 0);
        Rational content;
        d.primitive_part(&content);
        CHECK(content == 1);
    }
}

TEST_CASE("primitive part and content") {
    AlphaPoly p = make_rational(2, 3) * (A + AlphaPoly(2));
    Rational content;
    AlphaPoly prim = p.primitive_part(&content);
    CHECK(prim == A + AlphaPoly(2));
    CHECK(content == make_rational(2, 3));
    CHECK(content * prim == p);

    p = AlphaPoly::linear(-4, -6);
    prim = p.primitive_part(&content);
    CHECK(prim == AlphaPoly::linear(2, 3));
    CHECK(content == -2);

    prim = AlphaPoly().primitive_part(&content);
    CHECK(prim.is_zero());
    CHECK(content == 0);
}

TEST_CASE("alpha inversion bookkeeping") {
    // p(alpha) = q(1/alpha) * alpha^shift with q(0) != 0
    AlphaPoly p = AlphaPoly(2) * A * A * (A + AlphaPoly(1));  // 2a^3 + 2a^2
    auto [q, shift] = p.invert_alpha();
    CHECK(q == AlphaPoly::linear(2, 2));
    CHECK(shift == 3);

    auto [z, zs] = AlphaPoly().invert_alpha();
    CHECK(z.is_zero());
    CHECK(zs == 0);

    std::mt19937 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        AlphaPoly a = rand_poly(rng, 6);
        if (a.is_zero()) continue;
        auto [qq, s] = a.invert_alpha();
        CHECK(qq.coeff(0) != 0);
        CHECK(s == a.degree() + (qq.degree() - a.degree() + s) - qq.degree());
        // re-invert: alpha^s * q(1/alpha) recovers a
        auto [back, s2] = qq.invert_alpha();
        CHECK(s2 == qq.degree());
        // a = alpha^(s - deg q) * reverse(q)
        AlphaPoly rebuilt = back;
        for (int k = 0; k < s - qq.degree(); ++k) rebuilt *= A;
        CHECK(rebuilt == a);
    }
}

TEST_CASE("nonnegative integer detection") {
    CHECK((AlphaPoly(2) * A * A + AlphaPoly(3)).nonneg_int());
    CHECK(AlphaPoly().nonneg_int());
    CHECK_FALSE((AlphaPoly(2) * A - AlphaPoly(1)).nonneg_int());
    CHECK_FALSE(AlphaPoly(make_rational(1, 2)).nonneg_int());
}

TEST_CASE("rendering") {
    CHECK((AlphaPoly(2) * A * A * A + AlphaPoly(2) * A * A).str() == "2α³+2α²");
    CHECK((A + AlphaPoly(1)).str() == "α+1");
    CHECK((-A).str() == "-α");
    CHECK(AlphaPoly().str() == "0");
    CHECK(AlphaPoly(3).str() == "3");
    CHECK(AlphaPoly(make_rational(1, 2)).str() == "1/2");
    CHECK((A * A - A - AlphaPoly(2)).str() == "α²-α-2");
    CHECK((make_rational(3, 2) * A).str() == "(3/2)α");
    CHECK(superscript(12) == "¹²");
    CHECK(superscript(3) == "³");
}

TEST_CASE("linear factorization") {
    AlphaPoly p = AlphaPoly(2) * A * A * (A + AlphaPoly(1));
    auto fac = linear_factorize(p);
    REQUIRE(fac.has_value());
    CHECK(fac->unit == 2);
    REQUIRE(fac->factors.size() == 2);
    CHECK(fac->factors[0] == LinearFactor{1, 0, 2});
    CHECK(fac->factors[1] == LinearFactor{1, 1, 1});
    CHECK(fac->expand() == p);

    // imprimitive linear contents move into the unit
    fac = linear_factorize(AlphaPoly(4) * A * A + AlphaPoly(6) * A);  // 2a(2a+3)
    REQUIRE(fac.has_value());
    CHECK(fac->unit == 2);
    CHECK(fac->factors == std::vector<LinearFactor>{{1, 0, 1}, {2, 3, 1}});

    // negative roots and rational units
    fac = linear_factorize(make_rational(1, 2) * (A - AlphaPoly(1)) * (A - AlphaPoly(1)));
    REQUIRE(fac.has_value());
    CHECK(fac->unit == make_rational(1, 2));
    CHECK(fac->factors == std::vector<LinearFactor>{{1, -1, 2}});
    CHECK(fac->expand() == make_rational(1, 2) * (A - AlphaPoly(1)) * (A - AlphaPoly(1)));

    // constants factor with empty factor list
    fac = linear_factorize(AlphaPoly(7));
    REQUIRE(fac.has_value());
    CHECK(fac->unit == 7);
    CHECK(fac->factors.empty());

    // an irreducible quadratic has no linear factorization
    CHECK_FALSE(linear_factorize(A * A + AlphaPoly(1)).has_value());
    CHECK_FALSE(linear_factorize((A * A + AlphaPoly(1)) * A).has_value());

    CHECK_THROWS_AS(linear_factorize(AlphaPoly()), std::domain_error);

    // random products of linear factors round-trip
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> small(1, 3), sgn(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        AlphaPoly prod(small(rng));
        int nf = small(rng);
        for (int i = 0; i < nf; ++i) prod *= AlphaPoly::linear(small(rng), sgn(rng));
        auto f = linear_factorize(prod);
        REQUIRE(f.has_value());
        CHECK(f->expand() == prod);
        for (std::size_t i = 1; i < f->factors.size(); ++i) {
            auto& x = f->factors[i - 1];
            auto& y = f->factors[i];
            CHECK(std::pair{x.a, x.b} < std::pair{y.a, y.b});
        }
    }
}

TEST_CASE("alpha rational canonical form") {
    // all rational content lands in the numerator: den has content 1
    AlphaRat r(AlphaPoly::linear(2, 2), AlphaPoly(4) * A);
    CHECK(r.num() == make_rational(1, 2) * (A + AlphaPoly(1)));
    CHECK(r.den() == A);
    CHECK_FALSE(r.is_poly());
    CHECK_THROWS_AS((void)r.as_poly(), std::domain_error);

    AlphaRat s(AlphaPoly(2) * A * A, A);
    CHECK(s.is_poly());
    CHECK(s.as_poly() == AlphaPoly(2) * A);
    CHECK(s.den() == AlphaPoly(1));

    CHECK(AlphaRat().is_zero());
    CHECK(AlphaRat(A).is_poly());
    CHECK_THROWS_AS(AlphaRat(A, AlphaPoly()), std::domain_error);

    // denominator normalized to primitive integer with positive lead
    AlphaRat t(AlphaPoly(1), make_rational(-1, 3) * (A + AlphaPoly(1)));
    CHECK(t.den() == A + AlphaPoly(1));
    CHECK(t.num() == AlphaPoly(-3));
}

TEST_CASE("alpha rational arithmetic") {
    AlphaRat inv_a(AlphaPoly(1), A);
    CHECK(inv_a + inv_a == AlphaRat(AlphaPoly(2), A));
    CHECK(inv_a * AlphaRat(A) == AlphaRat(1));
    CHECK(AlphaRat(1) / AlphaRat(A + AlphaPoly(1)) + AlphaRat(1) / AlphaRat(A - AlphaPoly(1)) ==
          AlphaRat(AlphaPoly(2) * A, A * A - AlphaPoly(1)));
    CHECK(inv_a - inv_a == AlphaRat());
    CHECK(-inv_a + inv_a == AlphaRat());
    CHECK_THROWS((void)(AlphaRat(1) / AlphaRat()));

    CHECK(inv_a.pow(3) == AlphaRat(AlphaPoly(1), A * A * A));
    CHECK(inv_a.pow(0) == AlphaRat(1));
    CHECK(AlphaRat(AlphaPoly(2) * A).pow(2) == AlphaRat(AlphaPoly(4) * A * A));

    // field axioms on random values
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        AlphaPoly pn = rand_poly(rng, 3), pd = rand_poly(rng, 2);
        AlphaPoly qn = rand_poly(rng, 3), qd = rand_poly(rng, 2);
        if (pd.is_zero() || qd.is_zero()) continue;
        AlphaRat p(pn, pd), q(qn, qd);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK(p - q == -(q - p));
        if (!q.is_zero()) CHECK((p / q) * q == p);
        CHECK(p * (q + AlphaRat(1)) == p * q + p);
    }
}

TEST_CASE("alpha rational inversion substitution") {
    CHECK(AlphaRat(A).subst_inv_alpha() == AlphaRat(AlphaPoly(1), A));
    CHECK(AlphaRat(AlphaPoly(1), A).subst_inv_alpha() == AlphaRat(A));
    // (a+1)/1 -> (1/a + 1) = (a+1)/a
    CHECK(AlphaRat(A + AlphaPoly(1)).subst_inv_alpha() == AlphaRat(A + AlphaPoly(1), A));
    CHECK(AlphaRat(5).subst_inv_alpha() == AlphaRat(5));
    // involution
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        AlphaPoly pn = rand_poly(rng, 4), pd = rand_poly(rng, 3);
        if (pd.is_zero()) continue;
        AlphaRat p(pn, pd);
        CHECK(p.subst_inv_alpha().subst_inv_alpha() == p);
    }
}

TEST_CASE("alpha rational rendering") {
    CHECK(AlphaRat(AlphaPoly(2) * A * A).str() == "2α²");
    CHECK(AlphaRat(AlphaPoly(1), A).str() == "1/α");
    CHECK(AlphaRat(A + AlphaPoly(1), AlphaPoly(2) * A).str() == "((1/2)α+1/2)/α");
    CHECK(AlphaRat(AlphaPoly(1), A * A - AlphaPoly(1)).str() == "1/(α²-1)");
    CHECK(AlphaRat().str() == "0");
}
