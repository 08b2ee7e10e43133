#pragma once

#include <map>

#include "jackal/alpha_rat.hpp"
#include "jackal/partition.hpp"

namespace jackal {

// Homogeneous symmetric function in the monomial basis, coefficients in
// Q(alpha). Zero coefficients are never stored; terms iterate in
// reverse-lexicographic partition order.
class SymFuncM {
  public:
    using TermMap = std::map<Partition, AlphaRat, RevLexLess>;

    explicit SymFuncM(int degree = 0) : degree_(degree) {}
    static SymFuncM monomial(const Partition& lam, AlphaRat c = AlphaRat(1));

    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    AlphaRat coeff(const Partition& lam) const;
    void add_term(const Partition& lam, const AlphaRat& c);  // accumulates
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const SymFuncM& a, const SymFuncM& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    SymFuncM& operator+=(const SymFuncM& o);
    SymFuncM& operator-=(const SymFuncM& o);
    friend SymFuncM operator+(SymFuncM a, const SymFuncM& b) { return a += b; }
    friend SymFuncM operator-(SymFuncM a, const SymFuncM& b) { return a -= b; }
    SymFuncM& operator*=(const AlphaRat& c);
    friend SymFuncM operator*(const AlphaRat& c, SymFuncM f) { return f *= c; }

    std::string str() const;  // "(α+1)·m[2] + 2·m[1,1]"

  private:
    int degree_;
    TermMap terms_;
};

// Transition data between the power-sum and monomial bases in one degree.
// parts lists the partitions of n in reverse-lex order; p2m[i][j] is the
// coefficient of m_{parts[j]} in p_{parts[i]} (an integer matrix), m2p its
// inverse over Q.
struct TransitionTable {
    int n;
    std::vector<Partition> parts;
    std::vector<std::vector<Rational>> p2m, m2p;
    int index(const Partition& lam) const;  // position in parts, -1 if absent
};

// Cached per degree; safe for concurrent use.
const TransitionTable& transition(int n);

// Product in the monomial basis. Degrees add.
SymFuncM m_mul(const SymFuncM& f, const SymFuncM& g);

// Coefficients over the power-sum basis, aligned with transition(deg).parts.
std::vector<AlphaRat> to_p_coeffs(const SymFuncM& f);
SymFuncM from_p_coeffs(int n, const std::vector<AlphaRat>& phat);

// <p_lam, p_lam> = z_lam alpha^len(lam); distinct p's are orthogonal, and
// functions of different degree pair to zero.
AlphaRat inner(const SymFuncM& f, const SymFuncM& g);

// Algebra endomorphism scaling each p_r by theta (theta = -1/alpha gives the
// twisted omega involution used by duality).
SymFuncM omega(const SymFuncM& f, const AlphaRat& theta);

// Polynomial in a fixed number of variables, exponent vectors as keys.
class MultiPoly {
  public:
    using TermMap = std::map<std::vector<int>, AlphaRat>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    void add_term(std::vector<int> expo, const AlphaRat& c);
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    MultiPoly& operator+=(const MultiPoly& o);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const AlphaRat& c);

    // Same polynomial viewed in total >= nvars variables, with our variables
    // placed starting at position offset (0-based).
    MultiPoly embed(int total, int offset) const;

  private:
    int nvars_;
    TermMap terms_;
};

// Evaluation at (x_1..x_nvars, 0, 0, ...).
MultiPoly eval_finite(const SymFuncM& f, int nvars);

}  // namespace jackal
