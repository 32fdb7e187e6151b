#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace geoind::exact {

using Int = mpz_class;
using Rat = mpq_class;

// Canonicalized rational from a numerator/denominator pair.
Rat make_rat(long num, long den = 1);
Rat make_rat(const Int& num, const Int& den);

// Dense univariate polynomial over the integers, coefficients low to high.
// The zero polynomial has an empty coefficient vector and degree -1.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    ZPoly(std::initializer_list<long> coeffs);

    static ZPoly constant(Int c);
    static ZPoly monomial(Int c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Int& coeff(int i) const;  // zero beyond the degree
    const Int& lc() const { return c_.back(); }
    const std::vector<Int>& coeffs() const { return c_; }

    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator-() const;
    ZPoly mul_int(const Int& k) const;
    bool operator==(const ZPoly& o) const { return c_ == o.c_; }

    ZPoly derivative() const;
    Int content() const;                 // nonnegative; 0 for the zero polynomial
    ZPoly primitive_positive() const;    // content removed, leading coefficient > 0

    // Exact evaluation.
    Rat eval(const Rat& t) const;
    int sign_at(const Rat& t) const;
    Int eval_int(const Int& t) const;

    // Root transforms. Each returns a polynomial whose real roots are the
    // stated image of this polynomial's roots.
    ZPoly reflected() const;             // roots negated
    ZPoly reversed() const;              // roots inverted; constant term must be nonzero
    ZPoly strip_x() const;               // x^k factor removed (drops root 0)
    ZPoly translated(const Rat& r) const;  // roots shifted by +r
    ZPoly scaled(const Rat& r) const;      // roots multiplied by r (r != 0)
    ZPoly roots_sqrt_candidates() const;   // p(x^2): roots are +-sqrt of p's roots
    ZPoly roots_squared() const;           // roots are the squares of p's roots

    ZPoly squarefree_part() const;
    static ZPoly gcd(ZPoly a, ZPoly b);    // primitive, leading coefficient > 0
    static Int resultant(const ZPoly& a, const ZPoly& b);

    // Every real root r satisfies |r| < bound (Cauchy-style, 1 + max|a_i/lc|).
    Rat root_bound() const;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Int> c_;
    void normalize();
};

// Sturm chain of a squarefree polynomial; counts real roots exactly.
class SturmChain {
public:
    explicit SturmChain(const ZPoly& squarefree);
    int variations_at(const Rat& t) const;
    int variations_minus_inf() const;
    int variations_plus_inf() const;
    int count_half_open(const Rat& lo, const Rat& hi) const;  // roots in (lo, hi]
    int count_open(const Rat& lo, const Rat& hi) const;       // roots in (lo, hi)
    int count_all() const;
    int count_below(const Rat& t) const;  // roots in (-inf, t]

private:
    std::vector<ZPoly> seq_;
};

// Disjoint open isolating intervals for all real roots of a squarefree
// polynomial, ascending, with a sign change at the endpoints of each.
std::vector<std::pair<Rat, Rat>> isolate_roots(const ZPoly& squarefree);

}  // namespace geoind::exact
