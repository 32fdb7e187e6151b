#pragma once

#include <utility>
#include <vector>

#include "geoind/exact/scalar.hpp"

namespace geoind::poly {

using exact::Rat;
using exact::Scalar;

// Dense univariate polynomial with exact Scalar coefficients. Used for sign
// evaluation and root counting over the constructible-real field.
class SPoly {
public:
    SPoly() = default;
    explicit SPoly(std::vector<Scalar> c) : c_(std::move(c)) { normalize(); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Scalar& coeff(int i) const;
    const Scalar& lc() const { return c_.back(); }
    const std::vector<Scalar>& coeffs() const { return c_; }

    SPoly operator+(const SPoly& o) const;
    SPoly operator-(const SPoly& o) const;
    SPoly operator*(const SPoly& o) const;
    SPoly operator-() const;

    SPoly derivative() const;
    Scalar eval(const Scalar& x) const;
    int sign_at(const Rat& t) const { return eval(Scalar(t)).sign(); }

    // Field division; divisor must be nonzero.
    std::pair<SPoly, SPoly> divmod(const SPoly& d) const;
    SPoly monic() const;
    static SPoly gcd(SPoly a, SPoly b);  // monic
    SPoly squarefree_part() const;

private:
    std::vector<Scalar> c_;
    void normalize();
};

// Sturm chain over the Scalar field; input must be squarefree.
class SSturm {
public:
    explicit SSturm(const SPoly& squarefree);
    int variations_at(const Rat& t) const;
    int count_half_open(const Rat& lo, const Rat& hi) const;

private:
    std::vector<SPoly> seq_;
};

}  // namespace geoind::poly
