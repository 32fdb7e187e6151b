#pragma once

#include <type_traits>
#include <vector>

#include "geoind/errors.hpp"
#include "geoind/exact/scalar.hpp"

namespace geoind::poly {

// Monic polynomial of odd degree n over an ordered-field backend:
// x^n + a_{n-1} x^(n-1) + ... + a_0. Odd degree guarantees a real root.
template <class F>
struct MonicOddPoly {
    std::vector<F> coeffs;  // a_0 .. a_{n-1}

    explicit MonicOddPoly(std::vector<F> a) : coeffs(std::move(a)) {
        if (coeffs.empty() || coeffs.size() % 2 == 0)
            throw Error("monic odd polynomial needs an odd number of coefficients");
    }

    int degree() const { return static_cast<int>(coeffs.size()); }

    F eval(const F& x) const {
        if constexpr (std::is_same_v<F, exact::Scalar>) {
            // single-elimination evaluation keeps representation degrees flat
            bool all_rational = true;
            for (const auto& c : coeffs)
                if (!c.is_rational()) { all_rational = false; break; }
            if (all_rational) {
                exact::Int lcm(1);
                for (const auto& c : coeffs)
                    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                            c.rational_view()->get_den().get_mpz_t());
                std::vector<exact::Int> ic(coeffs.size() + 1);
                ic[coeffs.size()] = lcm;
                for (std::size_t i = 0; i < coeffs.size(); ++i) {
                    exact::Rat v = *coeffs[i].rational_view() * exact::Rat(lcm);
                    ic[i] = v.get_num();
                }
                return exact::Scalar::apply_poly(exact::ZPoly(std::move(ic)), x) /
                       exact::Scalar(exact::Rat(lcm));
            }
        }
        F acc = F(1);  // leading coefficient
        for (int i = degree() - 1; i >= 0; --i) acc = acc * x + coeffs[i];
        return acc;
    }
};

// max_i(1 + |a_i|); every real root r satisfies |r| <= bound.
template <class F>
F cauchy_bound(const MonicOddPoly<F>& p) {
    F best = F(1);
    for (const F& a : p.coeffs) {
        F v = F(1) + abs(a);
        if (sign(v - best) > 0) best = v;
    }
    return best;
}

// The least real root, exactly. Deterministic Skolem function for the
// odd-degree root axiom schema.
exact::Scalar odd_root(const MonicOddPoly<exact::Scalar>& p);

}  // namespace geoind::poly
