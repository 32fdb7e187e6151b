#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "geoind/exact/zpoly.hpp"

namespace geoind::exact {

namespace detail {
struct ScalarFactory;
}

// An exact real algebraic number: either a rational, or a squarefree integer
// polynomial together with an open isolating interval (the polynomial changes
// sign at the endpoints and has exactly one root inside).
//
// Values are immutable; interval refinement is cached behind a shared pointer
// and is not observable through the public interface. All decision procedures
// (sign, compare) are exact: zero detection is by polynomial divisibility and
// root counting, never by interval width cutoffs.
class Scalar {
public:
    Scalar() : v_(Rat(0)) {}
    Scalar(long n) : v_(Rat(n)) {}
    Scalar(const Int& n) : v_(Rat(n)) {}
    Scalar(Rat r) : v_(std::move(r)) { std::get<Rat>(v_).canonicalize(); }

    static Scalar ratio(long num, long den) { return Scalar(make_rat(num, den)); }
    // 2^k for any integer k (exact dyadic).
    static Scalar pow2(long k);

    // p(x) evaluated exactly. For algebraic x this is a single elimination,
    // so the representation degree of the result stays at most deg(x)'s;
    // iterated Horner products would square it at every step.
    static Scalar apply_poly(const ZPoly& p, const Scalar& x);

    // Wrap the unique root of `p` inside the open interval (lo, hi).
    // Requires: exactly one real root of p in (lo, hi), p(lo) != 0 != p(hi).
    // Rational roots are recognized and returned as rationals.
    static Scalar algebraic(const ZPoly& p, const Rat& lo, const Rat& hi);

    bool is_rational() const;
    // Present iff the value is known to be rational (always for the rational
    // representation; also after a refinement discovered a rational root).
    std::optional<Rat> rational_view() const;

    int sign() const;
    static int compare(const Scalar& a, const Scalar& b);

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);  // throws DivisionByZero
    friend Scalar operator-(const Scalar& a);

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return compare(a, b) != 0; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return compare(a, b) >= 0; }

    Scalar square() const;

    // Decimal string with exactly `digits` fractional digits (round half away
    // from zero). Reporting only; never used inside predicates.
    std::string approx(int digits) const;

    // "p/q" for rationals; "rootof(<poly>, <k>)" for irrationals, where the
    // value is the k-th real root of the polynomial (ascending, 0-based).
    std::string exact_str() const;

    // Degree of the stored representation (1 for rationals).
    int rep_degree() const;

    // Defining polynomial of the algebraic representation (nullopt when the
    // value is held as a rational).
    std::optional<ZPoly> defining_poly() const;
    // Identity of the shared representation cell; nullptr for rationals.
    // Equal pointers imply equal values (the converse need not hold).
    const void* cell_identity() const;

    // Rational enclosure with width <= 2^-bits.
    std::pair<Rat, Rat> enclosure(unsigned bits) const;

private:
    struct Alg {
        ZPoly poly;  // squarefree, primitive, lc > 0, degree >= 2
        mutable Rat lo, hi;
        mutable int sign_lo = 0;
        mutable std::optional<Rat> collapsed;
        mutable std::mutex m;

        std::pair<Rat, Rat> snapshot() const;
        std::optional<Rat> get_collapsed() const;
        void refine_step() const;
        void bisect_at(const Rat& r) const;       // r must not leave the value outside
        void refine_to_width(const Rat& w) const;
    };

    std::variant<Rat, std::shared_ptr<const Alg>> v_;

    const Rat& rat() const { return std::get<Rat>(v_); }
    const std::shared_ptr<const Alg>& alg() const { return std::get<std::shared_ptr<const Alg>>(v_); }
    bool holds_rat() const { return std::holds_alternative<Rat>(v_); }

    static Scalar make_alg(const ZPoly& p, const Rat& lo, const Rat& hi, int sign_lo);
    static Scalar add_alg_alg(const Scalar& a, const Scalar& b);
    static Scalar mul_alg_alg(const Scalar& a, const Scalar& b);
    static Scalar invert(const Scalar& a);
    static std::string format_value(const Rat& k, const Int& scale, int digits);
    friend Scalar sqrt_nonneg(const Scalar& a);
    friend struct detail::ScalarFactory;
};

int sign(const Scalar& s);
Scalar abs(const Scalar& s);
Scalar sqrt_nonneg(const Scalar& a);  // throws NegativeRadicand

// Simplest rational (smallest denominator, then numerator) in an open interval.
Rat simplest_in_open(const Rat& lo, const Rat& hi);

// Rational bounds l <= sqrt(r) <= u with u - l <= 2^-bits (r >= 0).
std::pair<Rat, Rat> rational_sqrt_bounds(const Rat& r, unsigned bits);

}  // namespace geoind::exact
