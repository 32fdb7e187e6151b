#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "geoind/poly/monic_odd.hpp"
#include "geoind/poly/spoly.hpp"

using namespace geoind;
using namespace geoind::exact;
using namespace geoind::poly;

namespace {

MonicOddPoly<Scalar> monic(std::vector<long> nums, std::vector<long> dens = {}) {
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < nums.size(); ++i)
        c.push_back(Scalar::ratio(nums[i], dens.empty() ? 1 : dens[i]));
    return MonicOddPoly<Scalar>(std::move(c));
}

// Independent oracle: rational bisection on an exactly evaluated polynomial.
// Kept free of the Scalar/Sturm machinery that odd_root uses.
struct BisectionOracle {
    std::vector<Rat> coeffs;  // a_0..a_{n-1}, leading 1
    Rat eval(const Rat& x) const {
        Rat acc(1);
        for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) acc = acc * x + coeffs[i];
        return acc;
    }
    // isolate a root in (lo, hi) given a sign change, to width 2^-bits
    std::pair<Rat, Rat> isolate(Rat lo, Rat hi, int bits) const {
        REQUIRE(sgn(eval(lo)) * sgn(eval(hi)) < 0);
        int slo = sgn(eval(lo));
        for (int i = 0; i < bits + 8; ++i) {
            Rat mid = (lo + hi) / 2;
            int s = sgn(eval(mid));
            if (s == 0) return {mid, mid};
            if (s == slo) lo = mid;
            else hi = mid;
        }
        return {lo, hi};
    }
};

}  // namespace

TEST_CASE("spoly division and gcd over the scalar field") {
    Scalar s2 = sqrt_nonneg(Scalar(2));
    // (x - s2)(x + s2) = x^2 - 2
    SPoly a{{Scalar(-2), Scalar(0), Scalar(1)}};
    SPoly b{{-s2, Scalar(1)}};
    auto [q, r] = a.divmod(b);
    CHECK(r.is_zero());
    CHECK(q.degree() == 1);
    CHECK(q.coeff(0) == s2);
    SPoly g = SPoly::gcd(a, b);
    CHECK(g.degree() == 1);

    // squarefree part of (x-1)^2 (x+2)
    SPoly sq{{Scalar(2), Scalar(-3), Scalar(0), Scalar(1)}};
    SPoly sf = sq.squarefree_part();
    CHECK(sf.degree() == 2);
    CHECK(sf.eval(Scalar(1)).sign() == 0);
    CHECK(sf.eval(Scalar(-2)).sign() == 0);
}

TEST_CASE("cauchy bound examples") {
    CHECK(cauchy_bound(monic({0, 0, 0})) == Scalar(1));          // x^3
    CHECK(cauchy_bound(monic({-5, -2, 0})) == Scalar(6));        // x^3 - 2x - 5
    CHECK(cauchy_bound(monic({-3})) == Scalar(4));               // x - 3
    CHECK(odd_root(monic({-3})) == Scalar(3));
}

TEST_CASE("odd_root on rational-coefficient polynomials") {
    CHECK(odd_root(monic({-8, 0, 0})) == Scalar(2));  // x^3 - 8
    CHECK(odd_root(monic({-8, 0, 0})).is_rational());
    CHECK(odd_root(monic({0, 0, 0})) == Scalar(0));   // x^3

    // x^3 - 2x - 5: exact root, bracketed by sign tests in (2, 3)
    auto p = monic({-5, -2, 0});
    Scalar r = odd_root(p);
    CHECK(p.eval(r).sign() == 0);
    CHECK(sign(r - Scalar(2)) > 0);
    CHECK(sign(Scalar(3) - r) > 0);
    CHECK(sign(cauchy_bound(p) - abs(r)) >= 0);

    // against the independent bisection oracle
    BisectionOracle oracle{{make_rat(-5), make_rat(-2), make_rat(0)}};
    auto [lo, hi] = oracle.isolate(make_rat(2), make_rat(3), 48);
    CHECK(sign(r - Scalar(lo)) >= 0);
    CHECK(sign(Scalar(hi) - r) >= 0);
}

TEST_CASE("odd_root picks the least real root") {
    // x^3 - x has roots -1, 0, 1
    CHECK(odd_root(monic({0, -1, 0})) == Scalar(-1));
    // (x-1)^3: repeated root via squarefree decomposition
    CHECK(odd_root(monic({-1, 3, -3})) == Scalar(1));
}

TEST_CASE("odd_root with algebraic coefficients") {
    Scalar s2 = sqrt_nonneg(Scalar(2));
    Scalar s3 = sqrt_nonneg(Scalar(3));

    // degree 1: x + sqrt(2)
    MonicOddPoly<Scalar> lin({s2});
    CHECK(odd_root(lin) == -s2);

    // x^3 - sqrt(2): root is 2^(1/6)
    MonicOddPoly<Scalar> p1({-s2, Scalar(0), Scalar(0)});
    Scalar r1 = odd_root(p1);
    CHECK(p1.eval(r1).sign() == 0);
    Scalar r1_6 = r1.square() * r1;  // r^3
    CHECK(r1_6.square() == Scalar(2));

    // two distinct algebraic coefficients; certify the root by an exact sign
    // change of the squarefree part across an enclosure of the result
    MonicOddPoly<Scalar> p2({-s3, s2, Scalar(0)});  // x^3 + sqrt(2) x - sqrt(3)
    Scalar r2 = odd_root(p2);
    CHECK(sign(cauchy_bound(p2) - abs(r2)) >= 0);
    {
        std::vector<Scalar> c(p2.coeffs);
        c.push_back(Scalar(1));
        SPoly f = SPoly{std::move(c)}.squarefree_part();
        auto [lo, hi] = r2.enclosure(48);
        CHECK(f.sign_at(lo) * f.sign_at(hi) < 0);
        CHECK(SSturm(f).count_half_open(lo, hi) == 1);
    }

    // the same algebraic cell in every slot
    MonicOddPoly<Scalar> p3({s2, s2, s2});
    Scalar r3 = odd_root(p3);
    {
        std::vector<Scalar> c(p3.coeffs);
        c.push_back(Scalar(1));
        SPoly f = SPoly{std::move(c)}.squarefree_part();
        auto [lo, hi] = r3.enclosure(48);
        CHECK(f.sign_at(lo) * f.sign_at(hi) < 0);
    }
}

TEST_CASE("random monic odd polynomials: exact root and bound") {
    std::mt19937_64 rng(20250203);
    std::uniform_int_distribution<int> degree_pick(0, 3);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 * degree_pick(rng) + 1;  // 1, 3, 5, 7
        std::vector<Scalar> c;
        Rat h(0);
        for (int i = 0; i < n; ++i) {
            Rat v = make_rat(num(rng), den(rng));
            if (abs(v) > h) h = abs(v);
            c.push_back(Scalar(v));
        }
        MonicOddPoly<Scalar> p(c);
        Scalar r = odd_root(p);
        CHECK(p.eval(r).sign() == 0);
        CHECK(sign(cauchy_bound(p) - abs(r)) >= 0);
        // |r| <= 1 + max |a_i|, restated with the max computed separately
        CHECK(sign(Scalar(h + 1) - abs(r)) >= 0);
    }
}

TEST_CASE("translation property of roots") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> num(-4, 4), den(1, 2);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Scalar> c;
        for (int i = 0; i < 3; ++i) c.push_back(Scalar(make_rat(num(rng), den(rng))));
        MonicOddPoly<Scalar> p(c);
        Scalar shift = Scalar(make_rat(num(rng), den(rng)));

        // q(x) = p(x - shift), expanded with SPoly arithmetic
        std::vector<Scalar> pc(c);
        pc.push_back(Scalar(1));
        SPoly ps{std::move(pc)};
        SPoly lin{{-shift, Scalar(1)}};
        SPoly q;
        for (int i = ps.degree(); i >= 0; --i)
            q = q * lin + SPoly{{ps.coeff(i)}};
        std::vector<Scalar> qc;
        for (int i = 0; i < q.degree(); ++i) qc.push_back(q.coeff(i));
        REQUIRE(q.lc() == Scalar(1));
        MonicOddPoly<Scalar> pq(qc);

        CHECK(odd_root(pq) == odd_root(p) + shift);
    }
}
