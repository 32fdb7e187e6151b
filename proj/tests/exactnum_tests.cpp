#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "geoind/errors.hpp"
#include "geoind/exact/scalar.hpp"
#include "geoind/exact/zpoly.hpp"

using namespace geoind;
using namespace geoind::exact;

namespace {

Rat random_rat(std::mt19937_64& rng, long num_range, long den_range) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_range);
    return make_rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("zpoly basics") {
    ZPoly p{-2, 0, 1};  // x^2 - 2
    CHECK(p.degree() == 2);
    CHECK(p.sign_at(make_rat(1)) == -1);
    CHECK(p.sign_at(make_rat(3, 2)) == 1);
    CHECK(p.eval(make_rat(3)) == make_rat(7));

    ZPoly q = p * p;
    CHECK(q.squarefree_part() == p);

    ZPoly cube{-1, 3, -3, 1};  // (x-1)^3
    CHECK(cube.squarefree_part() == ZPoly{-1, 1});

    CHECK(ZPoly::gcd(ZPoly{-1, 0, 1}, ZPoly{-1, 1}) == ZPoly{-1, 1});
    // res(x^2-2, x^2-3) = 1
    CHECK(ZPoly::resultant(ZPoly{-2, 0, 1}, ZPoly{-3, 0, 1}) == 1);
    // res(x-a, x-b) = b - a up to sign
    CHECK(abs(ZPoly::resultant(ZPoly{-2, 1}, ZPoly{-5, 1})) == 3);
}

TEST_CASE("sturm root counting and isolation") {
    ZPoly p{0, -1, 0, 1};  // x^3 - x: roots -1, 0, 1
    SturmChain chain(p);
    CHECK(chain.count_all() == 3);
    CHECK(chain.count_half_open(make_rat(-2), make_rat(0)) == 2);
    CHECK(chain.count_half_open(make_rat(0), make_rat(2)) == 1);
    auto roots = isolate_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].second <= roots[1].first);
    CHECK(roots[1].second <= roots[2].first);
    CHECK(chain.count_below(make_rat(-1, 2)) == 1);
}

TEST_CASE("simplest rational in interval") {
    CHECK(simplest_in_open(make_rat(-1, 3), make_rat(1, 7)) == 0);
    CHECK(simplest_in_open(make_rat(2), make_rat(3)) == make_rat(5, 2));
    CHECK(simplest_in_open(make_rat(1, 3), make_rat(1, 2)) == make_rat(2, 5));
    CHECK(simplest_in_open(make_rat(31, 10), make_rat(32, 10)) == make_rat(19, 6));
    CHECK(simplest_in_open(make_rat(-3), make_rat(-2)) == make_rat(-5, 2));
}

TEST_CASE("field operations on rationals") {
    Scalar half = Scalar::ratio(1, 2);
    Scalar third = Scalar::ratio(1, 3);
    CHECK(half + third == Scalar::ratio(5, 6));
    CHECK(Scalar(1) / Scalar(3) * Scalar(3) == Scalar(1));
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
    CHECK(sign(Scalar::ratio(-1, 7)) == -1);
}

TEST_CASE("square roots") {
    CHECK(sqrt_nonneg(Scalar(0)) == Scalar(0));
    CHECK(sqrt_nonneg(Scalar::ratio(9, 4)) == Scalar::ratio(3, 2));
    CHECK(sqrt_nonneg(Scalar::ratio(9, 4)).is_rational());

    Scalar r = sqrt_nonneg(Scalar(2));
    CHECK_FALSE(r.is_rational());
    CHECK(sign(r * r - Scalar(2)) == 0);
    CHECK(r * r == Scalar(2));

    CHECK(sign(r - Scalar(1)) == 1);
    CHECK(sign(sqrt_nonneg(Scalar(4)) - Scalar(2)) == 0);

    CHECK_THROWS_AS(sqrt_nonneg(Scalar(-1)), NegativeRadicand);
}

TEST_CASE("algebraic arithmetic identities") {
    Scalar s2 = sqrt_nonneg(Scalar(2));
    Scalar s3 = sqrt_nonneg(Scalar(3));
    Scalar s6 = sqrt_nonneg(Scalar(6));
    CHECK(s2 * s3 == s6);

    Scalar sum = s2 + s3;
    CHECK(sum.square() == Scalar(5) + Scalar(2) * s6);
    CHECK(sum == sqrt_nonneg(Scalar(5) + Scalar(2) * s6));

    CHECK(Scalar(1) / s2 == s2 / Scalar(2));
    CHECK(s2 - s2 == Scalar(0));
    CHECK((s2 + Scalar(5)) - s2 == Scalar(5));
    CHECK(-(-s2) == s2);
    CHECK(s2 * s2 * s2 == Scalar(2) * s2);

    // golden ratio from its minimal polynomial
    Scalar phi = Scalar::algebraic(ZPoly{-1, -1, 1}, make_rat(1), make_rat(2));
    CHECK(phi.square() == phi + Scalar(1));
    CHECK(phi == (Scalar(1) + sqrt_nonneg(Scalar(5))) / Scalar(2));
}

TEST_CASE("algebraic constructor recognizes rational roots") {
    // x^2 - 4 has root 2 in (1, 3)
    Scalar two = Scalar::algebraic(ZPoly{-4, 0, 1}, make_rat(1), make_rat(3));
    CHECK(two.is_rational());
    CHECK(two == Scalar(2));
    // (x-1/3)(x-5) expanded: 3x^2 - 16x + 5
    Scalar third = Scalar::algebraic(ZPoly{5, -16, 3}, make_rat(0), make_rat(1));
    CHECK(third == Scalar::ratio(1, 3));
}

TEST_CASE("decimal approximation") {
    CHECK(Scalar::ratio(1, 3).approx(3) == "0.333");
    CHECK(Scalar(0).approx(5) == "0.00000");
    CHECK(sqrt_nonneg(Scalar(2)).approx(3) == "1.414");
    CHECK(sqrt_nonneg(Scalar(2)).approx(8) == "1.41421356");
    CHECK(Scalar::ratio(-1, 2).approx(3) == "-0.500");
    CHECK(Scalar::ratio(2, 3).approx(2) == "0.67");
}

TEST_CASE("exact strings") {
    CHECK(Scalar::ratio(5, 6).exact_str() == "5/6");
    CHECK(Scalar(7).exact_str() == "7");
    CHECK(sqrt_nonneg(Scalar(2)).exact_str() == "rootof(x^2 - 2, 1)");
}

TEST_CASE("pow2") {
    CHECK(Scalar::pow2(3) == Scalar(8));
    CHECK(Scalar::pow2(0) == Scalar(1));
    CHECK(Scalar::pow2(-4) == Scalar::ratio(1, 16));
}

TEST_CASE("compare agrees with cross-multiplied integer comparison") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 1000; ++i) {
        Rat a = random_rat(rng, 1000, 60);
        Rat b = random_rat(rng, 1000, 60);
        int expected = sgn(a.get_num() * b.get_den() - b.get_num() * a.get_den());
        CHECK(Scalar::compare(Scalar(a), Scalar(b)) == expected);
    }
}

TEST_CASE("sqrt re-squares exactly on random nonnegative rationals") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        Rat a = random_rat(rng, 400, 40);
        if (sgn(a) < 0) a = -a;
        Scalar s = Scalar(a);
        Scalar r = sqrt_nonneg(s);
        CHECK(sign(r) >= 0);
        CHECK(sign(r * r - s) == 0);
    }
}

TEST_CASE("equality is a congruence for field operations") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 60; ++i) {
        Rat q = random_rat(rng, 50, 10);
        if (sgn(q) < 0) q = -q;
        // two routes to the same value
        Scalar a = sqrt_nonneg(Scalar(q) + Scalar(1));
        Scalar b = sqrt_nonneg(Scalar(q) + Scalar(2) - Scalar(1));
        REQUIRE(a == b);
        Scalar c = Scalar(random_rat(rng, 20, 6));
        CHECK(a + c == b + c);
        CHECK(a * c == b * c);
        CHECK(a - c == b - c);
        if (sign(c) != 0) CHECK(a / c == b / c);
    }
}

TEST_CASE("field laws hold exactly on algebraic samples") {
    Scalar s2 = sqrt_nonneg(Scalar(2));
    Scalar s5 = sqrt_nonneg(Scalar(5));
    Scalar q = Scalar::ratio(-3, 7);
    CHECK(s2 + (-s2) == Scalar(0));
    CHECK(s2 * (Scalar(1) / s2) == Scalar(1));
    CHECK((s2 + s5) + q == s2 + (s5 + q));
    CHECK((s2 * s5) * q == s2 * (s5 * q));
    CHECK(s2 * (s5 + q) == s2 * s5 + s2 * q);
}

TEST_CASE("enclosure shrinks and brackets") {
    Scalar r = sqrt_nonneg(Scalar(2));
    auto [lo, hi] = r.enclosure(40);
    CHECK(hi - lo <= make_rat(Int(1), Int(1) << 40));
    CHECK(lo * lo < 2);
    CHECK(hi * hi > 2);
}
