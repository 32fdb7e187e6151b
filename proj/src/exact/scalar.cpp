#include "geoind/exact/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "geoind/errors.hpp"

namespace geoind::exact {

namespace {

int cmp_rat(const Rat& a, const Rat& b) { return mpq_cmp(a.get_mpq_t(), b.get_mpq_t()); }

Rat round_half_away(const Rat& v) {
    // nearest integer, ties away from zero
    const Int& n = v.get_num();
    const Int& d = v.get_den();
    Int two_n = 2 * n;
    Int out;
    if (sgn(v) >= 0) {
        Int t = two_n + d;
        mpz_fdiv_q(out.get_mpz_t(), t.get_mpz_t(), Int(2 * d).get_mpz_t());
    } else {
        Int t = two_n - d;
        mpz_cdiv_q(out.get_mpz_t(), t.get_mpz_t(), Int(2 * d).get_mpz_t());
    }
    return Rat(out);
}

std::string format_decimal(const Rat& v, int digits) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Rat scaled = v * Rat(scale);
    Rat k = round_half_away(scaled);
    Int ki = k.get_num();
    std::string sign = ki < 0 ? "-" : "";
    Int a = abs(ki);
    Int ip = a / scale;
    Int fp = a % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    return sign + ip.get_str() + "." + frac;
}

}  // namespace

Rat simplest_in_open(const Rat& lo, const Rat& hi) {
    assert(lo < hi);
    if (sgn(lo) < 0 && sgn(hi) > 0) return Rat(0);
    if (sgn(hi) <= 0) {
        Rat r = simplest_in_open(-hi, -lo);
        return -r;
    }
    // 0 <= lo < hi; continued-fraction descent
    // returns p/q with lo < p/q < hi, minimal denominator
    struct Walk {
        static Rat go(const Rat& lo, const Rat& hi) {
            Int fl;
            mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
            Rat n = Rat(fl) + 1;
            if (n < hi) return n;
            // both endpoints in (fl, fl+1]; recurse on reciprocals
            Rat a(fl);
            Rat rlo = hi - a;  // note the swap: 1/(x-a) reverses order
            Rat rhi = lo - a;
            // lo - a could be 0 when lo is an integer; then any value > 1/(hi-a) works
            if (sgn(rhi) == 0) {
                Rat inner = Rat(1) / rlo;
                Int f2;
                mpz_fdiv_q(f2.get_mpz_t(), inner.get_num().get_mpz_t(), inner.get_den().get_mpz_t());
                return a + Rat(1) / (Rat(f2) + 1);
            }
            Rat inner = go(Rat(1) / rlo, Rat(1) / rhi);
            return a + Rat(1) / inner;
        }
    };
    return Walk::go(lo, hi);
}

std::pair<Rat, Rat> rational_sqrt_bounds(const Rat& r, unsigned bits) {
    assert(sgn(r) >= 0);
    if (sgn(r) == 0) return {Rat(0), Rat(0)};
    const Int& n = r.get_num();
    const Int& d = r.get_den();
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^bits for precision
    Int m = n * d;
    Int four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 2, 2 * bits);
    m *= four_k;
    Int s;
    mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
    den *= d;
    return {make_rat(s, den), make_rat(s + 1, den)};
}

// ---------------------------------------------------------------------------
// Alg internals

std::pair<Rat, Rat> Scalar::Alg::snapshot() const {
    std::scoped_lock lk(m);
    return {lo, hi};
}

std::optional<Rat> Scalar::Alg::get_collapsed() const {
    std::scoped_lock lk(m);
    return collapsed;
}

void Scalar::Alg::refine_step() const {
    std::scoped_lock lk(m);
    if (collapsed) {
        Rat w = (hi - lo) / 4;
        lo = *collapsed - w;
        hi = *collapsed + w;
        return;
    }
    Rat mid = (lo + hi) / 2;
    int s = poly.sign_at(mid);
    if (s == 0) {
        collapsed = mid;
        return;
    }
    if (s == sign_lo) lo = mid;
    else hi = mid;
}

void Scalar::Alg::bisect_at(const Rat& r) const {
    std::scoped_lock lk(m);
    if (collapsed) return;
    if (!(lo < r && r < hi)) return;
    int s = poly.sign_at(r);
    if (s == 0) {
        collapsed = r;
        return;
    }
    if (s == sign_lo) lo = r;
    else hi = r;
}

void Scalar::Alg::refine_to_width(const Rat& w) const {
    while (true) {
        {
            std::scoped_lock lk(m);
            if (collapsed) return;
            if (hi - lo <= w) return;
        }
        refine_step();
    }
}

// ---------------------------------------------------------------------------
// Construction

Scalar Scalar::pow2(long k) {
    Int num(1), den(1);
    if (k >= 0) mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), k);
    else mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), -k);
    return Scalar(make_rat(num, den));
}

namespace detail {

struct ScalarFactory {
    static Scalar wrap(const ZPoly& p, const Rat& lo0, const Rat& hi0, bool probe) {
        assert(p.degree() >= 1);
        if (p.degree() == 1) {
            Rat root = make_rat(-p.coeff(0), p.coeff(1));
            return Scalar(root);
        }
        Rat lo = lo0, hi = hi0;
        int slo = p.sign_at(lo);
        if (probe) {
            Rat cand = simplest_in_open(lo, hi);
            if (p.sign_at(cand) == 0) return Scalar(cand);
            if (p.degree() <= 8) {
                // narrow the interval so rational roots of modest height
                // surface as the simplest rational inside it
                for (int step = 0; step < 40; ++step) {
                    Rat mid = (lo + hi) / 2;
                    int s = p.sign_at(mid);
                    if (s == 0) return Scalar(mid);
                    if (s == slo) lo = mid;
                    else hi = mid;
                    if (step % 8 == 7) {
                        cand = simplest_in_open(lo, hi);
                        if (p.sign_at(cand) == 0) return Scalar(cand);
                    }
                }
                cand = simplest_in_open(lo, hi);
                if (p.sign_at(cand) == 0) return Scalar(cand);
            }
        }
        int shi = p.sign_at(hi);
        assert(slo != 0 && shi != 0 && slo != shi);
        (void)shi;
        return Scalar::make_alg(p, lo, hi, slo);
    }
};

}  // namespace detail

Scalar Scalar::algebraic(const ZPoly& p, const Rat& lo, const Rat& hi) {
    ZPoly q = p.squarefree_part();
    if (q.degree() < 1) throw Error("algebraic: polynomial has no roots");
    return detail::ScalarFactory::wrap(q, lo, hi, true);
}

bool Scalar::is_rational() const { return rational_view().has_value(); }

std::optional<Rat> Scalar::rational_view() const {
    if (holds_rat()) return rat();
    return alg()->get_collapsed();
}

int Scalar::sign() const {
    if (auto r = rational_view()) return sgn(*r);
    const auto& a = alg();
    while (true) {
        if (auto c = a->get_collapsed()) return sgn(*c);
        auto [lo, hi] = a->snapshot();
        if (sgn(lo) >= 0) return 1;
        if (sgn(hi) <= 0) return -1;
        a->bisect_at(Rat(0));
    }
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
    auto ra = a.rational_view();
    auto rb = b.rational_view();
    if (ra && rb) return cmp_rat(*ra, *rb);
    if (rb) {
        // a algebraic vs rational
        const auto& pa = a.alg();
        while (true) {
            if (auto c = pa->get_collapsed()) return cmp_rat(*c, *rb);
            auto [lo, hi] = pa->snapshot();
            if (hi <= *rb) return -1;
            if (lo >= *rb) return 1;
            pa->bisect_at(*rb);
        }
    }
    if (ra) return -compare(b, a);

    const auto& pa = a.alg();
    const auto& pb = b.alg();
    if (pa == pb) return 0;

    ZPoly g = ZPoly::gcd(pa->poly, pb->poly);
    std::optional<SturmChain> gchain;
    if (g.degree() >= 1) gchain.emplace(g);
    bool known_unequal = g.degree() < 1;

    while (true) {
        if (pa->get_collapsed() || pb->get_collapsed()) return compare(a, b);
        auto [la, ha] = pa->snapshot();
        auto [lb, hb] = pb->snapshot();
        if (ha <= lb) return -1;
        if (hb <= la) return 1;
        if (!known_unequal) {
            Rat jlo = std::max(la, lb), jhi = std::min(ha, hb);
            if (jlo < jhi) {
                int c = gchain->count_open(jlo, jhi);
                if (c == 0) known_unequal = true;
                else if (c == 1) return 0;
            }
        }
        pa->refine_step();
        pb->refine_step();
    }
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

// Exact polynomial interpolation through (xs[i], ys[i]) via Newton form.
ZPoly interpolate_poly(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rat> dd(ys);  // divided differences, computed in place
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    // expand sum dd[k] * prod_{j<k} (x - xs[j])
    std::vector<Rat> acc{dd[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        // acc = acc*(x - xs[k]) + dd[k]
        std::vector<Rat> next(acc.size() + 1, Rat(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] -= acc[i] * xs[k];
        }
        next[0] += dd[k];
        acc = std::move(next);
    }
    Int lcm(1);
    for (const auto& c : acc) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        Rat v = acc[i] * Rat(lcm);
        out[i] = v.get_num();
    }
    return ZPoly(std::move(out));
}

// Polynomial whose roots include every sum (root of A) + (root of B).
ZPoly resultant_add_poly(const ZPoly& A, const ZPoly& B) {
    int da = A.degree(), db = B.degree();
    int dmax = da * db;
    std::vector<Rat> xs, ys;
    xs.reserve(dmax + 1);
    ys.reserve(dmax + 1);
    long e = 0;
    for (int k = 0; k <= dmax; ++k) {
        Rat x(e);
        // A(e - y) as a polynomial in y
        ZPoly lin(std::vector<Int>{Int(e), Int(-1)});
        ZPoly ay;
        for (int i = da; i >= 0; --i) ay = ay * lin + ZPoly::constant(A.coeff(i));
        ys.push_back(Rat(ZPoly::resultant(ay, B)));
        xs.push_back(x);
        e = e > 0 ? -e : -e + 1;
    }
    return interpolate_poly(xs, ys).primitive_positive();
}

// Polynomial whose roots include every product; A must have nonzero constant term.
ZPoly resultant_mul_poly(const ZPoly& A, const ZPoly& B) {
    int da = A.degree(), db = B.degree();
    int dmax = da * db;
    std::vector<Rat> xs, ys;
    xs.reserve(dmax + 1);
    ys.reserve(dmax + 1);
    long e = 0;
    for (int k = 0; k <= dmax; ++k) {
        // y^da * A(e/y) = sum A_i e^i y^(da-i)
        std::vector<Int> cy(da + 1, Int(0));
        Int epow(1);
        for (int i = 0; i <= da; ++i) {
            cy[da - i] = A.coeff(i) * epow;
            epow *= e;
        }
        ys.push_back(Rat(ZPoly::resultant(ZPoly(std::move(cy)), B)));
        xs.push_back(Rat(e));
        e = e > 0 ? -e : -e + 1;
    }
    return interpolate_poly(xs, ys).primitive_positive();
}

}  // namespace

Scalar Scalar::make_alg(const ZPoly& p, const Rat& lo, const Rat& hi, int sign_lo) {
    auto cell = std::make_shared<Alg>();
    cell->poly = p;
    cell->lo = lo;
    cell->hi = hi;
    cell->sign_lo = sign_lo;
    Scalar s;
    s.v_ = std::shared_ptr<const Alg>(std::move(cell));
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    auto ra = a.rational_view();
    auto rb = b.rational_view();
    if (ra && rb) return Scalar(Rat(*ra + *rb));
    if (ra) return b + a;
    if (rb) {
        if (sgn(*rb) == 0) return a;
        const auto& pa = a.alg();
        auto [lo, hi] = pa->snapshot();
        ZPoly p = pa->poly.translated(*rb);
        return detail::ScalarFactory::wrap(p, lo + *rb, hi + *rb, false);
    }
    return Scalar::add_alg_alg(a, b);
}

Scalar Scalar::add_alg_alg(const Scalar& a, const Scalar& b) {
    const auto& pa = a.alg();
    const auto& pb = b.alg();
    ZPoly R = resultant_add_poly(pa->poly, pb->poly).squarefree_part();
    SturmChain chain(R);
    while (true) {
        if (pa->get_collapsed() || pb->get_collapsed()) return a + b;
        auto [la, ha] = pa->snapshot();
        auto [lb, hb] = pb->snapshot();
        Rat lo = la + lb, hi = ha + hb;
        if (R.sign_at(lo) != 0 && R.sign_at(hi) != 0 && chain.count_half_open(lo, hi) == 1)
            return detail::ScalarFactory::wrap(R, lo, hi, true);
        pa->refine_step();
        pb->refine_step();
    }
}

Scalar operator-(const Scalar& a) {
    if (auto r = a.rational_view()) return Scalar(Rat(-*r));
    const auto& pa = a.alg();
    auto [lo, hi] = pa->snapshot();
    return detail::ScalarFactory::wrap(pa->poly.reflected().primitive_positive(), -hi, -lo, false);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar Scalar::square() const {
    if (auto r = rational_view()) return Scalar(Rat(*r * *r));
    const auto& pa = alg();
    // sign-definite interval first (the value is never 0 for the algebraic rep)
    (void)sign();
    ZPoly R = pa->poly.roots_squared().squarefree_part();
    SturmChain chain(R);
    while (true) {
        if (pa->get_collapsed()) return square();
        auto [lo, hi] = pa->snapshot();
        if (sgn(lo) < 0 && sgn(hi) > 0) {  // can happen only before the sign() refinement above
            pa->refine_step();
            continue;
        }
        Rat l2 = lo * lo, h2 = hi * hi;
        Rat jlo = std::min(l2, h2), jhi = std::max(l2, h2);
        if (R.sign_at(jlo) != 0 && R.sign_at(jhi) != 0 && chain.count_half_open(jlo, jhi) == 1)
            return detail::ScalarFactory::wrap(R, jlo, jhi, true);
        pa->refine_step();
    }
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    auto ra = a.rational_view();
    auto rb = b.rational_view();
    if (ra && rb) return Scalar(Rat(*ra * *rb));
    if (ra) return b * a;
    if (rb) {
        if (sgn(*rb) == 0) return Scalar(0);
        const auto& pa = a.alg();
        auto [lo, hi] = pa->snapshot();
        ZPoly p = pa->poly.scaled(*rb);
        Rat l = lo * *rb, h = hi * *rb;
        if (l > h) std::swap(l, h);
        return detail::ScalarFactory::wrap(p, l, h, false);
    }
    if (!a.holds_rat() && !b.holds_rat() && a.alg() == b.alg()) return a.square();
    return Scalar::mul_alg_alg(a, b);
}

Scalar Scalar::mul_alg_alg(const Scalar& a, const Scalar& b) {
    const auto& pa = a.alg();
    const auto& pb = b.alg();
    ZPoly R = resultant_mul_poly(pa->poly.strip_x(), pb->poly.strip_x()).squarefree_part();
    SturmChain chain(R);
    while (true) {
        if (pa->get_collapsed() || pb->get_collapsed()) return a * b;
        auto [la, ha] = pa->snapshot();
        auto [lb, hb] = pb->snapshot();
        Rat p1 = la * lb, p2 = la * hb, p3 = ha * lb, p4 = ha * hb;
        Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
        Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
        if (R.sign_at(lo) != 0 && R.sign_at(hi) != 0 && chain.count_half_open(lo, hi) == 1)
            return detail::ScalarFactory::wrap(R, lo, hi, true);
        pa->refine_step();
        pb->refine_step();
    }
}

namespace {

// Interval Horner evaluation of an integer polynomial over [lo, hi].
std::pair<Rat, Rat> interval_eval(const ZPoly& p, const Rat& lo, const Rat& hi) {
    Rat alo(0), ahi(0);
    for (int i = p.degree(); i >= 0; --i) {
        Rat p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
        Rat nlo = std::min(std::min(p1, p2), std::min(p3, p4));
        Rat nhi = std::max(std::max(p1, p2), std::max(p3, p4));
        alo = nlo + Rat(p.coeff(i));
        ahi = nhi + Rat(p.coeff(i));
    }
    return {alo, ahi};
}

}  // namespace

Scalar Scalar::apply_poly(const ZPoly& p, const Scalar& x) {
    if (p.is_zero()) return Scalar(0);
    if (p.degree() == 0) return Scalar(Rat(p.coeff(0)));
    if (auto r = x.rational_view()) return Scalar(p.eval(*r));
    const auto& cell = x.alg();
    const ZPoly& F = cell->poly;
    const int d = F.degree();
    // defining polynomial of p(x): R(X) = res_y(F(y), X - p(y)), degree d in X
    std::vector<Rat> xs, ys;
    xs.reserve(d + 1);
    ys.reserve(d + 1);
    long e = 0;
    for (int k = 0; k <= d; ++k) {
        ZPoly q = ZPoly::constant(Int(e)) - p;
        ys.push_back(Rat(ZPoly::resultant(F, q)));
        xs.push_back(Rat(e));
        e = e > 0 ? -e : -e + 1;
    }
    ZPoly R = interpolate_poly(xs, ys).squarefree_part();
    SturmChain chain(R);
    while (true) {
        if (auto c = cell->get_collapsed()) return apply_poly(p, Scalar(*c));
        auto [lo, hi] = cell->snapshot();
        auto [vlo, vhi] = interval_eval(p, lo, hi);
        if (R.sign_at(vlo) != 0 && R.sign_at(vhi) != 0 && chain.count_half_open(vlo, vhi) == 1)
            return detail::ScalarFactory::wrap(R, vlo, vhi, true);
        cell->refine_step();
    }
}

Scalar Scalar::invert(const Scalar& a) {
    auto ra = a.rational_view();
    if (ra) {
        if (sgn(*ra) == 0) throw DivisionByZero();
        return Scalar(Rat(1 / *ra));
    }
    const auto& pa = a.alg();
    (void)a.sign();  // excludes zero from the interval (the value is nonzero)
    while (true) {
        if (auto c = pa->get_collapsed()) return invert(Scalar(*c));
        auto [lo, hi] = pa->snapshot();
        if (sgn(lo) > 0 || sgn(hi) < 0) {
            ZPoly p = pa->poly.strip_x().reversed().primitive_positive();
            Rat l = 1 / hi, h = 1 / lo;
            return detail::ScalarFactory::wrap(p, l, h, false);
        }
        // interval endpoint is exactly 0; shave it off
        pa->refine_step();
    }
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.sign() == 0) throw DivisionByZero();
    if (auto rb = b.rational_view()) {
        if (auto ra = a.rational_view()) return Scalar(Rat(*ra / *rb));
        return a * Scalar(Rat(1 / *rb));
    }
    return a * Scalar::invert(b);
}

Scalar sqrt_nonneg(const Scalar& a) {
    int s = a.sign();
    if (s < 0) throw NegativeRadicand();
    if (s == 0) return Scalar(0);
    if (auto r = a.rational_view()) {
        Int m = r->get_num() * r->get_den();
        if (mpz_perfect_square_p(m.get_mpz_t())) {
            Int root;
            mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
            return Scalar(make_rat(root, r->get_den()));
        }
        // d x^2 - n
        ZPoly p(std::vector<Int>{Int(-r->get_num()), Int(0), Int(r->get_den())});
        auto [lo, hi] = rational_sqrt_bounds(*r, 16);
        return detail::ScalarFactory::wrap(p, lo, hi, false);
    }
    const auto& pa = a.alg();
    ZPoly R = pa->poly.roots_sqrt_candidates().squarefree_part();
    SturmChain chain(R);
    unsigned bits = 16;
    while (true) {
        if (pa->get_collapsed()) return sqrt_nonneg(Scalar(*pa->get_collapsed()));
        auto [lo, hi] = pa->snapshot();
        if (sgn(lo) > 0) {
            Rat l = rational_sqrt_bounds(lo, bits).first;
            Rat h = rational_sqrt_bounds(hi, bits).second;
            if (sgn(l) > 0 && R.sign_at(l) != 0 && R.sign_at(h) != 0 &&
                chain.count_half_open(l, h) == 1)
                return detail::ScalarFactory::wrap(R, l, h, true);
            bits += 8;
        }
        pa->refine_step();
    }
}

int sign(const Scalar& s) { return s.sign(); }

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

// ---------------------------------------------------------------------------
// Reporting

std::string Scalar::approx(int digits) const {
    assert(digits >= 1);
    if (auto r = rational_view()) return format_decimal(*r, digits);
    if (sign() < 0) {
        Scalar n = -*this;
        return "-" + n.approx(digits);
    }
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const auto& pa = alg();
    while (true) {
        if (auto c = pa->get_collapsed()) return format_decimal(*c, digits);
        auto [lo, hi] = pa->snapshot();
        Rat klo = round_half_away(lo * Rat(scale));
        Rat khi = round_half_away(hi * Rat(scale));
        if (klo == khi) return format_value(klo, scale, digits);
        if (khi - klo == 1) {
            // rounding boundary between the two cells
            Rat boundary = (Rat(klo) + make_rat(1, 2)) / Rat(scale);
            pa->bisect_at(boundary);
        }
        pa->refine_step();
    }
}

std::string Scalar::format_value(const Rat& k, const Int& scale, int digits) {
    Int ki = k.get_num();
    std::string sign = ki < 0 ? "-" : "";
    Int a = abs(ki);
    Int ip = a / scale;
    Int fp = a % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    return sign + ip.get_str() + "." + frac;
}

std::string Scalar::exact_str() const {
    if (auto r = rational_view()) {
        if (r->get_den() == 1) return r->get_num().get_str();
        return r->get_num().get_str() + "/" + r->get_den().get_str();
    }
    const auto& pa = alg();
    auto [lo, hi] = pa->snapshot();
    SturmChain chain(pa->poly);
    int index = chain.count_below(lo);
    return "rootof(" + pa->poly.str() + ", " + std::to_string(index) + ")";
}

int Scalar::rep_degree() const {
    if (holds_rat()) return 1;
    return alg()->poly.degree();
}

std::optional<ZPoly> Scalar::defining_poly() const {
    if (rational_view()) return std::nullopt;
    return alg()->poly;
}

const void* Scalar::cell_identity() const {
    if (holds_rat()) return nullptr;
    return alg().get();
}

std::pair<Rat, Rat> Scalar::enclosure(unsigned bits) const {
    if (auto r = rational_view()) return {*r, *r};
    Int den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    Rat w = make_rat(Int(1), den);
    const auto& pa = alg();
    pa->refine_to_width(w);
    if (auto c = pa->get_collapsed()) return {*c, *c};
    return pa->snapshot();
}

}  // namespace geoind::exact
