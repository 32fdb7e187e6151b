#include "geoind/exact/zpoly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace geoind::exact {

Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

ZPoly::ZPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

void ZPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::constant(Int c) {
    ZPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

ZPoly ZPoly::monomial(Int c, int k) {
    ZPoly p;
    if (c != 0) {
        p.c_.assign(k + 1, Int(0));
        p.c_[k] = std::move(c);
    }
    return p;
}

const Int& ZPoly::coeff(int i) const {
    static const Int zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return ZPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-() const {
    std::vector<Int> r(c_);
    for (auto& v : r) v = -v;
    return ZPoly(std::move(r));
}

ZPoly ZPoly::mul_int(const Int& k) const {
    if (k == 0) return ZPoly();
    std::vector<Int> r(c_);
    for (auto& v : r) v *= k;
    return ZPoly(std::move(r));
}

ZPoly ZPoly::derivative() const {
    if (degree() <= 0) return ZPoly();
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return ZPoly(std::move(r));
}

Int ZPoly::content() const {
    Int g(0);
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

ZPoly ZPoly::primitive_positive() const {
    if (is_zero()) return ZPoly();
    Int g = content();
    if (lc() < 0) g = -g;
    std::vector<Int> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(r[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return ZPoly(std::move(r));
}

Rat ZPoly::eval(const Rat& t) const {
    // sum c_i p^i q^(n-i) over q^n, computed with integer Horner passes
    if (is_zero()) return Rat(0);
    const Int& p = t.get_num();
    const Int& q = t.get_den();
    Int acc(0), qpow(1);
    // Horner from the top: acc = acc*p + c_i*q^(n-i)
    for (int i = degree(); i >= 0; --i) {
        acc = acc * p + c_[i] * qpow;
        if (i > 0) qpow *= q;
    }
    Int den;
    mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), degree());
    return make_rat(acc, den);
}

int ZPoly::sign_at(const Rat& t) const {
    if (is_zero()) return 0;
    const Int& p = t.get_num();
    const Int& q = t.get_den();
    Int acc(0), qpow(1);
    for (int i = degree(); i >= 0; --i) {
        acc = acc * p + c_[i] * qpow;
        if (i > 0) qpow *= q;
    }
    return mpz_sgn(acc.get_mpz_t());
}

Int ZPoly::eval_int(const Int& t) const {
    Int acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * t + c_[i];
    return acc;
}

ZPoly ZPoly::reflected() const {
    std::vector<Int> r(c_);
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::reversed() const {
    assert(!is_zero() && c_[0] != 0);
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return ZPoly(std::move(r));
}

ZPoly ZPoly::strip_x() const {
    if (is_zero()) return ZPoly();
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return ZPoly(std::vector<Int>(c_.begin() + k, c_.end()));
}

ZPoly ZPoly::translated(const Rat& r) const {
    // q^n p(x - r) for r = p/q, via Horner in (q x - p)
    if (is_zero()) return ZPoly();
    const Int& pn = r.get_num();
    const Int& q = r.get_den();
    ZPoly lin(std::vector<Int>{-pn, q});
    ZPoly acc;
    Int qpow(1);
    std::vector<Int> qpows(c_.size(), Int(1));
    for (std::size_t i = 1; i < c_.size(); ++i) qpows[i] = qpows[i - 1] * q;
    int n = degree();
    for (int i = n; i >= 0; --i) acc = acc * lin + ZPoly::constant(c_[i] * qpows[n - i]);
    return acc.primitive_positive();
}

ZPoly ZPoly::scaled(const Rat& r) const {
    assert(sgn(r) != 0);
    if (is_zero()) return ZPoly();
    const Int& p = r.get_num();
    const Int& q = r.get_den();
    int n = degree();
    std::vector<Int> out(c_.size());
    Int qpow(1);
    for (int i = 0; i <= n; ++i) {
        Int ppow;
        mpz_pow_ui(ppow.get_mpz_t(), p.get_mpz_t(), n - i);
        out[i] = c_[i] * qpow * ppow;
        qpow *= q;
    }
    return ZPoly(std::move(out)).primitive_positive();
}

ZPoly ZPoly::roots_sqrt_candidates() const {
    if (is_zero()) return ZPoly();
    std::vector<Int> r(2 * c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::roots_squared() const {
    // p = E(x^2) + x O(x^2); result R(u) = +-(E(u)^2 - u O(u)^2) has R(a^2)=0
    if (is_zero()) return ZPoly();
    std::vector<Int> e, o;
    for (std::size_t i = 0; i < c_.size(); ++i)
        (i % 2 == 0 ? e : o).push_back(c_[i]);
    ZPoly E{std::vector<Int>(e)}, O{std::vector<Int>(o)};
    ZPoly res = E * E - ZPoly({0, 1}) * O * O;
    return res.primitive_positive();
}

ZPoly ZPoly::squarefree_part() const {
    if (degree() <= 1) return primitive_positive();
    ZPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return primitive_positive();
    // exact division p / g over the rationals, result is integral up to content
    // do classical synthetic division with rational bookkeeping
    std::vector<Rat> rem(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) rem[i] = Rat(c_[i]);
    int dg = g.degree();
    int dq = degree() - dg;
    std::vector<Rat> quot(dq + 1);
    for (int i = dq; i >= 0; --i) {
        Rat q = rem[i + dg] / Rat(g.lc());
        quot[i] = q;
        for (int j = 0; j <= dg; ++j) rem[i + j] -= q * Rat(g.coeff(j));
    }
    // clear denominators
    Int lcm(1);
    for (auto& q : quot) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> out(quot.size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
        Rat v = quot[i] * Rat(lcm);
        assert(v.get_den() == 1);
        out[i] = v.get_num();
    }
    return ZPoly(std::move(out)).primitive_positive();
}

namespace {

// Remainder of a by b over Q, returned as a primitive integer polynomial
// together with the sign of the (positive) scale factor applied: we only
// ever scale by positive rationals so Sturm sign sequences are preserved.
ZPoly q_rem_primitive(const ZPoly& a, const ZPoly& b) {
    assert(!b.is_zero());
    std::vector<Rat> rem(a.coeffs().size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = Rat(a.coeff(static_cast<int>(i)));
    int db = b.degree();
    while (static_cast<int>(rem.size()) - 1 >= db) {
        int dr = static_cast<int>(rem.size()) - 1;
        Rat q = rem[dr] / Rat(b.lc());
        for (int j = 0; j <= db; ++j) rem[dr - db + j] -= q * Rat(b.coeff(j));
        while (!rem.empty() && sgn(rem.back()) == 0) rem.pop_back();
        if (rem.empty()) return ZPoly();
    }
    Int lcm(1);
    for (auto& q : rem) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> out(rem.size());
    for (std::size_t i = 0; i < rem.size(); ++i) {
        Rat v = rem[i] * Rat(lcm);
        out[i] = v.get_num();
    }
    ZPoly z{std::move(out)};
    // strip content but keep the sign
    if (z.is_zero()) return z;
    Int g = z.content();
    std::vector<Int> out2(z.coeffs().size());
    for (std::size_t i = 0; i < out2.size(); ++i)
        mpz_divexact(out2[i].get_mpz_t(), z.coeffs()[i].get_mpz_t(), g.get_mpz_t());
    return ZPoly(std::move(out2));
}

}  // namespace

ZPoly ZPoly::gcd(ZPoly a, ZPoly b) {
    a = a.primitive_positive();
    b = b.primitive_positive();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = q_rem_primitive(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive_positive();
}

namespace {

// Bareiss fraction-free determinant; exact over the integers.
Int bareiss_det(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { piv = i; break; }
            if (piv < 0) return Int(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

}  // namespace

Int ZPoly::resultant(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return Int(0);
    int m = a.degree(), n = b.degree();
    if (m == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), a.lc().get_mpz_t(), n);
        return r;
    }
    if (n == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), b.lc().get_mpz_t(), m);
        return r;
    }
    // Sylvester matrix, (m+n) x (m+n)
    std::vector<std::vector<Int>> s(m + n, std::vector<Int>(m + n, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = a.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = b.coeff(n - j);
    return bareiss_det(std::move(s));
}

Rat ZPoly::root_bound() const {
    assert(!is_zero());
    Rat best(0);
    for (int i = 0; i < degree(); ++i) {
        Rat v = make_rat(abs(c_[i]), abs(lc()));
        if (v > best) best = v;
    }
    return best + 1;
}

std::string ZPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = c_[i];
        if (c == 0) continue;
        if (!out.empty()) out += (c > 0 ? " + " : " - ");
        else if (c < 0) out += "-";
        Int a = abs(c);
        bool unit = (a == 1) && i > 0;
        if (!unit) out += a.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

SturmChain::SturmChain(const ZPoly& squarefree) {
    seq_.push_back(squarefree.primitive_positive());
    if (squarefree.degree() <= 0) return;
    seq_.push_back(squarefree.derivative().primitive_positive());
    while (!seq_.back().is_zero() && seq_.back().degree() > 0) {
        ZPoly r = q_rem_primitive(seq_[seq_.size() - 2], seq_.back());
        if (r.is_zero()) break;
        seq_.push_back(-r);
    }
}

int SturmChain::variations_at(const Rat& t) const {
    int var = 0, prev = 0;
    for (const auto& p : seq_) {
        int s = p.sign_at(t);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::variations_minus_inf() const {
    int var = 0, prev = 0;
    for (const auto& p : seq_) {
        if (p.is_zero()) continue;
        int s = mpz_sgn(p.lc().get_mpz_t());
        if (p.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::variations_plus_inf() const {
    int var = 0, prev = 0;
    for (const auto& p : seq_) {
        if (p.is_zero()) continue;
        int s = mpz_sgn(p.lc().get_mpz_t());
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::count_half_open(const Rat& lo, const Rat& hi) const {
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_open(const Rat& lo, const Rat& hi) const {
    int c = count_half_open(lo, hi);
    if (seq_.front().sign_at(hi) == 0) --c;
    return c;
}

int SturmChain::count_all() const { return variations_minus_inf() - variations_plus_inf(); }

int SturmChain::count_below(const Rat& t) const { return variations_minus_inf() - variations_at(t); }

std::vector<std::pair<Rat, Rat>> isolate_roots(const ZPoly& squarefree) {
    std::vector<std::pair<Rat, Rat>> out;
    if (squarefree.degree() <= 0) return out;
    SturmChain chain(squarefree);
    Rat bound = squarefree.root_bound();
    // Bisection over intervals whose endpoints are never roots; a squarefree
    // polynomial with exactly one root strictly inside then changes sign.
    struct Rec {
        const ZPoly& p;
        const SturmChain& chain;
        std::vector<std::pair<Rat, Rat>>& out;
        Rat nonroot_between(const Rat& lo, const Rat& hi) const {
            Rat mid = (lo + hi) / 2;
            while (p.sign_at(mid) == 0) mid = (mid + hi) / 2;
            return mid;
        }
        void run(const Rat& lo, const Rat& hi, int count) {
            if (count == 0) return;
            if (count == 1) {
                out.emplace_back(lo, hi);
                return;
            }
            Rat mid = nonroot_between(lo, hi);
            int left = chain.count_half_open(lo, mid);
            run(lo, mid, left);
            run(mid, hi, count - left);
        }
    } rec{squarefree, chain, out};
    rec.run(-bound, bound, chain.count_half_open(-bound, bound));
    return out;
}

}  // namespace geoind::exact
