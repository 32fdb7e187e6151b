#include <cassert>
#include <map>

#include "geoind/errors.hpp"
#include "geoind/poly/monic_odd.hpp"
#include "geoind/poly/spoly.hpp"

namespace geoind::poly {

using exact::Int;
using exact::SturmChain;
using exact::ZPoly;

namespace {

// ---------------------------------------------------------------------------
// Recursive dense polynomial over Q in x, y_1, ..., y_r (x innermost).
// Level 0 is Q[x]; level k > 0 is a polynomial in y_k over level k-1.
// Used only to eliminate algebraic coefficients via iterated resultants.

class MPoly {
public:
    static MPoly base(std::vector<Rat> xpoly) {
        MPoly p;
        p.level_ = 0;
        p.base_ = std::move(xpoly);
        p.trim();
        return p;
    }
    static MPoly zero(int level) {
        MPoly p;
        p.level_ = level;
        return p;
    }
    static MPoly lift(MPoly lower) {
        MPoly p;
        p.level_ = lower.level_ + 1;
        if (!lower.is_zero()) p.kids_.push_back(std::move(lower));
        return p;
    }
    static MPoly lift_to(MPoly lower, int level) {
        while (lower.level_ < level) lower = lift(std::move(lower));
        return lower;
    }
    static MPoly from_kids(int level, std::vector<MPoly> kids) {
        MPoly p;
        p.level_ = level;
        p.kids_ = std::move(kids);
        p.trim();
        return p;
    }

    int level() const { return level_; }
    bool is_zero() const { return level_ == 0 ? base_.empty() : kids_.empty(); }
    int deg() const {
        return level_ == 0 ? static_cast<int>(base_.size()) - 1
                           : static_cast<int>(kids_.size()) - 1;
    }
    const std::vector<Rat>& base() const { return base_; }
    const MPoly& kid(int i) const { return kids_[i]; }

    MPoly operator+(const MPoly& o) const {
        assert(level_ == o.level_);
        MPoly r = *this;
        if (level_ == 0) {
            if (r.base_.size() < o.base_.size()) r.base_.resize(o.base_.size(), Rat(0));
            for (std::size_t i = 0; i < o.base_.size(); ++i) r.base_[i] += o.base_[i];
        } else {
            if (r.kids_.size() < o.kids_.size()) r.kids_.resize(o.kids_.size(), zero(level_ - 1));
            for (std::size_t i = 0; i < o.kids_.size(); ++i) r.kids_[i] = r.kids_[i] + o.kids_[i];
        }
        r.trim();
        return r;
    }

    MPoly operator-() const {
        MPoly r = *this;
        if (level_ == 0)
            for (auto& v : r.base_) v = -v;
        else
            for (auto& k : r.kids_) k = -k;
        return r;
    }

    MPoly operator-(const MPoly& o) const { return *this + (-o); }

    MPoly operator*(const MPoly& o) const {
        assert(level_ == o.level_);
        if (is_zero() || o.is_zero()) return zero(level_);
        MPoly r;
        r.level_ = level_;
        if (level_ == 0) {
            r.base_.assign(base_.size() + o.base_.size() - 1, Rat(0));
            for (std::size_t i = 0; i < base_.size(); ++i)
                for (std::size_t j = 0; j < o.base_.size(); ++j)
                    r.base_[i + j] += base_[i] * o.base_[j];
        } else {
            r.kids_.assign(kids_.size() + o.kids_.size() - 1, zero(level_ - 1));
            for (std::size_t i = 0; i < kids_.size(); ++i)
                for (std::size_t j = 0; j < o.kids_.size(); ++j)
                    r.kids_[i + j] = r.kids_[i + j] + kids_[i] * o.kids_[j];
        }
        r.trim();
        return r;
    }

    // Exact division: requires d | *this in the polynomial ring.
    MPoly divexact(const MPoly& d) const {
        assert(level_ == d.level_ && !d.is_zero());
        if (is_zero()) return zero(level_);
        if (level_ == 0) {
            std::vector<Rat> rem = base_;
            int dd = d.deg();
            std::vector<Rat> quot(deg() - dd + 1, Rat(0));
            for (int k = static_cast<int>(rem.size()) - 1 - dd; k >= 0; --k) {
                Rat q = rem[k + dd] / d.base_[dd];
                quot[k] = q;
                for (int j = 0; j <= dd; ++j) rem[k + j] -= q * d.base_[j];
            }
            for (const auto& v : rem) assert(sgn(v) == 0);
            return base(std::move(quot));
        }
        MPoly rem = *this;
        int dd = d.deg();
        MPoly quot = zero(level_);
        quot.kids_.assign(deg() - dd + 1, zero(level_ - 1));
        for (int k = rem.deg() - dd; k >= 0; --k) {
            if (rem.deg() < k + dd) continue;
            MPoly q = rem.kids_[k + dd].divexact(d.kids_[dd]);
            quot.kids_[k] = q;
            for (int j = 0; j <= dd; ++j)
                rem.kids_[k + j] = rem.kids_[k + j] - q * d.kids_[j];
            rem.trim();
        }
        assert(rem.is_zero());
        quot.trim();
        return quot;
    }

    MPoly pow(int e) const {
        MPoly r = lift_to(base({Rat(1)}), level_);
        MPoly b = *this;
        for (int i = 0; i < e; ++i) r = r * b;
        return r;
    }

private:
    int level_ = 0;
    std::vector<Rat> base_;
    std::vector<MPoly> kids_;

    void trim() {
        if (level_ == 0) {
            while (!base_.empty() && sgn(base_.back()) == 0) base_.pop_back();
        } else {
            while (!kids_.empty() && kids_.back().is_zero()) kids_.pop_back();
        }
    }
};

// Resultant of two level-k polynomials w.r.t. their top variable, computed by
// fraction-free (Bareiss) elimination of the Sylvester matrix over level k-1.
MPoly mp_resultant(const MPoly& a, const MPoly& b) {
    assert(a.level() == b.level() && a.level() >= 1);
    const int lower = a.level() - 1;
    if (a.is_zero() || b.is_zero()) return MPoly::zero(lower);
    int m = a.deg(), n = b.deg();
    if (m == 0) return a.kid(0).pow(n);
    if (n == 0) return b.kid(0).pow(m);
    const int sz = m + n;
    std::vector<std::vector<MPoly>> mat(sz, std::vector<MPoly>(sz, MPoly::zero(lower)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) mat[i][i + j] = a.kid(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) mat[n + i][i + j] = b.kid(n - j);

    MPoly prev = MPoly::lift_to(MPoly::base({Rat(1)}), lower);
    int sign = 1;
    for (int k = 0; k < sz - 1; ++k) {
        if (mat[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < sz; ++i)
                if (!mat[i][k].is_zero()) { piv = i; break; }
            if (piv < 0) return MPoly::zero(lower);
            std::swap(mat[k], mat[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < sz; ++i) {
            for (int j = k + 1; j < sz; ++j) {
                MPoly t = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
                mat[i][j] = t.divexact(prev);
            }
            mat[i][k] = MPoly::zero(lower);
        }
        prev = mat[k][k];
    }
    return sign > 0 ? mat[sz - 1][sz - 1] : -mat[sz - 1][sz - 1];
}

// Integer polynomial vanishing at every root of the monic polynomial whose
// coefficients are the given scalars (a_0..a_{n-1}, leading coefficient 1).
ZPoly defining_from_scalar_coeffs(const std::vector<Scalar>& coeffs) {
    const int n = static_cast<int>(coeffs.size());
    // collect distinct algebraic coefficient cells as atoms y_1..y_r
    std::vector<ZPoly> atom_polys;
    std::map<const void*, int> atom_of;
    std::vector<int> atom_idx(n, 0);  // 0 = rational; j>0 = atom j
    for (int i = 0; i < n; ++i) {
        if (coeffs[i].is_rational()) continue;
        const void* id = coeffs[i].cell_identity();
        auto it = atom_of.find(id);
        if (it == atom_of.end()) {
            atom_polys.push_back(*coeffs[i].defining_poly());
            atom_of[id] = static_cast<int>(atom_polys.size());
        }
        atom_idx[i] = atom_of[id];
    }
    const int r = static_cast<int>(atom_polys.size());

    // rational part: x^n plus the rational coefficients
    std::vector<Rat> xpart(n + 1, Rat(0));
    xpart[n] = Rat(1);
    for (int i = 0; i < n; ++i)
        if (atom_idx[i] == 0) xpart[i] = *coeffs[i].rational_view();
    MPoly P = MPoly::lift_to(MPoly::base(std::move(xpart)), r);

    // atomic monomials y_j * x^i
    for (int i = 0; i < n; ++i) {
        int j = atom_idx[i];
        if (j == 0) continue;
        std::vector<Rat> xi(i + 1, Rat(0));
        xi[i] = Rat(1);
        MPoly xm = MPoly::lift_to(MPoly::base(std::move(xi)), j - 1);
        std::vector<MPoly> kids{MPoly::zero(j - 1), std::move(xm)};
        MPoly mono = MPoly::from_kids(j, std::move(kids));
        P = P + MPoly::lift_to(std::move(mono), r);
    }

    // eliminate atoms from the top down
    for (int j = r; j >= 1; --j) {
        // lift q_j (integer polynomial in y_j) to level j
        const ZPoly& q = atom_polys[j - 1];
        std::vector<MPoly> kids;
        kids.reserve(q.degree() + 1);
        for (int t = 0; t <= q.degree(); ++t)
            kids.push_back(MPoly::lift_to(MPoly::base({Rat(q.coeff(t))}), j - 1));
        MPoly Q = MPoly::from_kids(j, std::move(kids));
        P = mp_resultant(Q, P);
        if (P.is_zero())
            throw Error("coefficient elimination degenerated: shared factor between conjugates");
    }

    // level 0: clear denominators
    const auto& qs = P.base();
    Int lcm(1);
    for (const auto& c : qs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> out(qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) {
        Rat v = qs[i] * Rat(lcm);
        out[i] = v.get_num();
    }
    return ZPoly(std::move(out));
}

}  // namespace

Scalar odd_root(const MonicOddPoly<Scalar>& p) {
    const int n = p.degree();
    bool all_rational = true;
    for (const auto& c : p.coeffs)
        if (!c.is_rational()) { all_rational = false; break; }

    if (all_rational) {
        Int lcm(1);
        std::vector<Rat> rats(n);
        for (int i = 0; i < n; ++i) {
            rats[i] = *p.coeffs[i].rational_view();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rats[i].get_den().get_mpz_t());
        }
        std::vector<Int> ic(n + 1);
        ic[n] = lcm;
        for (int i = 0; i < n; ++i) {
            Rat v = rats[i] * Rat(lcm);
            ic[i] = v.get_num();
        }
        ZPoly F = ZPoly(std::move(ic)).squarefree_part();
        SturmChain chain(F);
        Rat lo = -F.root_bound(), hi = F.root_bound();
        int cnt = chain.count_half_open(lo, hi);
        assert(cnt >= 1);
        while (cnt > 1) {
            Rat mid = (lo + hi) / 2;
            while (F.sign_at(mid) == 0) mid = (lo + mid) / 2;
            int left = chain.count_half_open(lo, mid);
            if (left >= 1) { hi = mid; cnt = left; }
            else lo = mid;
        }
        return Scalar::algebraic(F, lo, hi);
    }

    // general path: isolate the least root with field arithmetic, then build
    // an integer defining polynomial by eliminating the algebraic coefficients
    std::vector<Scalar> sc(p.coeffs);
    sc.push_back(Scalar(1));
    SPoly P{std::move(sc)};
    SPoly F = P.squarefree_part();
    SSturm chain(F);

    Scalar cb = cauchy_bound(p);
    Rat B = cb.enclosure(4).second + 1;
    Rat lo = -B, hi = B;
    assert(F.sign_at(lo) != 0 && F.sign_at(hi) != 0);
    int cnt = chain.count_half_open(lo, hi);
    assert(cnt >= 1);
    while (cnt > 1) {
        Rat mid = (lo + hi) / 2;
        while (F.sign_at(mid) == 0) mid = (lo + mid) / 2;
        int left = chain.count_half_open(lo, mid);
        if (left >= 1) { hi = mid; cnt = left; }
        else lo = mid;
    }

    ZPoly R = defining_from_scalar_coeffs(p.coeffs).squarefree_part();
    SturmChain rchain(R);
    int flo = F.sign_at(lo);
    while (R.sign_at(lo) == 0 || R.sign_at(hi) == 0 || rchain.count_half_open(lo, hi) != 1) {
        Rat mid = (lo + hi) / 2;
        int s = F.sign_at(mid);
        if (s == 0) return Scalar(mid);  // the least root is rational
        if (s == flo) lo = mid;
        else hi = mid;
    }
    return Scalar::algebraic(R, lo, hi);
}

}  // namespace geoind::poly
