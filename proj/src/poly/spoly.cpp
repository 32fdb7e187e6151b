#include "geoind/poly/spoly.hpp"

#include <cassert>

#include "geoind/errors.hpp"

namespace geoind::poly {

void SPoly::normalize() {
    while (!c_.empty() && c_.back().sign() == 0) c_.pop_back();
}

const Scalar& SPoly::coeff(int i) const {
    static const Scalar zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

SPoly SPoly::operator+(const SPoly& o) const {
    std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return SPoly(std::move(r));
}

SPoly SPoly::operator-(const SPoly& o) const { return *this + (-o); }

SPoly SPoly::operator*(const SPoly& o) const {
    if (is_zero() || o.is_zero()) return SPoly();
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return SPoly(std::move(r));
}

SPoly SPoly::operator-() const {
    std::vector<Scalar> r(c_);
    for (auto& v : r) v = -v;
    return SPoly(std::move(r));
}

SPoly SPoly::derivative() const {
    if (degree() <= 0) return SPoly();
    std::vector<Scalar> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    return SPoly(std::move(r));
}

Scalar SPoly::eval(const Scalar& x) const {
    Scalar acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

std::pair<SPoly, SPoly> SPoly::divmod(const SPoly& d) const {
    assert(!d.is_zero());
    std::vector<Scalar> rem(c_);
    SPoly r(std::move(rem));
    std::vector<Scalar> quot;
    int dd = d.degree();
    if (r.degree() >= dd) quot.assign(r.degree() - dd + 1, Scalar(0));
    while (!r.is_zero() && r.degree() >= dd) {
        int k = r.degree() - dd;
        Scalar q = r.lc() / d.lc();
        quot[k] = q;
        std::vector<Scalar> nr(r.c_);
        for (int j = 0; j <= dd; ++j) nr[k + j] = nr[k + j] - q * d.coeff(j);
        nr[k + dd] = Scalar(0);  // cancels exactly
        r = SPoly(std::move(nr));
    }
    return {SPoly(std::move(quot)), std::move(r)};
}

SPoly SPoly::monic() const {
    if (is_zero()) return SPoly();
    std::vector<Scalar> r(c_);
    Scalar inv = Scalar(1) / lc();
    for (auto& v : r) v = v * inv;
    return SPoly(std::move(r));
}

SPoly SPoly::gcd(SPoly a, SPoly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        SPoly r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();  // keeps coefficient growth in check
    }
    return a.monic();
}

SPoly SPoly::squarefree_part() const {
    if (degree() <= 1) return monic();
    SPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return monic();
    return divmod(g).first.monic();
}

SSturm::SSturm(const SPoly& squarefree) {
    seq_.push_back(squarefree);
    if (squarefree.degree() <= 0) return;
    seq_.push_back(squarefree.derivative());
    while (seq_.back().degree() > 0) {
        SPoly r = seq_[seq_.size() - 2].divmod(seq_.back()).second;
        if (r.is_zero()) break;
        seq_.push_back(-r);
    }
}

int SSturm::variations_at(const Rat& t) const {
    int var = 0, prev = 0;
    for (const auto& p : seq_) {
        int s = p.sign_at(t);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SSturm::count_half_open(const Rat& lo, const Rat& hi) const {
    return variations_at(lo) - variations_at(hi);
}

}  // namespace geoind::poly
