#pragma once

// Dense univariate polynomials over a pluggable exact coefficient field
// (Rat, or a TowerElement via the FieldOps specialization in tower.hpp).
//
// Coefficients are stored lowest degree first with trailing zeros stripped;
// the zero polynomial is the empty list and its degree is the distinguished
// value Deg::negInf(). Every polynomial carries a zero "prototype"
// coefficient so the zero polynomial still knows its coefficient field.

#include <mwlat/rational.hpp>

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwlat {

template <class K>
struct FieldOps;  // zeroLike / oneLike / isZero / add / sub / mul / neg / inv / eq

template <>
struct FieldOps<Rat> {
    static Rat zeroLike(const Rat&) { return Rat(0); }
    static Rat oneLike(const Rat&) { return Rat(1); }
    static bool isZero(const Rat& a) { return a == 0; }
    static Rat add(const Rat& a, const Rat& b) { return a + b; }
    static Rat sub(const Rat& a, const Rat& b) { return a - b; }
    static Rat mul(const Rat& a, const Rat& b) { return a * b; }
    static Rat neg(const Rat& a) { return -a; }
    static Rat inv(const Rat& a) {
        if (a == 0) throw std::domain_error("division by zero");
        return 1 / a;
    }
    static bool eq(const Rat& a, const Rat& b) { return a == b; }
};

// Degree with the NEG_INF convention: deg 0 = -inf, a + (-inf) = -inf,
// and c - (-inf) = +inf (so min{c - deg x, d} falls through to d).
struct Deg {
    bool fin;
    long v;
    static Deg negInf() { return Deg{false, 0}; }
    static Deg of(long d) { return Deg{true, d}; }
    bool operator==(const Deg& o) const { return fin == o.fin && (!fin || v == o.v); }
};

inline Deg operator+(Deg a, Deg b) {
    if (!a.fin || !b.fin) return Deg::negInf();
    return Deg::of(a.v + b.v);
}

template <class K>
class UniPoly {
  public:
    using Ops = FieldOps<K>;

    explicit UniPoly(K protoZero, std::string var = "t")
        : proto_(std::move(protoZero)), var_(std::move(var)) {}
    UniPoly(K protoZero, std::vector<K> coeffs, std::string var = "t")
        : proto_(std::move(protoZero)), var_(std::move(var)), c_(std::move(coeffs)) {
        trim();
    }

    static UniPoly zero(const K& like, std::string var = "t") {
        return UniPoly(Ops::zeroLike(like), std::move(var));
    }
    static UniPoly constant(const K& value, std::string var = "t") {
        UniPoly p(Ops::zeroLike(value), std::move(var));
        p.c_.push_back(value);
        p.trim();
        return p;
    }
    // c * x^e
    static UniPoly monomial(const K& c, long e, std::string var = "t") {
        UniPoly p(Ops::zeroLike(c), std::move(var));
        if (!Ops::isZero(c)) {
            p.c_.assign(static_cast<std::size_t>(e) + 1, p.proto_);
            p.c_.back() = c;
        }
        return p;
    }

    const std::string& var() const { return var_; }
    void setVar(std::string v) { var_ = std::move(v); }
    const K& proto() const { return proto_; }
    const std::vector<K>& coeffs() const { return c_; }

    bool isZero() const { return c_.empty(); }
    Deg deg() const { return c_.empty() ? Deg::negInf() : Deg::of((long)c_.size() - 1); }
    long degOr(long ifZero) const { return c_.empty() ? ifZero : (long)c_.size() - 1; }

    const K& coeff(std::size_t i) const { return i < c_.size() ? c_[i] : proto_; }
    const K& lead() const {
        assert(!c_.empty());
        return c_.back();
    }

    bool operator==(const UniPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!Ops::eq(c_[i], o.c_[i])) return false;
        return true;
    }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator-() const {
        UniPoly r(proto_, var_);
        r.c_.reserve(c_.size());
        for (const K& a : c_) r.c_.push_back(Ops::neg(a));
        return r;
    }

    UniPoly operator+(const UniPoly& o) const {
        UniPoly r(proto_, var_);
        r.c_.resize(std::max(c_.size(), o.c_.size()), proto_);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = Ops::add(coeff(i), o.coeff(i));
        r.trim();
        return r;
    }
    UniPoly operator-(const UniPoly& o) const {
        UniPoly r(proto_, var_);
        r.c_.resize(std::max(c_.size(), o.c_.size()), proto_);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = Ops::sub(coeff(i), o.coeff(i));
        r.trim();
        return r;
    }
    UniPoly operator*(const UniPoly& o) const {
        UniPoly r(proto_, var_);
        if (isZero() || o.isZero()) return r;
        r.c_.assign(c_.size() + o.c_.size() - 1, proto_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (Ops::isZero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] = Ops::add(r.c_[i + j], Ops::mul(c_[i], o.c_[j]));
        }
        r.trim();
        return r;
    }
    UniPoly scaled(const K& s) const {
        UniPoly r(proto_, var_);
        if (Ops::isZero(s)) return r;
        r.c_.reserve(c_.size());
        for (const K& a : c_) r.c_.push_back(Ops::mul(a, s));
        r.trim();
        return r;
    }

    // Euclidean division over the coefficient field: *this = q*d + r.
    void divRem(const UniPoly& d, UniPoly& q, UniPoly& r) const {
        if (d.isZero()) throw std::domain_error("polynomial division by zero");
        q = UniPoly(proto_, var_);
        r = *this;
        const K invLead = Ops::inv(d.lead());
        const long dd = d.degOr(0);
        while (!r.isZero() && r.degOr(-1) >= dd) {
            long shift = r.degOr(0) - dd;
            K f = Ops::mul(r.lead(), invLead);
            if ((long)q.c_.size() < shift + 1) q.c_.resize(shift + 1, proto_);
            q.c_[shift] = Ops::add(q.c_[shift], f);
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                r.c_[shift + i] = Ops::sub(r.c_[shift + i], Ops::mul(f, d.c_[i]));
            r.trim();
        }
        q.trim();
    }

    // Exact quotient; throws if the division leaves a remainder.
    UniPoly divExact(const UniPoly& d) const {
        UniPoly q(proto_, var_), r(proto_, var_);
        divRem(d, q, r);
        if (!r.isZero()) throw std::domain_error("inexact polynomial division");
        return q;
    }

    UniPoly monic() const {
        if (isZero()) return *this;
        return scaled(Ops::inv(lead()));
    }

    K evalAt(const K& x) const {
        K acc = proto_;
        for (std::size_t i = c_.size(); i-- > 0;) acc = Ops::add(Ops::mul(acc, x), c_[i]);
        return acc;
    }

    // p(t^n)
    UniPoly substituteTPower(long n) const {
        if (n < 1) throw std::invalid_argument("t-power substitution needs n >= 1");
        UniPoly r(proto_, var_);
        if (isZero()) return r;
        r.c_.assign((c_.size() - 1) * n + 1, proto_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * n] = c_[i];
        r.trim();
        return r;
    }

    // p(t + s), by Horner on the shifted variable.
    UniPoly shift(const K& s) const {
        UniPoly lin(proto_, {s, Ops::oneLike(proto_)}, var_);
        UniPoly acc(proto_, var_);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + constant(c_[i], var_);
        acc.setVar(var_);
        return acc;
    }

    // t^n * p(1/t) for n >= deg p (the coefficient reversal behind the
    // tilde automorphism).
    UniPoly reversed(long n) const {
        if (degOr(0) > n && !isZero()) throw std::invalid_argument("reversal bound below degree");
        UniPoly r(proto_, var_);
        if (isZero()) return r;
        r.c_.assign(n + 1, proto_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[n - i] = c_[i];
        r.trim();
        return r;
    }

    template <class F>
    auto mapCoeffs(const K& zeroOut, F&& f) const {
        using K2 = decltype(f(proto_));
        UniPoly<K2> r(zeroOut, var_);
        std::vector<K2> out;
        out.reserve(c_.size());
        for (const K& a : c_) out.push_back(f(a));
        return UniPoly<K2>(zeroOut, std::move(out), var_);
    }

  private:
    void trim() {
        while (!c_.empty() && Ops::isZero(c_.back())) c_.pop_back();
    }

    K proto_;
    std::string var_;
    std::vector<K> c_;
};

// Monic gcd over a field; gcd(p, 0) = monic p, gcd(0, 0) = 0.
template <class K>
UniPoly<K> polyGcd(UniPoly<K> a, UniPoly<K> b) {
    while (!b.isZero()) {
        UniPoly<K> q(a.proto(), a.var()), r(a.proto(), a.var());
        a.divRem(b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

using QPoly = UniPoly<Rat>;

inline QPoly qpoly(std::vector<Rat> coeffs, std::string var = "t") {
    return QPoly(Rat(0), std::move(coeffs), std::move(var));
}

inline QPoly qpolyOf(std::vector<long> coeffs, std::string var = "t") {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return qpoly(std::move(c), std::move(var));
}

// Integer content (gcd of numerators over lcm of denominators) of a
// nonzero rational polynomial, signed to make the leading coefficient
// positive after division.
Rat signedContent(const QPoly& p);

// Integer-primitive form with positive leading coefficient.
// Throws std::domain_error on the zero polynomial.
QPoly normalizePrimitive(const QPoly& p);

inline Rat signedContent(const QPoly& p) {
    if (p.isZero()) throw std::domain_error("content of zero polynomial");
    Int num = 0, den = 1;
    for (const Rat& c : p.coeffs()) {
        num = gcdInt(num, c.get_num());
        den = lcmInt(den, c.get_den());
    }
    Rat content(num, den);
    content.canonicalize();
    if (p.lead() < 0) content = -content;
    return content;
}

inline QPoly normalizePrimitive(const QPoly& p) {
    Rat c = signedContent(p);
    return p.scaled(1 / c);
}

// p interpreted in U = t^k; requires the support of p to lie in multiples
// of k. Throws std::domain_error otherwise.
inline QPoly reduceByPower(const QPoly& p, long k, const std::string& newVar = "U") {
    if (k < 1) throw std::invalid_argument("power reduction needs k >= 1");
    std::vector<Rat> out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i % k == 0) {
            out.push_back(p.coeffs()[i]);
        } else if (p.coeffs()[i] != 0) {
            throw std::domain_error("support not contained in multiples of " + std::to_string(k));
        }
    }
    return QPoly(Rat(0), std::move(out), newVar);
}

}  // namespace mwlat
