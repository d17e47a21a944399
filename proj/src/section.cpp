#include <mwlat/section.hpp>

#include <stdexcept>

namespace mwlat {

namespace {

TowerElement one(const FieldPtr& f) { return TowerElement::rational(f, 1); }
TowerElement zero(const FieldPtr& f) { return TowerElement::rational(f, 0); }

TPoly tPowPlusOne(const FieldPtr& f, int m) {
    std::vector<TowerElement> c((std::size_t)m + 1, zero(f));
    c[0] = one(f);
    c[(std::size_t)m] = one(f);
    return TPoly(zero(f), std::move(c), "t");
}

// Rational functions over K(t), normalized: monic denominator, gcd 1.
struct RatFun {
    TPoly num, den;

    static RatFun of(TPoly n, TPoly d) {
        if (d.isZero()) throw std::domain_error("rational function with zero denominator");
        RatFun r{std::move(n), std::move(d)};
        r.normalize();
        return r;
    }
    static RatFun poly(TPoly n) {
        TPoly d = TPoly::constant(FieldOps<TowerElement>::oneLike(n.proto()), n.var());
        return RatFun{std::move(n), std::move(d)};
    }
    void normalize() {
        if (num.isZero()) {
            den = TPoly::constant(FieldOps<TowerElement>::oneLike(den.proto()), den.var());
            return;
        }
        TPoly g = polyGcd(num, den);
        if (g.degOr(0) > 0) {
            num = num.divExact(g);
            den = den.divExact(g);
        }
        TowerElement lead = den.lead();
        num = num.scaled(lead.inv());
        den = den.monic();
    }
    bool isPoly() const { return den.degOr(0) == 0; }
    TPoly asPoly() const {
        if (!isPoly()) throw std::domain_error("rational function is not polynomial");
        return num;  // den is the monic constant 1 after normalize()
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return of(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return of(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return of(a.num * b.num, a.den * b.den);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.num.isZero()) throw std::domain_error("division by the zero rational function");
        return of(a.num * b.den, a.den * b.num);
    }
    bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
};

RatFun coordX(const Section& p) {
    TowerElement u2 = p.uScale * p.uScale;
    return RatFun::of(p.x, TPoly::constant(u2, p.x.var()));
}

RatFun coordY(const Section& p) {
    TowerElement u3 = p.uScale * p.uScale * p.uScale;
    return RatFun::of(p.y, TPoly::constant(u3, p.y.var()));
}

}  // namespace

Section makeSection(int m, TPoly x, TPoly y, TowerElement uScale) {
    if (uScale.isZero()) throw std::invalid_argument("denominator scale must be nonzero");
    Section s;
    s.m = m;
    s.x = std::move(x);
    s.y = std::move(y);
    s.uScale = std::move(uScale);
    return s;
}

Section polySection(int m, TPoly x, TPoly y) {
    FieldPtr f = x.proto().field();
    return makeSection(m, std::move(x), std::move(y), one(f));
}

Section zeroSection(int m, const FieldPtr& f) {
    Section s;
    s.m = m;
    s.x = TPoly::zero(zero(f), "t");
    s.y = TPoly::zero(zero(f), "t");
    s.uScale = one(f);
    s.isZero = true;
    return s;
}

bool onCurve(const Section& p) {
    if (p.isZero) return true;
    if (!p.uScale.valid() || p.uScale.isZero()) return false;
    TowerElement u6 = p.uScale.pow(6);
    TPoly rhs = p.x * p.x * p.x + tPowPlusOne(p.field(), p.m).scaled(u6);
    return p.y * p.y == rhs;
}

Section negate(const Section& p) {
    if (p.isZero) return p;
    Section s = p;
    s.y = -p.y;
    return s;
}

Section zetaTwist(const Section& p, int k, const TowerElement& zeta3) {
    TowerElement z = embedSubfield(zeta3, p.field());
    if (!(z * z + z + one(p.field())).isZero() || z == one(p.field()))
        throw std::domain_error("zetaTwist needs a primitive cube root of unity in the field");
    if (p.isZero) return p;
    Section s = p;
    s.x = p.x.scaled(z.pow(k % 3));
    return s;
}

Section chordSubtract(const Section& p, const Section& q) {
    if (p.m != q.m) throw std::domain_error("sections live on different surfaces");
    if (q.isZero) return p;                    // P - O = P
    if (p.isZero) return negate(q);            // O - Q = -Q
    RatFun xp = coordX(p), yp = coordY(p);
    RatFun xq = coordX(q), yq = coordY(q);
    if (xp == xq) {
        if (yp == yq) return zeroSection(p.m, p.field());  // P - P = O
        throw std::domain_error("doubling (P - (-P)) is unsupported");
    }
    // P + (-Q) through the chord: lambda = (yP + yQ) / (xP - xQ)
    RatFun lambda = (yp + yq) / (xp - xq);
    RatFun x3 = lambda * lambda - xp - xq;
    RatFun y3 = lambda * (xp - x3) - yp;

    if (x3.isPoly() && y3.isPoly()) return polySection(p.m, x3.asPoly(), y3.asPoly());

    // Constant-denominator-scale shape: den(x) = s^2, den(y) = s^3 needs a
    // common constant s, which a monic non-constant denominator cannot give.
    throw std::domain_error("group-law result does not fit the u-scale section shape");
}

TowerElement specialize(const Section& p, SpecializeAt at) {
    if (p.isZero) throw std::domain_error("specialization of the zero section");
    const FieldPtr& f = p.field();
    auto ratio = [&](const TowerElement& n, const TowerElement& d) {
        if (d.isZero()) throw std::domain_error("specialization denominator coefficient vanishes");
        return n / d;
    };
    switch (at) {
        case SpecializeAt::ZeroBOverD:
            return ratio(p.x.evalAt(zero(f)), p.y.evalAt(zero(f)));
        case SpecializeAt::OneA0OverB0:
            return ratio(p.x.evalAt(one(f)), p.y.evalAt(one(f)));
        case SpecializeAt::InfinityLeadX:
            if (p.x.isZero()) throw std::domain_error("zero x-coordinate has no leading coefficient");
            return p.x.lead();
    }
    throw std::logic_error("unreachable");
}

Section sectionTPower(const Section& p, long n) {
    if (n < 1) throw std::invalid_argument("t-power base change needs n >= 1");
    Section s = p;
    s.m = (int)(p.m * n);
    if (!p.isZero) {
        s.x = p.x.substituteTPower(n);
        s.y = p.y.substituteTPower(n);
    }
    return s;
}

Section sectionShift(const Section& p, const Rat& c) {
    Section s = p;
    if (!p.isZero) {
        TowerElement ce = TowerElement::rational(p.field(), c);
        s.x = p.x.shift(ce);
        s.y = p.y.shift(ce);
    }
    return s;
}

}  // namespace mwlat
