#include <mwlat/basechange.hpp>

#include <stdexcept>

namespace mwlat {

Section baseChange(const Section& p, long n) {
    if (n < 1) throw std::invalid_argument("base change needs n >= 1");
    return sectionTPower(p, n);
}

PairingFormula scaleFormula(const PairingFormula& f, long n) {
    return {f.baseTerm * Rat(n), f.xBound * n, f.yBound * n};
}

GramSpec scaleSpec(const GramSpec& s, long n) {
    GramSpec out = s;
    out.chi = s.chi * n;
    if (s.closed) out.closed = scaleFormula(*s.closed, n);
    out.selfContr = s.selfContr * Rat(n);
    out.table.single = s.table.single * Rat(n);
    out.table.same = s.table.same * Rat(n);
    out.table.different = s.table.different * Rat(n);
    return out;
}

ScaledGramReport scaledGramCheck(const std::vector<Section>& sourcePoints, long n,
                                 const GramSpec& sourceSpec, const RatMatrix* printedTarget) {
    ScaledGramReport r;
    r.source = gramMatrix(sourcePoints, sourceSpec);
    std::vector<Section> imgs;
    imgs.reserve(sourcePoints.size());
    for (const Section& p : sourcePoints) imgs.push_back(baseChange(p, n));
    r.target = gramMatrix(imgs, scaleSpec(sourceSpec, n));
    r.lawHolds = r.target == r.source.scaled(Rat(n));
    if (printedTarget) {
        r.printedEqual = r.target == *printedTarget;
        r.printedDet = ratDet(*printedTarget);
        if (!r.printedEqual)
            r.printedPermutation = permutationEquivalent(r.target, *printedTarget, r.permutation);
    }
    return r;
}

Section tildeAutomorphism(const Section& p, long n) {
    if (p.m != 6 * n) throw std::invalid_argument("tilde automorphism lives on E_{6n}");
    if (p.isZero) return p;
    if (p.x.degOr(0) > 2 * n || p.y.degOr(0) > 3 * n)
        throw std::domain_error("coordinate degrees exceed the 2n/3n tilde shape");
    Section s = p;
    s.x = p.x.reversed(2 * n);
    s.y = p.y.reversed(3 * n);
    return s;
}

namespace {

// p(c * t): coefficient i picks up c^i.
TPoly scaleArgument(const TPoly& p, const TowerElement& c) {
    std::vector<TowerElement> out(p.coeffs());
    TowerElement power = FieldOps<TowerElement>::oneLike(c);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = out[i] * power;
        power = power * c;
    }
    return TPoly(p.proto(), std::move(out), p.var());
}

}  // namespace

Section f6ToE12(const F6Point& p, const TowerElement& zeta12) {
    FieldPtr f = zeta12.field();
    QPoly t12p1 = [] {
        std::vector<Rat> c(13, Rat(0));
        c[0] = 1;
        c[12] = 1;
        return qpoly(std::move(c));
    }();
    TPoly x = liftPoly(p.clearedX, f), y = liftPoly(p.clearedY, f);
    // F6 identity in cleared coordinates: Y^2 = X^3 + t^12 + 1
    if (y * y != x * x * x + liftPoly(t12p1, f)) throw std::domain_error("input is not an F6 point");
    // (x', y') -> (zeta12^2 t^2 x'(zeta12 t), zeta12^3 t^3 y'(zeta12 t)),
    // which on cleared coordinates is exactly t -> zeta12 * t.
    Section s = polySection(12, scaleArgument(x, zeta12), scaleArgument(y, zeta12));
    return s;
}

}  // namespace mwlat
