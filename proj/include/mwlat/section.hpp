#pragma once

// Points of E_m(K(t)) for E_m : y^2 = x^3 + t^m + 1. Coordinates are
// numerator polynomials x(t), y(t) over a tower field together with a
// constant denominator scale u (denominators u^2 for x, u^3 for y; u = 1
// for polynomial sections). The on-curve invariant is the cleared identity
// y^2 = x^3 + u^6 (t^m + 1).

#include <mwlat/tower.hpp>

namespace mwlat {

struct Section {
    int m = 0;
    TPoly x{TowerElement{}, "t"};
    TPoly y{TowerElement{}, "t"};
    TowerElement uScale;
    bool isZero = false;

    const FieldPtr& field() const { return uScale.field(); }
};

Section makeSection(int m, TPoly x, TPoly y, TowerElement uScale);
Section polySection(int m, TPoly x, TPoly y);  // uScale = 1
Section zeroSection(int m, const FieldPtr& f);

// Exact check of the cleared curve identity; the zero section is
// vacuously on-curve. Returns false (never throws) on bad input.
bool onCurve(const Section& p);

Section negate(const Section& p);

// (x, y) -> (zeta3^k x, y). zeta3 must be a primitive cube root of unity
// in p's field; anything else is a domain error.
Section zetaTwist(const Section& p, int k, const TowerElement& zeta3);

// Group-law difference p - q for distinct affine sections. p - p gives the
// zero section; p - (-p) (a doubling) is unsupported and throws. The result
// must reduce to the constant-denominator-scale shape, otherwise a
// domain_error reports the unsupported shape.
Section chordSubtract(const Section& p, const Section& q);

enum class SpecializeAt {
    ZeroBOverD,      // x(0) / y(0)
    OneA0OverB0,     // x(1) / y(1)
    InfinityLeadX,   // leading coefficient of x
};

// The quoted coefficient-ratio specializations. Throws domain_error when
// the denominator coefficient vanishes.
TowerElement specialize(const Section& p, SpecializeAt at);

// t -> t^n in both coordinates; maps E_m sections to E_{m n} sections.
Section sectionTPower(const Section& p, long n);

// Coordinates shifted t -> t + c (used to move between E_m and its
// translated models when reading off specializations).
Section sectionShift(const Section& p, const Rat& c);

}  // namespace mwlat
