#pragma once

// The t -> t^n sublattice construction L_m[n], the pairing scale law,
// the tilde automorphism of L_{6n}, and the F_6 -> E_12 transform.

#include <mwlat/heights.hpp>
#include <mwlat/section.hpp>

namespace mwlat {

// t -> t^n in the coordinates; on-curve sections of E_m map to on-curve
// sections of E_{m n}.
Section baseChange(const Section& p, long n);

// Pairing data scales uniformly under base change: values, degree bounds
// and local contributions all pick up a factor n.
PairingFormula scaleFormula(const PairingFormula& f, long n);
GramSpec scaleSpec(const GramSpec& s, long n);

struct ScaledGramReport {
    bool lawHolds = false;        // Gram(baseChange(points)) == n * Gram(points)
    RatMatrix source;
    RatMatrix target;             // computed with the scaled family formula
    bool printedEqual = false;    // target == printed matrix (when supplied)
    bool printedPermutation = false;
    std::vector<std::size_t> permutation;
    Rat printedDet;
};

// Computes the source Gram, base-changes the points, recomputes the Gram
// with the scaled formula, and checks the entrywise scale law. When a
// printed target matrix is supplied, reports whether it matches directly,
// up to a simultaneous permutation, or not at all.
ScaledGramReport scaledGramCheck(const std::vector<Section>& sourcePoints, long n,
                                 const GramSpec& sourceSpec,
                                 const RatMatrix* printedTarget = nullptr);

// P~ = (t^{2n} x(1/t), t^{3n} y(1/t)) on E_{6n}; an involution on sections
// with deg x <= 2n, deg y <= 3n (shape error otherwise).
Section tildeAutomorphism(const Section& p, long n);

// A point of F_6 : y^2 = x^3 + t^6 + 1/t^6 in cleared coordinates
// (X, Y) = (t^2 x, t^3 y), which satisfy Y^2 = X^3 + t^12 + 1.
struct F6Point {
    TPoly clearedX{TowerElement{}, "t"};
    TPoly clearedY{TowerElement{}, "t"};
};

// The F_6 -> E_12 coordinate transform. Rejects inputs that fail the F_6
// curve identity. The field must contain zeta12 (passed explicitly).
Section f6ToE12(const F6Point& p, const TowerElement& zeta12);

}  // namespace mwlat
