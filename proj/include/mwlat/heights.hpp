#pragma once

// Height pairings and Gram matrices. Two routes:
//  - the per-family closed formulas quoted from the source data
//    (baseTerm - { deg gcd(dx, dy) + min{xBound - deg dx, yBound - deg dy} })
//  - the generic height formula chi + (P.O) + (Q.O) - (P.Q) - contr with
//    local contributions supplied by the caller through component labels.
// Degrees obey the deg(0) = -inf conventions from unipoly.hpp.

#include <mwlat/ratmatrix.hpp>
#include <mwlat/section.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mwlat {

struct PairingFormula {
    Rat baseTerm;
    long xBound = 0;
    long yBound = 0;
};

// Local contribution values for the reducible fiber at infinity.
// Component label 0 means the identity component (contribution 0).
struct ContributionTable {
    Rat single;     // contr(P), non-identity component
    Rat same;       // contr(P,Q), equal non-identity components
    Rat different;  // contr(P,Q), distinct non-identity components
};

// Standard values for the fiber types that occur here.
ContributionTable contributionsA2();  // IV / I3 fibers: 2/3, 2/3, 1/3
ContributionTable contributionsD4();  // I0* fibers:     1,   1,   1/2
ContributionTable contributionsE6();  // IV* fibers:     4/3, 4/3, 2/3
ContributionTable contributionsNone();

struct GramSpec {
    long chi = 1;
    std::optional<PairingFormula> closed;  // off-diagonal closed formula
    Rat selfContr = Rat(0);                // uniform diagonal contribution with `closed`
    std::vector<int> labels;               // per-point component labels (generic route)
    ContributionTable table = contributionsNone();
};

// 2 chi + 2 (P.O) - contr
Rat selfHeight(const Section& p, long chi, const Rat& contr, long pDotO = 0);

// Closed formula on the cleared coordinate differences.
// Throws std::domain_error when the sections coincide (duplicate points).
Rat pairHeight(const Section& p, const Section& q, const PairingFormula& f);

// chi - deg gcd(dx, dy) - contr (for the families whose shapes meet the
// fiber at infinity with no section-section intersection there).
Rat pairHeightGeneric(const Section& p, const Section& q, long chi, const Rat& contr);

RatMatrix gramMatrix(const std::vector<Section>& points, const GramSpec& spec);

struct LatticeDescriptor {
    long m = 0;
    long rank = 0;
    std::string name;
    Rat det;
    Rat minNorm;
    long kissing = 0;
};

struct LatticeMatchReport {
    long rank = 0;
    Rat det;
    Rat minDiag;
    bool integral = false;
    bool even = false;
    std::vector<LatticeDescriptor> matches;  // all consistent catalog rows
};

// Compares (rank, det, min diagonal, integrality/evenness) against the
// given descriptors; does not claim isometry. Throws std::domain_error if
// g is not symmetric positive definite.
LatticeMatchReport identifyLattice(const RatMatrix& g,
                                   const std::vector<LatticeDescriptor>& descriptors);

}  // namespace mwlat
