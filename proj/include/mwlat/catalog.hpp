#pragma once

// Static catalog: the number-field towers, generator points, Gram matrices,
// fundamental-polynomial data and root values for E_m : y^2 = x^3 + t^m + 1
// with 2 <= m <= 12, plus the structure table for all m | 360 and the
// derived-invariant calculators for general m.

#include <mwlat/elimination.hpp>
#include <mwlat/heights.hpp>
#include <mwlat/section.hpp>

#include <optional>

namespace mwlat {

// ----------------------------------------------------------- invariants

enum class FiberType { Regular, IIstar, IVstar, I0star, IV, II };
enum class TrivialType { None, E8, E6, D4, A2 };

struct SurfaceInvariants {
    long m = 0;
    long chi = 0;
    FiberType fiberAtInfinity = FiberType::Regular;
    TrivialType trivialLatticeType = TrivialType::None;
    long trivialRank = 0;
    long trivialDet = 1;
    long rank = 0;
};

SurfaceInvariants invariantsFor(long m);
std::string fiberName(FiberType t);
std::string trivialName(TrivialType t);

// rank = picard - 2 - sum (m_v - 1); throws on a negative result.
long shiodaTateRank(long picard, const std::vector<long>& fiberComponents);

// --------------------------------------------------------- lattice table

// Printed structure-table rows (all m dividing 360).
const std::vector<LatticeDescriptor>& table1();

// Table row when m | 360, otherwise the composition rule applied to
// m1 = gcd(m, 360), m2 = m / m1.
LatticeDescriptor expectedLattice(long m);

// Orthogonal decomposition [(m_i, n_i)] for the rows built as direct sums
// L_{m1}[n1] (+) ..., when one is printed.
std::optional<std::vector<std::pair<long, long>>> orthogonalParts(long m);

// ----------------------------------------------------------- tower fields

namespace fields {
FieldPtr Q();
FieldPtr K2();      // Q(zeta3)
FieldPtr K3();      // Q(zeta3, 2^(1/3))
FieldPtr K4();      // Q(zeta12, alpha1)
FieldPtr K6();      // Q(zeta12, 2^(1/3))
FieldPtr T5();      // Q(sqrt2, sqrt3, sqrt5, 5^(1/4), sqrt(1+sqrt5)), deg 32
FieldPtr Q5();      // Q(sqrt5)
FieldPtr RhoFp();   // Q(sqrt5, rho), rho^2 = 654205350 + 292569486 sqrt5
FieldPtr RhoFs();   // Q(sqrt5, rho), rho^2 = 157776180962550 - 70559653172514 sqrt5
FieldPtr RhoFsTau();// tau-conjugate radicand (+ sqrt5 branch)
FieldPtr Theta1();  // K6(theta), theta^3 = 2^(2/3) - 2^(1/3)
FieldPtr Theta2();  // K6(theta), theta^3 = zeta12 2^(1/3) (2^(1/3) + zeta12^10)
FieldPtr Theta3();  // K6(theta), theta^3 = zeta12 2^(1/3) (zeta12^10 2^(1/3) + 1)
FieldPtr W0();      // K6(w0), w0^3 = 18 (2^(1/3) + zeta6)
FieldPtr U10();     // W0 field extended by chi, chi^3 = 3 Y00
// Degree-240 field Q(zeta30)((60 v1)^(1/30)); construction is budget-guarded.
FieldPtr K5(bool allowDeep = false);
}  // namespace fields

// Named constants inside a catalog field (throws if the field's tower does
// not provide the element).
namespace consts {
TowerElement zeta3(const FieldPtr& f);
TowerElement zeta6(const FieldPtr& f);
TowerElement zeta12(const FieldPtr& f);
TowerElement imagUnit(const FieldPtr& f);
TowerElement sqrt3(const FieldPtr& f);
TowerElement cbrt2(const FieldPtr& f);   // 2^(1/3)
TowerElement alpha1(const FieldPtr& f);  // K4 generator
TowerElement sqrt5(const FieldPtr& f);
TowerElement delta1(const FieldPtr& f);  // 2^(1/2) 3^(1/2) 5^(1/4) (1+sqrt5)^(1/2) / 2
}  // namespace consts

// --------------------------------------------------------- catalog entries

struct RootValue {
    std::string name;
    TowerElement value;
    QPoly factor;            // rational polynomial the value roots
    std::string factorName;
};

struct CatalogEntry {
    int m = 0;
    FieldPtr field;                        // field of the points (null if none)
    std::vector<Section> points;
    std::vector<std::string> pointNames;
    std::vector<std::size_t> gramBasis;    // indices into points
    GramSpec gramSpec;
    bool gramComputable = false;
    RatMatrix gramPrinted;
    Rat detExpected;
    Rat muExpected;
    QPoly phi;                             // fundamental polynomial (printed form)
    std::vector<QPoly> phiFactors;
    std::vector<std::string> phiFactorNames;
    std::optional<QPoly> minpoly;          // g_m
    std::vector<RootValue> rootValues;
    std::vector<std::string> notes;        // errata and conventions
};

const CatalogEntry& entry(int m);          // m in {2,3,4,5,6,8,9,10,12}
const std::vector<int>& catalogIndices();

// Coefficient systems for the fundamental-polynomial derivations.
const SectionSystem& system(int m);        // m in {3,4,5,6,9}

// m = 5 specifics: F'(V), F''(V) and the delta1-form bookkeeping.
QPoly fprimeV();
QPoly fsecondV();

// findPrimitiveRoot: search small integer combinations of generator power
// products for a root of g; deterministic order (smallest |c| sum, then
// lexicographic). Returns nothing when the bound yields no root.
std::optional<TowerElement> findPrimitiveRoot(const QPoly& g, const FieldPtr& f, int searchBound);

}  // namespace mwlat
