#pragma once

// Deriving fundamental polynomials from the printed coefficient systems:
// denominator clearing, fixed-order resultant chains, factor matching.

#include <mwlat/multipoly.hpp>
#include <mwlat/resultant.hpp>
#include <mwlat/tower.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mwlat {

struct ClearingRule {
    std::string var;   // substituted variable, e.g. "b"
    std::string uVar;  // power variable, e.g. "u"
    int power;         // b -> u^power (negative powers clear denominators)
};

struct SectionSystem {
    int m = 0;
    std::vector<std::string> variables;
    std::vector<MultiPoly> equations;           // printed system, verbatim
    std::vector<ClearingRule> clearingRules;
    std::vector<std::string> eliminationOrder;  // resultant chain order
    std::string targetVariable;
};

struct PhiDerivation {
    QPoly raw;                           // final eliminant (chain-level content stripped)
    QPoly normalized;                    // integer-primitive, positive lead
    std::optional<QPoly> matchedFactor;  // the expected factor, when it divides exactly
    QPoly cofactor;                      // normalized / matched (resultant-chain extras)
    std::vector<std::string> order;
    std::vector<std::string> notes;      // clearing multipliers, pivots, fallbacks
};

// Runs the clearing rules and the resultant chain, normalizes the
// eliminant and trial-divides by expectedFactor. Throws BudgetError when
// the budget trips and std::domain_error on a degenerate system.
PhiDerivation derivePhi(const SectionSystem& sys, const QPoly& expectedFactor,
                        const Budget& budget = Budget{});

// constant * product(factors) == target, exactly.
bool verifyFactorization(const std::vector<QPoly>& factors, const QPoly& target,
                         const Rat& constant);
bool verifyFactorization(const std::vector<TPoly>& factors, const TPoly& target,
                         const TowerElement& constant);

}  // namespace mwlat
