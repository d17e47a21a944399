#pragma once

// Resultants via subresultant pseudo-remainder chains (exact, over an
// integral domain), plus an exact evaluation/interpolation route for the
// final bivariate step of big elimination chains.

#include <mwlat/multipoly.hpp>
#include <mwlat/unipoly.hpp>

#include <functional>
#include <stdexcept>

namespace mwlat {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Soft resource budget for elimination chains; checked inside the PRS loops.
struct Budget {
    long maxTerms = 4'000'000;   // summed term count of PRS intermediates
    long maxDegree = 100'000;    // degree cap in any one variable
    void charge(long terms, long degree) const {
        if (terms > maxTerms || degree > maxDegree)
            throw BudgetError("elimination budget exceeded");
    }
    static Budget deep() { return Budget{512'000'000, 10'000'000}; }
};

// Resultant of two univariate rational polynomials.
Rat resultantQ(const QPoly& a, const QPoly& b);

// Resultant w.r.t. `var`, eliminating it. Inputs must share a variable
// list. Throws std::domain_error when var is absent from both inputs.
MultiPoly resultantVar(const MultiPoly& p, const MultiPoly& q, const std::string& var,
                       const Budget& budget = Budget{});

// Same resultant computed by evaluating the one remaining variable at
// integer points and interpolating exactly; requires the inputs to involve
// only {var, other}.
MultiPoly resultantBivariateInterp(const MultiPoly& p, const MultiPoly& q,
                                   const std::string& var, const std::string& other,
                                   const Budget& budget = Budget{});

}  // namespace mwlat
