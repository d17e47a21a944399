#include <mwlat/elimination.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mwlat {

namespace {

// Interpolation beats the PRS on the final bivariate steps once the
// operands carry this many term-pairs.
constexpr long kInterpThreshold = 1500;

bool bivariateIn(const MultiPoly& p, int vi, int ti) {
    for (const auto& [e, c] : p.terms())
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] != 0 && (int)k != vi && (int)k != ti) return false;
    return true;
}

}  // namespace

PhiDerivation derivePhi(const SectionSystem& sys, const QPoly& expectedFactor,
                        const Budget& budget) {
    PhiDerivation out;
    std::vector<MultiPoly> eqs = sys.equations;
    const std::vector<std::string>& vars = sys.variables;
    auto idx = [&](const std::string& v) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == v) return (int)i;
        throw std::invalid_argument("unknown system variable " + v);
    };
    const int ti = idx(sys.targetVariable);

    // Denominator clearing: substitute var -> uVar^power and multiply each
    // equation by the minimal power of uVar making it polynomial.
    for (const ClearingRule& rule : sys.clearingRules) {
        int vi = idx(rule.var), ui = idx(rule.uVar);
        for (std::size_t k = 0; k < eqs.size(); ++k) {
            int cleared = 0;
            eqs[k] = eqs[k].substPower((std::size_t)vi, (std::size_t)ui, rule.power, cleared);
            if (cleared != 0) {
                std::ostringstream os;
                os << "eq" << k + 1 << " multiplied by " << rule.uVar << "^" << cleared
                   << " while clearing " << rule.var;
                out.notes.push_back(os.str());
            }
        }
    }
    for (auto& e : eqs) e = e.primitivePart();

    // Fixed-order resultant chain with content stripping after each step.
    for (const std::string& v : sys.eliminationOrder) {
        out.order.push_back(v);
        int vi = idx(v);
        std::vector<MultiPoly> involved, carried;
        for (auto& e : eqs)
            (e.degIn((std::size_t)vi) > 0 ? involved : carried).push_back(e);
        if (involved.empty())
            throw std::domain_error("elimination variable " + v + " absent from the system");
        // pivot: minimal degree in v, ties broken by list order
        std::size_t pk = 0;
        for (std::size_t k = 1; k < involved.size(); ++k)
            if (involved[k].degIn((std::size_t)vi) < involved[pk].degIn((std::size_t)vi)) pk = k;
        MultiPoly pivot = involved[pk];
        std::vector<MultiPoly> next = carried;
        for (std::size_t k = 0; k < involved.size(); ++k) {
            if (k == pk) continue;
            MultiPoly res;
            bool interp = bivariateIn(involved[k], vi, ti) && bivariateIn(pivot, vi, ti) &&
                          (long)involved[k].termCount() * (long)pivot.termCount() > kInterpThreshold;
            if (interp) {
                res = resultantBivariateInterp(involved[k], pivot, v, sys.targetVariable, budget);
                out.notes.push_back("resultant(" + v + ") via exact interpolation");
            } else {
                res = resultantVar(involved[k], pivot, v, budget);
            }
            if (res.isZero())
                throw std::domain_error("degenerate system: vanishing resultant while eliminating " + v);
            next.push_back(res.primitivePart());
        }
        eqs = std::move(next);
    }

    // Combine whatever survived into a single univariate eliminant.
    QPoly elim(Rat(0), sys.targetVariable);
    for (const auto& e : eqs) {
        if (e.isZero()) continue;
        int sv = e.singleVariable();
        if (sv != ti && e.totalDeg() > 0)
            throw std::domain_error("chain left a non-target variable alive");
        QPoly u = e.toUni((std::size_t)ti, sys.targetVariable);
        elim = elim.isZero() ? u : polyGcd(elim, u);
    }
    if (elim.isZero()) throw std::domain_error("degenerate system: eliminant is identically zero");

    out.raw = elim;
    out.normalized = normalizePrimitive(elim);
    // trial division by the expected catalog factor
    QPoly q(Rat(0), sys.targetVariable), r(Rat(0), sys.targetVariable);
    out.normalized.divRem(expectedFactor, q, r);
    if (r.isZero() && !q.isZero()) {
        out.matchedFactor = expectedFactor;
        out.cofactor = normalizePrimitive(q);
    } else {
        out.cofactor = out.normalized;
    }
    return out;
}

bool verifyFactorization(const std::vector<QPoly>& factors, const QPoly& target,
                         const Rat& constant) {
    QPoly prod = QPoly::constant(constant, target.var());
    for (const QPoly& f : factors) prod = prod * f;
    return prod == target;
}

bool verifyFactorization(const std::vector<TPoly>& factors, const TPoly& target,
                         const TowerElement& constant) {
    TPoly prod = TPoly::constant(constant, target.var());
    for (const TPoly& f : factors) prod = prod * liftPoly(f, constant.field());
    return prod == liftPoly(target, constant.field());
}

}  // namespace mwlat
