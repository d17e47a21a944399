#include <mwlat/resultant.hpp>

#include <algorithm>

namespace mwlat {

namespace {

template <class R>
struct RingOps;

template <>
struct RingOps<Rat> {
    static bool isZero(const Rat& a) { return a == 0; }
    static Rat mul(const Rat& a, const Rat& b) { return a * b; }
    static Rat divExact(const Rat& a, const Rat& b) { return a / b; }
    static Rat pow(const Rat& a, long e) { return rpow(a, e); }
    static long weight(const Rat&) { return 1; }
};

template <>
struct RingOps<MultiPoly> {
    static bool isZero(const MultiPoly& a) { return a.isZero(); }
    static MultiPoly mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
    static MultiPoly divExact(const MultiPoly& a, const MultiPoly& b) { return a.divExact(b); }
    static MultiPoly pow(const MultiPoly& a, long e) {
        MultiPoly r = MultiPoly::constant(a.vars(), 1);
        for (long i = 0; i < e; ++i) r = r * a;
        return r;
    }
    static long weight(const MultiPoly& a) { return (long)a.termCount(); }
};

template <class R>
using Dense = std::vector<R>;  // dense in the eliminated variable, low first

template <class R>
long degOf(const Dense<R>& p) {
    return (long)p.size() - 1;
}

template <class R>
void trim(Dense<R>& p) {
    while (!p.empty() && RingOps<R>::isZero(p.back())) p.pop_back();
}

// Pseudo-remainder lc(B)^(degA-degB+1) * A mod B (the exponent is exact:
// the loop is corrected when the degree drops by more than one per step).
template <class R>
Dense<R> prem(Dense<R> a, const Dense<R>& b, const Budget& budget) {
    using Ops = RingOps<R>;
    const long db = degOf(b);
    const long delta = degOf(a) - db;
    const R& lb = b.back();
    long steps = 0;
    while (degOf(a) >= db) {
        ++steps;
        long shift = degOf(a) - db;
        R la = a.back();
        long terms = 0;
        for (R& c : a) {
            c = Ops::mul(c, lb);
            terms += Ops::weight(c);
        }
        budget.charge(terms, degOf(a));
        for (long i = 0; i <= db; ++i) {
            std::size_t k = (std::size_t)(shift + i);
            a[k] = a[k] - Ops::mul(la, b[(std::size_t)i]);
        }
        trim(a);
        if (a.empty()) break;
    }
    for (long i = steps; i <= delta; ++i)
        for (R& c : a) c = Ops::mul(c, lb);
    return a;
}

// Subresultant PRS resultant over an integral domain (no content
// extraction; the g*h^delta divisions are exact by Collins' theorem).
template <class R>
R subresultant(Dense<R> a, Dense<R> b, const R& one, const R& zero, const Budget& budget) {
    using Ops = RingOps<R>;
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return zero;
    int sign = 1;
    if (degOf(a) < degOf(b)) {
        if ((degOf(a) & 1) && (degOf(b) & 1)) sign = -sign;
        std::swap(a, b);
    }
    if (degOf(b) == 0) {
        R r = Ops::pow(b[0], degOf(a));
        return sign < 0 ? zero - r : r;
    }
    R g = one, h = one;
    for (;;) {
        long da = degOf(a), db = degOf(b);
        long delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        Dense<R> rem = prem<R>(a, b, budget);
        if (rem.empty()) return zero;  // deg(b) > 0 here: common factor
        R divisor = Ops::mul(g, Ops::pow(h, delta));
        a = std::move(b);
        b.clear();
        b.reserve(rem.size());
        for (R& c : rem) b.push_back(Ops::divExact(c, divisor));
        if (degOf(b) == 0) {
            long dfin = degOf(a);
            R num = Ops::pow(b[0], dfin);
            R res = dfin >= 2 ? Ops::divExact(num, Ops::pow(h, dfin - 1)) : num;
            return sign < 0 ? zero - res : res;
        }
        g = a.back();
        if (delta >= 1) {
            R gd = Ops::pow(g, delta);
            h = delta == 1 ? gd : Ops::divExact(gd, Ops::pow(h, delta - 1));
        }
    }
}

}  // namespace

Rat resultantQ(const QPoly& a, const QPoly& b) {
    Budget unlimited = Budget::deep();
    return subresultant<Rat>(a.coeffs(), b.coeffs(), Rat(1), Rat(0), unlimited);
}

MultiPoly resultantVar(const MultiPoly& p, const MultiPoly& q, const std::string& var,
                       const Budget& budget) {
    if (p.vars() != q.vars()) throw std::invalid_argument("variable lists differ");
    int vi = p.varIndex(var);
    if (vi < 0) throw std::invalid_argument("unknown variable " + var);
    if (!p.involves(var) && !q.involves(var))
        throw std::domain_error("elimination variable absent from both inputs");
    MultiPoly one = MultiPoly::constant(p.vars(), 1);
    MultiPoly zero(p.vars());
    return subresultant<MultiPoly>(p.coeffsIn((std::size_t)vi), q.coeffsIn((std::size_t)vi), one,
                                   zero, budget);
}

MultiPoly resultantBivariateInterp(const MultiPoly& p, const MultiPoly& q,
                                   const std::string& var, const std::string& other,
                                   const Budget& budget) {
    if (p.vars() != q.vars()) throw std::invalid_argument("variable lists differ");
    int vi = p.varIndex(var), oi = p.varIndex(other);
    if (vi < 0 || oi < 0) throw std::invalid_argument("unknown variable");
    for (const MultiPoly* f : {&p, &q})
        for (const auto& [e, c] : f->terms())
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0 && (int)i != vi && (int)i != oi)
                    throw std::domain_error("inputs are not bivariate in the requested pair");

    const long bound = p.degIn((std::size_t)vi) * q.degIn((std::size_t)oi) +
                       q.degIn((std::size_t)vi) * p.degIn((std::size_t)oi);
    auto lcP = p.coeffsIn((std::size_t)vi).back();
    auto lcQ = q.coeffsIn((std::size_t)vi).back();

    // Newton interpolation: collect bound+1 sample points where neither
    // leading coefficient vanishes (degree must not drop under evaluation).
    std::vector<Rat> xs, newton;
    long next = 0;
    while ((long)xs.size() <= bound) {
        budget.charge((long)xs.size() * (bound + 1), bound);
        Rat x0(next);
        next = next > 0 ? -next : -next + 1;  // 0, 1, -1, 2, -2, ...
        if (lcP.evalVar((std::size_t)oi, x0).isZero()) continue;
        if (lcQ.evalVar((std::size_t)oi, x0).isZero()) continue;
        QPoly pu = p.evalVar((std::size_t)oi, x0).toUni((std::size_t)vi, var);
        QPoly qu = q.evalVar((std::size_t)oi, x0).toUni((std::size_t)vi, var);
        Rat val = resultantQ(pu, qu);
        // incremental divided difference for the new node
        Rat coef = val;
        for (std::size_t j = 0; j < xs.size(); ++j) coef = (coef - newton[j]) / (x0 - xs[j]);
        xs.push_back(x0);
        newton.push_back(coef);
    }
    // Expand the Newton form into monomial coefficients in `other`.
    QPoly acc(Rat(0), other);
    for (std::size_t j = newton.size(); j-- > 0;) {
        QPoly lin = qpoly({-xs[j], Rat(1)}, other);
        acc = acc * lin + QPoly::constant(newton[j], other);
    }
    MultiPoly out(p.vars());
    for (std::size_t i = 0; i < acc.coeffs().size(); ++i) {
        if (acc.coeffs()[i] == 0) continue;
        Expv e(p.vars().size(), 0);
        e[(std::size_t)oi] = (int)i;
        out.addTerm(e, acc.coeffs()[i]);
    }
    return out;
}

}  // namespace mwlat
