#include <mwlat/numeric.hpp>

namespace mwlat {

Cplx Cplx::rootn(unsigned long k) const {
    long p = prec();
    if (im.isZero() && re.sign() >= 0) return Cplx::real(re.rootn(k));
    // polar: r^(1/k) * (cos(theta/k) + i sin(theta/k))
    BigFloat r(p), theta(p);
    mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
    mpfr_atan2(theta.raw(), im.raw(), re.raw(), MPFR_RNDN);
    BigFloat rk = r.rootn(k);
    BigFloat tk = theta / BigFloat::fromInt((long)k, p);
    BigFloat c(p), s(p);
    mpfr_sin_cos(s.raw(), c.raw(), tk.raw(), MPFR_RNDN);
    return {rk * c, rk * s};
}

Cplx Cplx::pow(long e) const {
    long p = prec();
    Cplx base = *this;
    bool invFlag = e < 0;
    unsigned long n = (unsigned long)(invFlag ? -e : e);
    Cplx acc(p);
    acc.re = BigFloat::fromInt(1, p);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    if (invFlag) {
        Cplx one(p);
        one.re = BigFloat::fromInt(1, p);
        acc = one / acc;
    }
    return acc;
}

}  // namespace mwlat
