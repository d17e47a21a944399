#pragma once

// Fixed-precision binary floating point (MPFR, round to nearest) and
// complex arithmetic on top of it. This is a cross-check oracle only:
// numeric results can refute a symbolic identity, never certify one.

#include <mpfr.h>

#include <cmath>
#include <string>
#include <utility>

namespace mwlat {

class BigFloat {
  public:
    explicit BigFloat(long prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(double x, long prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(BigFloat o) { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    long prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static BigFloat fromInt(long n, long prec) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }
    static BigFloat parse(const std::string& s, long prec) {
        BigFloat r(prec);
        mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_add); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_sub); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_mul); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_div); }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat sqrt() const {
        BigFloat r(prec());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    // real k-th root (k >= 1), principal real branch
    BigFloat rootn(unsigned long k) const {
        BigFloat r(prec());
        mpfr_rootn_ui(r.v_, v_, k, MPFR_RNDN);
        return r;
    }
    BigFloat abs() const {
        BigFloat r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool isZero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    double toDouble() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // magnitude as log2; -inf for zero
    double log2Abs() const {
        if (mpfr_zero_p(v_)) return -INFINITY;
        mpfr_t t;
        mpfr_init2(t, 64);
        mpfr_abs(t, v_, MPFR_RNDN);
        mpfr_log2(t, t, MPFR_RNDN);
        double d = mpfr_get_d(t, MPFR_RNDN);
        mpfr_clear(t);
        return d;
    }
    // hex-float serialization (reproducible across platforms)
    std::string hexStr() const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%Ra", v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }
    std::string decStr(int digits = 30) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

  private:
    using Fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static BigFloat bin(const BigFloat& a, const BigFloat& b, Fn f) {
        BigFloat r(std::max(a.prec(), b.prec()));
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

struct Cplx {
    BigFloat re, im;

    explicit Cplx(long prec = 128) : re(prec), im(prec) {}
    Cplx(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    static Cplx real(BigFloat r) {
        long p = r.prec();
        return Cplx(std::move(r), BigFloat(p));
    }

    long prec() const { return re.prec(); }

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    BigFloat absVal() const { return (re * re + im * im).sqrt(); }

    // principal k-th root via polar decomposition
    Cplx rootn(unsigned long k) const;
    Cplx pow(long e) const;
};

}  // namespace mwlat
