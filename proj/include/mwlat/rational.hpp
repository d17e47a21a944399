#pragma once

// Exact arbitrary-precision integers and rationals.
//
// Rationals are kept in lowest terms with positive denominator (GMP's
// canonical form), so operator== is a bitwise-canonical equality test.
// All arithmetic is exact; there is no rounding anywhere in this header.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwlat {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat ratOf(long n, long d = 1) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// Parse "p/q" or "p" (arbitrary precision, base 10).
inline Rat ratParse(const std::string& s) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw std::invalid_argument("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

// Serialize as "p/q", or "p" when q = 1.
inline std::string ratStr(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Int ipow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rpow(const Rat& base, long e) {
    Rat r;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), a);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), a);
    if (e < 0) {
        if (base == 0) throw std::domain_error("0^negative");
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    r.canonicalize();
    return r;
}

inline Int gcdInt(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcmInt(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline bool divExactInt(Int& q, const Int& a, const Int& b) {
    if (b == 0) return false;
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return false;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return true;
}

}  // namespace mwlat
