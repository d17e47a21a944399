#include <mwlat/tower.hpp>

#include <cassert>
#include <cstring>
#include <stdexcept>

namespace mwlat {

// ---------------------------------------------------------------- field

FieldPtr TowerField::rationals() {
    static FieldPtr q = [] {
        auto f = std::shared_ptr<TowerField>(new TowerField());
        f->name_ = "Q";
        return FieldPtr(f);
    }();
    return q;
}

FieldPtr TowerField::extend(const std::string& gen, long deg,
                            const std::vector<TowerElement>& minpolyLow, EmbedFn embed) const {
    if (deg < 1) throw std::invalid_argument("extension degree must be >= 1");
    if ((long)minpolyLow.size() != deg)
        throw std::invalid_argument("monic defining polynomial needs exactly deg low coefficients");
    auto f = std::shared_ptr<TowerField>(new TowerField());
    f->levels_ = levels_;
    f->blocks_ = blocks_;
    TowerLevel lv;
    lv.gen = gen;
    lv.deg = deg;
    lv.embed = std::move(embed);
    for (const auto& c : minpolyLow) {
        if ((long)c.flat().size() != degree())
            throw std::invalid_argument("defining coefficient not an element of the base tower");
        lv.minpolyLow.push_back(c.flat());
    }
    f->levels_.push_back(std::move(lv));
    f->blocks_.push_back((blocks_.empty() ? 1 : blocks_.back()) * deg);
    f->name_ = name_ + "(" + gen + ")";
    return f;
}

bool TowerField::extendsPrefix(const TowerField& sub) const {
    if (sub.levels_.size() > levels_.size()) return false;
    for (std::size_t i = 0; i < sub.levels_.size(); ++i) {
        const TowerLevel &a = levels_[i], &b = sub.levels_[i];
        if (a.gen != b.gen || a.deg != b.deg || a.minpolyLow != b.minpolyLow) return false;
    }
    return true;
}

void TowerField::addSpan(std::size_t level, Rat* out, const Rat* a, const Rat* b) const {
    long n = blockSize(level);
    for (long i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void TowerField::subSpan(std::size_t level, Rat* out, const Rat* a, const Rat* b) const {
    long n = blockSize(level);
    for (long i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

bool TowerField::spanZero(std::size_t level, const Rat* a) const {
    long n = blockSize(level);
    for (long i = 0; i < n; ++i)
        if (a[i] != 0) return false;
    return true;
}

void TowerField::mulSpan(std::size_t level, Rat* out, const Rat* a, const Rat* b) const {
    if (level == 0) {
        out[0] = a[0] * b[0];
        return;
    }
    const TowerLevel& lv = levels_[level - 1];
    const long d = lv.deg;
    const long B = blockSize(level - 1);

    // convolution of the two degree-<d coefficient vectors
    std::vector<Rat> tmp((std::size_t)((2 * d - 1) * B), Rat(0));
    std::vector<Rat> scratch((std::size_t)B);
    for (long i = 0; i < d; ++i) {
        if (spanZero(level - 1, a + i * B)) continue;
        for (long j = 0; j < d; ++j) {
            if (spanZero(level - 1, b + j * B)) continue;
            mulSpan(level - 1, scratch.data(), a + i * B, b + j * B);
            Rat* dst = tmp.data() + (i + j) * B;
            for (long k = 0; k < B; ++k) dst[k] += scratch[k];
        }
    }
    // reduce modulo the monic defining polynomial
    for (long j = 2 * d - 2; j >= d; --j) {
        Rat* top = tmp.data() + j * B;
        if (spanZero(level - 1, top)) continue;
        for (long i = 0; i < d; ++i) {
            if (lv.minpolyLow[(std::size_t)i].empty()) continue;
            mulSpan(level - 1, scratch.data(), top, lv.minpolyLow[(std::size_t)i].data());
            Rat* dst = tmp.data() + (j - d + i) * B;
            for (long k = 0; k < B; ++k) dst[k] -= scratch[k];
        }
        for (long k = 0; k < B; ++k) top[k] = 0;
    }
    for (long k = 0; k < d * B; ++k) out[k] = tmp[(std::size_t)k];
}

namespace {

// Local polynomial-over-subtower helpers for the extended Euclid in invSpan.
struct LPoly {
    std::vector<std::vector<Rat>> c;  // coefficient blocks, low first

    void trim(const TowerField& f, std::size_t level) {
        while (!c.empty() && f.spanZero(level, c.back().data())) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    long deg() const { return (long)c.size() - 1; }
};

LPoly lpolySub(const TowerField& f, std::size_t level, const LPoly& a, const LPoly& b) {
    const long B = f.blockSize(level);
    LPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), std::vector<Rat>((std::size_t)B, Rat(0)));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        const Rat* pa = i < a.c.size() ? a.c[i].data() : nullptr;
        const Rat* pb = i < b.c.size() ? b.c[i].data() : nullptr;
        for (long k = 0; k < B; ++k) {
            Rat va = pa ? pa[k] : Rat(0);
            Rat vb = pb ? pb[k] : Rat(0);
            r.c[i][(std::size_t)k] = va - vb;
        }
    }
    r.trim(f, level);
    return r;
}

LPoly lpolyMul(const TowerField& f, std::size_t level, const LPoly& a, const LPoly& b) {
    const long B = f.blockSize(level);
    LPoly r;
    if (a.zero() || b.zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, std::vector<Rat>((std::size_t)B, Rat(0)));
    std::vector<Rat> scratch((std::size_t)B);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (f.spanZero(level, a.c[i].data())) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (f.spanZero(level, b.c[j].data())) continue;
            f.mulSpan(level, scratch.data(), a.c[i].data(), b.c[j].data());
            for (long k = 0; k < B; ++k) r.c[i + j][(std::size_t)k] += scratch[k];
        }
    }
    r.trim(f, level);
    return r;
}

// Euclidean division a = q*b + rem over the level field.
void lpolyDivRem(const TowerField& f, std::size_t level, LPoly a, const LPoly& b, LPoly& q,
                 LPoly& rem) {
    const long B = f.blockSize(level);
    q.c.clear();
    std::vector<Rat> invLead((std::size_t)B), factor((std::size_t)B), scratch((std::size_t)B);
    f.invSpan(level, invLead.data(), b.c.back().data());
    const long db = b.deg();
    while (!a.zero() && a.deg() >= db) {
        long shift = a.deg() - db;
        f.mulSpan(level, factor.data(), a.c.back().data(), invLead.data());
        if ((long)q.c.size() < shift + 1) q.c.resize(shift + 1, std::vector<Rat>((std::size_t)B, Rat(0)));
        for (long k = 0; k < B; ++k) q.c[(std::size_t)shift][(std::size_t)k] += factor[(std::size_t)k];
        for (long i = 0; i <= db; ++i) {
            f.mulSpan(level, scratch.data(), factor.data(), b.c[(std::size_t)i].data());
            for (long k = 0; k < B; ++k) a.c[(std::size_t)(shift + i)][(std::size_t)k] -= scratch[k];
        }
        a.trim(f, level);
    }
    rem = std::move(a);
}

}  // namespace

void TowerField::invSpan(std::size_t level, Rat* out, const Rat* a) const {
    if (level == 0) {
        if (a[0] == 0) throw std::domain_error("inversion of zero");
        out[0] = 1 / a[0];
        return;
    }
    const TowerLevel& lv = levels_[level - 1];
    const long d = lv.deg;
    const long B = blockSize(level - 1);
    if (spanZero(level, a)) throw std::domain_error("inversion of zero");

    // extended Euclid of a (degree < d) against the monic defining poly
    LPoly r0, r1, t0, t1;
    r0.c = lv.minpolyLow;
    r0.c.push_back(std::vector<Rat>((std::size_t)B, Rat(0)));
    r0.c.back()[0] = 1;
    for (long i = 0; i < d; ++i)
        r1.c.emplace_back(a + i * B, a + (i + 1) * B);
    r1.trim(*this, level - 1);
    t1.c.push_back(std::vector<Rat>((std::size_t)B, Rat(0)));
    t1.c.back()[0] = 1;

    while (!r1.zero()) {
        LPoly q, rem;
        lpolyDivRem(*this, level - 1, r0, r1, q, rem);
        LPoly t2 = lpolySub(*this, level - 1, t0, lpolyMul(*this, level - 1, q, t1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.deg() != 0)
        throw std::domain_error("zero divisor in tower quotient (non-invertible element)");

    std::vector<Rat> gInv((std::size_t)B);
    invSpan(level - 1, gInv.data(), r0.c[0].data());
    std::vector<Rat> scratch((std::size_t)B);
    for (long i = 0; i < d; ++i) {
        if (i < (long)t0.c.size()) {
            mulSpan(level - 1, scratch.data(), t0.c[(std::size_t)i].data(), gInv.data());
            for (long k = 0; k < B; ++k) out[i * B + k] = scratch[(std::size_t)k];
        } else {
            for (long k = 0; k < B; ++k) out[i * B + k] = 0;
        }
    }
}

// ---------------------------------------------------------------- element

TowerElement::TowerElement(FieldPtr f, std::vector<Rat> flat) : f_(std::move(f)), flat_(std::move(flat)) {
    if ((long)flat_.size() != f_->degree())
        throw std::invalid_argument("flat coefficient vector has wrong length");
}

TowerElement TowerElement::rational(const FieldPtr& f, const Rat& r) {
    std::vector<Rat> flat((std::size_t)f->degree(), Rat(0));
    flat[0] = r;
    return TowerElement(f, std::move(flat));
}

TowerElement TowerElement::generatorOf(const FieldPtr& f, std::size_t level) {
    if (level >= f->numLevels()) throw std::invalid_argument("no such tower level");
    if (f->levels()[level].deg < 2) throw std::invalid_argument("degree-1 level has no free generator slot");
    std::vector<Rat> flat((std::size_t)f->degree(), Rat(0));
    flat[(std::size_t)f->blockSize(level)] = 1;
    return TowerElement(f, std::move(flat));
}

bool TowerElement::isZero() const {
    for (const Rat& r : flat_)
        if (r != 0) return false;
    return true;
}

bool TowerElement::isRational() const {
    for (std::size_t i = 1; i < flat_.size(); ++i)
        if (flat_[i] != 0) return false;
    return true;
}

Rat TowerElement::rationalValue() const {
    if (!isRational()) throw std::domain_error("element is not rational");
    return flat_[0];
}

static void checkSameField(const TowerElement& a, const TowerElement& b) {
    if (a.field() != b.field()) {
        if (!a.field() || !b.field() || !a.field()->extendsPrefix(*b.field()) ||
            !b.field()->extendsPrefix(*a.field()))
            throw std::domain_error("tower elements from different fields");
    }
}

TowerElement TowerElement::operator+(const TowerElement& o) const {
    checkSameField(*this, o);
    std::vector<Rat> out(flat_.size());
    f_->addSpan(f_->numLevels(), out.data(), flat_.data(), o.flat_.data());
    return TowerElement(f_, std::move(out));
}

TowerElement TowerElement::operator-(const TowerElement& o) const {
    checkSameField(*this, o);
    std::vector<Rat> out(flat_.size());
    f_->subSpan(f_->numLevels(), out.data(), flat_.data(), o.flat_.data());
    return TowerElement(f_, std::move(out));
}

TowerElement TowerElement::operator-() const {
    std::vector<Rat> out(flat_.size());
    for (std::size_t i = 0; i < flat_.size(); ++i) out[i] = -flat_[i];
    return TowerElement(f_, std::move(out));
}

TowerElement TowerElement::operator*(const TowerElement& o) const {
    checkSameField(*this, o);
    std::vector<Rat> out(flat_.size());
    f_->mulSpan(f_->numLevels(), out.data(), flat_.data(), o.flat_.data());
    return TowerElement(f_, std::move(out));
}

TowerElement TowerElement::operator*(const Rat& s) const {
    std::vector<Rat> out(flat_.size());
    for (std::size_t i = 0; i < flat_.size(); ++i) out[i] = flat_[i] * s;
    return TowerElement(f_, std::move(out));
}

TowerElement TowerElement::inv() const {
    std::vector<Rat> out(flat_.size());
    f_->invSpan(f_->numLevels(), out.data(), flat_.data());
    return TowerElement(f_, std::move(out));
}

TowerElement TowerElement::pow(long e) const {
    TowerElement base = e < 0 ? inv() : *this;
    unsigned long n = (unsigned long)(e < 0 ? -e : e);
    TowerElement acc = rational(f_, 1);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool TowerElement::operator==(const TowerElement& o) const {
    if (f_ == o.f_) return flat_ == o.flat_;
    checkSameField(*this, o);
    return flat_ == o.flat_;
}

// ---------------------------------------------------------------- helpers

TowerElement embedSubfield(const TowerElement& a, const FieldPtr& target) {
    if (!target->extendsPrefix(*a.field()))
        throw std::domain_error("target tower does not extend the element's tower as a prefix");
    std::vector<Rat> flat((std::size_t)target->degree(), Rat(0));
    for (std::size_t i = 0; i < a.flat().size(); ++i) flat[i] = a.flat()[i];
    return TowerElement(target, std::move(flat));
}

TowerElement evalPoly(const QPoly& p, const TowerElement& a) {
    TowerElement acc = TowerElement::rational(a.field(), 0);
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * a + TowerElement::rational(a.field(), p.coeffs()[i]);
    return acc;
}

bool verifyRoot(const QPoly& p, const TowerElement& a) { return evalPoly(p, a).isZero(); }

bool verifyRoot(const TPoly& p, const TowerElement& a) {
    TowerElement acc = TowerElement::rational(a.field(), 0);
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * a + embedSubfield(p.coeffs()[i], a.field());
    return acc.isZero();
}

TPoly liftPoly(const QPoly& p, const FieldPtr& f) {
    std::vector<TowerElement> c;
    c.reserve(p.coeffs().size());
    for (const Rat& r : p.coeffs()) c.push_back(TowerElement::rational(f, r));
    return TPoly(TowerElement::rational(f, 0), std::move(c), p.var());
}

TPoly liftPoly(const TPoly& p, const FieldPtr& f) {
    std::vector<TowerElement> c;
    c.reserve(p.coeffs().size());
    for (const TowerElement& e : p.coeffs()) c.push_back(embedSubfield(e, f));
    return TPoly(TowerElement::rational(f, 0), std::move(c), p.var());
}

// ---------------------------------------------------------------- numeric

static Cplx evalSpan(const TowerField& f, std::size_t level, const Rat* a, long prec) {
    if (level == 0) {
        BigFloat re(prec);
        mpfr_set_q(re.raw(), a[0].get_mpq_t(), MPFR_RNDN);
        return Cplx::real(std::move(re));
    }
    const TowerLevel& lv = f.levels()[level - 1];
    if (!lv.embed) throw std::runtime_error("generator " + lv.gen + " has no designated embedding");
    Cplx z = lv.embed(prec);
    const long B = f.blockSize(level - 1);
    Cplx acc(prec);
    for (long j = lv.deg - 1; j >= 0; --j) acc = acc * z + evalSpan(f, level - 1, a + j * B, prec);
    return acc;
}

Cplx evalElement(const TowerElement& a, long precBits) {
    if (precBits < 64) throw std::invalid_argument("precision must be at least 64 bits");
    return evalSpan(*a.field(), a.field()->numLevels(), a.flat().data(), precBits);
}

BigFloat residual(const QPoly& p, const TowerElement& a, long precBits) {
    Cplx z = evalElement(a, precBits);
    Cplx acc(precBits);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        BigFloat c(precBits);
        mpfr_set_q(c.raw(), p.coeffs()[i].get_mpq_t(), MPFR_RNDN);
        acc = acc * z + Cplx::real(std::move(c));
    }
    return acc.absVal();
}

BigFloat residual(const TPoly& p, const TowerElement& a, long precBits) {
    Cplx z = evalElement(a, precBits);
    Cplx acc(precBits);
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * z + evalElement(p.coeffs()[i], precBits);
    return acc.absVal();
}

}  // namespace mwlat
