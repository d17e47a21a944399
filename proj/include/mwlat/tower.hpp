#pragma once

// Exact arithmetic in number fields presented as towers of relative
// extensions. Elements are nested coefficient vectors (stored flat in a
// mixed-radix layout); every operation reduces modulo each level's monic
// defining polynomial, so equality of elements is equality of vectors.
//
// Each generator carries a designated complex embedding, used only by the
// numeric oracle (evalElement / residual).

#include <mwlat/numeric.hpp>
#include <mwlat/rational.hpp>
#include <mwlat/unipoly.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mwlat {

using EmbedFn = std::function<Cplx(long precBits)>;

class TowerField;
using FieldPtr = std::shared_ptr<const TowerField>;

class TowerElement {
  public:
    TowerElement() = default;  // invalid sentinel; any arithmetic asserts
    TowerElement(FieldPtr f, std::vector<Rat> flat);

    static TowerElement rational(const FieldPtr& f, const Rat& r);
    static TowerElement generatorOf(const FieldPtr& f, std::size_t level);

    const FieldPtr& field() const { return f_; }
    const std::vector<Rat>& flat() const { return flat_; }
    bool valid() const { return (bool)f_; }
    bool isZero() const;
    bool isRational() const;  // all non-constant slots zero
    Rat rationalValue() const;

    TowerElement operator+(const TowerElement& o) const;
    TowerElement operator-(const TowerElement& o) const;
    TowerElement operator-() const;
    TowerElement operator*(const TowerElement& o) const;
    TowerElement operator*(const Rat& s) const;
    TowerElement inv() const;  // throws std::domain_error on zero
    TowerElement operator/(const TowerElement& o) const { return *this * o.inv(); }
    TowerElement pow(long e) const;
    bool operator==(const TowerElement& o) const;
    bool operator!=(const TowerElement& o) const { return !(*this == o); }

  private:
    FieldPtr f_;
    std::vector<Rat> flat_;
};

struct TowerLevel {
    std::string gen;
    // low coefficients c_0..c_{d-1} of the monic defining polynomial
    // x^d + c_{d-1} x^{d-1} + ... + c_0; each is an element of the tower
    // below this level, in flat form.
    std::vector<std::vector<Rat>> minpolyLow;
    long deg;
    EmbedFn embed;
};

class TowerField : public std::enable_shared_from_this<TowerField> {
  public:
    static FieldPtr rationals();

    // Extend by one generator. minpolyLow coefficients are elements of
    // *this* field (the new level's base). The defining polynomial must be
    // monic of degree >= 1 (degree >= 2 for a proper extension).
    FieldPtr extend(const std::string& gen, long deg,
                    const std::vector<TowerElement>& minpolyLow, EmbedFn embed) const;

    const std::vector<TowerLevel>& levels() const { return levels_; }
    std::size_t numLevels() const { return levels_.size(); }
    long degree() const { return blocks_.empty() ? 1 : blocks_.back(); }
    long blockSize(std::size_t level) const { return level == 0 ? 1 : blocks_[level - 1]; }
    const std::string& name() const { return name_; }
    void setName(std::string n) { name_ = std::move(n); }

    // True when `sub`'s level list is a prefix of this field's levels
    // (same generators and defining polynomials).
    bool extendsPrefix(const TowerField& sub) const;

    // --- internal span arithmetic (flat layout) ---
    void addSpan(std::size_t level, Rat* out, const Rat* a, const Rat* b) const;
    void subSpan(std::size_t level, Rat* out, const Rat* a, const Rat* b) const;
    void mulSpan(std::size_t level, Rat* out, const Rat* a, const Rat* b) const;
    void invSpan(std::size_t level, Rat* out, const Rat* a) const;
    bool spanZero(std::size_t level, const Rat* a) const;

  private:
    TowerField() = default;
    std::vector<TowerLevel> levels_;
    std::vector<long> blocks_;  // cumulative degrees: blocks_[i] = prod deg(0..i)
    std::string name_ = "Q";
};

// Same element re-housed in a field whose tower extends a's field as a
// prefix. Throws std::domain_error otherwise (no general subfield search).
TowerElement embedSubfield(const TowerElement& a, const FieldPtr& target);

// Exact evaluation p(a) for rational-coefficient p.
TowerElement evalPoly(const QPoly& p, const TowerElement& a);

// true iff p(a) = 0 exactly.
bool verifyRoot(const QPoly& p, const TowerElement& a);

template <>
struct FieldOps<TowerElement> {
    static TowerElement zeroLike(const TowerElement& a) {
        return TowerElement::rational(a.field(), 0);
    }
    static TowerElement oneLike(const TowerElement& a) {
        return TowerElement::rational(a.field(), 1);
    }
    static bool isZero(const TowerElement& a) { return a.isZero(); }
    static TowerElement add(const TowerElement& a, const TowerElement& b) { return a + b; }
    static TowerElement sub(const TowerElement& a, const TowerElement& b) { return a - b; }
    static TowerElement mul(const TowerElement& a, const TowerElement& b) { return a * b; }
    static TowerElement neg(const TowerElement& a) { return -a; }
    static TowerElement inv(const TowerElement& a) { return a.inv(); }
    static bool eq(const TowerElement& a, const TowerElement& b) { return a == b; }
};

using TPoly = UniPoly<TowerElement>;

// Lift a rational polynomial into K[t].
TPoly liftPoly(const QPoly& p, const FieldPtr& f);

// Lift coefficients of a K0[t] polynomial into K[t] for K extending K0.
TPoly liftPoly(const TPoly& p, const FieldPtr& f);

bool verifyRoot(const TPoly& p, const TowerElement& a);

// --- numeric oracle (embed-numeric) ---

// Horner evaluation of the nested coefficient vector through each level's
// designated embedding.
Cplx evalElement(const TowerElement& a, long precBits);

// |p(eval(a))| at the given precision.
BigFloat residual(const QPoly& p, const TowerElement& a, long precBits);
BigFloat residual(const TPoly& p, const TowerElement& a, long precBits);

}  // namespace mwlat
