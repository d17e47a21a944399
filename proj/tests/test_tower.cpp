#include <doctest.h>
#include <mwlat/tower.hpp>

#include <random>

using namespace mwlat;

namespace {

Cplx embedZeta3(long prec) {
    BigFloat half = BigFloat::fromInt(1, prec) / BigFloat::fromInt(2, prec);
    BigFloat s3 = BigFloat::fromInt(3, prec).sqrt();
    return Cplx(-half, s3 * half);
}

FieldPtr fieldQz3() {
    auto q = TowerField::rationals();
    auto one = TowerElement::rational(q, 1);
    return q->extend("zeta3", 2, {one, one}, embedZeta3);  // x^2 + x + 1
}

FieldPtr fieldK3() {
    auto qz = fieldQz3();
    auto zero = TowerElement::rational(qz, 0);
    return qz->extend("cbrt2", 3, {TowerElement::rational(qz, -2), zero, zero},
                      [](long prec) { return Cplx::real(BigFloat::fromInt(2, prec).rootn(3)); });
}

}  // namespace

TEST_CASE("defining relation of zeta3") {
    auto f = fieldQz3();
    auto z = TowerElement::generatorOf(f, 0);
    CHECK((z * z + z + TowerElement::rational(f, 1)).isZero());
    CHECK(verifyRoot(qpoly({Rat(1), Rat(1), Rat(1)}, "x"), z));  // g_2
    CHECK(z.pow(3) == TowerElement::rational(f, 1));
}

TEST_CASE("cube root of two") {
    auto f = fieldK3();
    auto c = TowerElement::generatorOf(f, 1);
    CHECK(c * c.pow(2) == TowerElement::rational(f, 2));
    auto onePlus = TowerElement::rational(f, 1) + c;
    CHECK(onePlus.inv() * onePlus == TowerElement::rational(f, 1));
    CHECK_THROWS_AS(TowerElement::rational(f, 0).inv(), std::domain_error);
}

TEST_CASE("embedSubfield is a prefix embedding") {
    auto qz = fieldQz3();
    auto k3 = fieldK3();
    auto z = TowerElement::generatorOf(qz, 0);
    auto zUp = embedSubfield(z, k3);
    CHECK(zUp == TowerElement::generatorOf(k3, 0));
    auto two = TowerElement::rational(TowerField::rationals(), 2);
    CHECK(embedSubfield(two, k3) == TowerElement::rational(k3, 2));
    // non-prefix towers are rejected
    auto other = TowerField::rationals()->extend(
        "sqrt2", 2, {TowerElement::rational(TowerField::rationals(), -2),
                     TowerElement::rational(TowerField::rationals(), 0)},
        [](long prec) { return Cplx::real(BigFloat::fromInt(2, prec).sqrt()); });
    CHECK_THROWS_AS(embedSubfield(TowerElement::generatorOf(other, 0), k3), std::domain_error);
}

TEST_CASE("reduction canonicity: equality is coefficient equality") {
    auto f = fieldK3();
    auto c = TowerElement::generatorOf(f, 1);
    auto z = TowerElement::generatorOf(f, 0);
    auto a = (z + c).pow(2) - (z * z + c * c + z * c * Rat(2));
    CHECK(a.isZero());
    CHECK((z + c) == (c + z));
}

TEST_CASE("field axioms on random tower elements") {
    auto f = fieldK3();
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> cc(-9, 9);
    auto rnd = [&] {
        std::vector<Rat> flat((std::size_t)f->degree());
        for (auto& r : flat) r = Rat(cc(rng));
        return TowerElement(f, std::move(flat));
    };
    auto one = TowerElement::rational(f, 1);
    for (int i = 0; i < 300; ++i) {
        auto a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        if (!a.isZero()) CHECK(a.inv() * a == one);
    }
}

TEST_CASE("gcd over a tower field") {
    auto f = fieldQz3();
    auto z = TowerElement::generatorOf(f, 0);
    auto zero = TowerElement::rational(f, 0);
    auto one = TowerElement::rational(f, 1);
    // (t - zeta3)(t + 1) vs (t - zeta3)
    TPoly tMinusZ(zero, {-z, one});
    TPoly tPlus1(zero, {one, one});
    CHECK(polyGcd(tMinusZ * tPlus1, tMinusZ) == tMinusZ.monic());
    // gcd of the constant x12 = zeta3 - 1 with the zero polynomial is the
    // monic unit of degree 0 (the m=4 P1/P2 y-difference case)
    TPoly x12 = TPoly::constant(z - one);
    TPoly zp = TPoly::zero(zero);
    auto g = polyGcd(x12, zp);
    CHECK(g == TPoly::constant(one));
    CHECK(g.deg() == Deg::of(0));
}

TEST_CASE("numeric embedding of zeta3") {
    auto f = fieldQz3();
    auto z = TowerElement::generatorOf(f, 0);
    Cplx v = evalElement(z, 128);
    CHECK(v.re.toDouble() == doctest::Approx(-0.5));
    CHECK(v.im.toDouble() == doctest::Approx(0.8660254037844386));
    BigFloat r = residual(qpoly({Rat(1), Rat(1), Rat(1)}, "x"), z, 128);
    CHECK(r.log2Abs() < -100);
    // nonzero detection: x^2 - 2 at 1 evaluates to 1
    BigFloat nz = residual(qpoly({Rat(-2), Rat(0), Rat(1)}, "x"),
                           TowerElement::rational(f, 1), 128);
    CHECK(nz.toDouble() == doctest::Approx(1.0));
}

TEST_CASE("residuals shrink when precision doubles") {
    // A residual may round to exactly zero at some precision, so the
    // doubling check allows either a 2^(p/4) shrink or dropping below the
    // doubled-precision floor 2^(-1.5 p).
    auto f = fieldK3();
    auto c = TowerElement::generatorOf(f, 1);
    QPoly p = qpoly({Rat(-2), Rat(0), Rat(0), Rat(1)}, "x");
    double r128 = residual(p, c, 128).log2Abs();
    double r256 = residual(p, c, 256).log2Abs();
    CHECK(r128 < -64);
    CHECK((r256 <= r128 - 32 || r256 <= -192));
}
