#include <doctest.h>
#include <mwlat/multipoly.hpp>
#include <mwlat/ratmatrix.hpp>
#include <mwlat/resultant.hpp>
#include <mwlat/unipoly.hpp>

#include <random>

using namespace mwlat;

namespace {

// Independent oracle: resultant as the Sylvester-matrix determinant.
Rat sylvesterResultant(const QPoly& p, const QPoly& q) {
    long m = p.degOr(0), n = q.degOr(0);
    if (p.isZero() || q.isZero()) return Rat(0);
    if (m == 0 && n == 0) return Rat(1);
    RatMatrix s((std::size_t)(m + n), (std::size_t)(m + n));
    for (long i = 0; i < n; ++i)
        for (long k = 0; k <= m; ++k) s.at((std::size_t)i, (std::size_t)(i + k)) = p.coeff((std::size_t)(m - k));
    for (long j = 0; j < m; ++j)
        for (long k = 0; k <= n; ++k)
            s.at((std::size_t)(n + j), (std::size_t)(j + k)) = q.coeff((std::size_t)(n - k));
    return ratDet(s);
}

QPoly randPoly(std::mt19937_64& rng, int maxDeg, long coefBound) {
    std::uniform_int_distribution<int> dd(0, maxDeg);
    std::uniform_int_distribution<long> cc(-coefBound, coefBound);
    int d = dd(rng);
    std::vector<Rat> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(cc(rng));
    return qpoly(std::move(c));
}

}  // namespace

TEST_CASE("gcd basics over Q") {
    QPoly a = qpolyOf({-1, 0, 1});  // t^2 - 1
    QPoly b = qpolyOf({-1, 1});     // t - 1
    CHECK(polyGcd(a, b) == b);
    // gcd with zero is the monic normalization
    QPoly z = QPoly::zero(Rat(0));
    CHECK(polyGcd(qpolyOf({2, 4}), z) == qpolyOf({1, 2}).monic());
    CHECK(polyGcd(z, z).isZero());
    // gcd of a nonzero constant with zero is the monic unit, degree 0
    QPoly c = QPoly::constant(Rat(-7));
    auto g = polyGcd(c, z);
    CHECK(g == QPoly::constant(Rat(1)));
    CHECK(g.deg() == Deg::of(0));
}

TEST_CASE("gcd divides both inputs on random cases") {
    std::mt19937_64 rng(7001);
    for (int i = 0; i < 200; ++i) {
        QPoly a = randPoly(rng, 6, 8), b = randPoly(rng, 6, 8);
        QPoly g = polyGcd(a, b);
        if (g.isZero()) {
            CHECK(a.isZero());
            CHECK(b.isZero());
            continue;
        }
        CHECK((a.isZero() || a.divExact(g) * g == a));
        CHECK((b.isZero() || b.divExact(g) * g == b));
    }
}

TEST_CASE("degree conventions with NEG_INF") {
    QPoly z = QPoly::zero(Rat(0));
    CHECK(z.deg() == Deg::negInf());
    CHECK((z.deg() + Deg::of(5)) == Deg::negInf());
    std::mt19937_64 rng(7002);
    for (int i = 0; i < 200; ++i) {
        QPoly a = randPoly(rng, 5, 6), b = randPoly(rng, 5, 6);
        CHECK((a * b).deg() == a.deg() + b.deg());  // Q is an integral domain
    }
}

TEST_CASE("substituteTPower") {
    CHECK(qpolyOf({1, 1}).substituteTPower(3) == qpolyOf({1, 0, 0, 1}));
    // constants are unchanged: x-coordinate -1 of the m=2 point stays -1
    CHECK(QPoly::constant(Rat(-1)).substituteTPower(5) == QPoly::constant(Rat(-1)));
    // y = t goes to t^5
    CHECK(qpolyOf({0, 1}).substituteTPower(5) == qpolyOf({0, 0, 0, 0, 0, 1}));
    std::mt19937_64 rng(7003);
    for (int i = 0; i < 100; ++i) {
        QPoly a = randPoly(rng, 5, 6), b = randPoly(rng, 5, 6);
        CHECK((a + b).substituteTPower(3) == a.substituteTPower(3) + b.substituteTPower(3));
        CHECK((a * b).substituteTPower(3) == a.substituteTPower(3) * b.substituteTPower(3));
    }
}

TEST_CASE("normalizePrimitive") {
    CHECK(normalizePrimitive(qpoly({ratOf(-2, 3), Rat(0), ratOf(1, 3)}, "u")) ==
          qpoly({Rat(-2), Rat(0), Rat(1)}, "u"));
    CHECK(normalizePrimitive(qpoly({Rat(4), Rat(-2)}, "u")) == qpoly({Rat(-2), Rat(1)}, "u"));
    CHECK_THROWS_AS(normalizePrimitive(QPoly::zero(Rat(0))), std::domain_error);
}

TEST_CASE("polynomial shift") {
    // p(t) = t^2, p(t-1) = t^2 - 2t + 1
    CHECK(qpolyOf({0, 0, 1}).shift(Rat(-1)) == qpolyOf({1, -2, 1}));
    std::mt19937_64 rng(7004);
    for (int i = 0; i < 50; ++i) {
        QPoly a = randPoly(rng, 6, 9);
        CHECK(a.shift(Rat(2)).shift(Rat(-2)) == a);
        CHECK(a.shift(Rat(3)).evalAt(Rat(0)) == a.evalAt(Rat(3)));
    }
}

TEST_CASE("reduceByPower") {
    CHECK(reduceByPower(qpolyOf({1, 0, 0, 0, 1}, "u"), 2) == qpoly({Rat(1), Rat(0), Rat(1)}, "U"));
    CHECK_THROWS_AS(reduceByPower(qpolyOf({1, 1}, "u"), 2), std::domain_error);
    std::mt19937_64 rng(7005);
    for (int i = 0; i < 50; ++i) {
        QPoly a = randPoly(rng, 6, 9);
        if (a.isZero()) continue;
        QPoly lifted = a.substituteTPower(4);
        CHECK(reduceByPower(lifted, 4, a.var()) == a);
    }
}

TEST_CASE("resultant eliminates a variable: Sylvester 3x3 example") {
    std::vector<std::string> vars{"x", "a", "b"};
    auto p = MultiPoly::parse(vars, "x^2 - a");
    auto q = MultiPoly::parse(vars, "x - b");
    auto r = resultantVar(p, q, "x");
    CHECK(r == MultiPoly::parse(vars, "b^2 - a"));
}

TEST_CASE("resultant error contracts") {
    std::vector<std::string> vars{"x", "y"};
    auto p = MultiPoly::parse(vars, "y + 1");
    auto q = MultiPoly::parse(vars, "y - 1");
    CHECK_THROWS_AS(resultantVar(p, q, "x"), std::domain_error);
}

TEST_CASE("univariate resultant agrees with the Sylvester determinant") {
    std::mt19937_64 rng(7006);
    for (int i = 0; i < 150; ++i) {
        QPoly a = randPoly(rng, 5, 5), b = randPoly(rng, 5, 5);
        if (a.isZero() || b.isZero()) continue;
        CHECK(resultantQ(a, b) == sylvesterResultant(a, b));
    }
}

TEST_CASE("resultant vanishes exactly on planted common factors") {
    std::mt19937_64 rng(7007);
    int planted = 0, coprime = 0;
    while (planted < 60 || coprime < 60) {
        QPoly f = randPoly(rng, 3, 4), g = randPoly(rng, 3, 4), h = randPoly(rng, 2, 4);
        if (f.isZero() || g.isZero() || h.isZero() || h.degOr(0) < 1) continue;
        QPoly a = f * h, b = g * h;  // common factor h
        CHECK(resultantQ(a, b) == 0);
        ++planted;
        QPoly c = f, d = g;
        if (polyGcd(c, d).degOr(0) == 0) {
            CHECK(resultantQ(c, d) != 0);
            ++coprime;
        }
    }
}

TEST_CASE("multivariate resultant shares roots with its inputs") {
    // resultant(p, q, x) vanishes at (a0, b0) iff p(x, a0, b0), q(x, a0, b0)
    // share a root; planted instances over two parameters.
    std::vector<std::string> vars{"x", "s"};
    std::mt19937_64 rng(7008);
    std::uniform_int_distribution<long> cc(-4, 4);
    auto x = MultiPoly::variable(vars, "x");
    auto xs = MultiPoly::parse(vars, "x - s");
    for (int i = 0; i < 60; ++i) {
        // p = (x - s)(x - c1), q = (x - s)(x - c2): common root x = s
        auto p = xs * (x - MultiPoly::constant(vars, Rat(cc(rng))));
        auto q = xs * (x - MultiPoly::constant(vars, Rat(cc(rng))));
        CHECK(resultantVar(p, q, "x").isZero());
    }
}

TEST_CASE("bivariate interpolation resultant matches the PRS route") {
    std::vector<std::string> vars{"x", "y"};
    std::mt19937_64 rng(7009);
    std::uniform_int_distribution<long> cc(-5, 5);
    for (int i = 0; i < 30; ++i) {
        MultiPoly p(vars), q(vars);
        for (int t = 0; t < 6; ++t) {
            p.addTerm({(int)(rng() % 4), (int)(rng() % 3)}, Rat(cc(rng)));
            q.addTerm({(int)(rng() % 3), (int)(rng() % 3)}, Rat(cc(rng)));
        }
        if (!p.involves("x") || !q.involves("x")) continue;
        auto a = resultantVar(p, q, "x");
        auto b = resultantBivariateInterp(p, q, "x", "y");
        CHECK(a == b);
    }
}

TEST_CASE("multipoly parse, arithmetic, exact division") {
    std::vector<std::string> vars{"a", "b", "c"};
    auto p = MultiPoly::parse(vars, "3*a^2*b - 2*c - 6");
    CHECK(p.termCount() == 3);
    CHECK(p.degIn(0) == 2);
    auto q = MultiPoly::parse(vars, "a + c");
    auto prod = p * q;
    CHECK(prod.divExact(q) == p);
    CHECK(prod.divExact(p) == q);
    CHECK_THROWS_AS(p.divExact(q), std::domain_error);
    // primitive part: strip rational content, monomial content, sign
    auto r = MultiPoly::parse(vars, "4*a^3*b - 2*a^2").scaled(ratOf(-1, 6));
    auto pp = r.primitivePart();
    CHECK(pp == MultiPoly::parse(vars, "2*a*b - 1"));
}
