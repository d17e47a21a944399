#include <mwlat/heights.hpp>

#include <stdexcept>

namespace mwlat {

ContributionTable contributionsA2() { return {ratOf(2, 3), ratOf(2, 3), ratOf(1, 3)}; }
ContributionTable contributionsD4() { return {Rat(1), Rat(1), ratOf(1, 2)}; }
ContributionTable contributionsE6() { return {ratOf(4, 3), ratOf(4, 3), ratOf(2, 3)}; }
ContributionTable contributionsNone() { return {Rat(0), Rat(0), Rat(0)}; }

namespace {

// Cleared coordinate differences: dx = x_P u_Q^2 - x_Q u_P^2 and
// dy = y_P u_Q^3 - y_Q u_P^3, as used directly on the x_ij, y_ij of the
// printed pairing formulas.
void clearedDiffs(const Section& p, const Section& q, TPoly& dx, TPoly& dy) {
    FieldPtr f = p.field();
    TowerElement up = p.uScale, uq = embedSubfield(q.uScale, f);
    TPoly qx = liftPoly(q.x, f), qy = liftPoly(q.y, f);
    dx = p.x.scaled(uq * uq) - qx.scaled(up * up);
    dy = p.y.scaled(uq * uq * uq) - qy.scaled(up * up * up);
}

Rat contrPair(const ContributionTable& t, int la, int lb) {
    if (la == 0 || lb == 0) return Rat(0);
    return la == lb ? t.same : t.different;
}

}  // namespace

Rat selfHeight(const Section&, long chi, const Rat& contr, long pDotO) {
    return Rat(2 * chi) + Rat(2 * pDotO) - contr;
}

Rat pairHeight(const Section& p, const Section& q, const PairingFormula& f) {
    TPoly dx(p.x.proto(), "t"), dy(p.y.proto(), "t");
    clearedDiffs(p, q, dx, dy);
    if (dx.isZero() && dy.isZero()) throw std::domain_error("pairing of identical sections");

    long gcdDeg = polyGcd(dx, dy).degOr(0);  // not both zero, so finite
    // min{xBound - deg dx, yBound - deg dy} with c - (-inf) = +inf
    std::optional<long> best;
    if (!dx.isZero()) best = f.xBound - dx.degOr(0);
    if (!dy.isZero()) {
        long v = f.yBound - dy.degOr(0);
        if (!best || v < *best) best = v;
    }
    return f.baseTerm - Rat(gcdDeg + *best);
}

Rat pairHeightGeneric(const Section& p, const Section& q, long chi, const Rat& contr) {
    TPoly dx(p.x.proto(), "t"), dy(p.y.proto(), "t");
    clearedDiffs(p, q, dx, dy);
    if (dx.isZero() && dy.isZero()) throw std::domain_error("pairing of identical sections");
    long gcdDeg = polyGcd(dx, dy).degOr(0);
    return Rat(chi) - Rat(gcdDeg) - contr;
}

RatMatrix gramMatrix(const std::vector<Section>& points, const GramSpec& spec) {
    const std::size_t n = points.size();
    if (n == 0) throw std::invalid_argument("gram matrix needs at least one point");
    if (!spec.labels.empty() && spec.labels.size() != n)
        throw std::invalid_argument("one component label per point required");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].x == points[j].x && points[i].y == points[j].y &&
                points[i].uScale == points[j].uScale)
                throw std::invalid_argument("duplicate points in gram basis");

    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat contr = spec.labels.empty()
                        ? spec.selfContr
                        : (spec.labels[i] == 0 ? Rat(0) : spec.table.single);
        g.at(i, i) = selfHeight(points[i], spec.chi, contr);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat v;
            if (spec.closed) {
                v = pairHeight(points[i], points[j], *spec.closed);
            } else {
                Rat contr = contrPair(spec.table, spec.labels[i], spec.labels[j]);
                v = pairHeightGeneric(points[i], points[j], spec.chi, contr);
            }
            g.at(i, j) = v;
            g.at(j, i) = v;
        }
    }
    return g;
}

LatticeMatchReport identifyLattice(const RatMatrix& g,
                                   const std::vector<LatticeDescriptor>& descriptors) {
    if (!g.isSymmetric()) throw std::domain_error("gram matrix must be symmetric");
    auto minors = leadingMinors(g);
    for (const Rat& d : minors)
        if (d <= 0) throw std::domain_error("gram matrix is not positive definite");

    LatticeMatchReport r;
    r.rank = (long)g.rows();
    r.det = minors.back();
    r.minDiag = g.at(0, 0);
    r.integral = true;
    r.even = true;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (g.at(i, i) < r.minDiag) r.minDiag = g.at(i, i);
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (g.at(i, j).get_den() != 1) r.integral = false;
        if (g.at(i, i).get_den() != 1 || mpz_odd_p(g.at(i, i).get_num().get_mpz_t()))
            r.even = false;
    }
    if (!r.integral) r.even = false;

    for (const auto& d : descriptors) {
        if (d.rank != r.rank) continue;
        if (d.det != r.det) continue;
        if (d.minNorm != r.minDiag) continue;
        r.matches.push_back(d);
    }
    return r;
}

}  // namespace mwlat
