#include <mwlat/ratmatrix.hpp>

#include <stdexcept>

namespace mwlat {

RatMatrix RatMatrix::fromRows(const std::vector<std::vector<Rat>>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::scaled(const Rat& s) const {
    RatMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * s;
    return m;
}

bool RatMatrix::isSymmetric() const {
    if (!isSquare()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RatMatrix RatMatrix::leading(std::size_t k) const {
    RatMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m.at(i, j) = at(i, j);
    return m;
}

// Integer Bareiss on a denominator-cleared copy. det(M) = det(Z) / prod(d_i)
// where row i of Z is d_i times row i of M.
Rat ratDet(const RatMatrix& m) {
    if (!m.isSquare()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);

    std::vector<Int> z(n * n);
    Int denProd = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int d = 1;
        for (std::size_t j = 0; j < n; ++j) d = lcmInt(d, m.at(i, j).get_den());
        denProd *= d;
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = m.at(i, j) * Rat(d);
            z[i * n + j] = v.get_num();  // den is 1 after scaling
        }
    }

    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (z[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && z[p * n + k] == 0) ++p;
            if (p == n) return Rat(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(z[k * n + j], z[p * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = z[i * n + j] * z[k * n + k] - z[i * n + k] * z[k * n + j];
                Int q;
                if (!divExactInt(q, t, prev))
                    throw std::logic_error("Bareiss exact division failed");
                z[i * n + j] = q;
            }
            z[i * n + k] = 0;
        }
        prev = z[k * n + k];
    }
    Rat det(sign * z[(n - 1) * n + (n - 1)]);
    det /= Rat(denProd);
    det.canonicalize();
    return det;
}

std::vector<Rat> leadingMinors(const RatMatrix& m) {
    if (!m.isSquare()) throw std::invalid_argument("leading minors of non-square matrix");
    if (!m.isSymmetric()) throw std::invalid_argument("leading minors require a symmetric matrix");
    std::vector<Rat> out;
    out.reserve(m.rows());
    for (std::size_t k = 1; k <= m.rows(); ++k) out.push_back(ratDet(m.leading(k)));
    return out;
}

bool isPositiveDefinite(const RatMatrix& m) {
    for (const Rat& d : leadingMinors(m))
        if (d <= 0) return false;
    return true;
}

RatMatrix directSumGram(const std::vector<RatMatrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!b.isSymmetric()) throw std::invalid_argument("direct sum block not symmetric");
        n += b.rows();
    }
    RatMatrix m(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return m;
}

namespace {

bool permSearch(const RatMatrix& a, const RatMatrix& b, std::vector<std::size_t>& perm,
                std::vector<bool>& used, std::size_t i) {
    const std::size_t n = a.rows();
    if (i == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (used[cand]) continue;
        if (a.at(cand, cand) != b.at(i, i)) continue;
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j)
            if (a.at(cand, perm[j]) != b.at(i, j)) ok = false;
        if (!ok) continue;
        used[cand] = true;
        perm[i] = cand;
        if (permSearch(a, b, perm, used, i + 1)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace

bool permutationEquivalent(const RatMatrix& a, const RatMatrix& b, std::vector<std::size_t>& perm) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !a.isSquare()) return false;
    perm.assign(a.rows(), 0);
    std::vector<bool> used(a.rows(), false);
    return permSearch(a, b, perm, used, 0);
}

}  // namespace mwlat
