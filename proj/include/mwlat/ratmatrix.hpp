#pragma once

// Dense matrices over exact rationals: fraction-free (Bareiss) determinants
// and leading principal minors. This is the linear-algebra substrate behind
// every Gram-matrix certificate.

#include <mwlat/rational.hpp>

#include <cstddef>
#include <initializer_list>

namespace mwlat {

class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    // Row-major initializer, e.g. RatMatrix::fromRows({{1,0},{0,1}}).
    static RatMatrix fromRows(const std::vector<std::vector<Rat>>& rows);
    static RatMatrix identity(std::size_t n);
    // Every entry multiplied by s.
    RatMatrix scaled(const Rat& s) const;

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool isSquare() const { return rows_ == cols_; }
    bool isSymmetric() const;

    RatMatrix leading(std::size_t k) const;  // top-left k x k block

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

// Exact determinant by fraction-free Bareiss elimination (row denominators
// cleared first so the elimination runs over integers). Throws
// std::invalid_argument on non-square input.
Rat ratDet(const RatMatrix& m);

// Determinants of the leading principal submatrices, sizes 1..n.
// Requires a square symmetric matrix; throws std::invalid_argument otherwise.
std::vector<Rat> leadingMinors(const RatMatrix& m);

// All leading minors strictly positive (positive definiteness witness).
bool isPositiveDefinite(const RatMatrix& m);

// Block-diagonal assembly of symmetric blocks.
RatMatrix directSumGram(const std::vector<RatMatrix>& blocks);

// True iff b == p.a.p^T for some simultaneous row/column permutation p;
// the permutation found (image of each index) is written to perm.
bool permutationEquivalent(const RatMatrix& a, const RatMatrix& b, std::vector<std::size_t>& perm);

}  // namespace mwlat
