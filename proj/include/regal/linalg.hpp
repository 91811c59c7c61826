#ifndef REGAL_LINALG_HPP
#define REGAL_LINALG_HPP

#include <cstdint>
#include <vector>

#include "regal/field.hpp"

namespace regal {

// Dense matrix over F_p, row-major. Subspaces of F_p^n are passed around as
// matrices whose columns span them.
class FpMat {
public:
    FpMat(const PrimeField& F, size_t rows, size_t cols)
        : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const PrimeField& field() const { return F_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    void set(size_t i, size_t j, uint32_t v) { a_[i * cols_ + j] = v % F_.characteristic(); }

    static FpMat identity(const PrimeField& F, size_t n);

    FpMat mul(const FpMat& o) const;
    FpMat transpose() const;
    FpMat hstack(const FpMat& o) const;
    FpMat vstack(const FpMat& o) const;
    FpMat cols_slice(size_t begin, size_t end) const;
    FpMat rows_slice(size_t begin, size_t end) const;

    // In-place reduced row echelon form; returns the pivot column indices.
    std::vector<size_t> rref();
    size_t rank() const;
    // Basis of {x : Ax = 0} as columns.
    FpMat right_kernel() const;

    bool is_zero() const;

    std::vector<uint32_t> apply(const std::vector<uint32_t>& x) const;

private:
    PrimeField F_;
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

// dim(colspan A + colspan B); matrices must have equal row counts.
size_t span_sum_dim(const FpMat& a, const FpMat& b);

// Columns spanning {x : Ax in colspan(B)}.
FpMat preimage_space(const FpMat& a, const FpMat& b);

// Incremental row-space builder: add vectors one at a time, learn independence.
class IncrementalSpan {
public:
    IncrementalSpan(const PrimeField& F, size_t n) : F_(F), n_(n) {}

    // Returns true and absorbs v if v was outside the current span.
    bool add(std::vector<uint32_t> v);
    bool contains(std::vector<uint32_t> v) const;
    size_t dim() const { return basis_.size(); }

private:
    void reduce(std::vector<uint32_t>& v) const;

    PrimeField F_;
    size_t n_;
    std::vector<std::vector<uint32_t>> basis_;  // reduced, pivot columns distinct
    std::vector<size_t> pivots_;
};

} // namespace regal

#endif
