#include "regal/linalg.hpp"

#include "regal/error.hpp"

namespace regal {

FpMat FpMat::identity(const PrimeField& F, size_t n) {
    FpMat m(F, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMat FpMat::mul(const FpMat& o) const {
    if (cols_ != o.rows_) throw InvalidArgument("matrix product shape mismatch");
    FpMat r(F_, rows_, o.cols_);
    uint64_t p = F_.characteristic();
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            uint64_t aik = at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                uint64_t v = r.a_[i * o.cols_ + j] + (aik * o.at(k, j)) % p;
                r.a_[i * o.cols_ + j] = static_cast<uint32_t>(v % p);
            }
        }
    }
    return r;
}

FpMat FpMat::transpose() const {
    FpMat r(F_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            r.set(j, i, at(i, j));
    return r;
}

FpMat FpMat::hstack(const FpMat& o) const {
    if (rows_ != o.rows_) throw InvalidArgument("hstack row mismatch");
    FpMat r(F_, rows_, cols_ + o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
        for (size_t j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
    }
    return r;
}

FpMat FpMat::vstack(const FpMat& o) const {
    if (cols_ != o.cols_) throw InvalidArgument("vstack column mismatch");
    FpMat r(F_, rows_ + o.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (size_t i = 0; i < o.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set(rows_ + i, j, o.at(i, j));
    return r;
}

FpMat FpMat::cols_slice(size_t begin, size_t end) const {
    if (begin > end || end > cols_) throw InvalidArgument("cols_slice out of range");
    FpMat r(F_, rows_, end - begin);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = begin; j < end; ++j)
            r.set(i, j - begin, at(i, j));
    return r;
}

FpMat FpMat::rows_slice(size_t begin, size_t end) const {
    if (begin > end || end > rows_) throw InvalidArgument("rows_slice out of range");
    FpMat r(F_, end - begin, cols_);
    for (size_t i = begin; i < end; ++i)
        for (size_t j = 0; j < cols_; ++j)
            r.set(i - begin, j, at(i, j));
    return r;
}

std::vector<size_t> FpMat::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t piv = row;
        while (piv < rows_ && at(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != row)
            for (size_t j = 0; j < cols_; ++j)
                std::swap(a_[piv * cols_ + j], a_[row * cols_ + j]);
        uint32_t inv = F_.inv(at(row, col));
        for (size_t j = col; j < cols_; ++j)
            a_[row * cols_ + j] = F_.mul(a_[row * cols_ + j], inv);
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            uint32_t f = at(i, col);
            if (f == 0) continue;
            for (size_t j = col; j < cols_; ++j)
                a_[i * cols_ + j] = F_.sub(a_[i * cols_ + j], F_.mul(f, a_[row * cols_ + j]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t FpMat::rank() const {
    FpMat tmp = *this;
    return tmp.rref().size();
}

FpMat FpMat::right_kernel() const {
    FpMat tmp = *this;
    std::vector<size_t> pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FpMat ker(F_, cols_, free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        ker.set(fc, k, 1);
        for (size_t r = 0; r < pivots.size(); ++r)
            ker.set(pivots[r], k, F_.neg(tmp.at(r, fc)));
    }
    return ker;
}

bool FpMat::is_zero() const {
    for (uint32_t v : a_)
        if (v != 0) return false;
    return true;
}

std::vector<uint32_t> FpMat::apply(const std::vector<uint32_t>& x) const {
    if (x.size() != cols_) throw InvalidArgument("apply shape mismatch");
    std::vector<uint32_t> y(rows_, 0);
    uint64_t p = F_.characteristic();
    for (size_t i = 0; i < rows_; ++i) {
        uint64_t acc = 0;
        for (size_t j = 0; j < cols_; ++j) {
            acc += static_cast<uint64_t>(at(i, j)) * x[j] % p;
            if (acc >= (uint64_t{1} << 62)) acc %= p;
        }
        y[i] = static_cast<uint32_t>(acc % p);
    }
    return y;
}

size_t span_sum_dim(const FpMat& a, const FpMat& b) {
    return a.hstack(b).rank();
}

FpMat preimage_space(const FpMat& a, const FpMat& b) {
    if (a.rows() != b.rows()) throw InvalidArgument("preimage_space row mismatch");
    // Kernel pairs (x, y) with Ax + By = 0; the x block spans the preimage.
    FpMat ker = a.hstack(b).right_kernel();
    return ker.rows_slice(0, a.cols());
}

bool IncrementalSpan::add(std::vector<uint32_t> v) {
    if (v.size() != n_) throw InvalidArgument("IncrementalSpan vector length mismatch");
    reduce(v);
    size_t piv = n_;
    for (size_t j = 0; j < n_; ++j)
        if (v[j] != 0) { piv = j; break; }
    if (piv == n_) return false;
    uint32_t inv = F_.inv(v[piv]);
    for (size_t j = piv; j < n_; ++j) v[j] = F_.mul(v[j], inv);
    // Back-substitute into existing basis rows to keep reduction cheap.
    for (size_t r = 0; r < basis_.size(); ++r) {
        uint32_t f = basis_[r][piv];
        if (f == 0) continue;
        for (size_t j = piv; j < n_; ++j)
            basis_[r][j] = F_.sub(basis_[r][j], F_.mul(f, v[j]));
    }
    basis_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool IncrementalSpan::contains(std::vector<uint32_t> v) const {
    if (v.size() != n_) throw InvalidArgument("IncrementalSpan vector length mismatch");
    reduce(v);
    for (uint32_t x : v)
        if (x != 0) return false;
    return true;
}

void IncrementalSpan::reduce(std::vector<uint32_t>& v) const {
    // Basis rows are mutually reduced (each row is zero at the others' pivots),
    // so one pass in any order fully reduces v.
    for (size_t r = 0; r < basis_.size(); ++r) {
        uint32_t f = v[pivots_[r]];
        if (f == 0) continue;
        for (size_t j = pivots_[r]; j < n_; ++j)
            v[j] = F_.sub(v[j], F_.mul(f, basis_[r][j]));
    }
}

} // namespace regal
