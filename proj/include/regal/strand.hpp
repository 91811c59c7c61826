#ifndef REGAL_STRAND_HPP
#define REGAL_STRAND_HPP

#include <map>
#include <vector>

#include "regal/groebner.hpp"
#include "regal/linalg.hpp"

namespace regal {

// Matrix with polynomial entries, row-major; the map sends source generator j to
// the column sum(entries(i,j) * target generator i).
class PolyMat {
public:
    PolyMat(RingPtr ring, size_t nrows, size_t ncols);

    const RingPtr& ring() const { return ring_; }
    size_t nrows() const { return nrows_; }
    size_t ncols() const { return ncols_; }

    const SparsePoly& at(size_t i, size_t j) const { return e_[i * ncols_ + j]; }
    void set(size_t i, size_t j, SparsePoly v);

    VecPoly col(size_t j) const;

private:
    RingPtr ring_;
    size_t nrows_, ncols_;
    std::vector<SparsePoly> e_;
};

// Standard monomials of R/<LT(gb)> collected per degree 0..maxdeg, each degree
// ascending degrevlex. These are k-bases of the graded pieces of R/I.
class QuotientBasis {
public:
    QuotientBasis(RingPtr ring, const std::vector<SparsePoly>& gb, int maxdeg);

    const RingPtr& ring() const { return ring_; }
    int maxdeg() const { return maxdeg_; }
    size_t dim(int d) const;
    const std::vector<Monomial>& at_degree(int d) const;
    // Position of a standard monomial within its degree block.
    size_t index_of(const Monomial& m) const;

private:
    RingPtr ring_;
    int maxdeg_;
    std::vector<std::vector<Monomial>> by_deg_;
    std::vector<std::map<Monomial, size_t, DegrevlexLess>> index_;
};

// Dimension of the degree-t piece of the free module with the given generator
// degrees over R/I (whose graded pieces QB describes).
size_t strand_dim(const QuotientBasis& QB, const std::vector<int>& shifts, int t);

// Coordinates of a module element (components NF mod gb) in the degree-t strand
// basis: blocks per generator, each block listing QB monomial coefficients.
std::vector<uint32_t> strand_coords(const QuotientBasis& QB, const std::vector<int>& shifts,
                                    const VecPoly& v, int t);

// The k-matrix of the degree-t strand of the map given by M between free modules
// with generator degrees src_shifts -> tgt_shifts over R/I. Columns are indexed
// by (source generator, standard monomial of complementary degree).
FpMat strand_matrix(const QuotientBasis& QB, const std::vector<SparsePoly>& gb,
                    const std::vector<int>& tgt_shifts, const std::vector<int>& src_shifts,
                    const PolyMat& M, int t);

} // namespace regal

#endif
