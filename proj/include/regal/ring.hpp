#ifndef REGAL_RING_HPP
#define REGAL_RING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "regal/groebner.hpp"

namespace regal {

// A standard-graded algebra A = k[x_1..x_n]/I with maximal ideal m = (x_1..x_n).
// Validation guarantees: I homogeneous, every generator of degree >= 2, I != (1).
// GB, dimension and a Hilbert prefix are computed eagerly and never change.
struct RingPresentation {
    RingPtr ring;                        // ambient polynomial ring R
    std::vector<SparsePoly> ideal_gens;  // validated generators of I
    std::vector<SparsePoly> gb;          // reduced GB of I
    int dim = 0;                         // Krull dimension of A
    std::vector<int64_t> hilbert;        // dim_k A_d for d = 0..prefix

    size_t nvars() const { return ring->nvars(); }
    const PrimeField& field() const { return ring->field(); }
    // Normal form mod I: the canonical representative of an element of A.
    SparsePoly nf(const SparsePoly& f) const { return normal_form(f, gb); }
};

// Checks the presentation contract and caches GB/dim/Hilbert data.
RingPresentation validate(RingPtr ring, std::vector<SparsePoly> gens, int hilbert_prefix = 12);

// n = dim_k m/m^2; equals the variable count here and is asserted against the
// Hilbert coefficient h_1.
int embedding_dim(const RingPresentation& A);

// Searches x_1..x_n, then seeded random degree-1 combinations, for g with
// (I : g) = I. Throws SearchExhausted after `attempts` failed candidates.
SparsePoly find_nonzerodivisor(const RingPresentation& A, int attempts = 64,
                               uint64_t seed = 12345);

bool is_nonzerodivisor(const RingPresentation& A, const SparsePoly& g);

// A' = A/gA presented on one variable fewer, plus the data of the quotient map.
struct QuotientResult {
    RingPresentation quotient;
    size_t dropped_var;                   // index in A's variable list
    std::vector<SparsePoly> var_images;   // image in A' of each variable of A

    // Pushes an element of A forward to A' (substitute, then reduce).
    SparsePoly map(const SparsePoly& f) const;
};

// Eliminates the variable carrying the last nonzero coefficient of the linear
// form g; requires g homogeneous of degree 1.
QuotientResult quotient_by(const RingPresentation& A, const SparsePoly& g);

// Ring map R -> target determined by the images of the variables.
SparsePoly substitute(const SparsePoly& f, const RingPtr& target,
                      const std::vector<SparsePoly>& var_images);

} // namespace regal

#endif
