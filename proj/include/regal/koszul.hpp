#ifndef REGAL_KOSZUL_HPP
#define REGAL_KOSZUL_HPP

#include "regal/resolution.hpp"

namespace regal {

// K(f_1..f_r; A): rank binom(r,i) in exterior degree i, basis e_S indexed by
// the size-i subsets in ascending lexicographic order, differential
// d(e_S) = sum_j (-1)^{j+1} f_{S[j]} e_{S \ S[j]}.
struct KoszulComplex {
    RingPresentation base;
    std::vector<SparsePoly> elements;
    FreeComplex complex;
};

// elems must be nonzero homogeneous; d compose d = 0 is checked on the result.
KoszulComplex koszul(const RingPresentation& A, const std::vector<SparsePoly>& elems);

// dim_k H_i(K tensor A/J) for i = 0..r: strand ranks per internal degree <= D,
// summed. An H_i judged zero at D is recomputed at D+4 before the verdict
// stands. Empty coeff_ideal means coefficients in A itself.
std::vector<int64_t> koszul_homology_dims(const KoszulComplex& K, int D,
                                          const std::vector<SparsePoly>& coeff_ideal = {});

// depth of M = A/module_ideal over A: n minus the top index with
// H_i(K(x_1..x_n; M)) nonzero. The zero module is rejected.
int depth(const RingPresentation& A, const std::vector<SparsePoly>& module_ideal = {},
          int D = 12);

struct ABReport {
    int pd;
    int depth;
    int gldh;
    bool holds;
};

// pd M + depth M = gldh A for M = A/module_ideal over a regular base; bound < 0
// means 2n+4. Non-regular A is a precondition violation.
ABReport ab_check(const RingPresentation& A, const std::vector<SparsePoly>& module_ideal,
                  int bound = -1, int D = 12);

} // namespace regal

#endif
