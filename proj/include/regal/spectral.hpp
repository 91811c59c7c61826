#ifndef REGAL_SPECTRAL_HPP
#define REGAL_SPECTRAL_HPP

#include "regal/resolution.hpp"

namespace regal {

// A filtered complex of finite-dimensional F_p spaces: d[s]: V_s -> V_{s-1}
// with d*d = 0, and a decreasing filtration F^0 >= F^1 >= ... with
// F^0 = everything, F^{pmax+1} = 0, d(F^phi) <= F^phi. Subspaces are column
// spans; filt[s][phi] is the basis of F^phi inside V_s.
struct FilteredStrand {
    PrimeField field;
    std::vector<size_t> dims;
    std::vector<FpMat> d;
    std::vector<std::vector<FpMat>> filt;
    int pmax = 0;
};

// Numerically asserts every structural invariant above.
void check_strand(const FilteredStrand& F);

struct PageEntry {
    int r, p, q;
    int64_t dim;
};

// dim E^p_r at total degree p+q: Z^p_r = {x in F^p : dx in F^{p+r}} modulo
// d Z^{p-r+1}_{r-1} (from one total degree up) + Z^{p+1}_{r-1}. Indices clamp:
// phi <= 0 means the whole space, phi > pmax means zero.
PageEntry page(const FilteredStrand& F, int r, int p, int q);

// Rank of the differential E^p_r -> E^{p+r}_r induced by d at total degree p+q.
int64_t page_diff_rank(const FilteredStrand& F, int r, int p, int q);

// Which index of the tensor double complex drives the filtration level.
enum class CorFiltration { ByQ, ByP };

// The change-of-rings double complex C_{pq} = P_p (x) Q_q for A -> A' = A/gA,
// P and Q the minimal residue-field resolutions over A and A', as free
// A'-modules truncated to total degree <= window+2, cut into graded strands.
// ByQ filters by Q-index (level pmax - q; the page-2 differential runs
// (p,q) -> (p+1,q-2)); ByP filters by P-index (level pmax - p).
struct CorComplex {
    QuotientResult target;
    std::vector<FilteredStrand> strands;  // index = internal degree 0..D
    int window = 0;
    int pmax = 0;
    CorFiltration filtration = CorFiltration::ByQ;
    FreeComplex P, Q;
};

// Requires g a degree-1 nonzerodivisor. Throws TruncationError when D cannot
// hold the window's graded content; the error carries the minimal degree.
CorComplex cor_double_complex(const RingPresentation& A, const SparsePoly& g, int window,
                              int D, CorFiltration filt = CorFiltration::ByQ);

// dim E_r at double-complex cell (p, q), summed over internal degrees.
int64_t cor_page_dim(const CorComplex& C, int r, int p, int q);

// Rank of the page-r differential out of cell (p, q), summed over strands.
int64_t cor_diff_rank(const CorComplex& C, int r, int p, int q);

struct CorE2 {
    std::vector<int64_t> p0, p1;  // dim E2 per q = 0..window in columns 0 and 1
};

// E2 two ways: from the filtered strands and directly as dim Tor over A'.
// Disagreement or a nonzero entry outside columns 0,1 raises
// InternalInconsistency. Requires the ByQ filtration.
CorE2 cor_e2(const CorComplex& C);
CorE2 cor_e2(const RingPresentation& A, const SparsePoly& g, int window, int D = 12);

struct D2Report {
    std::vector<int64_t> ranks;  // per q = 0..window, out of cell (0, q)
    bool all_zero = true;
};

D2Report d2_vanishing_check(const CorComplex& C);
D2Report d2_vanishing_check(const RingPresentation& A, const SparsePoly& g, int window,
                            int D = 12);

struct AbutmentRow {
    int n;
    int64_t lhs, rhs;  // dim Tor^A_n(k,k) vs sum of stable page entries
    bool equal;
};

std::vector<AbutmentRow> abutment_check(const CorComplex& C);
std::vector<AbutmentRow> abutment_check(const RingPresentation& A, const SparsePoly& g,
                                        int window, int D = 12);

} // namespace regal

#endif
