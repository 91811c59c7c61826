#ifndef REGAL_RESOLUTION_HPP
#define REGAL_RESOLUTION_HPP

#include <map>
#include <utility>
#include <vector>

#include "regal/ring.hpp"
#include "regal/strand.hpp"

namespace regal {

// Chain of graded free modules L_0 <- L_1 <- ... over a base A = R/I. shifts[i]
// lists the generator degrees of L_i; diffs[i] is the matrix of
// d_{i+1}: L_{i+1} -> L_i, entries understood mod I. truncated means the step
// limit was hit before a kernel was known to vanish.
struct FreeComplex {
    RingPresentation base;
    std::vector<std::vector<int>> shifts;
    std::vector<PolyMat> diffs;
    bool truncated = false;

    size_t length() const { return diffs.size(); }
    size_t rank(size_t i) const { return shifts[i].size(); }
};

// M = coker(rel): generators with degrees gen_shifts, relations the columns of
// rel. Column degrees are inferred from the entries.
struct ModulePresentation {
    std::vector<int> gen_shifts;
    PolyMat rel;
};

// k = A/m presented by the variables.
ModulePresentation k_presentation(const RingPresentation& A);

// A/(gens): one generator in degree 0, relations the reduced nonzero gens.
ModulePresentation cyclic_presentation(const RingPresentation& A,
                                       const std::vector<SparsePoly>& gens);

// Generators of {v : sum v_b cols_b = 0 over A}, each paired with its degree.
// cols are homogeneous columns of degrees col_shifts inside the free module
// with generator degrees tgt_shifts.
std::vector<std::pair<VecPoly, int>> kernel_mod_ideal(
    const RingPresentation& A, const std::vector<VecPoly>& cols,
    const std::vector<int>& col_shifts, const std::vector<int>& tgt_shifts);

// Minimal free resolution of coker(rel): unit pivots of the presentation are
// eliminated, generator sets pruned degree by degree with the graded Nakayama
// test, then syzygy kernels are pruned the same way step after step. Every
// computed differential lands in m times its target; stops early when a kernel
// vanishes.
FreeComplex minimal_resolution(const RingPresentation& A, const ModulePresentation& M,
                               int max_steps);

// (homological degree i, internal degree j) -> number of degree-j generators of
// L_i in a minimal complex; equals dim Tor_i in degree j.
class BettiTable {
public:
    BettiTable() = default;
    explicit BettiTable(const FreeComplex& cx);

    int64_t entry(int i, int j) const;
    int64_t total(int i) const;
    // Largest homological degree with a computed row; rows past it are zero
    // only when !truncated().
    int max_step() const { return max_step_; }
    bool truncated() const { return truncated_; }
    const std::map<std::pair<int, int>, int64_t>& entries() const { return e_; }

private:
    std::map<std::pair<int, int>, int64_t> e_;
    int max_step_ = 0;
    bool truncated_ = false;
};

// Betti table of k over A.
BettiTable betti(const RingPresentation& A, int max_steps);

struct PdVerdict {
    bool finite;
    int value;  // resolution length when finite, else the bound that was tried
};

// Projective dimension of k over A, certified up to the bound.
PdVerdict pd_finite(const RingPresentation& A, int bound);

// dim Tor^A_p(A/gA, k) per internal degree, read off a minimal resolution of
// A/gA over A computed to max_p steps. Totals 1,1,0,... certify g a
// nonzerodivisor; any other shape is a reportable deviation.
BettiTable tor_ring_change(const RingPresentation& A, const SparsePoly& g, int max_p);

// Structural audit of a computed complex: shapes, gradedness, minimality,
// d after d = 0 mod I, and strand exactness at steps >= 1 for internal degrees
// <= D. Throws InternalInconsistency on any defect.
void verify_resolution(const RingPresentation& A, const FreeComplex& cx, int D);

// dim of coker(d_1) = H_0 per internal degree 0..D.
std::vector<int64_t> coker_dims(const RingPresentation& A, const FreeComplex& cx, int D);

} // namespace regal

#endif
