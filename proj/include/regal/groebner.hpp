#ifndef REGAL_GROEBNER_HPP
#define REGAL_GROEBNER_HPP

#include <optional>
#include <vector>

#include "regal/poly.hpp"

namespace regal {

// Element of a free module R^s: a fixed-length column of polynomials.
class VecPoly {
public:
    VecPoly(RingPtr ring, size_t ncomps);
    explicit VecPoly(std::vector<SparsePoly> comps);

    const RingPtr& ring() const { return ring_; }
    size_t ncomps() const { return comps_.size(); }
    const SparsePoly& comp(size_t i) const { return comps_[i]; }
    SparsePoly& comp(size_t i) { return comps_[i]; }
    bool is_zero() const;

    VecPoly add(const VecPoly& o) const;
    VecPoly sub(const VecPoly& o) const;
    VecPoly neg() const;
    VecPoly scale(uint32_t c) const;
    VecPoly mul_term(uint32_t c, const Monomial& m) const;
    VecPoly mul(const SparsePoly& f) const;

    bool operator==(const VecPoly& o) const { return comps_ == o.comps_; }

private:
    RingPtr ring_;
    std::vector<SparsePoly> comps_;
};

// Module monomial order: components before `senior` outrank the rest; inside a
// block, shifted degree decides, then smaller component, then degrevlex.
struct ModuleOrder {
    size_t ncomps = 1;
    size_t senior = 0;
    std::vector<int> shifts;  // one per component; empty means all zero

    int shift(size_t c) const { return shifts.empty() ? 0 : shifts[c]; }
    // <0 / 0 / >0 as (ca,ma) is smaller / equal / bigger than (cb,mb).
    int cmp(size_t ca, const Monomial& ma, size_t cb, const Monomial& mb) const;
};

struct ModTerm {
    uint32_t coeff;
    size_t comp;
    Monomial mono;
};

// Largest term of v under the order; v must be nonzero.
ModTerm module_lead(const VecPoly& v, const ModuleOrder& ord);

// Full normal form: no term of the result is divisible (same component) by any
// leading term of G.
VecPoly module_normal_form(const VecPoly& f, const std::vector<VecPoly>& G,
                           const ModuleOrder& ord);

// Reduced Groebner basis of the submodule generated by gens: monic, mutually
// reduced, sorted by descending lead. Deterministic for a fixed input order.
std::vector<VecPoly> module_gb(std::vector<VecPoly> gens, const ModuleOrder& ord);

// Rank-1 wrappers for ideals (degrevlex).
std::vector<SparsePoly> groebner_basis(const std::vector<SparsePoly>& gens);
SparsePoly normal_form(const SparsePoly& f, const std::vector<SparsePoly>& G);
// As normal_form, and writes cofactors with f = sum cof[i]*G[i] + result.
SparsePoly normal_form_cofactors(const SparsePoly& f, const std::vector<SparsePoly>& G,
                                 std::vector<SparsePoly>& cof);

// Generators of {a in R^r : sum a_i cols_i = 0}, the kernel of the map
// R^r -> R^s given by the columns. Computed on the augmented module R^(s+r)
// with the target block senior; the junior-only part of its reduced GB is a
// reduced GB of the syzygy module. target_shifts sizes the grading of R^s.
std::vector<VecPoly> syzygies(const std::vector<VecPoly>& cols,
                              const std::vector<int>& target_shifts);

// Reduced GB of (I : g) = {f : f*g in I}; gb_I must be a GB of I.
std::vector<SparsePoly> ideal_quotient(const std::vector<SparsePoly>& gb_I,
                                       const SparsePoly& g);

// dim_k (R/LT(gb))_d for d = 0..D, by inclusion-exclusion over the minimal
// monomial generators (the leads of the reduced GB).
std::vector<int64_t> hilbert_function(const RingPtr& ring,
                                      const std::vector<SparsePoly>& gb, int D);

// Krull dimension of R/I from the leading-term ideal: the largest variable
// subset supporting no lead monomial. Unit ideal is rejected.
int krull_dim(const RingPtr& ring, const std::vector<SparsePoly>& gb);

} // namespace regal

#endif
