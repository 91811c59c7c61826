#include "regal/ring.hpp"

#include <random>

namespace regal {

RingPresentation validate(RingPtr ring, std::vector<SparsePoly> gens, int hilbert_prefix) {
    if (!ring) throw ContextError("presentation needs a ring context");
    RingPresentation A;
    A.ring = ring;
    for (SparsePoly& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw UnsupportedInput("ideal generator is not homogeneous: " + to_string(g));
        if (g.degree() == 0)
            throw ZeroRingError("ideal contains a unit: " + to_string(g));
        if (g.degree() == 1)
            throw PresentationNotMinimal(
                "degree-1 generator " + to_string(g) + "; eliminate the variable first");
        A.ideal_gens.push_back(std::move(g));
    }
    A.gb = groebner_basis(A.ideal_gens);
    A.dim = krull_dim(ring, A.gb);
    A.hilbert = hilbert_function(ring, A.gb, hilbert_prefix);
    if (ring->nvars() > 0 &&
        A.hilbert.size() > 1 && A.hilbert[1] != static_cast<int64_t>(ring->nvars()))
        throw InternalInconsistency("h_1 does not equal the variable count");
    return A;
}

int embedding_dim(const RingPresentation& A) {
    // Generators of I live in degree >= 2, so the x_i are a basis of m/m^2.
    return static_cast<int>(A.nvars());
}

bool is_nonzerodivisor(const RingPresentation& A, const SparsePoly& g) {
    if (g.is_zero()) return false;
    std::vector<SparsePoly> q = ideal_quotient(A.gb, g);
    // Reduced GBs are canonical, so ideal equality is list equality.
    if (q.size() != A.gb.size()) return false;
    for (size_t i = 0; i < q.size(); ++i)
        if (!(q[i] == A.gb[i])) return false;
    return true;
}

SparsePoly find_nonzerodivisor(const RingPresentation& A, int attempts, uint64_t seed) {
    size_t n = A.nvars();
    if (n == 0)
        throw SearchExhausted("ring has no degree-1 elements");
    int tried = 0;
    for (size_t i = 0; i < n && tried < attempts; ++i, ++tried) {
        SparsePoly g = SparsePoly::variable(A.ring, i);
        if (is_nonzerodivisor(A, g)) return g;
    }
    std::mt19937_64 rng(seed);
    uint32_t p = A.field().characteristic();
    std::uniform_int_distribution<uint32_t> coeff(0, p - 1);
    while (tried < attempts) {
        std::vector<Term> terms;
        for (size_t i = 0; i < n; ++i) {
            uint32_t c = coeff(rng);
            if (c != 0) terms.push_back({c, Monomial::var(n, i)});
        }
        SparsePoly g(A.ring, std::move(terms));
        if (g.is_zero()) continue;
        ++tried;
        if (is_nonzerodivisor(A, g)) return g;
    }
    throw SearchExhausted("no degree-1 nonzerodivisor found in " +
                          std::to_string(attempts) + " attempts");
}

SparsePoly substitute(const SparsePoly& f, const RingPtr& target,
                      const std::vector<SparsePoly>& var_images) {
    if (!f.ring()) throw ContextError("substitute: element lacks ring context");
    if (var_images.size() != f.ring()->nvars())
        throw InvalidArgument("substitute: one image per variable required");
    SparsePoly acc = SparsePoly::zero(target);
    for (const Term& t : f.terms()) {
        SparsePoly prod = SparsePoly::constant(target, t.coeff);
        for (size_t v = 0; v < var_images.size(); ++v)
            for (uint16_t e = 0; e < t.mono.exp(v); ++e)
                prod = prod.mul(var_images[v]);
        acc = acc.add(prod);
    }
    return acc;
}

SparsePoly QuotientResult::map(const SparsePoly& f) const {
    return quotient.nf(substitute(f, quotient.ring, var_images));
}

QuotientResult quotient_by(const RingPresentation& A, const SparsePoly& g) {
    if (g.is_zero() || !g.is_homogeneous() || g.degree() != 1)
        throw InvalidArgument("quotient_by needs a homogeneous degree-1 element");
    size_t n = A.nvars();

    // The variable with the last nonzero coefficient is eliminated.
    size_t piv = n;
    uint32_t piv_coeff = 0;
    for (const Term& t : g.terms()) {
        for (size_t v = 0; v < n; ++v) {
            if (t.mono.exp(v) > 0 && (piv == n || v > piv)) {
                piv = v;
                piv_coeff = t.coeff;
            }
        }
    }
    if (piv == n) throw InvalidArgument("quotient_by: no variable found in g");

    std::vector<std::string> names;
    for (size_t v = 0; v < n; ++v)
        if (v != piv) names.push_back(A.ring->var_name(v));
    RingPtr target = std::make_shared<PolyRing>(A.field().characteristic(), names);

    // x_piv maps to -c^{-1} * (the rest of g); the others map across in order.
    std::vector<SparsePoly> images(n, SparsePoly::zero(target));
    size_t out = 0;
    for (size_t v = 0; v < n; ++v)
        if (v != piv) images[v] = SparsePoly::variable(target, out++);
    SparsePoly rest = SparsePoly::zero(target);
    uint32_t scale = A.field().neg(A.field().inv(piv_coeff));
    for (const Term& t : g.terms()) {
        for (size_t v = 0; v < n; ++v)
            if (t.mono.exp(v) > 0 && v != piv)
                rest = rest.add(images[v].scale(A.field().mul(scale, t.coeff)));
    }
    images[piv] = rest;

    std::vector<SparsePoly> new_gens;
    for (const SparsePoly& h : A.ideal_gens) {
        SparsePoly s = substitute(h, target, images);
        if (!s.is_zero()) new_gens.push_back(s);
    }
    QuotientResult qr{validate(target, std::move(new_gens),
                               static_cast<int>(A.hilbert.size()) - 1),
                      piv, std::move(images)};
    return qr;
}

} // namespace regal
