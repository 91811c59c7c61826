#ifndef REGAL_POLY_HPP
#define REGAL_POLY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "regal/field.hpp"
#include "regal/monomial.hpp"

namespace regal {

// The ambient polynomial ring F_p[x_1..x_n] with named variables.
class PolyRing {
public:
    PolyRing(uint32_t p, std::vector<std::string> var_names);

    const PrimeField& field() const { return field_; }
    size_t nvars() const { return var_names_.size(); }
    const std::vector<std::string>& var_names() const { return var_names_; }
    const std::string& var_name(size_t i) const { return var_names_[i]; }

    bool same_as(const PolyRing& o) const {
        return field_ == o.field_ && var_names_ == o.var_names_;
    }

private:
    PrimeField field_;
    std::vector<std::string> var_names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
    uint32_t coeff = 0;
    Monomial mono;
};

// A polynomial as a canonical term list: coefficients nonzero, monomials strictly
// descending in degrevlex. The zero polynomial has no terms.
class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(RingPtr ring) : ring_(std::move(ring)) {}
    // Builds the canonical form from an arbitrary term list (merges, drops zeros).
    SparsePoly(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    const Term& lead() const;
    const Monomial& lead_mono() const { return lead().mono; }
    uint32_t lead_coeff() const { return lead().coeff; }

    // Total degree of the lead term; -1 for zero.
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree()); }
    bool is_homogeneous() const;
    uint32_t constant_term() const;

    SparsePoly add(const SparsePoly& o) const;
    SparsePoly sub(const SparsePoly& o) const;
    SparsePoly mul(const SparsePoly& o) const;
    SparsePoly scale(uint32_t c) const;
    SparsePoly neg() const;
    SparsePoly mul_term(uint32_t c, const Monomial& m) const;
    SparsePoly monic() const;

    bool operator==(const SparsePoly& o) const;
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    static SparsePoly zero(RingPtr ring) { return SparsePoly(std::move(ring)); }
    static SparsePoly constant(RingPtr ring, uint32_t c);
    static SparsePoly variable(RingPtr ring, size_t i, uint16_t e = 1);
    static SparsePoly from_term(RingPtr ring, uint32_t c, Monomial m);

private:
    void check_context(const SparsePoly& o) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);

// Renders with explicit '*' and '^', terms in descending order: "x^2*y - 3*z + 1".
std::string to_string(const SparsePoly& p);
std::string to_string(const Monomial& m, const PolyRing& ring);

} // namespace regal

#endif
