#ifndef REGAL_MONOMIAL_HPP
#define REGAL_MONOMIAL_HPP

#include <cstdint>
#include <vector>
#include "regal/error.hpp"

namespace regal {

// A monomial in a fixed number of variables: exponent vector plus cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(size_t nvars) : exps_(nvars, 0), degree_(0) {}
    explicit Monomial(std::vector<uint16_t> exps);

    size_t nvars() const { return exps_.size(); }
    uint32_t degree() const { return degree_; }
    uint16_t exp(size_t i) const { return exps_[i]; }
    const std::vector<uint16_t>& exps() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    Monomial mul(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Quotient this/o; caller must ensure o.divides(*this).
    Monomial div(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial var(size_t nvars, size_t i, uint16_t e = 1);

    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

private:
    std::vector<uint16_t> exps_;
    uint32_t degree_ = 0;
};

// Degree-reverse-lex: higher degree wins; on equal degree, scan exponents from the
// last variable and the first position that differs decides, smaller exponent wins.
// Returns negative/zero/positive as a </==/> b.
int degrevlex_cmp(const Monomial& a, const Monomial& b);

struct DegrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return degrevlex_cmp(a, b) < 0;
    }
};

// All monomials of the given total degree in nvars variables, ascending degrevlex.
std::vector<Monomial> monomials_of_degree(size_t nvars, uint32_t d);

} // namespace regal

#endif
