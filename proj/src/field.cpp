#include "regal/field.hpp"

namespace regal {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint32_t d = 3; static_cast<uint64_t>(d) * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

} // namespace

PrimeField::PrimeField(uint32_t p) : p_(p) {
    if (p >= (1u << 31))
        throw InvalidArgument("field characteristic too large: " + std::to_string(p));
    if (!is_prime(p))
        throw InvalidArgument("field characteristic must be prime, got " + std::to_string(p));
}

uint32_t PrimeField::inv(uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
    // Extended Euclid on (a, p); the Bezout coefficient of a is the inverse.
    int64_t r0 = a, r1 = p_;
    int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return reduce(s0);
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
    uint32_t result = 1 % p_;
    uint32_t base = a % p_;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

} // namespace regal
