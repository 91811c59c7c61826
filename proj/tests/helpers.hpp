#ifndef REGAL_TEST_HELPERS_HPP
#define REGAL_TEST_HELPERS_HPP

#include <memory>
#include <string>
#include <vector>

#include "regal/parse.hpp"
#include "regal/ring.hpp"

namespace regal_test {

inline regal::RingPtr poly_ring(std::vector<std::string> vars, uint32_t p = 32003) {
    return std::make_shared<const regal::PolyRing>(p, std::move(vars));
}

inline regal::RingPresentation ring(std::vector<std::string> vars, const std::string& ideal,
                                    uint32_t p = 32003) {
    regal::RingPtr R = poly_ring(std::move(vars), p);
    std::vector<regal::SparsePoly> gens;
    if (!ideal.empty()) gens = regal::parse_poly_list(R, ideal);
    return regal::validate(R, gens);
}

} // namespace regal_test

#endif
