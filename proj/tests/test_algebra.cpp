#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "regal/error.hpp"
#include "regal/monomial.hpp"
#include "regal/parse.hpp"
#include "regal/poly.hpp"

#include "helpers.hpp"

using namespace regal;
using regal_test::poly_ring;

TEST_CASE("prime field arithmetic") {
    PrimeField F(32003);
    CHECK(F.characteristic() == 32003u);
    CHECK(F.add(32000, 5) == 2u);
    CHECK(F.sub(2, 5) == 32000u);
    CHECK(F.neg(0) == 0u);
    CHECK(F.mul(F.inv(7), 7) == 1u);
    CHECK(F.pow(2, 15) == 32768u % 32003u);
    CHECK(F.div(10, 5) == 2u);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        uint32_t a = static_cast<uint32_t>(rng() % 32002) + 1;
        CHECK(F.mul(a, F.inv(a)) == 1u);
        CHECK(F.pow(a, 32002) == 1u);
    }
    CHECK_THROWS_AS(F.inv(0), DivisionByZero);
    CHECK_THROWS_AS(PrimeField(6), InvalidArgument);
    CHECK_THROWS_AS(PrimeField(1), InvalidArgument);
}

TEST_CASE("small characteristic") {
    PrimeField F(2);
    CHECK(F.add(1, 1) == 0u);
    CHECK(F.inv(1) == 1u);
}

TEST_CASE("monomial operations") {
    Monomial x = Monomial::var(3, 0), y = Monomial::var(3, 1), z = Monomial::var(3, 2);
    Monomial xy = x.mul(y);
    CHECK(xy.degree() == 2u);
    CHECK(xy.exp(0) == 1u);
    CHECK(xy.exp(2) == 0u);
    CHECK(x.divides(xy));
    CHECK(!z.divides(xy));
    CHECK(xy.div(x) == y);
    CHECK(Monomial::lcm(x, y) == xy);
    CHECK(x.coprime(z));
    CHECK(!xy.coprime(y));
    CHECK(Monomial(3).is_one());
}

TEST_CASE("degrevlex order") {
    auto m = [](uint16_t a, uint16_t b, uint16_t c) {
        return Monomial(std::vector<uint16_t>{a, b, c});
    };
    // degree first
    CHECK(degrevlex_cmp(m(2, 0, 0), m(1, 0, 0)) > 0);
    // within degree 2: x^2 > xy > y^2 > xz > yz > z^2
    std::vector<Monomial> expect = {m(2, 0, 0), m(1, 1, 0), m(0, 2, 0),
                                    m(1, 0, 1), m(0, 1, 1), m(0, 0, 2)};
    for (size_t i = 0; i + 1 < expect.size(); ++i)
        CHECK(degrevlex_cmp(expect[i], expect[i + 1]) > 0);

    std::vector<Monomial> all = monomials_of_degree(3, 2);
    CHECK(all.size() == 6);
    std::sort(all.begin(), all.end(), DegrevlexLess{});
    std::reverse(all.begin(), all.end());
    for (size_t i = 0; i < 6; ++i) CHECK(all[i] == expect[i]);

    CHECK(monomials_of_degree(2, 5).size() == 6);
    CHECK(monomials_of_degree(1, 9).size() == 1);
    CHECK(monomials_of_degree(3, 0).size() == 1);
}

TEST_CASE("polynomial arithmetic and parsing") {
    RingPtr R = poly_ring({"x", "y", "z"});
    SparsePoly f = parse_poly(R, "x^2 + 2*x*y - z^2");
    CHECK(f.degree() == 2);
    CHECK(f.is_homogeneous());
    CHECK(f.terms().size() == 3);
    CHECK(to_string(f.lead_mono(), *R) == "x^2");

    SparsePoly g = parse_poly(R, "x - y");
    SparsePoly h = f.mul(g);
    CHECK(h.degree() == 3);
    CHECK(h == parse_poly(R, "x^3 + x^2*y - 2*x*y^2 - x*z^2 + y*z^2"));
    CHECK(f.mul(g) == g.mul(f));
    CHECK(f.add(g).sub(g) == f);
    CHECK(f.sub(f).is_zero());
    CHECK(f.neg().add(f).is_zero());
    CHECK(f.scale(0).is_zero());

    SparsePoly one = SparsePoly::constant(R, 1);
    CHECK(f.mul(one) == f);
    CHECK(parse_poly(R, "x + y - x - y").is_zero());
    CHECK(parse_poly(R, "3 - 3").is_zero());
    CHECK(!parse_poly(R, "x + 1").is_homogeneous());
    CHECK(parse_poly(R, "0").is_zero());
    CHECK(SparsePoly::zero(R).degree() == -1);

    // canonical printing parses back to the same element
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        SparsePoly r = SparsePoly::zero(R);
        for (int t = 0; t < 4; ++t) {
            Monomial mono(std::vector<uint16_t>{static_cast<uint16_t>(rng() % 3),
                                                static_cast<uint16_t>(rng() % 3),
                                                static_cast<uint16_t>(rng() % 3)});
            r = r.add(SparsePoly::from_term(R, static_cast<uint32_t>(rng() % 32003), mono));
        }
        CHECK(parse_poly(R, to_string(r)) == r);
    }
}

TEST_CASE("parser rejects malformed input with positions") {
    RingPtr R = poly_ring({"x", "y"});
    CHECK_THROWS_AS(parse_poly(R, "x + w"), ParseError);
    CHECK_THROWS_AS(parse_poly(R, "x +"), ParseError);
    CHECK_THROWS_AS(parse_poly(R, "x ^ y"), ParseError);
    CHECK_THROWS_AS(parse_poly(R, "x $ y"), ParseError);
    try {
        parse_poly(R, "x +\n* y");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 1);
    }
}

TEST_CASE("context mixing is rejected") {
    RingPtr R1 = poly_ring({"x"});
    RingPtr R2 = poly_ring({"t"});
    SparsePoly a = parse_poly(R1, "x");
    SparsePoly b = parse_poly(R2, "t");
    CHECK_THROWS_AS(a.add(b), ContextError);
    // same characteristic and names is the same ring, object identity aside
    RingPtr R3 = poly_ring({"x"});
    CHECK(parse_poly(R1, "x").add(parse_poly(R3, "x")) == parse_poly(R1, "2*x"));
}
