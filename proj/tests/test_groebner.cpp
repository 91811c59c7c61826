#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "regal/error.hpp"
#include "regal/groebner.hpp"
#include "regal/strand.hpp"

#include "helpers.hpp"

using namespace regal;
using regal_test::poly_ring;

namespace {

SparsePoly rand_homog(const RingPtr& R, int deg, std::mt19937_64& rng) {
    std::vector<Monomial> ms = monomials_of_degree(R->nvars(), deg);
    SparsePoly f = SparsePoly::zero(R);
    for (const Monomial& m : ms)
        if (rng() % 2)
            f = f.add(SparsePoly::from_term(R, static_cast<uint32_t>(rng() % 32003), m));
    return f;
}

SparsePoly spoly(const SparsePoly& f, const SparsePoly& g) {
    Monomial l = Monomial::lcm(f.lead_mono(), g.lead_mono());
    const PrimeField& F = f.ring()->field();
    SparsePoly a = f.mul_term(F.inv(f.lead_coeff()), l.div(f.lead_mono()));
    SparsePoly b = g.mul_term(F.inv(g.lead_coeff()), l.div(g.lead_mono()));
    return a.sub(b);
}

} // namespace

TEST_CASE("twisted cubic basis") {
    RingPtr R = poly_ring({"x", "y", "z"});
    std::vector<SparsePoly> gens = parse_poly_list(R, "x^2 - y, x^3 - z");
    std::vector<SparsePoly> gb = groebner_basis(gens);
    std::vector<SparsePoly> expect = parse_poly_list(R, "x^2 - y, x*y - z, y^2 - x*z");
    REQUIRE(gb.size() == 3);
    for (size_t i = 0; i < 3; ++i) CHECK(gb[i] == expect[i]);
}

TEST_CASE("groebner basis certificates") {
    RingPtr R = poly_ring({"x", "y", "z"});
    std::mt19937_64 rng(31);
    for (int it = 0; it < 25; ++it) {
        std::vector<SparsePoly> gens;
        int ngens = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < ngens; ++i) {
            SparsePoly f = rand_homog(R, 2 + static_cast<int>(rng() % 2), rng);
            if (!f.is_zero()) gens.push_back(f);
        }
        if (gens.empty()) continue;
        std::vector<SparsePoly> gb = groebner_basis(gens);

        // closure: every S-polynomial reduces to zero
        for (size_t i = 0; i < gb.size(); ++i)
            for (size_t j = i + 1; j < gb.size(); ++j)
                CHECK(normal_form(spoly(gb[i], gb[j]), gb).is_zero());

        // the input lies in the span, with an explicit cofactor certificate
        for (const SparsePoly& g : gens) {
            std::vector<SparsePoly> cof;
            SparsePoly rem = normal_form_cofactors(g, gb, cof);
            CHECK(rem.is_zero());
            SparsePoly acc = SparsePoly::zero(R);
            for (size_t i = 0; i < gb.size(); ++i) acc = acc.add(cof[i].mul(gb[i]));
            CHECK(acc == g);
        }

        // reduced: monic leads, no term divisible by another lead
        for (size_t i = 0; i < gb.size(); ++i) {
            CHECK(gb[i].lead_coeff() == 1u);
            for (size_t j = 0; j < gb.size(); ++j) {
                if (i == j) continue;
                for (const Term& t : gb[i].terms())
                    CHECK(!gb[j].lead_mono().divides(t.mono));
            }
        }

        // canonical: recomputing from the basis, or a shuffle of the input,
        // gives the same list
        std::vector<SparsePoly> again = groebner_basis(gb);
        REQUIRE(again.size() == gb.size());
        for (size_t i = 0; i < gb.size(); ++i) CHECK(again[i] == gb[i]);
        std::vector<SparsePoly> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        std::vector<SparsePoly> gb2 = groebner_basis(shuffled);
        REQUIRE(gb2.size() == gb.size());
        for (size_t i = 0; i < gb.size(); ++i) CHECK(gb2[i] == gb[i]);

        // membership: random combinations reduce to zero; normal form is
        // idempotent and linear
        for (int t = 0; t < 3; ++t) {
            SparsePoly comb = SparsePoly::zero(R);
            for (const SparsePoly& g : gens) comb = comb.add(g.mul(rand_homog(R, 1, rng)));
            CHECK(normal_form(comb, gb).is_zero());
        }
        SparsePoly f = rand_homog(R, 3, rng);
        SparsePoly nf = normal_form(f, gb);
        CHECK(normal_form(nf, gb) == nf);
        SparsePoly h = rand_homog(R, 3, rng);
        CHECK(normal_form(f.add(h), gb) == nf.add(normal_form(h, gb)));
        CHECK(normal_form(f.mul(h), gb) == normal_form(nf.mul(normal_form(h, gb)), gb));
    }
}

TEST_CASE("module order") {
    ModuleOrder ord{3, 1, {0, 2, 0}};
    Monomial one(2), x = Monomial::var(2, 0), x3 = Monomial::var(2, 0, 3);
    // senior block (component 0) beats the rest regardless of degree
    CHECK(ord.cmp(0, one, 1, x3) > 0);
    // junior block: shifted degree decides; component 1 carries shift 2
    CHECK(ord.cmp(1, x, 2, x) > 0);   // 1+2 vs 1+0
    CHECK(ord.cmp(2, x3, 1, one) > 0);  // 3 vs 2
    // tie on shifted degree: smaller component wins
    CHECK(ord.cmp(1, one, 2, Monomial::var(2, 0, 2)) > 0);
    CHECK(ord.cmp(2, x, 2, Monomial::var(2, 1)) > 0);  // degrevlex last
}

TEST_CASE("syzygies vanish and have the right strand rank") {
    RingPtr R = poly_ring({"x", "y", "z"});
    std::mt19937_64 rng(41);
    for (int it = 0; it < 12; ++it) {
        std::vector<VecPoly> cols;
        size_t r = 2 + rng() % 2;
        std::vector<int> degs;
        for (size_t j = 0; j < r; ++j) {
            SparsePoly f = SparsePoly::zero(R);
            while (f.is_zero()) f = rand_homog(R, 2, rng);
            cols.push_back(VecPoly({f}));
            degs.push_back(2);
        }
        std::vector<VecPoly> syz = syzygies(cols, {0});
        for (const VecPoly& s : syz) {
            REQUIRE(s.ncomps() == r);
            SparsePoly acc = SparsePoly::zero(R);
            for (size_t j = 0; j < r; ++j) acc = acc.add(s.comp(j).mul(cols[j].comp(0)));
            CHECK(acc.is_zero());
        }
        // independent check in one strand: syzygies of degree t span the
        // kernel of the coefficient matrix there
        QuotientBasis QB(R, {}, 8);
        for (int t = 4; t <= 6; ++t) {
            PolyMat M(R, 1, r);
            for (size_t j = 0; j < r; ++j) M.set(0, j, cols[j].comp(0));
            FpMat strand = strand_matrix(QB, {}, {0}, degs, M, t);
            size_t want = strand.right_kernel().rank();
            // span of the syzygy strand
            std::vector<int> sdegs;
            FpMat got(R->field(), strand_dim(QB, degs, t), 0);
            for (const VecPoly& s : syz) {
                int sd = -1;
                for (size_t j = 0; j < r; ++j)
                    if (!s.comp(j).is_zero()) sd = s.comp(j).degree() + degs[j];
                if (sd < 0 || sd > t) continue;
                // multiply by every monomial bringing it to degree t
                for (const Monomial& m : monomials_of_degree(R->nvars(), t - sd)) {
                    VecPoly sm = s.mul_term(1, m);
                    std::vector<uint32_t> coords = strand_coords(QB, degs, sm, t);
                    FpMat col(R->field(), coords.size(), 1);
                    for (size_t i = 0; i < coords.size(); ++i) col.set(i, 0, coords[i]);
                    got = got.hstack(col);
                }
            }
            CHECK(got.rank() == want);
        }
    }
}

TEST_CASE("ideal quotient") {
    RingPtr R = poly_ring({"x", "y"});
    std::vector<SparsePoly> gb = groebner_basis(parse_poly_list(R, "x*y"));
    // (xy : x) = (y)
    std::vector<SparsePoly> q = ideal_quotient(gb, parse_poly(R, "x"));
    REQUIRE(q.size() == 1);
    CHECK(q[0] == parse_poly(R, "y"));
    // (xy : x+y) = (xy) since x+y is a nonzerodivisor
    std::vector<SparsePoly> q2 = ideal_quotient(gb, parse_poly(R, "x + y"));
    REQUIRE(q2.size() == 1);
    CHECK(q2[0] == parse_poly(R, "x*y"));
    // quotient by an element of the ideal is everything
    std::vector<SparsePoly> q3 = ideal_quotient(gb, parse_poly(R, "x*y"));
    REQUIRE(q3.size() == 1);
    CHECK(q3[0] == SparsePoly::constant(R, 1));

    // (I : g)*g lies in I, randomized
    std::mt19937_64 rng(51);
    RingPtr R3 = poly_ring({"x", "y", "z"});
    for (int it = 0; it < 10; ++it) {
        SparsePoly a = rand_homog(R3, 2, rng), b = rand_homog(R3, 2, rng);
        if (a.is_zero() || b.is_zero()) continue;
        std::vector<SparsePoly> gb3 = groebner_basis({a, b});
        if (gb3.size() == 1 && gb3[0].degree() == 0) continue;
        SparsePoly g = rand_homog(R3, 1, rng);
        if (g.is_zero()) continue;
        for (const SparsePoly& f : ideal_quotient(gb3, g))
            CHECK(normal_form(f.mul(g), gb3).is_zero());
    }
}

TEST_CASE("hilbert function and krull dimension") {
    RingPtr R2 = poly_ring({"x", "y"});
    CHECK(hilbert_function(R2, {}, 4) == std::vector<int64_t>{1, 2, 3, 4, 5});
    std::vector<SparsePoly> xy = groebner_basis(parse_poly_list(R2, "x*y"));
    CHECK(hilbert_function(R2, xy, 5) == std::vector<int64_t>{1, 2, 2, 2, 2, 2});
    CHECK(krull_dim(R2, xy) == 1);
    CHECK(krull_dim(R2, {}) == 2);

    RingPtr R3 = poly_ring({"x", "y", "z"});
    std::vector<SparsePoly> q = groebner_basis(parse_poly_list(R3, "x^2 + y*z"));
    CHECK(hilbert_function(R3, q, 5) == std::vector<int64_t>{1, 3, 5, 7, 9, 11});
    CHECK(krull_dim(R3, q) == 2);
    std::vector<SparsePoly> ci = groebner_basis(parse_poly_list(R3, "x^2, y^2"));
    CHECK(krull_dim(R3, ci) == 1);
    std::vector<SparsePoly> unit = groebner_basis(parse_poly_list(R3, "3"));
    CHECK_THROWS_AS(krull_dim(R3, unit), ZeroRingError);

    RingPtr R0 = poly_ring({});
    CHECK(krull_dim(R0, {}) == 0);
    CHECK(hilbert_function(R0, {}, 2) == std::vector<int64_t>{1, 0, 0});

    // leading-term agreement: the quotient basis counts standard monomials
    std::mt19937_64 rng(61);
    for (int it = 0; it < 10; ++it) {
        SparsePoly f = rand_homog(R3, 2, rng);
        if (f.is_zero()) continue;
        std::vector<SparsePoly> gb = groebner_basis({f});
        QuotientBasis QB(R3, gb, 6);
        std::vector<int64_t> h = hilbert_function(R3, gb, 6);
        for (int d = 0; d <= 6; ++d) CHECK(h[d] == static_cast<int64_t>(QB.dim(d)));
    }
}

TEST_CASE("module groebner bases reduce their generators") {
    RingPtr R = poly_ring({"x", "y"});
    ModuleOrder ord{2, 0, {0, 1}};
    std::mt19937_64 rng(71);
    for (int it = 0; it < 10; ++it) {
        std::vector<VecPoly> gens;
        for (int i = 0; i < 3; ++i) {
            VecPoly v(R, 2);
            v.comp(0) = rand_homog(R, 2, rng);
            v.comp(1) = rand_homog(R, 1, rng);
            if (!v.is_zero()) gens.push_back(v);
        }
        if (gens.empty()) continue;
        std::vector<VecPoly> gb = module_gb(gens, ord);
        for (const VecPoly& g : gens)
            CHECK(module_normal_form(g, gb, ord).is_zero());
        for (const VecPoly& g : gb) {
            CHECK(module_lead(g, ord).coeff == 1u);
            CHECK(module_normal_form(g, gb, ord).is_zero());
        }
    }
}
