#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "regal/error.hpp"
#include "regal/resolution.hpp"

#include "helpers.hpp"

using namespace regal;
using regal_test::ring;

namespace {

std::vector<int64_t> totals(const BettiTable& bt) {
    std::vector<int64_t> out;
    for (int i = 0; i <= bt.max_step(); ++i) out.push_back(bt.total(i));
    return out;
}

} // namespace

TEST_CASE("koszul resolutions of k over polynomial rings") {
    RingPresentation P1 = ring({"x"}, "");
    BettiTable b1 = betti(P1, 6);
    CHECK(totals(b1) == std::vector<int64_t>{1, 1});
    CHECK(!b1.truncated());
    CHECK(b1.entry(1, 1) == 1);

    RingPresentation P2 = ring({"x", "y"}, "");
    BettiTable b2 = betti(P2, 8);
    CHECK(totals(b2) == std::vector<int64_t>{1, 2, 1});
    CHECK(b2.entry(2, 2) == 1);
    CHECK(b2.entry(1, 1) == 2);
    CHECK(b2.entry(1, 2) == 0);

    RingPresentation P3 = ring({"x", "y", "z"}, "");
    BettiTable b3 = betti(P3, 10);
    CHECK(totals(b3) == std::vector<int64_t>{1, 3, 3, 1});
    for (int i = 0; i <= 3; ++i) CHECK(b3.entry(i, i) == b3.total(i));

    RingPresentation P0 = ring({}, "");
    CHECK(totals(betti(P0, 4)) == std::vector<int64_t>{1});
}

TEST_CASE("infinite resolutions truncate with stable prefixes") {
    RingPresentation D = ring({"x"}, "x^2");
    BettiTable bd = betti(D, 8);
    CHECK(totals(bd) == std::vector<int64_t>(9, 1));
    CHECK(bd.truncated());
    CHECK(bd.entry(5, 5) == 1);  // shift climbs by one each step

    RingPresentation X = ring({"x", "y"}, "x*y");
    CHECK(totals(betti(X, 8)) == std::vector<int64_t>{1, 2, 2, 2, 2, 2, 2, 2, 2});

    RingPresentation C = ring({"x", "y"}, "x^2, y^2");
    CHECK(totals(betti(C, 8)) == std::vector<int64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9});

    RingPresentation N = ring({"x", "y"}, "x^2, x*y");
    CHECK(totals(betti(N, 8)) == std::vector<int64_t>{1, 2, 3, 5, 8, 13, 21, 34, 55});

    RingPresentation Q = ring({"x", "y", "z"}, "x^2 + y*z");
    CHECK(totals(betti(Q, 8)) == std::vector<int64_t>{1, 3, 4, 4, 4, 4, 4, 4, 4});

    // the shorter run is a prefix of the longer one
    FreeComplex four = minimal_resolution(X, k_presentation(X), 4);
    FreeComplex eight = minimal_resolution(X, k_presentation(X), 8);
    CHECK(four.truncated);
    for (size_t i = 0; i < four.shifts.size(); ++i) CHECK(four.shifts[i] == eight.shifts[i]);
}

TEST_CASE("resolutions verify as exact and minimal") {
    for (auto* spec : {"x*y", "x^2, y^2", "x^2, x*y"}) {
        RingPresentation A = ring({"x", "y"}, spec);
        FreeComplex cx = minimal_resolution(A, k_presentation(A), 8);
        verify_resolution(A, cx, 10);
        for (const PolyMat& d : cx.diffs)
            for (size_t i = 0; i < d.nrows(); ++i)
                for (size_t j = 0; j < d.ncols(); ++j)
                    CHECK(d.at(i, j).degree() != 0);
    }
    RingPresentation P = ring({"x", "y", "z"}, "");
    FreeComplex cx = minimal_resolution(P, k_presentation(P), 10);
    CHECK(!cx.truncated);
    verify_resolution(P, cx, 8);
}

TEST_CASE("module presentations") {
    RingPresentation A = ring({"x", "y"}, "");
    // A/(x) resolves in one step
    FreeComplex cx = minimal_resolution(A, cyclic_presentation(A, {parse_poly(A.ring, "x")}), 6);
    CHECK(!cx.truncated);
    CHECK(cx.shifts.size() == 2);
    CHECK(cx.shifts[1] == std::vector<int>{1});

    // redundant generators get pruned: A/(x, x+y, y) is k
    FreeComplex ck = minimal_resolution(
        A, cyclic_presentation(A, parse_poly_list(A.ring, "x, x + y, y")), 6);
    BettiTable bk(ck);
    CHECK(totals(bk) == std::vector<int64_t>{1, 2, 1});

    // presentations with unit entries collapse to the same
    ModulePresentation M{{0, 0}, PolyMat(A.ring, 2, 1)};
    M.rel.set(0, 0, SparsePoly::constant(A.ring, 1));
    FreeComplex cm = minimal_resolution(A, M, 6);
    // coker [1;0] = A
    CHECK(cm.shifts.size() == 1);
    CHECK(cm.shifts[0].size() == 1);

    CHECK_THROWS_AS(cyclic_presentation(A, parse_poly_list(A.ring, "x^2 + y")),
                    UnsupportedInput);
}

TEST_CASE("coker dims match hilbert data") {
    RingPresentation A = ring({"x", "y"}, "x*y");
    FreeComplex cx = minimal_resolution(A, k_presentation(A), 4);
    std::vector<int64_t> dims = coker_dims(A, cx, 6);
    CHECK(dims == std::vector<int64_t>{1, 0, 0, 0, 0, 0, 0});
    FreeComplex ca = minimal_resolution(A, cyclic_presentation(A, {}), 4);
    CHECK(coker_dims(A, ca, 5) == std::vector<int64_t>{1, 2, 2, 2, 2, 2});
}

TEST_CASE("kernels over the quotient ring") {
    RingPresentation A = ring({"x", "y"}, "x*y");
    // kernel of A(-1)^2 -> A, (a,b) -> ax + by contains (y,0) and (0,x)
    std::vector<VecPoly> cols = {VecPoly({parse_poly(A.ring, "x")}),
                                 VecPoly({parse_poly(A.ring, "y")})};
    auto ker = kernel_mod_ideal(A, cols, {1, 1}, {0});
    CHECK(ker.size() == 2);
    for (const auto& [v, deg] : ker) {
        SparsePoly acc = SparsePoly::zero(A.ring);
        for (size_t j = 0; j < 2; ++j) acc = acc.add(v.comp(j).mul(cols[j].comp(0)));
        CHECK(A.nf(acc).is_zero());
        CHECK(deg == 2);
    }
}

TEST_CASE("projective dimension verdicts") {
    RingPresentation P = ring({"x", "y", "z"}, "");
    PdVerdict v = pd_finite(P, 10);
    CHECK(v.finite);
    CHECK(v.value == 3);
    RingPresentation X = ring({"x", "y"}, "x*y");
    PdVerdict w = pd_finite(X, 8);
    CHECK(!w.finite);
    CHECK(w.value == 8);
}

TEST_CASE("tor under change of rings") {
    RingPresentation P2 = ring({"x", "y"}, "");
    CHECK(totals(tor_ring_change(P2, parse_poly(P2.ring, "x"), 4)) ==
          std::vector<int64_t>{1, 1});
    RingPresentation X = ring({"x", "y"}, "x*y");
    BettiTable t1 = tor_ring_change(X, parse_poly(X.ring, "x + y"), 4);
    std::vector<int64_t> got;
    for (int i = 0; i <= 4; ++i) got.push_back(t1.total(i));
    CHECK(got == std::vector<int64_t>{1, 1, 0, 0, 0});
    // a zerodivisor quotient has unbounded Tor instead
    BettiTable t2 = tor_ring_change(X, parse_poly(X.ring, "x"), 4);
    got.clear();
    for (int i = 0; i <= 4; ++i) got.push_back(t2.total(i));
    CHECK(got == std::vector<int64_t>{1, 1, 1, 1, 1});
}

TEST_CASE("betti table accessors") {
    BettiTable empty;
    CHECK(empty.max_step() == 0);
    CHECK(empty.total(0) == 0);
    CHECK(empty.entry(2, 3) == 0);
    CHECK(!empty.truncated());

    RingPresentation X = ring({"x", "y"}, "x*y");
    BettiTable bt = betti(X, 5);
    CHECK(bt.total(99) == 0);
    CHECK(bt.entry(1, 7) == 0);
    auto es = bt.entries();
    int64_t sum = 0;
    for (const auto& [k, v] : es) sum += v;
    CHECK(sum == 1 + 2 + 2 + 2 + 2 + 2);
}
