#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "regal/linalg.hpp"

using namespace regal;

namespace {

FpMat random_mat(const PrimeField& F, size_t r, size_t c, std::mt19937_64& rng) {
    FpMat m(F, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j)
            m.set(i, j, static_cast<uint32_t>(rng() % F.characteristic()));
    return m;
}

bool in_colspan(const FpMat& space, const FpMat& vecs) {
    return span_sum_dim(space, vecs) == space.rank();
}

} // namespace

TEST_CASE("rref, rank and kernel on fixed matrices") {
    PrimeField F(7);
    FpMat a(F, 2, 3);
    // [1 2 3; 2 4 6]: rank 1
    a.set(0, 0, 1); a.set(0, 1, 2); a.set(0, 2, 3);
    a.set(1, 0, 2); a.set(1, 1, 4); a.set(1, 2, 6);
    CHECK(a.rank() == 1);
    FpMat k = a.right_kernel();
    CHECK(k.cols() == 2);
    CHECK(a.mul(k).is_zero());

    FpMat b = a;
    std::vector<size_t> piv = b.rref();
    CHECK(piv == std::vector<size_t>{0});
    CHECK(b.at(0, 0) == 1u);
    CHECK(b.at(1, 0) == 0u);

    CHECK(FpMat::identity(F, 4).rank() == 4);
    CHECK(FpMat(F, 3, 3).rank() == 0);
    CHECK(FpMat(F, 0, 5).rank() == 0);
    CHECK(FpMat(F, 0, 5).right_kernel().cols() == 5);
    CHECK(FpMat(F, 5, 0).rank() == 0);
}

TEST_CASE("rank-nullity and kernel membership, randomized") {
    PrimeField F(32003);
    std::mt19937_64 rng(21);
    for (int it = 0; it < 60; ++it) {
        size_t r = rng() % 8, c = rng() % 8;
        FpMat a = random_mat(F, r, c, rng);
        FpMat k = a.right_kernel();
        CHECK(a.rank() + k.cols() == c);
        CHECK(a.mul(k).is_zero());
        CHECK(k.rank() == k.cols());
        CHECK(a.transpose().rank() == a.rank());
    }
}

TEST_CASE("stacking and slicing") {
    PrimeField F(5);
    std::mt19937_64 rng(3);
    FpMat a = random_mat(F, 3, 2, rng), b = random_mat(F, 3, 4, rng);
    FpMat h = a.hstack(b);
    CHECK(h.cols() == 6);
    CHECK(h.cols_slice(0, 2).mul(FpMat::identity(F, 2)).at(2, 1) == a.at(2, 1));
    CHECK(h.cols_slice(2, 6).at(0, 3) == b.at(0, 3));
    FpMat v = a.transpose().vstack(b.transpose());
    CHECK(v.rows() == 6);
    CHECK(v.rows_slice(2, 6).at(0, 0) == b.at(0, 0));
}

TEST_CASE("span_sum_dim") {
    PrimeField F(101);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 40; ++it) {
        size_t n = 1 + rng() % 6;
        FpMat a = random_mat(F, n, rng() % 5, rng);
        FpMat b = random_mat(F, n, rng() % 5, rng);
        size_t s = span_sum_dim(a, b);
        CHECK(s == a.hstack(b).rank());
        CHECK(s >= a.rank());
        CHECK(s >= b.rank());
        CHECK(s <= a.rank() + b.rank());
        CHECK(span_sum_dim(a, a) == a.rank());
    }
}

TEST_CASE("preimage_space characterization") {
    PrimeField F(32003);
    std::mt19937_64 rng(8);
    for (int it = 0; it < 60; ++it) {
        size_t r = rng() % 6, c = rng() % 6;
        FpMat a = random_mat(F, r, c, rng);
        FpMat b = random_mat(F, r, rng() % 4, rng);
        FpMat pre = preimage_space(a, b);
        // every preimage column lands in colspan b
        CHECK(in_colspan(b, a.mul(pre)));
        // dimension: ker(a) + a^{-1}(span b) has dim = nullity + dim(im a cap span b)
        size_t cap = a.rank() + b.rank() - span_sum_dim(a, b);
        CHECK(pre.rank() == (c - a.rank()) + cap);
        // the kernel sits inside it
        CHECK(in_colspan(pre, a.right_kernel()));
    }
    // zero-row edge: everything maps into the trivial target space
    FpMat empty(F, 0, 3);
    CHECK(preimage_space(empty, FpMat(F, 0, 0)).rank() == 3);
}

TEST_CASE("incremental span") {
    PrimeField F(13);
    std::mt19937_64 rng(9);
    for (int it = 0; it < 30; ++it) {
        size_t n = 1 + rng() % 7;
        IncrementalSpan span(F, n);
        FpMat all(F, n, 0);
        for (int v = 0; v < 10; ++v) {
            std::vector<uint32_t> vec(n);
            for (auto& x : vec) x = static_cast<uint32_t>(rng() % 13);
            FpMat col(F, n, 1);
            for (size_t i = 0; i < n; ++i) col.set(i, 0, vec[i]);
            size_t before = all.rank();
            all = all.hstack(col);
            bool grew = all.rank() > before;
            CHECK(span.add(vec) == grew);
            CHECK(span.dim() == all.rank());
            CHECK(span.contains(vec));
        }
        CHECK(span.contains(std::vector<uint32_t>(n, 0)));
    }
}

TEST_CASE("apply matches mul") {
    PrimeField F(97);
    std::mt19937_64 rng(14);
    FpMat a = random_mat(F, 4, 3, rng);
    std::vector<uint32_t> x = {5, 96, 41};
    std::vector<uint32_t> y = a.apply(x);
    FpMat xc(F, 3, 1);
    for (size_t i = 0; i < 3; ++i) xc.set(i, 0, x[i]);
    FpMat yc = a.mul(xc);
    for (size_t i = 0; i < 4; ++i) CHECK(y[i] == yc.at(i, 0));
}
