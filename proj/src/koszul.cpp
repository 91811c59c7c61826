#include "regal/koszul.hpp"

#include <algorithm>
#include <map>

namespace regal {

namespace {

// Size-k subsets of {0..r-1}, ascending tuples in lexicographic order.
std::vector<std::vector<size_t>> subsets_of(size_t r, size_t k) {
    std::vector<std::vector<size_t>> out;
    if (k > r) return out;
    std::vector<size_t> cur(k);
    for (size_t i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        size_t i = k;
        while (i > 0 && cur[i - 1] == r - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<int64_t> strand_totals(const KoszulComplex& K,
                                   const std::vector<SparsePoly>& gb, int D) {
    const FreeComplex& cx = K.complex;
    size_t r = cx.diffs.size();
    QuotientBasis QB(cx.base.ring, gb, D);
    std::vector<int64_t> totals(r + 1, 0);
    for (int t = 0; t <= D; ++t) {
        std::vector<size_t> rk(r);
        for (size_t i = 0; i < r; ++i)
            rk[i] = strand_matrix(QB, gb, cx.shifts[i], cx.shifts[i + 1], cx.diffs[i], t)
                        .rank();
        for (size_t i = 0; i <= r; ++i) {
            int64_t h = static_cast<int64_t>(strand_dim(QB, cx.shifts[i], t));
            if (i > 0) h -= static_cast<int64_t>(rk[i - 1]);
            if (i < r) h -= static_cast<int64_t>(rk[i]);
            if (h < 0) throw InternalInconsistency("negative homology dimension");
            totals[i] += h;
        }
    }
    return totals;
}

} // namespace

KoszulComplex koszul(const RingPresentation& A, const std::vector<SparsePoly>& elems) {
    if (elems.empty()) throw InvalidArgument("koszul needs at least one element");
    std::vector<SparsePoly> fs;
    for (const SparsePoly& f : elems) {
        SparsePoly g = A.nf(f);
        if (g.is_zero() || !g.is_homogeneous())
            throw InvalidArgument("koszul elements must be nonzero homogeneous: " + to_string(f));
        fs.push_back(std::move(g));
    }
    size_t r = fs.size();

    FreeComplex cx{A, {}, {}, false};
    std::vector<std::vector<std::vector<size_t>>> bases(r + 1);
    for (size_t i = 0; i <= r; ++i) {
        bases[i] = subsets_of(r, i);
        std::vector<int> sh;
        for (const std::vector<size_t>& S : bases[i]) {
            int d = 0;
            for (size_t l : S) d += fs[l].degree();
            sh.push_back(d);
        }
        cx.shifts.push_back(std::move(sh));
    }
    uint32_t minus = A.field().neg(1);
    for (size_t i = 0; i < r; ++i) {
        std::map<std::vector<size_t>, size_t> row_of;
        for (size_t a = 0; a < bases[i].size(); ++a) row_of[bases[i][a]] = a;
        PolyMat D(A.ring, bases[i].size(), bases[i + 1].size());
        for (size_t b = 0; b < bases[i + 1].size(); ++b) {
            const std::vector<size_t>& S = bases[i + 1][b];
            for (size_t j = 0; j < S.size(); ++j) {
                std::vector<size_t> T = S;
                T.erase(T.begin() + static_cast<long>(j));
                uint32_t sign = (j % 2 == 0) ? 1 : minus;
                D.set(row_of[T], b, fs[S[j]].scale(sign));
            }
        }
        cx.diffs.push_back(std::move(D));
    }

    for (size_t i = 0; i + 1 < cx.diffs.size(); ++i)
        for (size_t a = 0; a < cx.diffs[i].nrows(); ++a)
            for (size_t c = 0; c < cx.diffs[i + 1].ncols(); ++c) {
                SparsePoly acc = SparsePoly::zero(A.ring);
                for (size_t b = 0; b < cx.diffs[i].ncols(); ++b)
                    acc = acc.add(cx.diffs[i].at(a, b).mul(cx.diffs[i + 1].at(b, c)));
                if (!A.nf(acc).is_zero())
                    throw InternalInconsistency("Koszul differential does not square to zero");
            }

    return {A, std::move(fs), std::move(cx)};
}

std::vector<int64_t> koszul_homology_dims(const KoszulComplex& K, int D,
                                          const std::vector<SparsePoly>& coeff_ideal) {
    if (D < 0) throw InvalidArgument("truncation degree must be nonnegative");
    std::vector<SparsePoly> gens = K.base.gb;
    for (const SparsePoly& g : coeff_ideal) {
        SparsePoly h = K.base.nf(g);
        if (h.is_zero()) continue;
        if (!h.is_homogeneous())
            throw UnsupportedInput("coefficient ideal generator is not homogeneous: " +
                                   to_string(g));
        gens.push_back(std::move(h));
    }
    std::vector<SparsePoly> gb = groebner_basis(gens);

    std::vector<int64_t> totals = strand_totals(K, gb, D);
    if (std::find(totals.begin(), totals.end(), 0) != totals.end()) {
        std::vector<int64_t> wide = strand_totals(K, gb, D + 4);
        for (size_t i = 0; i < totals.size(); ++i)
            if (totals[i] == 0) totals[i] = wide[i];
    }
    return totals;
}

int depth(const RingPresentation& A, const std::vector<SparsePoly>& module_ideal, int D) {
    size_t n = A.nvars();
    std::vector<SparsePoly> xs;
    for (size_t i = 0; i < n; ++i) xs.push_back(SparsePoly::variable(A.ring, i));

    // M = 0 exactly when I + J contains a unit.
    std::vector<SparsePoly> gens = A.ideal_gens;
    for (const SparsePoly& g : module_ideal) gens.push_back(g);
    std::vector<SparsePoly> gbIJ = groebner_basis(gens);
    for (const SparsePoly& g : gbIJ)
        if (!g.is_zero() && g.degree() == 0)
            throw InvalidArgument("depth of the zero module");
    if (n == 0) return 0;

    std::vector<int64_t> h = koszul_homology_dims(koszul(A, xs), D, module_ideal);
    size_t top = 0;
    for (size_t i = 0; i < h.size(); ++i)
        if (h[i] != 0) top = i;
    if (h[0] == 0) throw InternalInconsistency("vanishing H_0 for a nonzero module");
    return static_cast<int>(n - top);
}

ABReport ab_check(const RingPresentation& A, const std::vector<SparsePoly>& module_ideal,
                  int bound, int D) {
    if (bound < 0) bound = 2 * static_cast<int>(A.nvars()) + 4;
    PdVerdict reg = pd_finite(A, bound);
    if (!reg.finite)
        throw InvalidArgument("ab_check requires a regular base ring");
    int gldh = reg.value;

    FreeComplex cx = minimal_resolution(A, cyclic_presentation(A, module_ideal), gldh + 1);
    if (cx.truncated)
        throw InternalInconsistency("module resolution exceeds the global dimension");
    int pd = static_cast<int>(cx.length());
    int dep = depth(A, module_ideal, D);
    return {pd, dep, gldh, pd + dep == gldh};
}

} // namespace regal
