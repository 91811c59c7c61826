#include "regal/resolution.hpp"

#include <algorithm>

namespace regal {

namespace {

struct Cand {
    VecPoly v;
    int deg;
};

VecPoly nf_vec(const RingPresentation& A, const VecPoly& v) {
    std::vector<SparsePoly> out;
    out.reserve(v.ncomps());
    for (size_t i = 0; i < v.ncomps(); ++i) out.push_back(normal_form(v.comp(i), A.gb));
    return VecPoly(std::move(out));
}

// Degree of a homogeneous column under the shifts; -1 for zero.
int column_degree(const VecPoly& v, const std::vector<int>& shifts, bool internal) {
    int deg = -1;
    for (size_t b = 0; b < v.ncomps(); ++b) {
        const SparsePoly& e = v.comp(b);
        if (e.is_zero()) continue;
        bool bad = !e.is_homogeneous();
        int d = bad ? 0 : shifts[b] + e.degree();
        if (!bad && deg != -1 && d != deg) bad = true;
        if (bad) {
            if (internal) throw InternalInconsistency("syzygy column is not homogeneous");
            throw InvalidArgument("presentation matrix is not graded");
        }
        if (deg == -1) deg = d;
    }
    return deg;
}

// Keeps the columns whose classes mod (m * span + lower-degree multiples) are
// independent: a minimal generating subset of the span, by degree then input
// order.
std::vector<Cand> prune_generators(const RingPresentation& A, std::vector<Cand> cands,
                                   const std::vector<int>& tgt_shifts) {
    std::vector<Cand> kept;
    if (cands.empty()) return kept;
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& a, const Cand& b) { return a.deg < b.deg; });
    QuotientBasis QB(A.ring, A.gb, cands.back().deg);
    size_t n = A.nvars();
    size_t i = 0;
    while (i < cands.size()) {
        int d = cands[i].deg;
        IncrementalSpan span(A.field(), strand_dim(QB, tgt_shifts, d));
        for (const Cand& c : cands) {
            if (c.deg >= d) break;
            for (const Monomial& b : monomials_of_degree(n, static_cast<uint32_t>(d - c.deg))) {
                VecPoly w = nf_vec(A, c.v.mul_term(1, b));
                span.add(strand_coords(QB, tgt_shifts, w, d));
            }
        }
        // cands stays intact: later degree groups read every lower-degree
        // candidate again for the multiples pass.
        for (; i < cands.size() && cands[i].deg == d; ++i)
            if (span.add(strand_coords(QB, tgt_shifts, cands[i].v, d)))
                kept.push_back(cands[i]);
    }
    return kept;
}

// A unit pivot at (a,b) makes generator a superfluous: clear its row with
// column operations, then delete row a and column b.
void eliminate_units(const RingPresentation& A, std::vector<int>& gen_shifts,
                     std::vector<int>& col_shifts,
                     std::vector<std::vector<SparsePoly>>& cols) {
    for (;;) {
        size_t pa = 0, pb = 0;
        bool found = false;
        for (size_t b = 0; !found && b < cols.size(); ++b)
            for (size_t a = 0; !found && a < gen_shifts.size(); ++a)
                if (!cols[b][a].is_zero() && cols[b][a].degree() == 0) {
                    pa = a;
                    pb = b;
                    found = true;
                }
        if (!found) return;
        uint32_t uinv = A.field().inv(cols[pb][pa].constant_term());
        for (size_t b = 0; b < cols.size(); ++b) {
            if (b == pb) continue;
            const SparsePoly f = cols[b][pa].scale(uinv);
            if (f.is_zero()) continue;
            for (size_t a = 0; a < gen_shifts.size(); ++a) {
                if (a == pa) continue;
                cols[b][a] = normal_form(cols[b][a].sub(f.mul(cols[pb][a])), A.gb);
            }
            cols[b][pa] = SparsePoly::zero(A.ring);
        }
        cols.erase(cols.begin() + static_cast<long>(pb));
        col_shifts.erase(col_shifts.begin() + static_cast<long>(pb));
        for (std::vector<SparsePoly>& c : cols) c.erase(c.begin() + static_cast<long>(pa));
        gen_shifts.erase(gen_shifts.begin() + static_cast<long>(pa));
    }
}

} // namespace

ModulePresentation k_presentation(const RingPresentation& A) {
    size_t n = A.nvars();
    PolyMat rel(A.ring, 1, n);
    for (size_t i = 0; i < n; ++i) rel.set(0, i, SparsePoly::variable(A.ring, i));
    return {{0}, std::move(rel)};
}

ModulePresentation cyclic_presentation(const RingPresentation& A,
                                       const std::vector<SparsePoly>& gens) {
    std::vector<SparsePoly> red;
    for (const SparsePoly& g : gens) {
        SparsePoly h = A.nf(g);
        if (h.is_zero()) continue;
        if (!h.is_homogeneous())
            throw UnsupportedInput("module ideal generator is not homogeneous: " + to_string(g));
        red.push_back(std::move(h));
    }
    PolyMat rel(A.ring, 1, red.size());
    for (size_t i = 0; i < red.size(); ++i) rel.set(0, i, red[i]);
    return {{0}, std::move(rel)};
}

std::vector<std::pair<VecPoly, int>> kernel_mod_ideal(
    const RingPresentation& A, const std::vector<VecPoly>& cols,
    const std::vector<int>& col_shifts, const std::vector<int>& tgt_shifts) {
    std::vector<std::pair<VecPoly, int>> out;
    if (cols.empty()) return out;
    size_t s = tgt_shifts.size(), r = cols.size();
    std::vector<VecPoly> all = cols;
    for (size_t c = 0; c < s; ++c)
        for (const SparsePoly& g : A.gb) {
            VecPoly v(A.ring, s);
            v.comp(c) = g;
            all.push_back(std::move(v));
        }
    for (const VecPoly& z : syzygies(all, tgt_shifts)) {
        std::vector<SparsePoly> first;
        first.reserve(r);
        for (size_t b = 0; b < r; ++b) first.push_back(normal_form(z.comp(b), A.gb));
        VecPoly v(std::move(first));
        if (v.is_zero()) continue;
        int d = column_degree(v, col_shifts, true);
        out.emplace_back(std::move(v), d);
    }
    return out;
}

FreeComplex minimal_resolution(const RingPresentation& A, const ModulePresentation& M,
                               int max_steps) {
    if (max_steps < 0) throw InvalidArgument("max_steps must be nonnegative");
    if (M.rel.nrows() != M.gen_shifts.size())
        throw InvalidArgument("presentation row count does not match generator count");

    std::vector<int> gens = M.gen_shifts;
    std::vector<std::vector<SparsePoly>> cols;
    std::vector<int> col_shifts;
    for (size_t j = 0; j < M.rel.ncols(); ++j) {
        std::vector<SparsePoly> col;
        col.reserve(gens.size());
        for (size_t i = 0; i < M.rel.nrows(); ++i) col.push_back(A.nf(M.rel.at(i, j)));
        int d = -1;
        for (size_t i = 0; i < col.size(); ++i) {
            if (col[i].is_zero()) continue;
            if (!col[i].is_homogeneous())
                throw InvalidArgument("presentation entry is not homogeneous");
            int di = gens[i] + col[i].degree();
            if (d != -1 && di != d) throw InvalidArgument("presentation matrix is not graded");
            d = di;
        }
        if (d == -1) continue;
        cols.push_back(std::move(col));
        col_shifts.push_back(d);
    }
    eliminate_units(A, gens, col_shifts, cols);

    std::vector<Cand> cur;
    if (!gens.empty()) {
        for (size_t j = 0; j < cols.size(); ++j) {
            VecPoly v(std::move(cols[j]));
            if (!v.is_zero()) cur.push_back({std::move(v), col_shifts[j]});
        }
        cur = prune_generators(A, std::move(cur), gens);
    }

    FreeComplex cx{A, {gens}, {}, false};
    for (;;) {
        if (cur.empty()) break;
        if (static_cast<int>(cx.diffs.size()) == max_steps) {
            cx.truncated = true;
            break;
        }
        const std::vector<int> tgt = cx.shifts.back();
        PolyMat D(A.ring, tgt.size(), cur.size());
        std::vector<int> src;
        std::vector<VecPoly> curcols;
        for (size_t j = 0; j < cur.size(); ++j) {
            src.push_back(cur[j].deg);
            curcols.push_back(cur[j].v);
            for (size_t i = 0; i < tgt.size(); ++i) {
                const SparsePoly& e = cur[j].v.comp(i);
                if (!e.is_zero() && e.degree() == 0)
                    throw InternalInconsistency("unit entry in a pruned differential");
                D.set(i, j, e);
            }
        }
        cx.diffs.push_back(std::move(D));
        cx.shifts.push_back(src);
        std::vector<Cand> next;
        for (auto& kv : kernel_mod_ideal(A, curcols, src, tgt))
            next.push_back({std::move(kv.first), kv.second});
        cur = prune_generators(A, std::move(next), src);
    }
    return cx;
}

BettiTable::BettiTable(const FreeComplex& cx) : truncated_(cx.truncated) {
    max_step_ = static_cast<int>(cx.shifts.size()) - 1;
    for (size_t i = 0; i < cx.shifts.size(); ++i)
        for (int j : cx.shifts[i]) ++e_[{static_cast<int>(i), j}];
}

int64_t BettiTable::entry(int i, int j) const {
    auto it = e_.find({i, j});
    return it == e_.end() ? 0 : it->second;
}

int64_t BettiTable::total(int i) const {
    int64_t t = 0;
    for (auto it = e_.lower_bound({i, INT32_MIN}); it != e_.end() && it->first.first == i; ++it)
        t += it->second;
    return t;
}

BettiTable betti(const RingPresentation& A, int max_steps) {
    return BettiTable(minimal_resolution(A, k_presentation(A), max_steps));
}

PdVerdict pd_finite(const RingPresentation& A, int bound) {
    FreeComplex cx = minimal_resolution(A, k_presentation(A), bound);
    if (cx.truncated) return {false, bound};
    return {true, static_cast<int>(cx.length())};
}

BettiTable tor_ring_change(const RingPresentation& A, const SparsePoly& g, int max_p) {
    return BettiTable(minimal_resolution(A, cyclic_presentation(A, {g}), max_p));
}

void verify_resolution(const RingPresentation& A, const FreeComplex& cx, int D) {
    if (cx.shifts.size() != cx.diffs.size() + 1)
        throw InternalInconsistency("complex has mismatched step counts");
    for (size_t i = 0; i < cx.diffs.size(); ++i) {
        const PolyMat& M = cx.diffs[i];
        if (M.nrows() != cx.shifts[i].size() || M.ncols() != cx.shifts[i + 1].size())
            throw InternalInconsistency("differential shape mismatch");
        for (size_t a = 0; a < M.nrows(); ++a)
            for (size_t b = 0; b < M.ncols(); ++b) {
                SparsePoly e = A.nf(M.at(a, b));
                if (e.is_zero()) continue;
                if (!e.is_homogeneous() ||
                    e.degree() != cx.shifts[i + 1][b] - cx.shifts[i][a])
                    throw InternalInconsistency("differential entry is not graded");
                if (e.degree() == 0)
                    throw InternalInconsistency("differential has a unit entry");
            }
    }
    for (size_t i = 0; i + 1 < cx.diffs.size(); ++i) {
        const PolyMat& M = cx.diffs[i];
        const PolyMat& N = cx.diffs[i + 1];
        for (size_t a = 0; a < M.nrows(); ++a)
            for (size_t c = 0; c < N.ncols(); ++c) {
                SparsePoly acc = SparsePoly::zero(A.ring);
                for (size_t b = 0; b < M.ncols(); ++b)
                    acc = acc.add(M.at(a, b).mul(N.at(b, c)));
                if (!A.nf(acc).is_zero())
                    throw InternalInconsistency("d composed with d is nonzero");
            }
    }
    QuotientBasis QB(A.ring, A.gb, D);
    for (int t = 0; t <= D; ++t) {
        std::vector<size_t> rk(cx.diffs.size());
        for (size_t i = 0; i < cx.diffs.size(); ++i)
            rk[i] = strand_matrix(QB, A.gb, cx.shifts[i], cx.shifts[i + 1], cx.diffs[i], t)
                        .rank();
        for (size_t i = 1; i <= cx.diffs.size(); ++i) {
            size_t ker = strand_dim(QB, cx.shifts[i], t) - rk[i - 1];
            if (i < cx.diffs.size()) {
                if (ker != rk[i]) throw InternalInconsistency("resolution strand not exact");
            } else if (!cx.truncated && ker != 0) {
                throw InternalInconsistency("final kernel not zero in a complete resolution");
            }
        }
    }
}

std::vector<int64_t> coker_dims(const RingPresentation& A, const FreeComplex& cx, int D) {
    QuotientBasis QB(A.ring, A.gb, D);
    std::vector<int64_t> h(static_cast<size_t>(D) + 1, 0);
    for (int t = 0; t <= D; ++t) {
        size_t dim = strand_dim(QB, cx.shifts[0], t);
        if (!cx.diffs.empty())
            dim -= strand_matrix(QB, A.gb, cx.shifts[0], cx.shifts[1], cx.diffs[0], t).rank();
        h[static_cast<size_t>(t)] = static_cast<int64_t>(dim);
    }
    return h;
}

} // namespace regal
