#include "regal/spectral.hpp"

#include <algorithm>

namespace regal {

namespace {

size_t dim_at(const FilteredStrand& F, int s) {
    if (s < 0 || s >= static_cast<int>(F.dims.size())) return 0;
    return F.dims[static_cast<size_t>(s)];
}

// Basis of F^phi inside V_s, with the clamps phi <= 0 -> V_s, phi > pmax -> 0.
FpMat space_at(const FilteredStrand& F, int s, int phi) {
    size_t n = dim_at(F, s);
    if (phi > F.pmax || n == 0) return FpMat(F.field, n, 0);
    if (phi <= 0) return FpMat::identity(F.field, n);
    return F.filt[static_cast<size_t>(s)][static_cast<size_t>(phi)];
}

FpMat d_at(const FilteredStrand& F, int s) {
    if (s >= 1 && s < static_cast<int>(F.d.size())) return F.d[static_cast<size_t>(s)];
    return FpMat(F.field, dim_at(F, s - 1), dim_at(F, s));
}

// Z^phi_rho at total degree s.
FpMat cycles(const FilteredStrand& F, int phi, int rho, int s) {
    FpMat B = space_at(F, s, phi);
    FpMat dB = d_at(F, s).mul(B);
    FpMat target = space_at(F, s - 1, phi + rho);
    return B.mul(preimage_space(dB, target));
}

FpMat page_denominator(const FilteredStrand& F, int r, int phi, int s) {
    FpMat dz = d_at(F, s + 1).mul(cycles(F, phi - r + 1, r - 1, s + 1));
    return dz.hstack(cycles(F, phi + 1, r - 1, s));
}

} // namespace

void check_strand(const FilteredStrand& F) {
    size_t S = F.dims.size();
    if (F.d.size() != S || F.filt.size() != S)
        throw InternalInconsistency("strand arrays have mismatched lengths");
    for (size_t s = 0; s < S; ++s) {
        size_t prev = s == 0 ? 0 : F.dims[s - 1];
        if (F.d[s].rows() != prev || F.d[s].cols() != F.dims[s])
            throw InternalInconsistency("strand differential shape mismatch");
        if (s >= 2 && !F.d[s - 1].mul(F.d[s]).is_zero())
            throw InternalInconsistency("strand differential does not square to zero");
        if (F.filt[s].size() != static_cast<size_t>(F.pmax) + 1)
            throw InternalInconsistency("strand filtration depth mismatch");
        if (F.filt[s][0].rank() != F.dims[s])
            throw InternalInconsistency("filtration does not start at the whole space");
        for (int phi = 0; phi <= F.pmax; ++phi) {
            const FpMat& cur = F.filt[s][static_cast<size_t>(phi)];
            if (cur.rows() != F.dims[s])
                throw InternalInconsistency("filtration basis row mismatch");
            if (phi > 0) {
                const FpMat& big = F.filt[s][static_cast<size_t>(phi) - 1];
                if (span_sum_dim(big, cur) != big.rank())
                    throw InternalInconsistency("filtration is not nested");
            }
            if (s > 0) {
                const FpMat& down = F.filt[s - 1][static_cast<size_t>(phi)];
                if (span_sum_dim(down, F.d[s].mul(cur)) != down.rank())
                    throw InternalInconsistency("differential does not preserve the filtration");
            }
        }
    }
}

PageEntry page(const FilteredStrand& F, int r, int p, int q) {
    if (r < 0) throw InvalidArgument("page index must be nonnegative");
    int s = p + q;
    FpMat Z = cycles(F, p, r, s);
    FpMat den = page_denominator(F, r, p, s);
    int64_t dim = static_cast<int64_t>(span_sum_dim(Z, den)) -
                  static_cast<int64_t>(den.rank());
    return {r, p, q, dim};
}

int64_t page_diff_rank(const FilteredStrand& F, int r, int p, int q) {
    if (r < 0) throw InvalidArgument("page index must be nonnegative");
    int s = p + q;
    FpMat dZ = d_at(F, s).mul(cycles(F, p, r, s));
    FpMat den = page_denominator(F, r, p + r, s - 1);
    return static_cast<int64_t>(span_sum_dim(dZ, den)) - static_cast<int64_t>(den.rank());
}

CorComplex cor_double_complex(const RingPresentation& A, const SparsePoly& g, int window,
                              int D, CorFiltration filt) {
    if (window < 0) throw InvalidArgument("window must be nonnegative");
    if (D < 0) throw InvalidArgument("truncation degree must be nonnegative");
    if (!is_nonzerodivisor(A, g))
        throw InvalidArgument("change of rings requires a nonzerodivisor: " + to_string(g));

    CorComplex C;
    C.target = quotient_by(A, g);
    C.window = window;
    C.filtration = filt;
    int S = window + 2;
    C.pmax = S;
    C.P = minimal_resolution(A, k_presentation(A), S);
    const RingPresentation& Ap = C.target.quotient;
    C.Q = minimal_resolution(Ap, k_presentation(Ap), S);

    int needed = 0;
    for (int i = 0; i <= window && i < static_cast<int>(C.P.shifts.size()); ++i)
        for (int sh : C.P.shifts[static_cast<size_t>(i)]) needed = std::max(needed, sh);
    for (int i = 0; i <= window && i < static_cast<int>(C.Q.shifts.size()); ++i)
        for (int sh : C.Q.shifts[static_cast<size_t>(i)]) needed = std::max(needed, sh + 1);
    if (D < needed)
        throw TruncationError("truncation degree cannot hold the requested window", window,
                              needed);

    auto rank_of = [](const FreeComplex& cx, int i) -> size_t {
        if (i < 0 || i >= static_cast<int>(cx.shifts.size())) return 0;
        return cx.shifts[static_cast<size_t>(i)].size();
    };
    auto shift_of = [](const FreeComplex& cx, int i, size_t a) -> int {
        return cx.shifts[static_cast<size_t>(i)][a];
    };

    // Cells of one total degree, ordered so every filtration step is a prefix
    // of the coordinate list.
    struct Cell {
        int p, q;
        size_t first;   // first pair index within the total degree
        size_t npairs;
    };
    std::vector<std::vector<Cell>> cells(static_cast<size_t>(S) + 1);
    std::vector<std::vector<int>> pair_shifts(static_cast<size_t>(S) + 1);
    for (int s = 0; s <= S; ++s) {
        for (int k = 0; k <= s; ++k) {
            int q = filt == CorFiltration::ByQ ? k : s - k;
            int p = s - q;
            size_t rp = rank_of(C.P, p), rq = rank_of(C.Q, q);
            Cell c{p, q, pair_shifts[static_cast<size_t>(s)].size(), rp * rq};
            for (size_t a = 0; a < rp; ++a)
                for (size_t b = 0; b < rq; ++b)
                    pair_shifts[static_cast<size_t>(s)].push_back(shift_of(C.P, p, a) +
                                                                  shift_of(C.Q, q, b));
            cells[static_cast<size_t>(s)].push_back(c);
        }
    }

    const RingPtr& Rp = Ap.ring;
    uint32_t minus = Ap.field().neg(1);
    std::vector<PolyMat> total;  // total[s]: pairs at s -> pairs at s-1
    total.reserve(static_cast<size_t>(S) + 1);
    total.emplace_back(Rp, 0, pair_shifts[0].size());
    for (int s = 1; s <= S; ++s) {
        const auto& src = cells[static_cast<size_t>(s)];
        const auto& tgt = cells[static_cast<size_t>(s - 1)];
        PolyMat M(Rp, pair_shifts[static_cast<size_t>(s - 1)].size(),
                  pair_shifts[static_cast<size_t>(s)].size());
        auto tgt_cell = [&](int p, int q) -> const Cell* {
            for (const Cell& c : tgt)
                if (c.p == p && c.q == q) return &c;
            return nullptr;
        };
        for (const Cell& sc : src) {
            size_t rq = rank_of(C.Q, sc.q);
            if (sc.npairs == 0) continue;
            if (sc.p >= 1) {
                const Cell* tc = tgt_cell(sc.p - 1, sc.q);
                if (tc && tc->npairs > 0) {
                    const PolyMat& dP = C.P.diffs[static_cast<size_t>(sc.p) - 1];
                    for (size_t a2 = 0; a2 < rank_of(C.P, sc.p - 1); ++a2)
                        for (size_t a = 0; a < rank_of(C.P, sc.p); ++a) {
                            SparsePoly e = C.target.map(dP.at(a2, a));
                            if (e.is_zero()) continue;
                            for (size_t b = 0; b < rq; ++b)
                                M.set(tc->first + a2 * rq + b, sc.first + a * rq + b, e);
                        }
                }
            }
            if (sc.q >= 1) {
                const Cell* tc = tgt_cell(sc.p, sc.q - 1);
                if (tc && tc->npairs > 0) {
                    const PolyMat& dQ = C.Q.diffs[static_cast<size_t>(sc.q) - 1];
                    size_t rq2 = rank_of(C.Q, sc.q - 1);
                    uint32_t sign = sc.p % 2 == 0 ? 1 : minus;
                    for (size_t b2 = 0; b2 < rq2; ++b2)
                        for (size_t b = 0; b < rq; ++b) {
                            SparsePoly e = Ap.nf(dQ.at(b2, b));
                            if (e.is_zero()) continue;
                            for (size_t a = 0; a < rank_of(C.P, sc.p); ++a)
                                M.set(tc->first + a * rq2 + b2, sc.first + a * rq + b,
                                      e.scale(sign));
                        }
                }
            }
        }
        total.push_back(std::move(M));
    }

    QuotientBasis QB(Rp, Ap.gb, D);
    auto qb_dim = [&](int deg) -> size_t {
        if (deg < 0 || deg > D) return 0;
        return QB.dim(deg);
    };
    for (int t = 0; t <= D; ++t) {
        FilteredStrand F{Ap.field(), {}, {}, {}, C.pmax};
        for (int s = 0; s <= S; ++s) {
            F.dims.push_back(strand_dim(QB, pair_shifts[static_cast<size_t>(s)], t));
            if (s == 0)
                F.d.emplace_back(Ap.field(), 0, F.dims[0]);
            else
                F.d.push_back(strand_matrix(QB, Ap.gb, pair_shifts[static_cast<size_t>(s - 1)],
                                            pair_shifts[static_cast<size_t>(s)],
                                            total[static_cast<size_t>(s)], t));
            // filtration level phi keeps cells with coordinate <= pmax - phi;
            // cell order makes each level a coordinate prefix
            std::vector<FpMat> levels;
            FpMat id = FpMat::identity(Ap.field(), F.dims[static_cast<size_t>(s)]);
            for (int phi = 0; phi <= C.pmax; ++phi) {
                size_t keep = 0;
                for (const Cell& c : cells[static_cast<size_t>(s)]) {
                    int key = filt == CorFiltration::ByQ ? c.q : c.p;
                    if (key > C.pmax - phi) continue;
                    for (size_t j = 0; j < c.npairs; ++j)
                        keep += qb_dim(t - pair_shifts[static_cast<size_t>(s)][c.first + j]);
                }
                levels.push_back(id.cols_slice(0, keep));
            }
            F.filt.push_back(std::move(levels));
        }
        check_strand(F);
        C.strands.push_back(std::move(F));
    }
    return C;
}

int64_t cor_page_dim(const CorComplex& C, int r, int p, int q) {
    int key = C.filtration == CorFiltration::ByQ ? q : p;
    int phi = C.pmax - key;
    int s = p + q;
    int64_t sum = 0;
    for (const FilteredStrand& F : C.strands) sum += page(F, r, phi, s - phi).dim;
    return sum;
}

int64_t cor_diff_rank(const CorComplex& C, int r, int p, int q) {
    int key = C.filtration == CorFiltration::ByQ ? q : p;
    int phi = C.pmax - key;
    int s = p + q;
    int64_t sum = 0;
    for (const FilteredStrand& F : C.strands) sum += page_diff_rank(F, r, phi, s - phi);
    return sum;
}

CorE2 cor_e2(const CorComplex& C) {
    if (C.filtration != CorFiltration::ByQ)
        throw InvalidArgument("cor_e2 needs the ByQ filtration");
    BettiTable direct(C.Q);
    CorE2 out;
    for (int q = 0; q <= C.window; ++q) {
        int64_t want = direct.total(q);
        int64_t e0 = cor_page_dim(C, 2, 0, q);
        int64_t e1 = cor_page_dim(C, 2, 1, q);
        if (e0 != want || e1 != want)
            throw InternalInconsistency(
                "E2 columns disagree with the direct Tor computation at q = " +
                std::to_string(q));
        out.p0.push_back(e0);
        out.p1.push_back(e1);
    }
    for (int s = 0; s <= C.window + 1; ++s)
        for (int p = 2; p <= s; ++p)
            if (cor_page_dim(C, 2, p, s - p) != 0)
                throw InternalInconsistency("E2 does not vanish outside columns 0 and 1");
    return out;
}

CorE2 cor_e2(const RingPresentation& A, const SparsePoly& g, int window, int D) {
    return cor_e2(cor_double_complex(A, g, window, D));
}

D2Report d2_vanishing_check(const CorComplex& C) {
    if (C.filtration != CorFiltration::ByQ)
        throw InvalidArgument("d2_vanishing_check needs the ByQ filtration");
    D2Report rep;
    for (int q = 0; q <= C.window; ++q) {
        int64_t rk = cor_diff_rank(C, 2, 0, q);
        rep.ranks.push_back(rk);
        if (rk != 0) rep.all_zero = false;
    }
    return rep;
}

D2Report d2_vanishing_check(const RingPresentation& A, const SparsePoly& g, int window,
                            int D) {
    return d2_vanishing_check(cor_double_complex(A, g, window, D));
}

std::vector<AbutmentRow> abutment_check(const CorComplex& C) {
    if (C.filtration != CorFiltration::ByQ)
        throw InvalidArgument("abutment_check needs the ByQ filtration");
    BettiTable bA(C.P);
    std::vector<AbutmentRow> rows;
    for (int n = 0; n <= C.window; ++n) {
        int64_t rhs = 0;
        for (int q = 0; q <= n; ++q) rhs += cor_page_dim(C, 3, n - q, q);
        int64_t lhs = bA.total(n);
        rows.push_back({n, lhs, rhs, lhs == rhs});
    }
    return rows;
}

std::vector<AbutmentRow> abutment_check(const RingPresentation& A, const SparsePoly& g,
                                        int window, int D) {
    return abutment_check(cor_double_complex(A, g, window, D));
}

} // namespace regal
