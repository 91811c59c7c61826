#include "regal/strand.hpp"

namespace regal {

PolyMat::PolyMat(RingPtr ring, size_t nrows, size_t ncols)
    : ring_(std::move(ring)), nrows_(nrows), ncols_(ncols) {
    if (!ring_) throw ContextError("PolyMat needs a ring context");
    e_.assign(nrows_ * ncols_, SparsePoly::zero(ring_));
}

void PolyMat::set(size_t i, size_t j, SparsePoly v) {
    if (i >= nrows_ || j >= ncols_) throw InvalidArgument("PolyMat index out of range");
    if (v.ring() != ring_ && !v.ring()->same_as(*ring_))
        throw ContextError("PolyMat entry from different ring");
    e_[i * ncols_ + j] = std::move(v);
}

VecPoly PolyMat::col(size_t j) const {
    std::vector<SparsePoly> comps;
    comps.reserve(nrows_);
    for (size_t i = 0; i < nrows_; ++i) comps.push_back(at(i, j));
    if (comps.empty()) throw InvalidArgument("column of a 0-row matrix");
    return VecPoly(std::move(comps));
}

QuotientBasis::QuotientBasis(RingPtr ring, const std::vector<SparsePoly>& gb, int maxdeg)
    : ring_(std::move(ring)), maxdeg_(maxdeg) {
    if (maxdeg < 0) throw InvalidArgument("QuotientBasis: negative degree bound");
    std::vector<Monomial> leads;
    for (const SparsePoly& g : gb)
        if (!g.is_zero()) leads.push_back(g.lead_mono());
    by_deg_.resize(maxdeg + 1);
    index_.resize(maxdeg + 1);
    for (int d = 0; d <= maxdeg; ++d) {
        for (Monomial& m : monomials_of_degree(ring_->nvars(), d)) {
            bool standard = true;
            for (const Monomial& l : leads)
                if (l.divides(m)) { standard = false; break; }
            if (!standard) continue;
            index_[d].emplace(m, by_deg_[d].size());
            by_deg_[d].push_back(std::move(m));
        }
    }
}

size_t QuotientBasis::dim(int d) const {
    if (d < 0) return 0;
    if (d > maxdeg_) throw InvalidArgument("QuotientBasis: degree beyond truncation");
    return by_deg_[d].size();
}

const std::vector<Monomial>& QuotientBasis::at_degree(int d) const {
    if (d < 0 || d > maxdeg_) throw InvalidArgument("QuotientBasis: degree out of range");
    return by_deg_[d];
}

size_t QuotientBasis::index_of(const Monomial& m) const {
    int d = static_cast<int>(m.degree());
    if (d > maxdeg_) throw InvalidArgument("QuotientBasis: monomial beyond truncation");
    auto it = index_[d].find(m);
    if (it == index_[d].end())
        throw InvalidArgument("monomial is not a standard monomial");
    return it->second;
}

size_t strand_dim(const QuotientBasis& QB, const std::vector<int>& shifts, int t) {
    size_t total = 0;
    for (int s : shifts) total += QB.dim(t - s);
    return total;
}

std::vector<uint32_t> strand_coords(const QuotientBasis& QB, const std::vector<int>& shifts,
                                    const VecPoly& v, int t) {
    if (v.ncomps() != shifts.size())
        throw InvalidArgument("strand_coords: component count mismatch");
    std::vector<uint32_t> out(strand_dim(QB, shifts, t), 0);
    size_t base = 0;
    for (size_t i = 0; i < shifts.size(); ++i) {
        int d = t - shifts[i];
        size_t block = QB.dim(d);
        for (const Term& tm : v.comp(i).terms()) {
            if (static_cast<int>(tm.mono.degree()) != d)
                throw InvalidArgument("strand_coords: term outside the strand degree");
            out[base + QB.index_of(tm.mono)] = tm.coeff;
        }
        base += block;
    }
    return out;
}

FpMat strand_matrix(const QuotientBasis& QB, const std::vector<SparsePoly>& gb,
                    const std::vector<int>& tgt_shifts, const std::vector<int>& src_shifts,
                    const PolyMat& M, int t) {
    if (M.nrows() != tgt_shifts.size() || M.ncols() != src_shifts.size())
        throw InvalidArgument("strand_matrix: shape mismatch");
    const PrimeField& F = QB.ring()->field();
    size_t rows = strand_dim(QB, tgt_shifts, t);
    size_t cols = strand_dim(QB, src_shifts, t);
    FpMat out(F, rows, cols);

    std::vector<size_t> row_base(tgt_shifts.size() + 1, 0);
    for (size_t i = 0; i < tgt_shifts.size(); ++i)
        row_base[i + 1] = row_base[i] + QB.dim(t - tgt_shifts[i]);

    size_t col = 0;
    for (size_t j = 0; j < src_shifts.size(); ++j) {
        int d = t - src_shifts[j];
        if (d < 0) continue;
        for (const Monomial& m : QB.at_degree(d)) {
            for (size_t i = 0; i < tgt_shifts.size(); ++i) {
                const SparsePoly& e = M.at(i, j);
                if (e.is_zero()) continue;
                SparsePoly img = normal_form(e.mul_term(1, m), gb);
                int td = t - tgt_shifts[i];
                for (const Term& tm : img.terms()) {
                    if (static_cast<int>(tm.mono.degree()) != td)
                        throw InvalidArgument("strand_matrix: entry is not graded");
                    out.set(row_base[i] + QB.index_of(tm.mono), col, tm.coeff);
                }
            }
            ++col;
        }
    }
    return out;
}

} // namespace regal
