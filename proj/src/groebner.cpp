#include "regal/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace regal {

VecPoly::VecPoly(RingPtr ring, size_t ncomps) : ring_(std::move(ring)) {
    if (!ring_) throw ContextError("VecPoly needs a ring context");
    comps_.assign(ncomps, SparsePoly::zero(ring_));
}

VecPoly::VecPoly(std::vector<SparsePoly> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw InvalidArgument("VecPoly needs at least one component");
    for (const SparsePoly& c : comps_) {
        if (!c.ring()) throw ContextError("VecPoly component lacks ring context");
        if (!ring_) ring_ = c.ring();
        else if (c.ring() != ring_ && !c.ring()->same_as(*ring_))
            throw ContextError("VecPoly components from different rings");
    }
}

bool VecPoly::is_zero() const {
    for (const SparsePoly& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

VecPoly VecPoly::add(const VecPoly& o) const {
    if (ncomps() != o.ncomps()) throw ContextError("VecPoly rank mismatch");
    VecPoly r(ring_, ncomps());
    for (size_t i = 0; i < ncomps(); ++i) r.comps_[i] = comps_[i].add(o.comps_[i]);
    return r;
}

VecPoly VecPoly::sub(const VecPoly& o) const { return add(o.neg()); }

VecPoly VecPoly::neg() const {
    VecPoly r(ring_, ncomps());
    for (size_t i = 0; i < ncomps(); ++i) r.comps_[i] = comps_[i].neg();
    return r;
}

VecPoly VecPoly::scale(uint32_t c) const {
    VecPoly r(ring_, ncomps());
    for (size_t i = 0; i < ncomps(); ++i) r.comps_[i] = comps_[i].scale(c);
    return r;
}

VecPoly VecPoly::mul_term(uint32_t c, const Monomial& m) const {
    VecPoly r(ring_, ncomps());
    for (size_t i = 0; i < ncomps(); ++i) r.comps_[i] = comps_[i].mul_term(c, m);
    return r;
}

VecPoly VecPoly::mul(const SparsePoly& f) const {
    VecPoly r(ring_, ncomps());
    for (size_t i = 0; i < ncomps(); ++i) r.comps_[i] = comps_[i].mul(f);
    return r;
}

int ModuleOrder::cmp(size_t ca, const Monomial& ma, size_t cb, const Monomial& mb) const {
    bool sen_a = ca < senior, sen_b = cb < senior;
    if (sen_a != sen_b) return sen_a ? 1 : -1;
    long da = static_cast<long>(ma.degree()) + shift(ca);
    long db = static_cast<long>(mb.degree()) + shift(cb);
    if (da != db) return da < db ? -1 : 1;
    if (ca != cb) return ca < cb ? 1 : -1;
    return degrevlex_cmp(ma, mb);
}

ModTerm module_lead(const VecPoly& v, const ModuleOrder& ord) {
    bool found = false;
    ModTerm best{0, 0, Monomial()};
    for (size_t i = 0; i < v.ncomps(); ++i) {
        const SparsePoly& c = v.comp(i);
        if (c.is_zero()) continue;
        // Within one component the module order restricts to degrevlex, so the
        // component's own lead is the candidate.
        if (!found || ord.cmp(i, c.lead_mono(), best.comp, best.mono) > 0) {
            best = {c.lead_coeff(), i, c.lead_mono()};
            found = true;
        }
    }
    if (!found) throw InvalidArgument("module lead of zero element");
    return best;
}

namespace {

struct LeadInfo {
    uint32_t coeff;
    size_t comp;
    Monomial mono;
};

LeadInfo lead_info(const VecPoly& v, const ModuleOrder& ord) {
    ModTerm t = module_lead(v, ord);
    return {t.coeff, t.comp, t.mono};
}

} // namespace

VecPoly module_normal_form(const VecPoly& f, const std::vector<VecPoly>& G,
                           const ModuleOrder& ord) {
    const RingPtr& ring = f.ring();
    const PrimeField& F = ring->field();
    std::vector<LeadInfo> leads;
    leads.reserve(G.size());
    for (const VecPoly& g : G) leads.push_back(lead_info(g, ord));

    VecPoly rem(ring, f.ncomps());
    VecPoly h = f;
    while (!h.is_zero()) {
        ModTerm t = module_lead(h, ord);
        bool reduced = false;
        for (size_t gi = 0; gi < G.size(); ++gi) {
            if (leads[gi].comp != t.comp || !leads[gi].mono.divides(t.mono)) continue;
            uint32_t c = F.div(t.coeff, leads[gi].coeff);
            h = h.sub(G[gi].mul_term(c, t.mono.div(leads[gi].mono)));
            reduced = true;
            break;
        }
        if (!reduced) {
            SparsePoly lt = SparsePoly::from_term(ring, t.coeff, t.mono);
            rem.comp(t.comp) = rem.comp(t.comp).add(lt);
            h.comp(t.comp) = h.comp(t.comp).sub(lt);
        }
    }
    return rem;
}

std::vector<VecPoly> module_gb(std::vector<VecPoly> gens, const ModuleOrder& ord) {
    std::vector<VecPoly> basis;
    for (VecPoly& g : gens)
        if (!g.is_zero()) basis.push_back(std::move(g));
    if (basis.empty()) return {};
    const RingPtr ring = basis[0].ring();
    const PrimeField& F = ring->field();

    std::vector<LeadInfo> leads;
    for (const VecPoly& b : basis) leads.push_back(lead_info(b, ord));

    struct Pair {
        long deg;
        size_t i, j;
        bool operator<(const Pair& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<Pair> queue;
    std::set<std::pair<size_t, size_t>> treated;

    auto add_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (leads[i].comp != leads[j].comp) continue;
            Monomial l = Monomial::lcm(leads[i].mono, leads[j].mono);
            queue.insert({static_cast<long>(l.degree()) + ord.shift(leads[j].comp), i, j});
        }
    };
    for (size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        size_t i = pr.i, j = pr.j;
        treated.insert({i, j});

        if (ord.ncomps == 1 && leads[i].mono.coprime(leads[j].mono)) continue;

        Monomial lij = Monomial::lcm(leads[i].mono, leads[j].mono);
        bool chain = false;
        for (size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == i || k == j || leads[k].comp != leads[i].comp) continue;
            if (!leads[k].mono.divides(lij)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            if (treated.count({p1.first, p1.second}) && treated.count({p2.first, p2.second}))
                chain = true;
        }
        if (chain) continue;

        VecPoly s = basis[i].mul_term(F.inv(leads[i].coeff), lij.div(leads[i].mono))
                        .sub(basis[j].mul_term(F.inv(leads[j].coeff), lij.div(leads[j].mono)));
        VecPoly r = module_normal_form(s, basis, ord);
        if (!r.is_zero()) {
            ModTerm t = module_lead(r, ord);
            basis.push_back(r.scale(F.inv(t.coeff)));
            leads.push_back(lead_info(basis.back(), ord));
            add_pairs_for(basis.size() - 1);
        }
    }

    // Reduced basis: drop elements with divisible leads, tail-reduce, sort.
    std::vector<size_t> idx(basis.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return ord.cmp(leads[a].comp, leads[a].mono, leads[b].comp, leads[b].mono) < 0;
    });
    std::vector<size_t> kept;
    for (size_t a : idx) {
        bool dominated = false;
        for (size_t b : kept) {
            if (leads[b].comp == leads[a].comp && leads[b].mono.divides(leads[a].mono)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(a);
    }
    std::vector<VecPoly> reduced;
    for (size_t pos = 0; pos < kept.size(); ++pos) {
        std::vector<VecPoly> others;
        for (size_t q = 0; q < kept.size(); ++q)
            if (q != pos) others.push_back(basis[kept[q]]);
        VecPoly g = module_normal_form(basis[kept[pos]], others, ord);
        ModTerm t = module_lead(g, ord);
        reduced.push_back(g.scale(F.inv(t.coeff)));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const VecPoly& a, const VecPoly& b) {
        ModTerm ta = module_lead(a, ord), tb = module_lead(b, ord);
        return ord.cmp(ta.comp, ta.mono, tb.comp, tb.mono) > 0;
    });
    return reduced;
}

std::vector<SparsePoly> groebner_basis(const std::vector<SparsePoly>& gens) {
    std::vector<VecPoly> wrapped;
    for (const SparsePoly& g : gens)
        if (!g.is_zero()) wrapped.push_back(VecPoly({g}));
    ModuleOrder ord{1, 0, {}};
    std::vector<VecPoly> gb = module_gb(std::move(wrapped), ord);
    std::vector<SparsePoly> out;
    out.reserve(gb.size());
    for (const VecPoly& v : gb) out.push_back(v.comp(0));
    return out;
}

SparsePoly normal_form(const SparsePoly& f, const std::vector<SparsePoly>& G) {
    std::vector<SparsePoly> cof;
    return normal_form_cofactors(f, G, cof);
}

SparsePoly normal_form_cofactors(const SparsePoly& f, const std::vector<SparsePoly>& G,
                                 std::vector<SparsePoly>& cof) {
    const RingPtr& ring = f.ring();
    const PrimeField& F = ring->field();
    cof.assign(G.size(), SparsePoly::zero(ring));
    SparsePoly rem = SparsePoly::zero(ring);
    SparsePoly h = f;
    while (!h.is_zero()) {
        const Term& t = h.lead();
        bool reduced = false;
        for (size_t gi = 0; gi < G.size(); ++gi) {
            if (G[gi].is_zero() || !G[gi].lead_mono().divides(t.mono)) continue;
            uint32_t c = F.div(t.coeff, G[gi].lead_coeff());
            Monomial m = t.mono.div(G[gi].lead_mono());
            cof[gi] = cof[gi].add(SparsePoly::from_term(ring, c, m));
            h = h.sub(G[gi].mul_term(c, m));
            reduced = true;
            break;
        }
        if (!reduced) {
            SparsePoly lt = SparsePoly::from_term(ring, t.coeff, t.mono);
            rem = rem.add(lt);
            h = h.sub(lt);
        }
    }
    return rem;
}

std::vector<VecPoly> syzygies(const std::vector<VecPoly>& cols,
                              const std::vector<int>& target_shifts) {
    if (cols.empty()) return {};
    const RingPtr& ring = cols[0].ring();
    size_t s = cols[0].ncomps();
    size_t r = cols.size();
    if (target_shifts.size() != s)
        throw InvalidArgument("syzygies: target shift count mismatch");

    ModuleOrder base{s, 0, target_shifts};
    std::vector<int> shifts = target_shifts;
    shifts.resize(s + r, 0);
    for (size_t i = 0; i < r; ++i) {
        if (cols[i].ncomps() != s) throw ContextError("syzygies: column rank mismatch");
        if (!cols[i].is_zero()) {
            ModTerm t = module_lead(cols[i], base);
            shifts[s + i] = static_cast<int>(t.mono.degree()) + base.shift(t.comp);
        }
    }
    ModuleOrder aug{s + r, s, shifts};

    std::vector<VecPoly> gens;
    gens.reserve(r);
    for (size_t i = 0; i < r; ++i) {
        VecPoly a(ring, s + r);
        for (size_t c = 0; c < s; ++c) a.comp(c) = cols[i].comp(c);
        a.comp(s + i) = SparsePoly::constant(ring, 1);
        gens.push_back(std::move(a));
    }
    std::vector<VecPoly> gb = module_gb(std::move(gens), aug);

    // Elements supported entirely in the tag block are the syzygy generators.
    std::vector<VecPoly> out;
    for (const VecPoly& g : gb) {
        bool junior_only = true;
        for (size_t c = 0; c < s && junior_only; ++c)
            if (!g.comp(c).is_zero()) junior_only = false;
        if (!junior_only) continue;
        std::vector<SparsePoly> comps;
        comps.reserve(r);
        for (size_t c = 0; c < r; ++c) comps.push_back(g.comp(s + c));
        out.push_back(VecPoly(std::move(comps)));
    }
    return out;
}

std::vector<SparsePoly> ideal_quotient(const std::vector<SparsePoly>& gb_I,
                                       const SparsePoly& g) {
    if (g.is_zero()) throw InvalidArgument("ideal quotient by zero");
    std::vector<VecPoly> cols;
    cols.push_back(VecPoly({g}));
    for (const SparsePoly& h : gb_I)
        if (!h.is_zero()) cols.push_back(VecPoly({h}));
    std::vector<VecPoly> syz = syzygies(cols, {0});
    std::vector<SparsePoly> gens;
    for (const VecPoly& v : syz)
        if (!v.comp(0).is_zero()) gens.push_back(v.comp(0));
    return groebner_basis(gens);
}

namespace {

int64_t monomial_count(size_t nvars, long t) {
    if (t < 0) return 0;
    if (nvars == 0) return t == 0 ? 1 : 0;
    // C(nvars-1+t, nvars-1)
    int64_t num = 1;
    for (long i = 1; i < static_cast<long>(nvars); ++i)
        num = num * (t + i) / i;
    return num;
}

std::vector<Monomial> minimal_leads(const std::vector<SparsePoly>& gb) {
    std::vector<Monomial> leads;
    for (const SparsePoly& g : gb)
        if (!g.is_zero()) leads.push_back(g.lead_mono());
    std::vector<Monomial> out;
    for (size_t a = 0; a < leads.size(); ++a) {
        bool dominated = false;
        for (size_t b = 0; b < leads.size() && !dominated; ++b)
            if (a != b && leads[b].divides(leads[a]) &&
                (!leads[a].divides(leads[b]) || b < a))
                dominated = true;
        if (!dominated) out.push_back(leads[a]);
    }
    return out;
}

} // namespace

std::vector<int64_t> hilbert_function(const RingPtr& ring,
                                      const std::vector<SparsePoly>& gb, int D) {
    if (D < 0) throw InvalidArgument("hilbert_function: negative truncation");
    size_t n = ring->nvars();
    std::vector<Monomial> leads = minimal_leads(gb);
    std::vector<int64_t> h(static_cast<size_t>(D) + 1, 0);
    auto rec = [&](auto&& self, size_t idx, int sign, const Monomial& lcm) -> void {
        if (idx == leads.size()) {
            for (long d = lcm.degree(); d <= D; ++d)
                h[d] += sign * monomial_count(n, d - static_cast<long>(lcm.degree()));
            return;
        }
        self(self, idx + 1, sign, lcm);
        Monomial bigger = Monomial::lcm(lcm, leads[idx]);
        if (static_cast<long>(bigger.degree()) <= D)
            self(self, idx + 1, -sign, bigger);
    };
    rec(rec, 0, 1, Monomial(n));
    return h;
}

int krull_dim(const RingPtr& ring, const std::vector<SparsePoly>& gb) {
    size_t n = ring->nvars();
    std::vector<Monomial> leads = minimal_leads(gb);
    for (const Monomial& m : leads)
        if (m.degree() == 0)
            throw ZeroRingError("unit ideal has no Krull dimension");
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (const Monomial& m : leads) {
            bool inside = true;
            for (size_t v = 0; v < n && inside; ++v)
                if (m.exp(v) > 0 && !(mask & (1u << v))) inside = false;
            if (inside) { independent = false; break; }
        }
        if (independent)
            best = std::max(best, static_cast<int>(__builtin_popcount(mask)));
    }
    return best;
}

} // namespace regal
