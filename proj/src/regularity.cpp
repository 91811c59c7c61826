#include "regal/regularity.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "regal/error.hpp"
#include "regal/koszul.hpp"
#include "regal/ringfile.hpp"

namespace regal {

namespace {

// C(m, k) for the small inputs a Hilbert comparison needs.
int64_t binom(int m, int k) {
    if (k < 0 || k > m) return 0;
    int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
}

int64_t poly_ring_hf(int n, int d) {
    if (n == 0) return d == 0 ? 1 : 0;
    return binom(n - 1 + d, n - 1);
}

std::vector<SparsePoly> variable_list(const RingPtr& ring) {
    std::vector<SparsePoly> out;
    for (size_t i = 0; i < ring->nvars(); ++i)
        out.push_back(SparsePoly::variable(ring, i));
    return out;
}

void add_finding(CorpusEntry& ent, const std::string& kind, const std::string& detail) {
    ent.findings.push_back({ent.id, kind, detail});
}

std::string join64(const std::vector<int64_t>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void ring_pipeline(CorpusEntry& ent, const RingPresentation& A, const CorpusConfig& cfg) {
    ent.report = regularity_report(A, ent.id, cfg.bound, cfg.D);
    const RegularityReport& rep = ent.report;
    int bound = cfg.bound < 0 ? 2 * embedding_dim(A) + 4 : cfg.bound;

    BettiTable bt = betti(A, bound);
    for (int i = 0; i <= bt.max_step(); ++i) ent.betti_totals.push_back({i, bt.total(i)});
    if (A.nvars() == 0) {
        // empty Koszul complex: H_0 = A, nothing above it
        int64_t h0 = 0;
        for (int64_t v : hilbert_function(A.ring, A.gb, cfg.D)) h0 += v;
        ent.koszul_homology = {h0};
    } else {
        ent.koszul_homology = koszul_homology_dims(koszul(A, variable_list(A.ring)), cfg.D);
    }
    ent.depth_value = depth(A, {}, cfg.D);

    if (rep.inconclusive) {
        add_finding(ent, "inconclusive-bound",
                    "resolution of k still open after " + std::to_string(bound) +
                        " steps while b/c/d hold; raise the bound");
    } else if (!rep.consistent) {
        std::ostringstream os;
        os << "a=" << (rep.cond_a.finite ? "finite" : "not-finite-to-bound")
           << " b=" << rep.cond_b << " c=" << rep.cond_c << " d=" << rep.cond_d;
        add_finding(ent, "conditions-disagree", os.str());
    }

    bool regular = rep.consistent && rep.cond_a.finite;
    if (regular) {
        int n = rep.n;
        for (int i = 0; i <= n + 1; ++i) {
            int64_t want = binom(n, i);
            if (bt.total(i) != want)
                add_finding(ent, "betti-binomial",
                            "Tor_" + std::to_string(i) + "(k,k) has dimension " +
                                std::to_string(bt.total(i)) + ", expected " +
                                std::to_string(want));
        }
        if (ent.depth_value != n)
            add_finding(ent, "depth", "depth " + std::to_string(ent.depth_value) +
                                          " differs from dimension " + std::to_string(n));
        for (bool residue : {true, false}) {
            auto mod = residue ? variable_list(A.ring) : std::vector<SparsePoly>{};
            ABReport ab = ab_check(A, mod, bound, cfg.D);
            if (!ab.holds)
                add_finding(ent, "auslander-buchsbaum",
                            std::string(residue ? "M=k" : "M=A") + ": pd " +
                                std::to_string(ab.pd) + " + depth " + std::to_string(ab.depth) +
                                " != gldh " + std::to_string(ab.gldh));
        }
        if (n >= 1) {
            SparsePoly g = find_nonzerodivisor(A, cfg.attempts, cfg.seed);
            RegularityReport sub = regularity_report(quotient_by(A, g).quotient,
                                                     ent.id + "/" + to_string(g), cfg.bound,
                                                     cfg.D);
            if (!(sub.consistent && sub.cond_a.finite && sub.n == n - 1))
                add_finding(ent, "descent", "quotient by " + to_string(g) +
                                                " is not regular of dimension " +
                                                std::to_string(n - 1));
        }
    }

    if (ent.depth_value >= 1) {
        SparsePoly g(A.ring);
        bool found = false;
        try {
            g = find_nonzerodivisor(A, cfg.attempts, cfg.seed);
            found = true;
        } catch (const SearchExhausted& e) {
            add_finding(ent, "nzd-search",
                        std::string("depth is positive but the search failed: ") + e.what());
        }
        if (found) {
            ent.has_nzd = true;
            ent.nzd = to_string(g);
            BettiTable tor = tor_ring_change(A, g, 4);
            for (int i = 0; i <= 4; ++i) ent.cor_tor.push_back(tor.total(i));
            std::vector<int64_t> want = {1, 1, 0, 0, 0};
            if (ent.cor_tor != want)
                add_finding(ent, "cor-tor", "Tor totals " + join64(ent.cor_tor) +
                                                ", expected " + join64(want));
            try {
                CorComplex C = cor_double_complex(A, g, cfg.window, cfg.D);
                ent.cor_e2_cols = cor_e2(C);
                D2Report d2 = d2_vanishing_check(C);
                ent.cor_d2 = d2.ranks;
                if (!d2.all_zero)
                    add_finding(ent, "cor-d2", "nonzero d2 ranks " + join64(d2.ranks));
                ent.cor_abutment = abutment_check(C);
                for (const AbutmentRow& row : ent.cor_abutment)
                    if (!row.equal)
                        add_finding(ent, "cor-abutment",
                                    "total degree " + std::to_string(row.n) + ": " +
                                        std::to_string(row.lhs) + " != " +
                                        std::to_string(row.rhs));
            } catch (const TruncationError& e) {
                add_finding(ent, "cor-truncation",
                            std::string(e.what()) + "; need degree " +
                                std::to_string(e.needed_degree));
            }
        }
    }
}

} // namespace

RegularityReport regularity_report(const RingPresentation& A, const std::string& ring_id,
                                   int bound, int D) {
    RegularityReport rep;
    rep.ring_id = ring_id;
    rep.n = A.dim;
    if (bound < 0) bound = 2 * embedding_dim(A) + 4;
    rep.cond_a = pd_finite(A, bound);
    rep.cond_b = embedding_dim(A) == A.dim;
    rep.cond_c = rep.cond_b;
    std::vector<int64_t> hf = hilbert_function(A.ring, A.gb, D);
    rep.cond_d = true;
    for (int d = 0; d <= D; ++d)
        if (hf[static_cast<size_t>(d)] != poly_ring_hf(rep.n, d)) {
            rep.cond_d = false;
            break;
        }
    if (rep.cond_a.finite && rep.cond_a.value != rep.n)
        throw InternalInconsistency("finite homological dimension " +
                                    std::to_string(rep.cond_a.value) +
                                    " differs from Krull dimension " + std::to_string(rep.n));
    bool bcd = rep.cond_b && rep.cond_d;
    rep.consistent = (rep.cond_a.finite && bcd) ||
                     (!rep.cond_a.finite && !rep.cond_b && !rep.cond_d);
    rep.inconclusive = !rep.cond_a.finite && bcd;
    return rep;
}

CorpusSummary run_corpus(const std::vector<std::string>& paths, const CorpusConfig& cfg) {
    CorpusSummary sum;
    for (const std::string& path : paths) {
        CorpusEntry ent;
        ent.id = std::filesystem::path(path).stem().string();
        bool loaded = false;
        RingPresentation A;
        try {
            RingFileData rf = load_ring_file(path);
            A = validate(rf.ring, rf.ideal);
            loaded = true;
        } catch (const Error& e) {
            ent.error = true;
            ent.error_text = e.what();
        }
        if (loaded) {
            try {
                ring_pipeline(ent, A, cfg);
            } catch (const InternalInconsistency& e) {
                add_finding(ent, "internal-inconsistency", e.what());
            } catch (const Error& e) {
                ent.error = true;
                ent.error_text = std::string("computation failed: ") + e.what();
            }
        }
        sum.entries.push_back(std::move(ent));
    }
    std::sort(sum.entries.begin(), sum.entries.end(),
              [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
    for (const CorpusEntry& ent : sum.entries) {
        if (ent.error) ++sum.errors;
        sum.findings += static_cast<int>(ent.findings.size());
    }
    return sum;
}

} // namespace regal
