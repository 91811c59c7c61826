#ifndef REGAL_REGULARITY_HPP
#define REGAL_REGULARITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "regal/resolution.hpp"
#include "regal/ring.hpp"
#include "regal/spectral.hpp"

namespace regal {

// Four independent routes to regularity, evaluated side by side:
//   a) finite free resolution of k (global homological dimension)
//   b) embedding dimension equals Krull dimension
//   c) minimal generator count of the irrelevant ideal equals Krull dimension
//   d) Hilbert function agrees with a polynomial ring's in dim variables
// c coincides with b here (minimal generators of m = dim_k m/m^2), but is
// reported on its own line so the b/c equivalence stays visible.
struct RegularityReport {
    std::string ring_id;
    int n = 0;                  // Krull dimension
    PdVerdict cond_a;           // value = gldh when finite, the bound otherwise
    bool cond_b = false;
    bool cond_c = false;
    bool cond_d = false;
    bool consistent = false;    // all four routes agree
    bool inconclusive = false;  // a) hit the bound while b/c/d say regular
};

// bound < 0 means 2n + 4 resolution steps; D is the Hilbert prefix length.
// A confirmed-regular report has gldh == n; anything else raises
// InternalInconsistency.
RegularityReport regularity_report(const RingPresentation& A, const std::string& ring_id,
                                   int bound = -1, int D = 12);

// A mathematical deviation, as opposed to an input error.
struct Finding {
    std::string ring_id;
    std::string kind;
    std::string detail;
};

struct CorpusConfig {
    int bound = -1;    // per-ring default 2n + 4
    int D = 12;
    int window = 5;
    int attempts = 64;
    uint64_t seed = 12345;
};

// Everything computed for one corpus member. `error` marks files that failed
// to parse or validate; such entries carry no report.
struct CorpusEntry {
    std::string id;
    bool error = false;
    std::string error_text;
    RegularityReport report;
    std::vector<std::pair<int, int64_t>> betti_totals;  // (step, rank)
    std::vector<int64_t> koszul_homology;
    int depth_value = -1;
    bool has_nzd = false;            // a degree-1 nonzerodivisor was found
    std::string nzd;                 // its printed form
    std::vector<int64_t> cor_tor;    // tor_ring_change totals
    CorE2 cor_e2_cols;
    std::vector<int64_t> cor_d2;
    std::vector<AbutmentRow> cor_abutment;
    std::vector<Finding> findings;
};

struct CorpusSummary {
    std::vector<CorpusEntry> entries;  // sorted by id
    int errors = 0;
    int findings = 0;
};

// Runs the full per-ring pipeline on each file: the four-condition report,
// Betti totals, Koszul depth, the regular-member extras (binomial Betti,
// vanishing of Tor past dim, depth = dim, the Auslander-Buchsbaum identity
// for k and for the ring itself, descent along a linear nonzerodivisor), and
// the change-of-rings suite whenever a degree-1 nonzerodivisor exists.
// Failures are isolated per entry; the run always completes.
CorpusSummary run_corpus(const std::vector<std::string>& paths, const CorpusConfig& cfg);

} // namespace regal

#endif
