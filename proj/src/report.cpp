#include "regal/report.hpp"

#include <sstream>

namespace regal {

Json make_doc(const std::string& ring_id) {
    Json doc;
    doc["schema"] = 1;
    doc["ring"] = ring_id;
    return doc;
}

Json betti_json(const BettiTable& bt) {
    Json rows = Json::array();
    for (const auto& [key, rank] : bt.entries())
        rows.push_back(Json::array({key.first, key.second, rank}));
    return rows;
}

Json conditions_json(const RegularityReport& rep) {
    Json c;
    c["a"] = Json{{"finite", rep.cond_a.finite}, {"value", rep.cond_a.value}};
    c["b"] = rep.cond_b;
    c["c"] = rep.cond_c;
    c["d"] = rep.cond_d;
    return c;
}

Json koszul_json(const std::vector<int64_t>& homology, int depth_value) {
    Json k;
    k["homology"] = homology;
    k["depth"] = depth_value;
    return k;
}

Json cor_json(const std::string& g, const std::vector<int64_t>& tor, const CorE2& e2,
              const std::vector<int64_t>& d2_ranks, const std::vector<AbutmentRow>& abutment) {
    Json c;
    c["g"] = g;
    c["tor"] = tor;
    c["e2"] = Json{{"p0", e2.p0}, {"p1", e2.p1}};
    c["d2_ranks"] = d2_ranks;
    Json ab = Json::array();
    for (const AbutmentRow& row : abutment)
        ab.push_back(Json::array({row.n, row.lhs, row.rhs}));
    c["abutment"] = ab;
    return c;
}

Json findings_json(const std::vector<Finding>& findings) {
    Json rows = Json::array();
    for (const Finding& f : findings) {
        Json row;
        row["ring"] = f.ring_id;
        row["kind"] = f.kind;
        row["detail"] = f.detail;
        rows.push_back(row);
    }
    return rows;
}

Json entry_json(const CorpusEntry& ent) {
    Json doc;
    doc["ring"] = ent.id;
    if (ent.error) {
        doc["error"] = ent.error_text;
        return doc;
    }
    doc["n"] = ent.report.n;
    doc["conditions"] = conditions_json(ent.report);
    doc["consistent"] = ent.report.consistent;
    doc["inconclusive"] = ent.report.inconclusive;
    Json totals = Json::array();
    for (const auto& [i, rank] : ent.betti_totals) totals.push_back(Json::array({i, rank}));
    doc["betti_totals"] = totals;
    doc["koszul"] = koszul_json(ent.koszul_homology, ent.depth_value);
    if (ent.has_nzd)
        doc["cor"] = cor_json(ent.nzd, ent.cor_tor, ent.cor_e2_cols, ent.cor_d2,
                              ent.cor_abutment);
    doc["findings"] = findings_json(ent.findings);
    return doc;
}

Json corpus_json(const CorpusSummary& sum) {
    Json doc;
    doc["schema"] = 1;
    Json entries = Json::array();
    for (const CorpusEntry& ent : sum.entries) entries.push_back(entry_json(ent));
    doc["corpus"] = entries;
    doc["errors"] = sum.errors;
    doc["findings"] = sum.findings;
    return doc;
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::string betti_text(const BettiTable& bt) {
    std::ostringstream os;
    for (int i = 0; i <= bt.max_step(); ++i) {
        os << "  " << i << ":";
        for (const auto& [key, rank] : bt.entries())
            if (key.first == i) os << " " << key.second << "^" << rank;
        os << "\n";
    }
    os << "totals: ";
    for (int i = 0; i <= bt.max_step(); ++i) os << (i ? "," : "") << bt.total(i);
    if (bt.truncated()) os << ",...";
    os << "\n";
    return os.str();
}

std::string regcheck_text(const RegularityReport& rep) {
    std::ostringstream os;
    if (rep.consistent && rep.cond_a.finite) {
        os << "REGULAR, n=" << rep.n << ", gldh=" << rep.cond_a.value << "\n";
    } else if (rep.consistent) {
        os << "NOT REGULAR (confirmed to bound), n=" << rep.n << "\n";
    } else if (rep.inconclusive) {
        os << "INCONCLUSIVE, n=" << rep.n << ": resolution still open at the bound; raise it\n";
    } else {
        os << "INCONSISTENT, n=" << rep.n << ": a=" << (rep.cond_a.finite ? "finite" : "open")
           << " b=" << rep.cond_b << " c=" << rep.cond_c << " d=" << rep.cond_d << "\n";
    }
    return os.str();
}

std::string resolution_text(const FreeComplex& cx) {
    std::ostringstream os;
    for (size_t i = 0; i < cx.shifts.size(); ++i) {
        os << "L" << i << " rank " << cx.shifts[i].size() << ", shifts";
        for (int s : cx.shifts[i]) os << " " << s;
        os << "\n";
        if (i > 0) {
            const PolyMat& d = cx.diffs[i - 1];
            for (size_t r = 0; r < d.nrows(); ++r) {
                os << "  [";
                for (size_t c = 0; c < d.ncols(); ++c)
                    os << (c ? ", " : " ") << to_string(d.at(r, c));
                os << " ]\n";
            }
        }
    }
    os << (cx.truncated ? "truncated at the step bound\n" : "resolution complete\n");
    return os.str();
}

std::string findings_text(const std::vector<Finding>& findings) {
    std::ostringstream os;
    for (const Finding& f : findings)
        os << "finding [" << f.kind << "] " << f.ring_id << ": " << f.detail << "\n";
    return os.str();
}

std::string corpus_text(const CorpusSummary& sum) {
    std::ostringstream os;
    for (const CorpusEntry& ent : sum.entries) {
        os << ent.id << ": ";
        if (ent.error) {
            os << "ERROR " << ent.error_text << "\n";
            continue;
        }
        std::string line = regcheck_text(ent.report);
        line.pop_back();
        os << line;
        if (ent.has_nzd) os << "; nzd " << ent.nzd;
        os << "; findings " << ent.findings.size() << "\n";
        os << findings_text(ent.findings);
    }
    os << sum.entries.size() << " rings, " << sum.errors << " errors, " << sum.findings
       << " findings\n";
    return os.str();
}

} // namespace regal
