#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "regal/error.hpp"
#include "regal/koszul.hpp"
#include "regal/parse.hpp"
#include "regal/regularity.hpp"
#include "regal/report.hpp"
#include "regal/ringfile.hpp"

using namespace regal;

namespace {

struct Loaded {
    RingPresentation A;
    std::string id;
};

Loaded load(const std::string& path) {
    RingFileData rf = load_ring_file(path);
    Loaded out;
    out.A = validate(rf.ring, rf.ideal);
    out.id = std::filesystem::path(path).stem().string();
    return out;
}

int default_steps(const RingPresentation& A) { return 2 * embedding_dim(A) + 4; }

std::string join64(const std::vector<int64_t>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void emit(const Json& doc, bool json, const std::string& text) {
    if (json)
        std::cout << render_json(doc);
    else
        std::cout << text;
}

int cmd_betti(const std::string& path, int steps, bool json) {
    Loaded L = load(path);
    BettiTable bt = betti(L.A, steps < 0 ? default_steps(L.A) : steps);
    Json doc = make_doc(L.id);
    doc["betti"] = betti_json(bt);
    doc["truncated"] = bt.truncated();
    emit(doc, json, betti_text(bt));
    return 0;
}

int cmd_resolve(const std::string& path, int steps, bool json) {
    Loaded L = load(path);
    FreeComplex cx =
        minimal_resolution(L.A, k_presentation(L.A), steps < 0 ? default_steps(L.A) : steps);
    Json doc = make_doc(L.id);
    Json res;
    res["shifts"] = cx.shifts;
    Json dlist = Json::array();
    for (const PolyMat& d : cx.diffs) {
        Json rows = Json::array();
        for (size_t r = 0; r < d.nrows(); ++r) {
            Json row = Json::array();
            for (size_t c = 0; c < d.ncols(); ++c) row.push_back(to_string(d.at(r, c)));
            rows.push_back(row);
        }
        dlist.push_back(rows);
    }
    res["differentials"] = dlist;
    res["truncated"] = cx.truncated;
    doc["resolution"] = res;
    emit(doc, json, resolution_text(cx));
    return 0;
}

std::vector<int64_t> koszul_totals(const RingPresentation& A, int D) {
    if (A.nvars() == 0) {
        int64_t h0 = 0;
        for (int64_t v : hilbert_function(A.ring, A.gb, D)) h0 += v;
        return {h0};
    }
    std::vector<SparsePoly> vars;
    for (size_t i = 0; i < A.nvars(); ++i) vars.push_back(SparsePoly::variable(A.ring, i));
    return koszul_homology_dims(koszul(A, vars), D);
}

int cmd_koszul(const std::string& path, int D, bool json) {
    Loaded L = load(path);
    std::vector<int64_t> h = koszul_totals(L.A, D);
    int dep = depth(L.A, {}, D);
    Json doc = make_doc(L.id);
    doc["koszul"] = koszul_json(h, dep);
    emit(doc, json, "homology totals: " + join64(h) + "\ndepth: " + std::to_string(dep) + "\n");
    return 0;
}

int cmd_depth(const std::string& path, int D, bool json) {
    Loaded L = load(path);
    int dep = depth(L.A, {}, D);
    Json doc = make_doc(L.id);
    doc["depth"] = dep;
    emit(doc, json, "depth " + std::to_string(dep) + "\n");
    return 0;
}

int cmd_dim(const std::string& path, bool json) {
    Loaded L = load(path);
    Json doc = make_doc(L.id);
    doc["dim"] = L.A.dim;
    emit(doc, json, "dim " + std::to_string(L.A.dim) + "\n");
    return 0;
}

int cmd_regcheck(const std::string& path, int bound, int D, bool json) {
    Loaded L = load(path);
    RegularityReport rep = regularity_report(L.A, L.id, bound, D);
    Json doc = make_doc(L.id);
    doc["n"] = rep.n;
    doc["conditions"] = conditions_json(rep);
    doc["consistent"] = rep.consistent;
    doc["inconclusive"] = rep.inconclusive;
    emit(doc, json, regcheck_text(rep));
    return rep.consistent ? 0 : 1;
}

int cmd_cor(const std::string& path, const std::string& gtext, int window, int D,
            uint64_t seed, bool json) {
    Loaded L = load(path);
    std::vector<Finding> findings;
    SparsePoly g = SparsePoly::zero(L.A.ring);
    if (!gtext.empty()) {
        g = parse_poly(L.A.ring, gtext);
        if (!is_nonzerodivisor(L.A, g))
            findings.push_back({L.id, "zerodivisor", to_string(g) + " is a zerodivisor"});
    } else {
        try {
            g = find_nonzerodivisor(L.A, 64, seed);
        } catch (const SearchExhausted& e) {
            findings.push_back({L.id, "nzd-search", e.what()});
        }
    }
    Json doc = make_doc(L.id);
    std::string text;
    if (findings.empty()) {
        BettiTable tor = tor_ring_change(L.A, g, 4);
        std::vector<int64_t> tor_totals;
        for (int i = 0; i <= 4; ++i) tor_totals.push_back(tor.total(i));
        CorComplex C = cor_double_complex(L.A, g, window, D);
        CorE2 e2;
        try {
            e2 = cor_e2(C);
        } catch (const InternalInconsistency& e) {
            findings.push_back({L.id, "cor-e2", e.what()});
        }
        D2Report d2 = d2_vanishing_check(C);
        if (!d2.all_zero)
            findings.push_back({L.id, "cor-d2", "nonzero d2 ranks " + join64(d2.ranks)});
        std::vector<AbutmentRow> ab = abutment_check(C);
        for (const AbutmentRow& row : ab)
            if (!row.equal)
                findings.push_back({L.id, "cor-abutment",
                                    "total degree " + std::to_string(row.n) + ": " +
                                        std::to_string(row.lhs) + " != " +
                                        std::to_string(row.rhs)});
        doc["cor"] = cor_json(to_string(g), tor_totals, e2, d2.ranks, ab);
        text += "g: " + to_string(g) + "\n";
        text += "tor: " + join64(tor_totals) + "\n";
        text += "e2 p0: " + join64(e2.p0) + "\ne2 p1: " + join64(e2.p1) + "\n";
        text += "d2 ranks: " + join64(d2.ranks) + "\n";
        text += "abutment:";
        for (const AbutmentRow& row : ab)
            text += " n=" + std::to_string(row.n) + " " + std::to_string(row.lhs) +
                    (row.equal ? "==" : "!=") + std::to_string(row.rhs);
        text += "\n";
    }
    doc["findings"] = findings_json(findings);
    text += findings_text(findings);
    emit(doc, json, text);
    return findings.empty() ? 0 : 1;
}

int cmd_corpus(const std::string& dir, int bound, int D, int window, uint64_t seed,
               bool json) {
    std::vector<std::string> paths;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".ring") paths.push_back(e.path().string());
    std::sort(paths.begin(), paths.end());
    CorpusConfig cfg;
    cfg.bound = bound;
    cfg.D = D;
    cfg.window = window;
    cfg.seed = seed;
    CorpusSummary sum = run_corpus(paths, cfg);
    emit(corpus_json(sum), json, corpus_text(sum));
    if (sum.errors > 0) return 2;
    return sum.findings > 0 ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact regularity checks for standard-graded rings"};
    app.require_subcommand(1);
    bool json = false;
    uint64_t seed = 12345;
    app.add_flag("--json", json, "emit a JSON document instead of text");
    app.add_option("--seed", seed, "seed for randomized searches");

    std::string file, gtext, dir;
    int steps = -1, bound = -1, D = 12, window = 5;

    CLI::App* betti_cmd = app.add_subcommand("betti", "graded Betti numbers of k");
    betti_cmd->add_option("file", file)->required();
    betti_cmd->add_option("--steps", steps, "resolution steps (default 2n+4)");

    CLI::App* resolve_cmd = app.add_subcommand("resolve", "minimal free resolution of k");
    resolve_cmd->add_option("file", file)->required();
    resolve_cmd->add_option("--steps", steps, "resolution steps (default 2n+4)");

    CLI::App* koszul_cmd = app.add_subcommand("koszul", "Koszul homology totals and depth");
    koszul_cmd->add_option("file", file)->required();
    koszul_cmd->add_option("--maxdeg", D, "internal degree truncation");

    CLI::App* depth_cmd = app.add_subcommand("depth", "depth via Koszul homology");
    depth_cmd->add_option("file", file)->required();
    depth_cmd->add_option("--maxdeg", D, "internal degree truncation");

    CLI::App* dim_cmd = app.add_subcommand("dim", "Krull dimension");
    dim_cmd->add_option("file", file)->required();

    CLI::App* regcheck_cmd = app.add_subcommand("regcheck", "four-way regularity report");
    regcheck_cmd->add_option("file", file)->required();
    regcheck_cmd->add_option("--bound", bound, "resolution bound (default 2n+4)");
    regcheck_cmd->add_option("--maxdeg", D, "Hilbert prefix length");

    CLI::App* cor_cmd = app.add_subcommand("cor", "change-of-rings suite along a linear form");
    cor_cmd->add_option("file", file)->required();
    cor_cmd->add_option("--g", gtext, "linear form (default: search for one)");
    cor_cmd->add_option("--window", window, "checked total degrees");
    cor_cmd->add_option("--maxdeg", D, "internal degree truncation");

    CLI::App* corpus_cmd = app.add_subcommand("corpus", "run every .ring file in a directory");
    corpus_cmd->add_option("dir", dir)->required();
    corpus_cmd->add_option("--bound", bound, "resolution bound (default 2n+4)");
    corpus_cmd->add_option("--maxdeg", D, "internal degree truncation");
    corpus_cmd->add_option("--window", window, "change-of-rings window");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (betti_cmd->parsed()) return cmd_betti(file, steps, json);
        if (resolve_cmd->parsed()) return cmd_resolve(file, steps, json);
        if (koszul_cmd->parsed()) return cmd_koszul(file, D, json);
        if (depth_cmd->parsed()) return cmd_depth(file, D, json);
        if (dim_cmd->parsed()) return cmd_dim(file, json);
        if (regcheck_cmd->parsed()) return cmd_regcheck(file, bound, D, json);
        if (cor_cmd->parsed()) return cmd_cor(file, gtext, window, D, seed, json);
        if (corpus_cmd->parsed()) return cmd_corpus(dir, bound, D, window, seed, json);
    } catch (const TruncationError& e) {
        std::cerr << "error: " << e.what() << "; need --maxdeg >= " << e.needed_degree << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
