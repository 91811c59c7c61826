#ifndef REGAL_REPORT_HPP
#define REGAL_REPORT_HPP

#include <string>

#include <json.hpp>

#include "regal/regularity.hpp"

namespace regal {

using Json = nlohmann::ordered_json;

// All documents carry {"schema": 1, "ring": <id>} followed by the sections a
// command produced. Key order is fixed so identical runs serialize
// byte-identically.
Json make_doc(const std::string& ring_id);

Json betti_json(const BettiTable& bt);
Json conditions_json(const RegularityReport& rep);
Json koszul_json(const std::vector<int64_t>& homology, int depth_value);
Json cor_json(const std::string& g, const std::vector<int64_t>& tor, const CorE2& e2,
              const std::vector<int64_t>& d2_ranks, const std::vector<AbutmentRow>& abutment);
Json findings_json(const std::vector<Finding>& findings);
Json entry_json(const CorpusEntry& ent);
Json corpus_json(const CorpusSummary& sum);

// 2-space indented dump with a trailing newline.
std::string render_json(const Json& doc);

std::string betti_text(const BettiTable& bt);
std::string regcheck_text(const RegularityReport& rep);
std::string resolution_text(const FreeComplex& cx);
std::string findings_text(const std::vector<Finding>& findings);
std::string corpus_text(const CorpusSummary& sum);

} // namespace regal

#endif
