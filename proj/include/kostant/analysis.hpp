#pragma once
/* One-stop record for a nilradical: every combinatorial invariant the
 * library computes, with deterministic JSON and CSV renderings.  Roots are
 * rendered as coefficient strings by default or in epsilon coordinates for
 * classical types on request. */

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "kostant/classify.hpp"
#include "kostant/oracle.hpp"
#include "kostant/stabiliser.hpp"

namespace kostant {

struct AnalyzeOptions {
    bool with_oracle = false;
    int samples = 5;
    std::uint64_t seed = 42;
    bool epsilon = false;
};

struct AnalysisRecord {
    SimpleType stype;
    Nilradical nil;
    std::vector<int> cascade_roots;  // positive-root indices of the cascade part
    StabiliserReport stab;
    ClassificationReport cls;
    std::optional<OracleReport> oracle;
};

/* builds the full record; the structure constants are only consulted when
 * the oracle is requested, and may be shared across calls */
AnalysisRecord analyze(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                       const std::vector<int>& t_set, const AnalyzeOptions& opt = {},
                       const StructureConstants* sc = nullptr);

nlohmann::ordered_json record_json(const RootSystem& rs, const AnalysisRecord& rec,
                                   bool epsilon = false);

std::string csv_header();
std::string csv_row(const RootSystem& rs, const AnalysisRecord& rec, bool epsilon = false);

}  // namespace kostant
