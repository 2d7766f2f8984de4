#ifndef FUZZPOLAR_IO_HPP
#define FUZZPOLAR_IO_HPP

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "fuzzpolar/fuzzy_set.hpp"
#include "fuzzpolar/oracle.hpp"
#include "fuzzpolar/topology.hpp"

namespace fuzzpolar {

// Key order is fixed (ordered_json) and rationals serialize as reduced
// strings, so writing is deterministic byte for byte.
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

// The documented evaluation conventions, hashed into every report so a
// result can be tied to the convention set that produced it.
const std::string& convention_ledger();
std::string convention_ledger_hash(); // FNV-1a 64, hex

struct FuzzySetDocument {
    StepFuzzySet set;
    std::optional<Mat> pairing;

    DualPair dual_pair() const {
        return pairing ? DualPair(set.dim(), *pairing) : DualPair(set.dim());
    }
};

Json region_to_json(const Region& r);
Region region_from_json(const Json& j, int dim);

Json document_to_json(const StepFuzzySet& mu,
                      const std::optional<Mat>& pairing = std::nullopt);
FuzzySetDocument document_from_json(const Json& j);

// Canonical text forms; parse(write(mu)) is the identity on canonical sets.
std::string write_document(const StepFuzzySet& mu,
                           const std::optional<Mat>& pairing = std::nullopt);
FuzzySetDocument parse_document(const std::string& text);

// {"vectors": [["1","0"], ...]}
std::vector<Vec> vectors_from_json(const Json& j, int dim);
Json vectors_to_json(const std::vector<Vec>& vs);

Json grade_table_to_json(const GradeTable& table);
GradeTable grade_table_from_json(const Json& j);

Json base_report_to_json(const BaseReport& r);
Json mackey_report_to_json(const MackeyReport& r);
Json compare_report_to_json(const CompareReport& r);

// Wraps a report payload with the tool version and convention hash.
Json stamped_report(Json payload);

} // namespace fuzzpolar

#endif
