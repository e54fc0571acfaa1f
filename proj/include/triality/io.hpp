// io.hpp
// State-file ingestion and JSON/CSV serialization helpers.
//
// State files are JSON:
//   {"kind": "pure",  "amplitudes": [[re, im], [re, im], [re, im], [re, im]]}
//   {"kind": "mixed", "rho": [[[re, im] x4] x4]}
// in the |00>, |01>, |10>, |11> basis order. Mixed entries go through
// validate_density; pure amplitudes through make_pure.

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "triality/measures.hpp"
#include "triality/qstate.hpp"

namespace triality {

struct StateFile {
    std::optional<PureState> pure;  // set when kind == "pure"
    DensityMatrix density;          // always set
};

StateFile parse_state_json(const nlohmann::json& j);
StateFile load_state_file(const std::string& path);

// Round toward 12 significant digits so serialized numbers are stable.
double round_sig12(double x);

// Flat report object; "bell" present for pure inputs only and
// "derived_identity_defined" present (true) for mixed inputs only.
nlohmann::ordered_json report_to_json(const ComplementarityReport& report);

}  // namespace triality
