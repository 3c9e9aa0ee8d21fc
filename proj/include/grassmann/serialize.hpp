#pragma once
// JSON/text serialization shared by the CLI and the tests. All emitters are
// deterministic: fixed field order, fixed float formatting.

#include <nlohmann/json.hpp>

#include "grassmann/fqcount.hpp"
#include "grassmann/homology.hpp"
#include "grassmann/incidence.hpp"
#include "grassmann/kpflow.hpp"
#include "grassmann/qpoly.hpp"

namespace gr {

using Json = nlohmann::ordered_json;

// {"var": "q", "coeffs": [c0, c1, ...]} (coefficients as decimal strings
// would lose readability; they fit in 64 bits at the supported sizes, and
// overflow throws rather than truncating).
Json to_json(const Poly& p);
Json to_json(const Symbol& s);
Json to_json(const AbGroup& g);
Json to_json(const CohomologyTable& t);
Json to_json(const IncidenceGraph& g);
Json to_json(const CrossingEvent& e);

std::string csv_grid(const std::vector<GridCell>& grid);

}  // namespace gr
