#pragma once

// JSON forms of the module values. Key order follows nlohmann's default
// (sorted), so dumps are deterministic.

#include <json.hpp>

#include "curvecal/cobordism.hpp"
#include "curvecal/crossing.hpp"
#include "curvecal/heegaard.hpp"
#include "curvecal/intersection.hpp"

namespace curvecal {

using Json = nlohmann::json;

// {"genus": k, "H": [[...], ...], "det": d}
Json to_json(const BasisMatrix& m);
BasisMatrix basis_matrix_from_json(const Json& j);
Json to_json(const BasisVerdict& v);

// {"m_order": [...], "mprime_order": [...], "signs": {id: +-1}}
Json to_json(const CrossingDiagram& d);
CrossingDiagram diagram_from_json(const Json& j);
Json to_json(const Reduction& r);

Json to_json(const Presentation& p);
// {"sigma", "orders", "pi1", "simply_connected", "finite", "prime"}
Json to_json(const ClassificationReport& r);

// {"records": [{"id", "index", "incidence": {partner: int}}]}
Json to_json(const CobordismChain& c);
CobordismChain chain_from_json(const Json& j);
// {"final_type": [r0, r1, r2, r3], "moves": [...]}
Json to_json(const Normalization& n);

}  // namespace curvecal
