#pragma once

#include <json.hpp>

#include "mfk/blowup.hpp"
#include "mfk/ideal.hpp"

namespace mfk {

using Json = nlohmann::ordered_json;

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const Json& j);

Json ideal_to_json(const Ideal& I);
Ideal ideal_from_json(const Json& j);

Json report_to_json(const Report& r);

/// Chart dump: pivots (1-based), unknowns, generators, elimination log,
/// residual, classification.
Json chart_to_json(const Chart& c, const ResidualClass* cls = nullptr);

}  // namespace mfk
