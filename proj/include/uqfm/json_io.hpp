#pragma once

#include <json.hpp>

#include "uqfm/modcat.hpp"
#include "uqfm/spectrum.hpp"
#include "uqfm/whittaker.hpp"

namespace uqfm {

using Json = nlohmann::ordered_json;

Json to_json(const SpectrumCase& c);
Json to_json(const MaxIdealPoint& p);
Json to_json(const AlgElement& x);
Json to_json(const SparseMat& m);
Json to_json(const WeightModule& m);
Json to_json(const WhittakerModule& m);

/// Inverse of to_json(WeightModule); accepts exactly the emitted schema.
WeightModule weight_module_from_json(const Json& j);

} // namespace uqfm
