#pragma once

#include "calogero/construct.hpp"
#include "calogero/harmonics.hpp"

#include "json.hpp"

namespace calogero {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

ordered_json poly_to_json(const Poly& p, bool even);
ordered_json scalar_to_json(const ExactScalar& s);
ordered_json params_to_json(const Params& p);
ordered_json ortho_to_json(const OrthoPoly& p);
ordered_json decomposition_to_json(const HarmonicDecomposition& dec, const Params& params);

Params params_from_json(const ordered_json& j);
Poly poly_from_json(const ordered_json& j);

}  // namespace calogero
