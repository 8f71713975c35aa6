#pragma once

#include <optional>

#include <json.hpp>

#include "gkz/config.hpp"
#include "gkz/game.hpp"
#include "gkz/poly.hpp"
#include "gkz/resultant.hpp"
#include "gkz/triangulation.hpp"

namespace gkz {

using Json = nlohmann::ordered_json;

/// {"dim": d, "points": [[..], ..], "labels": ["a", ..]}; labels optional.
Json to_json(const PointConfiguration& config);
PointConfiguration config_from_json(const Json& j);

/// {"vars": [..], "terms": [{"exp": [..], "coeff": "-27"}, ..]}
Json to_json(const SparsePoly& p);
SparsePoly poly_from_json(const Json& j);

/// Row-major array of polynomial objects.
Json to_json(const PolyMatrix& m);

/// {"a1": "a", "c2": "0", ..}: values are polynomials in string form.
SpecializationMap specialization_from_json(const Json& j);

Json simplices_to_json(const PointConfiguration& config, const Triangulation& t);

/// {"simplices": .., "coherent": .., "heights": ["0", "1/2", ..] | null, "gkz": [..]}
Json triangulation_to_json(const PointConfiguration& config, const Triangulation& t,
                           const std::optional<HeightCertificate>& cert);

Json report_to_json(const PointConfiguration& config, const VerificationReport& report);

}  // namespace gkz
