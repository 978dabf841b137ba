#pragma once

#include <string>

#include "json.hpp"
#include "mahlerzero/algebraic.hpp"
#include "mahlerzero/mahler.hpp"
#include "mahlerzero/series.hpp"
#include "mahlerzero/zeroorder.hpp"

namespace mahlerzero::cli {

using Json = nlohmann::ordered_json;

/// {"trunc_order": T, "coeffs": ["p/q", ...]}
Json series_to_json(const Series& s);
Series series_from_json(const Json& j);

/// {"k": 2, "coeffs": ["z", "-1-z", "1"], "seeds": ["0", "1", "1", "0"], "irrational": true}
Json mahler_to_json(const MahlerFunction& m);
MahlerFunction mahler_from_json(const Json& j);

/// {"poly": "y^2 - z - 1", "branch0": "1"}
Json algebraic_to_json(const AlgebraicFunction& g);
AlgebraicFunction algebraic_from_json(const Json& j);

/// Algebraic form above, or {"p": "<poly in z>", "q": "<poly in z>"} for P/Q
/// ("q" defaults to 1).
Json approximant_to_json(const Approximant& g);
Approximant approximant_from_json(const Json& j);

/// {"nu": 4 | {"above": B}, "bound": B, "path": ..., "bound_kind": ...,
///  "expansion_order": B, "hypotheses": {...}, "status": ...}
Json certificate_to_json(const NuCertificate& c);

/// Reads and parses a JSON file; InputError on I/O or syntax failure.
Json load_json_file(const std::string& path);

}  // namespace mahlerzero::cli
