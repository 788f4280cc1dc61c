#pragma once

#include <string>

#include <json.hpp>

#include "g2harm/g2alg.hpp"
#include "g2harm/group.hpp"
#include "g2harm/harmonic.hpp"

namespace g2harm {

/// Like json::dump, but floating-point numbers are written with exactly
/// 17 significant digits ("%.17g") and non-finite values as null.
std::string dump17(const nlohmann::json& j, int indent = 2);

/// Array of 14 matrices, each an array of 7 rows.
nlohmann::json to_json(const G2Basis& basis);
/// Row-major array of 49 numbers.
nlohmann::json to_json(const G2Element& g);
/// {check, n_samples, seed, tol, max_abs_error, pass, ...}
nlohmann::json to_json(const QReport& report);

G2Basis basis_from_json(const nlohmann::json& j);
G2Element element_from_json(const nlohmann::json& j);

}  // namespace g2harm
