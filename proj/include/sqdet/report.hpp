#pragma once

#include "sqdet/forms.hpp"

#include <json.hpp>

namespace sqdet {

using Json = nlohmann::ordered_json;

/// Decimal coefficient strings, constant term first.
Json poly_json(const IntPoly& p);
/// Entries as decimal strings (S) ...
Json constant_matrix_json(const PolyMatrix& m);
/// ... or as coefficient arrays (S_q).
Json poly_matrix_json(const PolyMatrix& m);
Json factors_json(const std::vector<RhsFactor>& factors);
Json verdict_json(const Verification& v);

} // namespace sqdet
