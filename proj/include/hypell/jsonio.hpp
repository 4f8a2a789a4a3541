#pragma once

// JSON documents for the command-line tools.  All numeric fields are decimal
// strings carrying the full working precision.

#include "hypell/identities.hpp"
#include "hypell/igusa.hpp"
#include "hypell/periods.hpp"
#include "hypell/symmetric.hpp"

#include <json.hpp>

namespace hypell {

using Json = nlohmann::ordered_json;

std::string real_str(const Real& x);
Json cplx_to_json(const Cplx& z);
Cplx cplx_from_json(const Json& j);
Json cmat_to_json(const CMat& m);
CMat cmat_from_json(const Json& j);

// curve documents: {"genus": g, "roots": [[re, im], ...], "has_infinity": bool,
//  "rational_roots": ["p/q", ...] (optional)}
struct CurveDocument {
    BranchSet branch;
    std::optional<RationalBranchSet> rational;
};
CurveDocument curve_from_json(const Json& j);
Json curve_to_json(const CurveDocument& c);

Json period_data_to_json(const PeriodData& P, const CharacteristicDictionary& D);
RiemannMatrix riemann_from_json(const Json& j, int expected_genus);

Json char_to_json(const Char& m);
Json model_to_json(const SymmetricModel& m);
Json report_to_json(const IdentityReport& r);
Json reports_to_json(const std::vector<IdentityReport>& rs);

}  // namespace hypell
