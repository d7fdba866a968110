#pragma once

// JSON encoding shared by the command-line tool.  Exact integers and
// rationals are decimal strings; rational functions are coefficient lists.

#include <json.hpp>

#include "hwz/algebra.hpp"
#include "hwz/hurwitz.hpp"
#include "hwz/identities.hpp"
#include "hwz/limits.hpp"
#include "hwz/sym.hpp"

namespace hwz {

inline constexpr const char* kSchema = "hwz/1";

nlohmann::json to_json(const BigRat& q);
nlohmann::json to_json(const IntPartition& mu);
// {"num": [...], "den": [...], "var": "c"}, ascending degree
nlohmann::json to_json(const RatFunc& f);
nlohmann::json to_json(const CumulantSeries& s);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const Limits& lim);

BigRat rational_from_json(const nlohmann::json& j);
IntPartition partition_from_json(const nlohmann::json& j);
RatFunc ratfunc_from_json(const nlohmann::json& j);
CumulantSeries series_from_json(const nlohmann::json& j);

}  // namespace hwz
