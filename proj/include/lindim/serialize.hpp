#pragma once

#include "lindim/baselocus.hpp"
#include "lindim/cohomology.hpp"
#include "lindim/dimensions.hpp"
#include "lindim/froberg.hpp"
#include "lindim/oracle.hpp"
#include "lindim/picard.hpp"
#include "lindim/system.hpp"

#include <json.hpp>

namespace lindim {

using json = nlohmann::json;

// Big integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that; parsing accepts both.
json big_to_json(const BigInt& v);
BigInt big_from_json(const json& j);

json to_json(const LinearSystem& sys);
LinearSystem system_from_json(const json& j);

json to_json(const PicardClass& cls);
PicardClass picard_from_json(const json& j, int n);

json to_json(const BaseLocusReport& report);
BaseLocusReport base_locus_from_json(const json& j);

json to_json(const DimensionReport& report);
DimensionReport dimension_report_from_json(const json& j);

json to_json(const CohomologyTable& table);
CohomologyTable cohomology_table_from_json(const json& j);

json to_json(const OracleResult& result);
OracleResult oracle_result_from_json(const json& j);

json to_json(const TruncatedSeries& series);

}  // namespace lindim
