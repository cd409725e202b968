#pragma once

#include <json.hpp>

#include "barcore/bar_partition.hpp"
#include "barcore/counting.hpp"
#include "barcore/explorer.hpp"
#include "barcore/yin_yang.hpp"

namespace barcore {

using Json = nlohmann::json;

// Exact counts travel as decimal strings: they outgrow 64-bit JSON numbers
// once s + t is in the low hundreds.  Partition parts and grid fields stay
// plain numbers.  All objects serialize with sorted keys.

Json partition_to_json(const BarPartition& p);            // [4,1]
BarPartition partition_from_json(const Json& j);

Json count_report_to_json(const CountReport& r);
CountReport count_report_from_json(const Json& j);

Json conjecture_report_to_json(const ConjectureReport& r);
ConjectureReport conjecture_report_from_json(const Json& j);

// {s, t, m, n, a, b, cells: [[x, y, value, yang] ...]}, rows top to bottom.
Json diagram_to_json(const YinYangDiagram& d);
// Rebuilds from s and t, then verifies the recorded grid matches.
YinYangDiagram diagram_from_json(const Json& j);

}  // namespace barcore
