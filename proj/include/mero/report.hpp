#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "mero/boundary.hpp"
#include "mero/function_file.hpp"
#include "mero/funcrep.hpp"
#include "mero/ortho.hpp"
#include "mero/smooth.hpp"

namespace mero {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

/// {"schema", "tool", "version", "command", "seed", "timestamp"}
json report_header(const std::string& command, std::uint64_t seed);

json to_json(cd c);  // [re, im]
cd complex_from_json(const json& j);

json to_json(const Disk& d);
json to_json(const FunctionFile& input);
json decomposition_json(const MeroFunction& f);
json to_json(const NormBundle& n);
json to_json(const AttainmentSet& s);
AttainmentSet attainment_from_json(const json& j);
json to_json(const OrthoVerdict& v);
json to_json(const DirectionalSummary& d);
json to_json(const SmoothVerdict& v);
json to_json(const WitnessPair& w);
json to_json(const CorollaryReport& r);

/// Copy of a report without its timestamp, for byte comparisons.
json strip_timestamp(json report);

}  // namespace mero
