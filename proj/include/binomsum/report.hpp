#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "binomsum/asymptotics.hpp"
#include "binomsum/congruences.hpp"
#include "binomsum/divisibility.hpp"
#include "binomsum/errors.hpp"
#include "binomsum/sequences.hpp"

namespace binomsum {

using Json = nlohmann::json;

enum class Format { Json, Csv, Text };

Format parse_format(std::string_view name);

/// Rows of one command's output. `single` reports print as a bare object in JSON.
struct Report {
  std::vector<std::string> columns;
  std::vector<Json> rows;
  bool single = false;
};

/// Deterministic serialization: sorted keys, integers that may exceed 64 bits as
/// decimal strings, floats with 17 significant digits, LF line endings.
std::string emit_report(const Report& report, Format format);

/// Compact JSON with sorted keys and %.17g floats.
std::string dump_json(const Json& value);
std::string format_double(double x);

Json to_json(const SequenceValue& v);
Json to_json(const Summand& v);
Json to_json(const SuperCatalanValue& v);
Json to_json(const DivisibilityCertificate& c);
Json to_json(const FloorScanReport& r);
Json to_json(const CongruenceResult& r);
Json to_json(const BoundsReport& r);
Json to_json(const AsymptoticsSample& s);
Json to_json(const PiPartialSum& p);
Json to_json(const FalsificationError& e);

/// Column lists for CSV output.
inline const std::vector<std::string> kAsymptoticsColumns = {"n", "log_s", "nth_root", "step_ratio",
                                                             "lower_root", "upper_root"};
inline const std::vector<std::string> kViolationColumns = {"m", "n", "k"};
inline const std::vector<std::string> kCongruenceColumns = {"claim", "parameter", "lhs_residue",
                                                            "expected_residue", "holds"};

}  // namespace binomsum
