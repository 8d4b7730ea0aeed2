#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "sympair/classify.hpp"
#include "sympair/oracle.hpp"
#include "sympair/orbits.hpp"
#include "sympair/strata.hpp"
#include "sympair/verify.hpp"

namespace sympair {

using Json = nlohmann::json;

/// Output record schemas.  Every record kind serializes to JSON (one object
/// per line) and to CSV (documented header), and parses back exactly.

struct OrbitRecord {
  SignedYoungDiagram diagram;
  int d = 1;
  std::int64_t dimension = 0;
  bool richardson = false;
};

struct StratumRecord {
  DualStratumLabel label;
  Pi1Data pi1;
};

struct SheafRecord {
  CharacterSheafLabel label;
  bool cuspidal = false;
  bool nilpotent_support = false;

  explicit SheafRecord(CharacterSheafLabel label_in)
      : label(std::move(label_in)) {}
};

OrbitRecord make_orbit_record(const SignedYoungDiagram& diagram,
                              const PairContext& ctx);
StratumRecord make_stratum_record(const DualStratumLabel& label);
SheafRecord make_sheaf_record(const CharacterSheafLabel& label,
                              const PairContext& ctx);

Json to_json(const OrbitRecord& record);
Json to_json(const OrbitalComplex& record);
Json to_json(const StratumRecord& record);
Json to_json(const SheafRecord& record);
Json to_json(const LeviDatum& record);
Json to_json(const CheckRecord& record);

OrbitRecord orbit_record_from_json(const Json& j);
OrbitalComplex complex_record_from_json(const Json& j);
StratumRecord stratum_record_from_json(const Json& j);
SheafRecord sheaf_record_from_json(const Json& j, const PairContext& ctx);
LeviDatum levi_record_from_json(const Json& j);
CheckRecord check_record_from_json(const Json& j);

/// CSV headers, in column order.
extern const char* const kOrbitCsvHeader;
extern const char* const kComplexCsvHeader;
extern const char* const kStratumCsvHeader;
extern const char* const kSheafCsvHeader;
extern const char* const kLeviCsvHeader;
extern const char* const kCheckCsvHeader;

std::string to_csv(const OrbitRecord& record);
std::string to_csv(const OrbitalComplex& record);
std::string to_csv(const StratumRecord& record);
std::string to_csv(const SheafRecord& record);
std::string to_csv(const LeviDatum& record);
std::string to_csv(const CheckRecord& record);

OrbitRecord orbit_record_from_csv(const std::string& line);
OrbitalComplex complex_record_from_csv(const std::string& line);
StratumRecord stratum_record_from_csv(const std::string& line);
SheafRecord sheaf_record_from_csv(const std::string& line,
                                  const PairContext& ctx);
LeviDatum levi_record_from_csv(const std::string& line);
CheckRecord check_record_from_csv(const std::string& line);

/// Split one CSV line honoring double-quote escaping.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace sympair
