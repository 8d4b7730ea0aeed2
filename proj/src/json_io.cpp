#include "sympair/json_io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace sympair {

namespace {

int parse_int_strict(const std::string& text) {
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("expected integer, got \"" + text + "\"");
  }
  return value;
}

std::int64_t parse_int64_strict(const std::string& text) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("expected integer, got \"" + text + "\"");
  }
  return value;
}

bool parse_bool_strict(const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw std::invalid_argument("expected boolean, got \"" + text + "\"");
}

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string join_ints(const std::vector<int>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ' ';
    out << values[i];
  }
  return out.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& token : split_on(text, ' ')) {
    out.push_back(parse_int_strict(token));
  }
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

Json partition_to_json(const Partition& p) { return Json(p.parts); }

Partition partition_from_json(const Json& j) {
  return Partition(j.get<std::vector<int>>());
}

Json mu_to_json(const SignedYoungDiagram& mu) {
  if (mu.empty()) return Json(nullptr);
  return Json(to_ascii(mu));
}

SignedYoungDiagram mu_from_json(const Json& j) {
  if (j.is_null()) return SignedYoungDiagram();
  return diagram_from_ascii(j.get<std::string>());
}

Json psi_to_json(const CyclicCharacter& psi) {
  return Json{{"modulus", psi.modulus}, {"exponent", psi.exponent}};
}

CyclicCharacter psi_from_json(const Json& j) {
  return CyclicCharacter(j.at("modulus").get<int>(),
                         j.at("exponent").get<int>());
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"' && current.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in CSV line");
  fields.push_back(std::move(current));
  return fields;
}

OrbitRecord make_orbit_record(const SignedYoungDiagram& diagram,
                              const PairContext& ctx) {
  OrbitRecord record;
  record.diagram = diagram;
  record.d = d_lambda(diagram);
  record.dimension = orbit_dimension(diagram, ctx);
  record.richardson = is_richardson(diagram);
  return record;
}

StratumRecord make_stratum_record(const DualStratumLabel& label) {
  return StratumRecord{label, pi1_data(label)};
}

SheafRecord make_sheaf_record(const CharacterSheafLabel& label,
                              const PairContext& ctx) {
  SheafRecord record(label);
  record.cuspidal = is_cuspidal(label, ctx);
  record.nilpotent_support = has_nilpotent_support(label);
  return record;
}

Json to_json(const OrbitRecord& record) {
  return Json{{"diagram", to_ascii(record.diagram)},
              {"d_lambda", record.d},
              {"dimension", record.dimension},
              {"richardson", record.richardson}};
}

Json to_json(const OrbitalComplex& record) {
  return Json{{"orbit", to_ascii(record.orbit)},
              {"psi", psi_to_json(record.character)}};
}

Json to_json(const StratumRecord& record) {
  return Json{{"m", record.label.m},
              {"l", record.label.l},
              {"mu", mu_to_json(record.label.mu)},
              {"pi1",
               Json{{"braid_rank", record.pi1.braid_rank},
                    {"cyclic_modulus", record.pi1.cyclic_modulus}}}};
}

Json to_json(const SheafRecord& record) {
  Json j;
  if (const auto* odd = std::get_if<OddSheaf>(&record.label)) {
    j["type"] = "odd";
    j["m"] = odd->stratum.m;
    j["l"] = odd->stratum.l;
    j["mu"] = mu_to_json(odd->stratum.mu);
    j["tau"] = partition_to_json(odd->tau);
    j["rho"] = nullptr;
    j["psi"] = psi_to_json(odd->psi);
  } else {
    const auto& even = std::get<EvenSheaf>(record.label);
    j["type"] = "even";
    j["m"] = 2 * even.stratum.m;
    j["l"] = even.stratum.l;
    j["mu"] = nullptr;
    j["tau"] = nullptr;
    j["rho"] = Json::array({partition_to_json(even.rho.first),
                            partition_to_json(even.rho.second)});
    j["psi"] = psi_to_json(even.psi);
  }
  j["cuspidal"] = record.cuspidal;
  j["nilpotent_support"] = record.nilpotent_support;
  return j;
}

Json to_json(const LeviDatum& record) {
  Json theta = Json::array();
  for (const auto& [a, b] : record.theta_blocks) {
    theta.push_back(Json::array({a, b}));
  }
  Json sources = Json::array();
  for (const SignedYoungDiagram& orbit : record.source_orbits) {
    sources.push_back(to_ascii(orbit));
  }
  return Json{{"block_sizes", record.block_sizes},
              {"theta_blocks", theta},
              {"source_orbits", sources},
              {"sign_sequence", record.sign_sequence},
              {"l_sequence", record.l_sequence}};
}

Json to_json(const CheckRecord& record) {
  return Json{{"check", record.check},
              {"pass", record.pass},
              {"detail", record.detail}};
}

OrbitRecord orbit_record_from_json(const Json& j) {
  OrbitRecord record;
  record.diagram = diagram_from_ascii(j.at("diagram").get<std::string>());
  record.d = j.at("d_lambda").get<int>();
  record.dimension = j.at("dimension").get<std::int64_t>();
  record.richardson = j.at("richardson").get<bool>();
  if (record.d != d_lambda(record.diagram) ||
      record.richardson != is_richardson(record.diagram)) {
    throw std::invalid_argument("orbit record fields inconsistent");
  }
  const auto [p, q] = record.diagram.signature();
  if (record.dimension != orbit_dimension(record.diagram, PairContext(p, q))) {
    throw std::invalid_argument("orbit record dimension inconsistent");
  }
  return record;
}

OrbitalComplex complex_record_from_json(const Json& j) {
  return OrbitalComplex(diagram_from_ascii(j.at("orbit").get<std::string>()),
                        psi_from_json(j.at("psi")));
}

StratumRecord stratum_record_from_json(const Json& j) {
  DualStratumLabel label(j.at("m").get<int>(), j.at("l").get<int>(),
                         mu_from_json(j.at("mu")));
  StratumRecord record = make_stratum_record(label);
  if (j.contains("pi1")) {
    const Pi1Data given{j.at("pi1").at("braid_rank").get<int>(),
                        j.at("pi1").at("cyclic_modulus").get<int>()};
    if (given != record.pi1) {
      throw std::invalid_argument("stratum record pi1 fields inconsistent");
    }
  }
  return record;
}

SheafRecord sheaf_record_from_json(const Json& j, const PairContext& ctx) {
  const std::string type = j.at("type").get<std::string>();
  const int m = j.at("m").get<int>();
  const int l = j.at("l").get<int>();
  const CyclicCharacter psi = psi_from_json(j.at("psi"));
  CharacterSheafLabel label = [&]() -> CharacterSheafLabel {
    if (type == "odd") {
      if (j.contains("rho") && !j.at("rho").is_null()) {
        throw std::invalid_argument("odd sheaf record must have null rho");
      }
      return OddSheaf(DualStratumLabel(m, l, mu_from_json(j.at("mu"))),
                      partition_from_json(j.at("tau")), psi);
    }
    if (type == "even") {
      if (m % 2 != 0) {
        throw std::invalid_argument("even sheaf record needs even m");
      }
      if ((j.contains("tau") && !j.at("tau").is_null()) ||
          (j.contains("mu") && !j.at("mu").is_null())) {
        throw std::invalid_argument(
            "even sheaf record must have null mu and tau");
      }
      const Json& rho = j.at("rho");
      if (!rho.is_array() || rho.size() != 2) {
        throw std::invalid_argument("rho must be a pair of partitions");
      }
      return EvenSheaf(DualStratumLabel(m / 2, l, SignedYoungDiagram()),
                       Bipartition(partition_from_json(rho[0]),
                                   partition_from_json(rho[1])),
                       psi);
    }
    throw std::invalid_argument("sheaf record type must be odd or even");
  }();
  SheafRecord record = make_sheaf_record(label, ctx);
  if (j.contains("cuspidal") && j.at("cuspidal").get<bool>() != record.cuspidal) {
    throw std::invalid_argument("sheaf record cuspidal flag inconsistent");
  }
  if (j.contains("nilpotent_support") &&
      j.at("nilpotent_support").get<bool>() != record.nilpotent_support) {
    throw std::invalid_argument(
        "sheaf record nilpotent_support flag inconsistent");
  }
  return record;
}

LeviDatum levi_record_from_json(const Json& j) {
  LeviDatum datum;
  datum.block_sizes = j.at("block_sizes").get<std::vector<int>>();
  for (const Json& pair : j.at("theta_blocks")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("theta_blocks entries must be pairs");
    }
    datum.theta_blocks.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  for (const Json& orbit : j.at("source_orbits")) {
    datum.source_orbits.push_back(diagram_from_ascii(orbit.get<std::string>()));
  }
  datum.sign_sequence = j.at("sign_sequence").get<std::vector<int>>();
  datum.l_sequence = j.at("l_sequence").get<std::vector<int>>();
  return datum;
}

CheckRecord check_record_from_json(const Json& j) {
  return CheckRecord{j.at("check").get<std::string>(),
                     j.at("pass").get<bool>(),
                     j.at("detail").get<std::string>()};
}

const char* const kOrbitCsvHeader = "diagram,d_lambda,dimension,richardson";
const char* const kComplexCsvHeader = "orbit,psi_modulus,psi_exponent";
const char* const kStratumCsvHeader = "m,l,mu,braid_rank,cyclic_modulus";
const char* const kSheafCsvHeader =
    "type,m,l,mu,tau,rho_first,rho_second,psi_modulus,psi_exponent,cuspidal,"
    "nilpotent_support";
const char* const kLeviCsvHeader =
    "block_sizes,theta_blocks,source_orbits,sign_sequence,l_sequence";
const char* const kCheckCsvHeader = "check,pass,detail";

std::string to_csv(const OrbitRecord& record) {
  std::ostringstream out;
  out << csv_escape(to_ascii(record.diagram)) << ',' << record.d << ','
      << record.dimension << ',' << (record.richardson ? "true" : "false");
  return out.str();
}

std::string to_csv(const OrbitalComplex& record) {
  std::ostringstream out;
  out << csv_escape(to_ascii(record.orbit)) << ',' << record.character.modulus
      << ',' << record.character.exponent;
  return out.str();
}

std::string to_csv(const StratumRecord& record) {
  std::ostringstream out;
  out << record.label.m << ',' << record.label.l << ','
      << csv_escape(to_ascii(record.label.mu)) << ',' << record.pi1.braid_rank
      << ',' << record.pi1.cyclic_modulus;
  return out.str();
}

std::string to_csv(const SheafRecord& record) {
  std::ostringstream out;
  if (const auto* odd = std::get_if<OddSheaf>(&record.label)) {
    out << "odd," << odd->stratum.m << ',' << odd->stratum.l << ','
        << csv_escape(to_ascii(odd->stratum.mu)) << ','
        << csv_escape(join_ints(odd->tau.parts)) << ",,,"
        << odd->psi.modulus << ',' << odd->psi.exponent;
  } else {
    const auto& even = std::get<EvenSheaf>(record.label);
    out << "even," << 2 * even.stratum.m << ',' << even.stratum.l << ",,,"
        << csv_escape(join_ints(even.rho.first.parts)) << ','
        << csv_escape(join_ints(even.rho.second.parts)) << ','
        << even.psi.modulus << ',' << even.psi.exponent;
  }
  out << ',' << (record.cuspidal ? "true" : "false") << ','
      << (record.nilpotent_support ? "true" : "false");
  return out.str();
}

std::string to_csv(const LeviDatum& record) {
  std::ostringstream out;
  out << csv_escape(join_ints(record.block_sizes)) << ',';
  std::ostringstream theta;
  for (std::size_t i = 0; i < record.theta_blocks.size(); ++i) {
    if (i > 0) theta << ' ';
    theta << record.theta_blocks[i].first << ':'
          << record.theta_blocks[i].second;
  }
  out << csv_escape(theta.str()) << ',';
  std::ostringstream sources;
  for (std::size_t i = 0; i < record.source_orbits.size(); ++i) {
    if (i > 0) sources << ';';
    sources << to_ascii(record.source_orbits[i]);
  }
  out << csv_escape(sources.str()) << ','
      << csv_escape(join_ints(record.sign_sequence)) << ','
      << csv_escape(join_ints(record.l_sequence));
  return out.str();
}

std::string to_csv(const CheckRecord& record) {
  std::ostringstream out;
  out << csv_escape(record.check) << ',' << (record.pass ? "true" : "false")
      << ',' << csv_escape(record.detail);
  return out.str();
}

namespace {

std::vector<std::string> expect_fields(const std::string& line,
                                       std::size_t count, const char* kind) {
  std::vector<std::string> fields = split_csv_line(line);
  if (fields.size() != count) {
    throw std::invalid_argument(std::string(kind) +
                                " record: wrong CSV field count");
  }
  return fields;
}

}  // namespace

OrbitRecord orbit_record_from_csv(const std::string& line) {
  const auto f = expect_fields(line, 4, "orbit");
  Json j{{"diagram", f[0]},
         {"d_lambda", parse_int_strict(f[1])},
         {"dimension", parse_int64_strict(f[2])},
         {"richardson", parse_bool_strict(f[3])}};
  return orbit_record_from_json(j);
}

OrbitalComplex complex_record_from_csv(const std::string& line) {
  const auto f = expect_fields(line, 3, "orbital complex");
  return OrbitalComplex(
      diagram_from_ascii(f[0]),
      CyclicCharacter(parse_int_strict(f[1]), parse_int_strict(f[2])));
}

StratumRecord stratum_record_from_csv(const std::string& line) {
  const auto f = expect_fields(line, 5, "stratum");
  DualStratumLabel label(parse_int_strict(f[0]), parse_int_strict(f[1]),
                         diagram_from_ascii(f[2]));
  StratumRecord record = make_stratum_record(label);
  const Pi1Data given{parse_int_strict(f[3]), parse_int_strict(f[4])};
  if (given != record.pi1) {
    throw std::invalid_argument("stratum record pi1 fields inconsistent");
  }
  return record;
}

SheafRecord sheaf_record_from_csv(const std::string& line,
                                  const PairContext& ctx) {
  const auto f = expect_fields(line, 11, "sheaf");
  Json j;
  j["type"] = f[0];
  j["m"] = parse_int_strict(f[1]);
  j["l"] = parse_int_strict(f[2]);
  j["mu"] = f[3].empty() ? Json(nullptr) : Json(f[3]);
  if (f[0] == "odd") {
    j["tau"] = parse_int_list(f[4]);
    j["rho"] = nullptr;
    if (!f[5].empty() || !f[6].empty()) {
      throw std::invalid_argument("odd sheaf record must leave rho empty");
    }
  } else {
    j["tau"] = nullptr;
    j["rho"] = Json::array({parse_int_list(f[5]), parse_int_list(f[6])});
    if (!f[4].empty()) {
      throw std::invalid_argument("even sheaf record must leave tau empty");
    }
  }
  j["psi"] = Json{{"modulus", parse_int_strict(f[7])},
                  {"exponent", parse_int_strict(f[8])}};
  j["cuspidal"] = parse_bool_strict(f[9]);
  j["nilpotent_support"] = parse_bool_strict(f[10]);
  return sheaf_record_from_json(j, ctx);
}

LeviDatum levi_record_from_csv(const std::string& line) {
  const auto f = expect_fields(line, 5, "levi");
  LeviDatum datum;
  datum.block_sizes = parse_int_list(f[0]);
  for (const std::string& token : split_on(f[1], ' ')) {
    const auto parts = split_on(token, ':');
    if (parts.size() != 2) {
      throw std::invalid_argument("levi record: bad theta block token");
    }
    datum.theta_blocks.emplace_back(parse_int_strict(parts[0]),
                                    parse_int_strict(parts[1]));
  }
  for (const std::string& token : split_on(f[2], ';')) {
    datum.source_orbits.push_back(diagram_from_ascii(token));
  }
  datum.sign_sequence = parse_int_list(f[3]);
  datum.l_sequence = parse_int_list(f[4]);
  return datum;
}

CheckRecord check_record_from_csv(const std::string& line) {
  const auto f = expect_fields(line, 3, "check");
  return CheckRecord{f[0], parse_bool_strict(f[1]), f[2]};
}

}  // namespace sympair
