#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sympair/classify.hpp"
#include "sympair/json_io.hpp"
#include "sympair/oracle.hpp"
#include "sympair/orbits.hpp"
#include "sympair/strata.hpp"
#include "sympair/verify.hpp"

namespace {

using sympair::CharacterSheafLabel;
using sympair::CheckRecord;
using sympair::Json;
using sympair::LeviDatum;
using sympair::OrbitalComplex;
using sympair::PairContext;
using sympair::SheafRecord;
using sympair::SignedYoungDiagram;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxVerifyBound = 16;

struct CommonOptions {
  int p = -1;
  int q = -1;
  std::string format = "pretty";
};

void add_pair_options(CLI::App* cmd, CommonOptions& options) {
  cmd->add_option("--p", options.p, "dimension of V+")->required();
  cmd->add_option("--q", options.q, "dimension of V-")->required();
  cmd->add_option("--format", options.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
}

std::string pretty_psi(const sympair::CyclicCharacter& psi) {
  std::ostringstream out;
  out << psi.exponent << " mod " << psi.modulus << " (order " << psi.order()
      << ")";
  return out.str();
}

std::string pretty_parts(const std::vector<int>& parts) {
  if (parts.empty()) return "()";
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out << ',';
    out << parts[i];
  }
  out << ')';
  return out.str();
}

int run_orbits(const CommonOptions& options) {
  const PairContext ctx(options.p, options.q);
  const auto orbits = sympair::enumerate_orbits(ctx);
  if (options.format == "csv") {
    std::cout << sympair::kOrbitCsvHeader << '\n';
  }
  for (const SignedYoungDiagram& lam : orbits) {
    const auto record = sympair::make_orbit_record(lam, ctx);
    if (options.format == "json") {
      std::cout << sympair::to_json(record).dump() << '\n';
    } else if (options.format == "csv") {
      std::cout << sympair::to_csv(record) << '\n';
    } else {
      std::cout << sympair::to_ascii(lam) << "  d=" << record.d
                << "  dim=" << record.dimension
                << (record.richardson ? "  richardson" : "") << '\n';
    }
  }
  return 0;
}

int run_strata(const CommonOptions& options) {
  const PairContext ctx(options.p, options.q);
  if (options.format == "csv") {
    std::cout << sympair::kStratumCsvHeader << '\n';
  }
  for (const sympair::DualStratumLabel& label : sympair::cs_orbits(ctx)) {
    const auto record = sympair::make_stratum_record(label);
    if (options.format == "json") {
      std::cout << sympair::to_json(record).dump() << '\n';
    } else if (options.format == "csv") {
      std::cout << sympair::to_csv(record) << '\n';
    } else {
      std::cout << "m=" << label.m << " l=" << label.l << " mu="
                << (label.mu.empty() ? "(empty)" : sympair::to_ascii(label.mu))
                << "  pi1: braid rank " << record.pi1.braid_rank
                << ", cyclic modulus " << record.pi1.cyclic_modulus << '\n';
    }
  }
  return 0;
}

void print_sheaf(const SheafRecord& record, const std::string& format) {
  if (format == "json") {
    std::cout << sympair::to_json(record).dump() << '\n';
    return;
  }
  if (format == "csv") {
    std::cout << sympair::to_csv(record) << '\n';
    return;
  }
  if (const auto* odd = std::get_if<sympair::OddSheaf>(&record.label)) {
    std::cout << "odd  m=" << odd->stratum.m << " l=" << odd->stratum.l
              << " mu="
              << (odd->stratum.mu.empty() ? "(empty)"
                                          : sympair::to_ascii(odd->stratum.mu))
              << " tau=" << pretty_parts(odd->tau.parts)
              << " psi=" << pretty_psi(odd->psi);
  } else {
    const auto& even = std::get<sympair::EvenSheaf>(record.label);
    std::cout << "even m=" << 2 * even.stratum.m << " l=" << even.stratum.l
              << " rho=" << pretty_parts(even.rho.first.parts) << '|'
              << pretty_parts(even.rho.second.parts)
              << " psi=" << pretty_psi(even.psi);
  }
  if (record.cuspidal) std::cout << "  cuspidal";
  if (record.nilpotent_support) std::cout << "  nilpotent-support";
  std::cout << '\n';
}

int run_classify(const CommonOptions& options, int m, bool cuspidal_only) {
  const PairContext ctx(options.p, options.q);
  std::vector<CharacterSheafLabel> labels;
  if (cuspidal_only) {
    labels = sympair::cuspidal_sheaves(ctx);
    if (m > 0) {
      std::erase_if(labels, [&](const CharacterSheafLabel& label) {
        return sympair::central_order(label) != m;
      });
    }
  } else if (m > 0) {
    labels = sympair::character_sheaves(ctx, m);
  } else {
    labels = sympair::all_character_sheaves(ctx);
  }
  if (options.format == "csv") {
    std::cout << sympair::kSheafCsvHeader << '\n';
  }
  for (const CharacterSheafLabel& label : labels) {
    print_sheaf(sympair::make_sheaf_record(label, ctx), options.format);
  }
  return 0;
}

void print_complex(const OrbitalComplex& record, const std::string& format) {
  if (format == "json") {
    std::cout << sympair::to_json(record).dump() << '\n';
  } else if (format == "csv") {
    std::cout << sympair::to_csv(record) << '\n';
  } else {
    std::cout << sympair::to_ascii(record.orbit)
              << "  psi=" << pretty_psi(record.character) << '\n';
  }
}

int run_fourier(const CommonOptions& options, const std::string& direction,
                const std::optional<std::string>& record_text) {
  const PairContext ctx(options.p, options.q);
  std::vector<std::string> inputs;
  if (record_text.has_value()) {
    inputs.push_back(*record_text);
  } else {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (!line.empty()) inputs.push_back(line);
    }
  }
  if (options.format == "csv") {
    std::cout << (direction == "forward" ? sympair::kSheafCsvHeader
                                         : sympair::kComplexCsvHeader)
              << '\n';
  }
  for (const std::string& input : inputs) {
    const Json j = Json::parse(input);
    if (direction == "forward") {
      const OrbitalComplex complex = sympair::complex_record_from_json(j);
      if (complex.orbit.signature() !=
          std::pair<int, int>{ctx.p, ctx.q}) {
        throw std::invalid_argument("orbit does not have signature (p, q)");
      }
      const CharacterSheafLabel image = sympair::fourier_forward(complex);
      print_sheaf(sympair::make_sheaf_record(image, ctx), options.format);
    } else {
      const SheafRecord record = sympair::sheaf_record_from_json(j, ctx);
      print_complex(sympair::fourier_inverse(record.label, ctx),
                    options.format);
    }
  }
  return 0;
}

void print_levi(const LeviDatum& datum, const std::string& format) {
  if (format == "json") {
    std::cout << sympair::to_json(datum).dump() << '\n';
    return;
  }
  if (format == "csv") {
    std::cout << sympair::kLeviCsvHeader << '\n'
              << sympair::to_csv(datum) << '\n';
    return;
  }
  std::cout << "levi blocks:";
  for (std::size_t i = 0; i < datum.block_sizes.size(); ++i) {
    std::cout << " GL" << datum.block_sizes[i] << "=("
              << datum.theta_blocks[i].first << '+'
              << datum.theta_blocks[i].second << ")";
  }
  std::cout << "\nsource orbits:";
  for (const SignedYoungDiagram& source : datum.source_orbits) {
    std::cout << "  " << sympair::to_ascii(source);
  }
  std::cout << '\n';
}

int run_levi(const CommonOptions& options,
             const std::optional<std::string>& orbit_text, int m,
             const std::optional<std::string>& sheaf_text) {
  const PairContext ctx(options.p, options.q);
  if (orbit_text.has_value() == sheaf_text.has_value()) {
    throw CLI::ValidationError("levi", "give exactly one of --orbit or --sheaf");
  }
  if (orbit_text.has_value()) {
    const SignedYoungDiagram lam = sympair::diagram_from_ascii(*orbit_text);
    if (lam.signature() != std::pair<int, int>{ctx.p, ctx.q}) {
      throw std::invalid_argument("orbit does not have signature (p, q)");
    }
    print_levi(sympair::levi_for_nilpotent_support(lam, m), options.format);
    return 0;
  }
  const SheafRecord record =
      sympair::sheaf_record_from_json(Json::parse(*sheaf_text), ctx);
  const auto datum = sympair::induction_datum_for_sheaf(record.label, ctx);
  if (!datum.has_value()) {
    std::cerr << "cuspidal sheaf: not induced from a proper Levi\n";
    return 0;
  }
  print_levi(*datum, options.format);
  return 0;
}

int run_verify(int n_max, const std::string& format) {
  if (n_max < 1 || n_max > kMaxVerifyBound) {
    throw CLI::ValidationError(
        "verify", "--n-max must lie in 1.." + std::to_string(kMaxVerifyBound));
  }
  sympair::VerifyOptions options;
  options.n_max = n_max;
  const std::vector<CheckRecord> results = sympair::run_verification(options);
  if (format == "csv") std::cout << sympair::kCheckCsvHeader << '\n';
  bool all_pass = true;
  for (const CheckRecord& record : results) {
    all_pass = all_pass && record.pass;
    if (format == "json") {
      std::cout << sympair::to_json(record).dump() << '\n';
    } else if (format == "csv") {
      std::cout << sympair::to_csv(record) << '\n';
    } else {
      std::cout << (record.pass ? "PASS " : "FAIL ") << record.check << ": "
                << record.detail << '\n';
    }
  }
  return all_pass ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Classification of nilpotent orbits and character sheaves for the "
      "symmetric pairs (SL_n, S(GL_p x GL_q))"};
  app.require_subcommand(1);

  CommonOptions orbit_options;
  CLI::App* orbits = app.add_subcommand(
      "orbits", "list the nilpotent K-orbits on g_1 as signed Young diagrams");
  add_pair_options(orbits, orbit_options);

  CommonOptions strata_options;
  CLI::App* strata = app.add_subcommand(
      "strata", "list the dual-side strata (m, l, mu) with pi1 data");
  add_pair_options(strata, strata_options);

  CommonOptions classify_options;
  int classify_m = 0;
  bool cuspidal_only = false;
  CLI::App* classify = app.add_subcommand(
      "classify", "list character sheaf labels, optionally for one central "
                  "character order");
  add_pair_options(classify, classify_options);
  classify->add_option("--m", classify_m,
                       "restrict to central character order m");
  classify->add_flag("--cuspidal", cuspidal_only,
                     "list only cuspidal sheaves");

  CommonOptions fourier_options;
  std::string direction = "forward";
  std::string record_text;
  CLI::App* fourier = app.add_subcommand(
      "fourier", "apply the Fourier transform bijection to records "
                 "(JSON via --record or one per stdin line)");
  add_pair_options(fourier, fourier_options);
  fourier->add_option("--direction", direction,
                      "forward: orbit records to sheaf records; inverse: "
                      "the reverse")
      ->check(CLI::IsMember({"forward", "inverse"}))
      ->capture_default_str();
  CLI::Option* record_option =
      fourier->add_option("--record", record_text, "single JSON input record");

  CommonOptions levi_options;
  std::string orbit_text;
  std::string sheaf_text;
  int levi_m = 1;
  CLI::App* levi = app.add_subcommand(
      "levi", "print the theta-stable Levi datum attached to a Richardson "
              "orbit (--orbit with --m) or to a sheaf record (--sheaf)");
  add_pair_options(levi, levi_options);
  CLI::Option* orbit_option =
      levi->add_option("--orbit", orbit_text, "orbit in diagram notation");
  levi->add_option("--m", levi_m, "odd order dividing every row length")
      ->capture_default_str();
  CLI::Option* sheaf_option =
      levi->add_option("--sheaf", sheaf_text, "sheaf record as JSON");

  int n_max = 8;
  std::string verify_format = "pretty";
  CLI::App* verify = app.add_subcommand(
      "verify", "run every invariant suite up to a signature bound");
  verify->add_option("--n-max", n_max, "largest p + q to sweep")
      ->capture_default_str();
  verify->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (orbits->parsed()) return run_orbits(orbit_options);
    if (strata->parsed()) return run_strata(strata_options);
    if (classify->parsed()) {
      return run_classify(classify_options, classify_m, cuspidal_only);
    }
    if (fourier->parsed()) {
      return run_fourier(fourier_options, direction,
                         record_option->count() > 0
                             ? std::optional<std::string>(record_text)
                             : std::nullopt);
    }
    if (levi->parsed()) {
      return run_levi(levi_options,
                      orbit_option->count() > 0
                          ? std::optional<std::string>(orbit_text)
                          : std::nullopt,
                      levi_m,
                      sheaf_option->count() > 0
                          ? std::optional<std::string>(sheaf_text)
                          : std::nullopt);
    }
    if (verify->parsed()) return run_verify(n_max, verify_format);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
