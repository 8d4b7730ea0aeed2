#include "sympair/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sympair {

OrbitalComplex::OrbitalComplex(SignedYoungDiagram orbit_in,
                               CyclicCharacter character_in)
    : orbit(std::move(orbit_in)), character(character_in) {
  if (character.modulus != d_lambda(orbit)) {
    throw std::invalid_argument(
        "OrbitalComplex: character modulus must equal d_lambda");
  }
}

OddSheaf::OddSheaf(DualStratumLabel stratum_in, Partition tau_in,
                   CyclicCharacter psi_in)
    : stratum(std::move(stratum_in)), tau(std::move(tau_in)), psi(psi_in) {
  if (stratum.m % 2 == 0) {
    throw std::invalid_argument("OddSheaf: stratum.m must be odd");
  }
  if (tau.size() != stratum.l) {
    throw std::invalid_argument("OddSheaf: |tau| must equal stratum.l");
  }
  if (psi.modulus != pi1_data(stratum).cyclic_modulus) {
    throw std::invalid_argument(
        "OddSheaf: psi modulus must match the stratum's cyclic modulus");
  }
  if (psi.order() != stratum.m) {
    throw std::invalid_argument("OddSheaf: psi must have order stratum.m");
  }
}

EvenSheaf::EvenSheaf(DualStratumLabel stratum_in, Bipartition rho_in,
                     CyclicCharacter psi_in)
    : stratum(std::move(stratum_in)), rho(std::move(rho_in)), psi(psi_in) {
  if (!stratum.mu.empty()) {
    throw std::invalid_argument("EvenSheaf: stratum.mu must be empty");
  }
  if (rho.size() != stratum.l) {
    throw std::invalid_argument("EvenSheaf: |rho| must equal stratum.l");
  }
  if (psi.modulus != 2 * stratum.m || psi.order() != 2 * stratum.m) {
    throw std::invalid_argument(
        "EvenSheaf: psi must be a primitive character mod 2k");
  }
}

int central_order(const CharacterSheafLabel& label) {
  if (const auto* odd = std::get_if<OddSheaf>(&label)) return odd->stratum.m;
  return 2 * std::get<EvenSheaf>(label).stratum.m;
}

bool has_nilpotent_support(const CharacterSheafLabel& label) {
  const auto* odd = std::get_if<OddSheaf>(&label);
  return odd != nullptr && odd->stratum.l == 0;
}

std::vector<OrbitalComplex> orbital_complexes(const PairContext& ctx, int m) {
  if (m < 1) throw std::invalid_argument("orbital_complexes: m must be >= 1");
  std::vector<OrbitalComplex> out;
  for (const SignedYoungDiagram& lam : enumerate_orbits(ctx)) {
    for (const CyclicCharacter& chi : component_character_set(lam, m)) {
      out.emplace_back(lam, chi);
    }
  }
  return out;
}

namespace {

const DualStratumLabel& stratum_of(const CharacterSheafLabel& label) {
  if (const auto* odd = std::get_if<OddSheaf>(&label)) return odd->stratum;
  return std::get<EvenSheaf>(label).stratum;
}

/// Diagram with the given (plus, minus) row multiplicities per length.
SignedYoungDiagram diagram_from_row_counts(
    const std::map<int, std::pair<int, int>>& counts) {
  std::vector<SignedBlock> blocks;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    const auto [plus, minus] = it->second;
    if (plus + minus > 0) {
      blocks.push_back(SignedBlock{it->first, plus, minus});
    }
  }
  return SignedYoungDiagram(std::move(blocks));
}

void require_label_signature(const CharacterSheafLabel& label,
                             const PairContext& ctx) {
  const SignedYoungDiagram merged = merged_diagram(stratum_of(label));
  if (merged.signature() != std::pair<int, int>{ctx.p, ctx.q}) {
    throw std::invalid_argument("sheaf label does not fit signature (p, q)");
  }
}

}  // namespace

std::vector<CharacterSheafLabel> character_sheaves(const PairContext& ctx,
                                                   int m) {
  if (m < 1) throw std::invalid_argument("character_sheaves: m must be >= 1");
  std::vector<CharacterSheafLabel> out;
  if (m % 2 == 1) {
    for (const DualStratumLabel& label : cs_orbits(ctx)) {
      if (label.m != m) continue;
      const Pi1Data pi1 = pi1_data(label);
      for (const Partition& tau : partitions_of(label.l)) {
        for (const CyclicCharacter& psi :
             characters_of_order(pi1.cyclic_modulus, m)) {
          out.emplace_back(OddSheaf(label, tau, psi));
        }
      }
    }
  } else {
    const int k = m / 2;
    if (ctx.p == ctx.q && ctx.n() % m == 0) {
      const DualStratumLabel label(k, ctx.n() / m, SignedYoungDiagram());
      for (const Bipartition& rho : bipartitions_of(label.l)) {
        for (const CyclicCharacter& psi : characters_of_order(m, m)) {
          out.emplace_back(EvenSheaf(label, rho, psi));
        }
      }
    }
  }
  return out;
}

std::vector<CharacterSheafLabel> all_character_sheaves(const PairContext& ctx) {
  std::vector<CharacterSheafLabel> out;
  for (int m = 1; m <= ctx.n(); ++m) {
    auto part = character_sheaves(ctx, m);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

CharacterSheafLabel fourier_forward(const OrbitalComplex& complex) {
  const SignedYoungDiagram& lam = complex.orbit;
  const int m = complex.character.order();
  const int unit = complex.character.primitive_residue();
  if (m % 2 == 1) {
    std::vector<int> tau_parts;
    std::map<int, std::pair<int, int>> residue;
    int l = 0;
    for (const SignedBlock& b : lam.blocks) {
      const int contracted = b.length / m;
      const int paired = std::min(b.plus, b.minus);
      for (int r = 0; r < paired; ++r) tau_parts.push_back(contracted);
      l += contracted * paired;
      residue[b.length] = {b.plus - paired, b.minus - paired};
    }
    DualStratumLabel stratum(m, l, diagram_from_row_counts(residue));
    const Pi1Data pi1 = pi1_data(stratum);
    return OddSheaf(std::move(stratum), Partition(std::move(tau_parts)),
                    CyclicCharacter::from_order_class(pi1.cyclic_modulus, m,
                                                      unit));
  }
  const int k = m / 2;
  std::vector<int> first;
  std::vector<int> second;
  int l = 0;
  for (const SignedBlock& b : lam.blocks) {
    const int contracted = b.length / m;
    first.insert(first.end(), static_cast<std::size_t>(b.plus), contracted);
    second.insert(second.end(), static_cast<std::size_t>(b.minus), contracted);
    l += contracted * (b.plus + b.minus);
  }
  DualStratumLabel stratum(k, l, SignedYoungDiagram());
  return EvenSheaf(std::move(stratum),
                   Bipartition(Partition(std::move(first)),
                               Partition(std::move(second))),
                   CyclicCharacter::from_order_class(m, m, unit));
}

OrbitalComplex fourier_inverse(const CharacterSheafLabel& label,
                               const PairContext& ctx) {
  require_label_signature(label, ctx);
  std::map<int, std::pair<int, int>> counts;
  int order = 0;
  int unit = 0;
  if (const auto* odd = std::get_if<OddSheaf>(&label)) {
    const int m = odd->stratum.m;
    for (const SignedBlock& b : odd->stratum.mu.blocks) {
      counts[b.length] = {b.plus, b.minus};
    }
    for (int part : odd->tau.parts) {
      auto& [plus, minus] = counts[m * part];
      plus += 1;
      minus += 1;
    }
    order = m;
    unit = odd->psi.primitive_residue();
  } else {
    const auto& even = std::get<EvenSheaf>(label);
    const int span = 2 * even.stratum.m;
    for (int part : even.rho.first.parts) counts[span * part].first += 1;
    for (int part : even.rho.second.parts) counts[span * part].second += 1;
    order = span;
    unit = even.psi.primitive_residue();
  }
  SignedYoungDiagram lam = diagram_from_row_counts(counts);
  const int d = d_lambda(lam);
  return OrbitalComplex(std::move(lam),
                        CyclicCharacter::from_order_class(d, order, unit));
}

std::vector<OrbitalComplex> nilpotent_support_sheaves(const PairContext& ctx) {
  std::vector<OrbitalComplex> out;
  for (const SignedYoungDiagram& lam : enumerate_orbits(ctx)) {
    if (!is_richardson(lam)) continue;
    const int d = d_lambda(lam);
    for (int m = 1; m <= d; m += 2) {
      for (const CyclicCharacter& psi : characters_of_order(d, m)) {
        out.emplace_back(lam, psi);
      }
    }
  }
  return out;
}

std::vector<CharacterSheafLabel> cuspidal_sheaves(const PairContext& ctx) {
  std::vector<CharacterSheafLabel> out;
  const int n = ctx.n();
  if (ctx.p == ctx.q) {
    const int k = n / 2;
    const DualStratumLabel stratum(k, 1, SignedYoungDiagram());
    for (const Bipartition& rho : bipartitions_of(1)) {
      for (const CyclicCharacter& psi : characters_of_order(n, n)) {
        out.emplace_back(EvenSheaf(stratum, rho, psi));
      }
    }
    if (k % 2 == 1) {
      for (const Partition& tau : partitions_of(1)) {
        for (const CyclicCharacter& psi : characters_of_order(n, k)) {
          out.emplace_back(OddSheaf(stratum, tau, psi));
        }
      }
    }
    return out;
  }
  if (ctx.p - ctx.q == 1 || ctx.q - ctx.p == 1) {
    const SignedYoungDiagram support(
        {SignedBlock{n, ctx.p > ctx.q ? 1 : 0, ctx.p > ctx.q ? 0 : 1}});
    const DualStratumLabel stratum(n, 0, support);
    for (const CyclicCharacter& psi : characters_of_order(n, n)) {
      out.emplace_back(OddSheaf(stratum, Partition(), psi));
    }
  }
  return out;
}

bool is_cuspidal(const CharacterSheafLabel& label, const PairContext& ctx) {
  require_label_signature(label, ctx);
  const int n = ctx.n();
  if (const auto* odd = std::get_if<OddSheaf>(&label)) {
    if (odd->stratum.mu.empty()) return odd->stratum.l == 1;
    if (odd->stratum.l != 0) return false;
    const auto& blocks = odd->stratum.mu.blocks;
    return blocks.size() == 1 && blocks[0].length == n &&
           blocks[0].plus + blocks[0].minus == 1 && odd->stratum.m == n;
  }
  return std::get<EvenSheaf>(label).stratum.l == 1;
}

LeviDatum levi_for_nilpotent_support(const SignedYoungDiagram& lam, int m) {
  if (lam.empty()) {
    throw std::invalid_argument(
        "levi_for_nilpotent_support: diagram must be nonempty");
  }
  if (!is_richardson(lam)) {
    throw std::invalid_argument(
        "levi_for_nilpotent_support: diagram must be Richardson");
  }
  if (m < 1 || m % 2 == 0 || d_lambda(lam) % m != 0) {
    throw std::invalid_argument(
        "levi_for_nilpotent_support: m must be odd and divide every length");
  }

  // Contracted rows (length/m, sign), weakly decreasing.
  std::vector<int> contracted;
  std::vector<int> row_sign;
  for (const SignedBlock& b : lam.blocks) {
    for (int r = 0; r < b.plus + b.minus; ++r) {
      contracted.push_back(b.length / m);
      row_sign.push_back(b.plus > 0 ? +1 : -1);
    }
  }
  const int total_rows = static_cast<int>(contracted.size());

  // Cumulative endpoints of the maximal constant-sign runs.
  std::vector<int> endpoints;
  for (int i = 0; i < total_rows; ++i) {
    if (i + 1 == total_rows || row_sign[i + 1] != row_sign[i]) {
      endpoints.push_back(i + 1);
    }
  }

  // Head of the column-group sequence: the run endpoints themselves.  Their
  // transpose is subtracted from the contracted rows; the transpose of the
  // remainder supplies the tail.
  std::vector<int> head_desc(endpoints.rbegin(), endpoints.rend());
  const Partition head_transpose = transpose(Partition(head_desc));
  std::vector<int> remainder;
  for (int i = 0; i < total_rows; ++i) {
    const int used =
        i < static_cast<int>(head_transpose.parts.size())
            ? head_transpose.parts[static_cast<std::size_t>(i)]
            : 0;
    const int rest = contracted[static_cast<std::size_t>(i)] - used;
    if (rest < 0) {
      throw std::logic_error("levi_for_nilpotent_support: negative remainder");
    }
    if (rest > 0) remainder.push_back(rest);
  }
  std::vector<int> groups(endpoints.begin(), endpoints.end());
  for (int tail : transpose(Partition(std::move(remainder))).parts) {
    groups.push_back(tail);
  }

  LeviDatum datum;
  const int half = (m - 1) / 2;
  int sign = row_sign[0];
  for (int group : groups) {
    datum.block_sizes.push_back(m * group);
    datum.theta_blocks.emplace_back((half + (sign > 0 ? 1 : 0)) * group,
                                    (half + (sign > 0 ? 0 : 1)) * group);
    datum.source_orbits.push_back(SignedYoungDiagram(
        {SignedBlock{m, sign > 0 ? group : 0, sign > 0 ? 0 : group}}));
    datum.sign_sequence.push_back(sign);
    datum.l_sequence.push_back(group);
    sign = -sign;
  }
  return datum;
}

std::optional<LeviDatum> induction_datum_for_sheaf(
    const CharacterSheafLabel& label, const PairContext& ctx) {
  if (is_cuspidal(label, ctx)) return std::nullopt;
  const DualStratumLabel& stratum = stratum_of(label);
  const bool odd = std::holds_alternative<OddSheaf>(label);
  const int m = stratum.m;  // contracted row scale; central order is m or 2m
  const int n = ctx.n();

  if (stratum.mu.empty()) {
    // l blocks of size 2m (odd type) or 2k (even type), each carrying the
    // balanced one-pair orbit.
    const int span = 2 * m;
    LeviDatum datum;
    for (int j = 0; j < stratum.l; ++j) {
      datum.block_sizes.push_back(span);
      datum.theta_blocks.emplace_back(m, m);
      datum.source_orbits.push_back(
          SignedYoungDiagram({SignedBlock{m, 1, 1}}));
      datum.l_sequence.push_back(2);
    }
    return datum;
  }

  if (odd && stratum.l > 0) {
    const int span = 2 * m * stratum.l;
    LeviDatum datum;
    datum.block_sizes = {span, n - span};
    datum.theta_blocks = {
        {m * stratum.l, m * stratum.l},
        {ctx.p - m * stratum.l, ctx.q - m * stratum.l}};
    datum.source_orbits = {
        SignedYoungDiagram({SignedBlock{m, stratum.l, stratum.l}}),
        stratum.mu};
    datum.l_sequence = {2 * stratum.l, stratum.mu.size() / m};
    return datum;
  }

  // Odd type with l = 0: the sign-alternating construction on mu, except
  // when it degenerates to the whole group (all contracted rows of length 1,
  // i.e. mu = m^a with one sign); then split off a single row instead.
  LeviDatum datum = levi_for_nilpotent_support(stratum.mu, m);
  if (!datum.whole_group()) return datum;

  const SignedBlock& b = stratum.mu.blocks[0];
  const int rows = b.plus + b.minus;
  const int sign = b.plus > 0 ? +1 : -1;
  const int half = (m - 1) / 2;
  LeviDatum split;
  split.block_sizes = {m * (rows - 1), m};
  split.theta_blocks = {
      {(half + (sign > 0 ? 1 : 0)) * (rows - 1),
       (half + (sign > 0 ? 0 : 1)) * (rows - 1)},
      {half + (sign > 0 ? 1 : 0), half + (sign > 0 ? 0 : 1)}};
  split.source_orbits = {
      SignedYoungDiagram({SignedBlock{m, sign > 0 ? rows - 1 : 0,
                                      sign > 0 ? 0 : rows - 1}}),
      SignedYoungDiagram({SignedBlock{m, sign > 0 ? 1 : 0,
                                      sign > 0 ? 0 : 1}})};
  split.l_sequence = {rows - 1, 1};
  return split;
}

}  // namespace sympair
