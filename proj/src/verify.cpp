#include "sympair/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "sympair/classify.hpp"
#include "sympair/oracle.hpp"
#include "sympair/orbits.hpp"
#include "sympair/strata.hpp"

namespace sympair {

namespace {

std::vector<PairContext> all_contexts(int n_max) {
  std::vector<PairContext> out;
  for (int n = 1; n <= n_max; ++n) {
    for (int p = n; p >= 0; --p) out.push_back(PairContext(p, n - p));
  }
  return out;
}

std::string ctx_str(const PairContext& ctx) {
  std::ostringstream out;
  out << "(p,q)=(" << ctx.p << "," << ctx.q << ")";
  return out.str();
}

CheckRecord passed(std::string name, std::string detail) {
  return CheckRecord{std::move(name), true, std::move(detail)};
}

CheckRecord failed(std::string name, std::string detail) {
  return CheckRecord{std::move(name), false, std::move(detail)};
}

/// Partition counts by the pentagonal-number recurrence, independent of the
/// generator in partitions_of.
std::vector<std::int64_t> partition_counts(int n_max) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n_max) + 1, 0);
  counts[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    std::int64_t sum = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      sum += sign * counts[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) sum += sign * counts[static_cast<std::size_t>(n - g2)];
    }
    counts[static_cast<std::size_t>(n)] = sum;
  }
  return counts;
}

int count_odd_divisors(int d) {
  int count = 0;
  for (int m = 1; m <= d; m += 2) {
    if (d % m == 0) ++count;
  }
  return count;
}

}  // namespace

CheckRecord check_partition_recurrence(int n_max) {
  const std::string name = "partition-count-recurrence";
  const auto expected = partition_counts(n_max);
  for (int n = 0; n <= n_max; ++n) {
    const auto actual =
        static_cast<std::int64_t>(partitions_of(n).size());
    if (actual != expected[static_cast<std::size_t>(n)]) {
      std::ostringstream detail;
      detail << "n=" << n << ": enumerated " << actual << ", recurrence gives "
             << expected[static_cast<std::size_t>(n)];
      return failed(name, detail.str());
    }
  }
  std::ostringstream detail;
  detail << "n <= " << n_max << " all match; p(" << n_max << ") = "
         << expected[static_cast<std::size_t>(n_max)];
  return passed(name, detail.str());
}

CheckRecord check_character_order_partition(int d_max) {
  const std::string name = "character-order-partition";
  for (int d = 1; d <= d_max; ++d) {
    std::int64_t total = 0;
    for (int m = 1; m <= d; ++m) {
      const auto chars = characters_of_order(d, m);
      if (d % m != 0) {
        if (!chars.empty()) {
          return failed(name, "characters exist for non-divisor order");
        }
        continue;
      }
      if (static_cast<std::int64_t>(chars.size()) != euler_phi(m)) {
        std::ostringstream detail;
        detail << "d=" << d << " m=" << m << ": " << chars.size()
               << " characters, phi(m)=" << euler_phi(m);
        return failed(name, detail.str());
      }
      for (const CyclicCharacter& chi : chars) {
        if (chi.order() != m ||
            CyclicCharacter::from_order_class(d, m, chi.primitive_residue()) !=
                chi) {
          return failed(name, "order or residue round-trip broken");
        }
      }
      total += static_cast<std::int64_t>(chars.size());
    }
    if (total != d) {
      std::ostringstream detail;
      detail << "d=" << d << ": orders partition into " << total
             << " characters, expected " << d;
      return failed(name, detail.str());
    }
  }
  std::ostringstream detail;
  detail << "d <= " << d_max << ": order counts partition every Z/d dual";
  return passed(name, detail.str());
}

CheckRecord check_transpose_involution(int n_max) {
  const std::string name = "transpose-involution";
  std::int64_t seen = 0;
  for (int n = 0; n <= n_max; ++n) {
    for (const Partition& p : partitions_of(n)) {
      const Partition t = transpose(p);
      if (t.size() != n || transpose(t) != p) {
        std::ostringstream detail;
        detail << "counterexample at n=" << n;
        return failed(name, detail.str());
      }
      ++seen;
    }
  }
  std::ostringstream detail;
  detail << seen << " partitions with n <= " << n_max;
  return passed(name, detail.str());
}

CheckRecord check_orbit_signatures(int n_max) {
  const std::string name = "orbit-signature-exact";
  std::int64_t seen = 0;
  for (const PairContext& ctx : all_contexts(n_max)) {
    std::set<SignedYoungDiagram> distinct;
    for (const SignedYoungDiagram& lam : enumerate_orbits(ctx)) {
      if (lam.signature() != std::pair<int, int>{ctx.p, ctx.q}) {
        return failed(name, "signature mismatch at " + ctx_str(ctx));
      }
      if (!distinct.insert(lam).second) {
        return failed(name, "duplicate diagram at " + ctx_str(ctx));
      }
      if (diagram_from_ascii(to_ascii(lam)) != lam) {
        return failed(name, "text round-trip broken at " + ctx_str(ctx));
      }
      ++seen;
    }
  }
  std::ostringstream detail;
  detail << seen << " diagrams over p+q <= " << n_max;
  return passed(name, detail.str());
}

CheckRecord check_orbit_count_independent(int n_max) {
  const std::string name = "orbit-count-independent";
  for (const PairContext& ctx : all_contexts(n_max)) {
    const auto enumerated =
        static_cast<std::int64_t>(enumerate_orbits(ctx).size());
    const std::int64_t counted = count_orbits_independent(ctx);
    if (enumerated != counted) {
      std::ostringstream detail;
      detail << ctx_str(ctx) << ": enumerated " << enumerated
             << ", counter gives " << counted;
      return failed(name, detail.str());
    }
  }
  std::ostringstream detail;
  detail << "enumeration matches the recursive counter for p+q <= " << n_max;
  return passed(name, detail.str());
}

CheckRecord check_parity_law(int n_max) {
  const std::string name = "even-rows-balanced";
  for (const PairContext& ctx : all_contexts(n_max)) {
    for (const SignedYoungDiagram& lam : enumerate_orbits(ctx)) {
      const bool all_even =
          std::all_of(lam.blocks.begin(), lam.blocks.end(),
                      [](const SignedBlock& b) { return b.length % 2 == 0; });
      if (all_even && ctx.p != ctx.q) {
        return failed(name, "all-even diagram at " + ctx_str(ctx));
      }
    }
  }
  std::ostringstream detail;
  detail << "all-even diagrams occur only at balanced signatures, p+q <= "
         << n_max;
  return passed(name, detail.str());
}

CheckRecord check_orbit_dimension_oracle(int n_max) {
  const std::string name = "orbit-dimension-oracle";
  std::int64_t seen = 0;
  for (const PairContext& ctx : all_contexts(n_max)) {
    const std::int64_t dim_k = static_cast<std::int64_t>(ctx.p) * ctx.p +
                               static_cast<std::int64_t>(ctx.q) * ctx.q - 1;
    for (const SignedYoungDiagram& lam : enumerate_orbits(ctx)) {
      const MatrixRepresentative rep = representative(lam, ctx);
      for (int i = 0; i < rep.n; ++i) {
        for (int j = 0; j < rep.n; ++j) {
          const bool same_side = (i < ctx.p) == (j < ctx.p);
          if (same_side && rep.entries.at(i, j) != 0) {
            return failed(name, "representative leaves g_1 at " + ctx_str(ctx));
          }
        }
      }
      if (jordan_type(rep.entries) != lam.unsigned_partition()) {
        return failed(name,
                      "Jordan type mismatch at " + ctx_str(ctx) + " " +
                          to_ascii(lam));
      }
      const std::int64_t by_centralizer =
          dim_k - centralizer_dim_in_k(rep.entries, ctx);
      if (by_centralizer != orbit_dimension(lam, ctx)) {
        std::ostringstream detail;
        detail << "dimension mismatch at " << ctx_str(ctx) << " "
               << to_ascii(lam) << ": centralizer gives " << by_centralizer
               << ", formula gives " << orbit_dimension(lam, ctx);
        return failed(name, detail.str());
      }
      ++seen;
    }
  }
  std::ostringstream detail;
  detail << seen << " orbits with n <= " << n_max
         << ": formula matches the centralizer computation";
  return passed(name, detail.str());
}

CheckRecord check_stratum_merge_signature(int n_max) {
  const std::string name = "stratum-merged-signature";
  std::int64_t seen = 0;
  for (const PairContext& ctx : all_contexts(n_max)) {
    for (const DualStratumLabel& label : cs_orbits(ctx)) {
      if (merged_diagram(label).signature() !=
          std::pair<int, int>{ctx.p, ctx.q}) {
        return failed(name, "merged signature off at " + ctx_str(ctx));
      }
      if (label.mu.empty()) {
        if (ctx.p != ctx.q || 2 * label.m * label.l != ctx.n()) {
          return failed(name, "balanced label out of place at " + ctx_str(ctx));
        }
      } else {
        if (label.m % 2 == 0) {
          return failed(name, "even m with residue at " + ctx_str(ctx));
        }
        if (d_lambda(label.mu) % label.m != 0) {
          return failed(name, "m does not divide d_mu at " + ctx_str(ctx));
        }
      }
      ++seen;
    }
  }
  std::ostringstream detail;
  detail << seen << " labels over p+q <= " << n_max;
  return passed(name, detail.str());
}

CheckRecord check_stratum_richardson_embedding(int n_max) {
  const std::string name = "stratum-richardson-embedding";
  for (const PairContext& ctx : all_contexts(n_max)) {
    const auto labels = cs_orbits(ctx);
    const std::set<DualStratumLabel> label_set(labels.begin(), labels.end());
    for (const SignedYoungDiagram& lam : enumerate_orbits(ctx)) {
      if (!is_richardson(lam)) continue;
      const int d = d_lambda(lam);
      for (int m = 1; m <= d; m += 2) {
        if (d % m != 0) continue;
        if (label_set.count(DualStratumLabel(m, 0, lam)) == 0) {
          std::ostringstream detail;
          detail << "missing (m,0,mu) for m=" << m << " mu=" << to_ascii(lam)
                 << " at " << ctx_str(ctx);
          return failed(name, detail.str());
        }
      }
    }
  }
  std::ostringstream detail;
  detail << "every (odd m | d_mu, 0, Richardson mu) is listed, p+q <= "
         << n_max;
  return passed(name, detail.str());
}

CheckRecord check_stratum_pi1_divisibility(int n_max) {
  const std::string name = "stratum-pi1-divisibility";
  for (const PairContext& ctx : all_contexts(n_max)) {
    for (const DualStratumLabel& label : cs_orbits(ctx)) {
      const Pi1Data pi1 = pi1_data(label);
      if (pi1.braid_rank != label.l) {
        return failed(name, "braid rank off at " + ctx_str(ctx));
      }
      if (label.mu.empty()) {
        if (pi1.cyclic_modulus != 2 * label.m ||
            static_cast<std::int64_t>(
                characters_of_order(pi1.cyclic_modulus, 2 * label.m).size()) !=
                euler_phi(2 * label.m)) {
          return failed(name, "balanced modulus off at " + ctx_str(ctx));
        }
        if (label.m % 2 == 1 &&
            static_cast<std::int64_t>(
                characters_of_order(pi1.cyclic_modulus, label.m).size()) !=
                euler_phi(label.m)) {
          return failed(name, "odd order count off at " + ctx_str(ctx));
        }
        continue;
      }
      const int d_mu = d_lambda(label.mu);
      const int expected =
          label.l == 0 ? d_mu : std::gcd(2 * label.m, d_mu);
      if (pi1.cyclic_modulus != expected ||
          pi1.cyclic_modulus % label.m != 0 ||
          static_cast<std::int64_t>(
              characters_of_order(pi1.cyclic_modulus, label.m).size()) !=
              euler_phi(label.m)) {
        return failed(name, "cyclic modulus off at " + ctx_str(ctx));
      }
    }
  }
  std::ostringstream detail;
  detail << "pi1 moduli and character counts agree, p+q <= " << n_max;
  return passed(name, detail.str());
}

CheckRecord check_stratum_label_collisions(int n_max) {
  const std::string name = "stratum-label-collisions";
  std::int64_t shared_orbits = 0;
  for (const PairContext& ctx : all_contexts(n_max)) {
    std::map<SignedYoungDiagram, std::vector<DualStratumLabel>> families;
    for (const DualStratumLabel& label : cs_orbits(ctx)) {
      families[merged_diagram(label)].push_back(label);
    }
    for (const auto& [merged, family] : families) {
      std::set<int> ms;
      for (const DualStratumLabel& label : family) {
        if (!ms.insert(label.m).second) {
          return failed(name,
                        "two labels with one m share an orbit at " +
                            ctx_str(ctx) + " " + to_ascii(merged));
        }
      }
      if (family.size() == 1) continue;
      // A shared orbit must be a Richardson diagram listed once per odd
      // divisor of its d, all with l = 0.
      shared_orbits += 1;
      const bool all_l0 = std::all_of(
          family.begin(), family.end(),
          [&](const DualStratumLabel& label) {
            return label.l == 0 && label.mu == merged;
          });
      if (!all_l0 ||
          static_cast<int>(family.size()) !=
              count_odd_divisors(d_lambda(merged))) {
        return failed(name, "unexpected collision at " + ctx_str(ctx) + " " +
                              to_ascii(merged));
      }
    }
  }
  std::ostringstream detail;
  detail << "label-to-orbit map injective per m; " << shared_orbits
         << " orbits shared across m are exactly the l=0 divisor families,"
         << " p+q <= " << n_max;
  return passed(name, detail.str());
}

CheckRecord check_stratum_dimension_formula(int n_max) {
  const std::string name = "stratum-dimension-oracle";
  std::int64_t balanced = 0;
  std::int64_t supports = 0;
  for (const PairContext& ctx : all_contexts(n_max)) {
    for (const DualStratumLabel& label : cs_orbits(ctx)) {
      if (label.mu.empty()) {
        const std::int64_t m = label.m;
        const std::int64_t l = label.l;
        const std::int64_t expected = 2 * m * m * l * l - m * l + l;
        const std::int64_t sampled = stratum_dim(label, ctx);
        if (sampled != expected) {
          std::ostringstream detail;
          detail << "balanced stratum m=" << m << " l=" << l << " at "
                 << ctx_str(ctx) << ": sampled " << sampled << ", formula "
                 << expected;
          return failed(name, detail.str());
        }
        ++balanced;
      } else if (label.l == 0) {
        if (stratum_dim(label, ctx) != orbit_dimension(label.mu, ctx)) {
          return failed(name, "l=0 stratum dim off at " + ctx_str(ctx));
        }
        ++supports;
      }
    }
  }
  std::ostringstream detail;
  detail << balanced << " balanced strata match 2m^2l^2 - ml + l and "
         << supports << " l=0 strata match their orbit dimension, n <= "
         << n_max;
  return passed(name, detail.str());
}

CheckRecord check_counting_identity(int n_max) {
  const std::string name = "counting-identity";
  std::int64_t largest = 0;
  for (const PairContext& ctx : all_contexts(n_max)) {
    std::int64_t orbit_side = 0;
    for (const SignedYoungDiagram& lam : enumerate_orbits(ctx)) {
      orbit_side += d_lambda(lam);
    }
    std::int64_t sheaf_side = 0;
    for (int m = 1; m <= ctx.n(); ++m) {
      const auto sheaves =
          static_cast<std::int64_t>(character_sheaves(ctx, m).size());
      const auto complexes =
          static_cast<std::int64_t>(orbital_complexes(ctx, m).size());
      if (sheaves != complexes) {
        std::ostringstream detail;
        detail << ctx_str(ctx) << " m=" << m << ": " << sheaves
               << " sheaves vs " << complexes << " orbit-character pairs";
        return failed(name, detail.str());
      }
      sheaf_side += sheaves;
    }
    if (orbit_side != sheaf_side) {
      std::ostringstream detail;
      detail << ctx_str(ctx) << ": sum of d_lambda " << orbit_side
             << " != " << sheaf_side << " sheaf labels";
      return failed(name, detail.str());
    }
    largest = std::max(largest, sheaf_side);
  }
  std::ostringstream detail;
  detail << "sum of d_lambda equals the sheaf count per order, p+q <= "
         << n_max << " (largest total " << largest << ")";
  return passed(name, detail.str());
}

CheckRecord check_bijection_round_trip(int n_max) {
  const std::string name = "fourier-bijection-round-trip";
  std::int64_t pairs = 0;
  for (const PairContext& ctx : all_contexts(n_max)) {
    for (int m = 1; m <= ctx.n(); ++m) {
      const auto complexes = orbital_complexes(ctx, m);
      auto sheaves = character_sheaves(ctx, m);
      std::vector<CharacterSheafLabel> images;
      for (const OrbitalComplex& complex : complexes) {
        CharacterSheafLabel image = fourier_forward(complex);
        if (!(fourier_inverse(image, ctx) == complex)) {
          return failed(name, "inverse(forward) != id at " + ctx_str(ctx) +
                                  " " + to_ascii(complex.orbit));
        }
        images.push_back(std::move(image));
        ++pairs;
      }
      std::sort(images.begin(), images.end());
      std::sort(sheaves.begin(), sheaves.end());
      if (images != sheaves) {
        std::ostringstream detail;
        detail << ctx_str(ctx) << " m=" << m << ": forward image has "
               << images.size() << " labels, classification lists "
               << sheaves.size();
        return failed(name, detail.str());
      }
      for (const CharacterSheafLabel& label : sheaves) {
        if (!(fourier_forward(fourier_inverse(label, ctx)) == label)) {
          return failed(name, "forward(inverse) != id at " + ctx_str(ctx));
        }
      }
    }
  }
  std::ostringstream detail;
  detail << pairs << " orbit-character pairs round-trip, p+q <= " << n_max;
  return passed(name, detail.str());
}

CheckRecord check_nilpotent_support_consistency(int n_max) {
  const std::string name = "nilpotent-support-consistency";
  for (const PairContext& ctx : all_contexts(n_max)) {
    auto listed = nilpotent_support_sheaves(ctx);
    for (const OrbitalComplex& pair : listed) {
      if (!is_richardson(pair.orbit) || pair.character.order() % 2 == 0) {
        return failed(name, "non-Richardson or even order at " + ctx_str(ctx));
      }
    }
    std::vector<OrbitalComplex> from_classification;
    for (int m = 1; m <= ctx.n(); m += 2) {
      for (const CharacterSheafLabel& label : character_sheaves(ctx, m)) {
        if (!has_nilpotent_support(label)) continue;
        const auto& odd = std::get<OddSheaf>(label);
        from_classification.emplace_back(odd.stratum.mu, odd.psi);
      }
    }
    std::sort(listed.begin(), listed.end());
    std::sort(from_classification.begin(), from_classification.end());
    if (listed != from_classification) {
      std::ostringstream detail;
      detail << ctx_str(ctx) << ": " << listed.size()
             << " direct pairs vs " << from_classification.size()
             << " l=0 sheaves";
      return failed(name, detail.str());
    }
  }
  std::ostringstream detail;
  detail << "direct list equals the l=0 slice of the classification, p+q <= "
         << n_max;
  return passed(name, detail.str());
}

CheckRecord check_cuspidal_counts(int n_max) {
  const std::string name = "cuspidal-counts";
  for (const PairContext& ctx : all_contexts(n_max)) {
    const int n = ctx.n();
    auto listed = cuspidal_sheaves(ctx);
    std::int64_t expected = 0;
    const int gap = ctx.p > ctx.q ? ctx.p - ctx.q : ctx.q - ctx.p;
    if (gap == 1) {
      expected = euler_phi(n);
    } else if (gap == 0) {
      expected = 2 * euler_phi(n);
      if ((n / 2) % 2 == 1) expected += euler_phi(n / 2);
    }
    if (static_cast<std::int64_t>(listed.size()) != expected) {
      std::ostringstream detail;
      detail << ctx_str(ctx) << ": " << listed.size()
             << " cuspidal labels, expected " << expected;
      return failed(name, detail.str());
    }
    std::vector<CharacterSheafLabel> filtered;
    for (const CharacterSheafLabel& label : all_character_sheaves(ctx)) {
      if (is_cuspidal(label, ctx)) filtered.push_back(label);
    }
    std::sort(listed.begin(), listed.end());
    std::sort(filtered.begin(), filtered.end());
    if (listed != filtered) {
      return failed(name,
                    "list disagrees with the is_cuspidal filter at " +
                        ctx_str(ctx));
    }
  }
  std::ostringstream detail;
  detail << "counts follow the phi formulas and match the filter, p+q <= "
         << n_max;
  return passed(name, detail.str());
}

namespace {

/// Block laws every induction datum must satisfy for the sheaf's context.
bool levi_datum_sound(const LeviDatum& datum, const PairContext& ctx,
                      int scale, int support_rows) {
  if (datum.block_sizes.size() != datum.theta_blocks.size() ||
      datum.block_sizes.size() != datum.source_orbits.size() ||
      datum.block_sizes.size() != datum.l_sequence.size()) {
    return false;
  }
  int size_sum = 0;
  int plus_sum = 0;
  int minus_sum = 0;
  int l_sum = 0;
  for (std::size_t i = 0; i < datum.block_sizes.size(); ++i) {
    const auto& [tp, tm] = datum.theta_blocks[i];
    if (tp + tm != datum.block_sizes[i]) return false;
    if (datum.source_orbits[i].size() != datum.block_sizes[i]) return false;
    if (datum.source_orbits[i].signature() != std::pair<int, int>{tp, tm}) {
      return false;
    }
    if (scale * datum.l_sequence[i] != datum.block_sizes[i]) return false;
    size_sum += datum.block_sizes[i];
    plus_sum += tp;
    minus_sum += tm;
    l_sum += datum.l_sequence[i];
  }
  if (size_sum != ctx.n() || plus_sum != ctx.p || minus_sum != ctx.q) {
    return false;
  }
  if (l_sum != support_rows) return false;
  if (!datum.sign_sequence.empty()) {
    if (datum.sign_sequence.size() != datum.block_sizes.size()) return false;
    for (std::size_t i = 0; i + 1 < datum.sign_sequence.size(); ++i) {
      if (datum.sign_sequence[i] != -datum.sign_sequence[i + 1]) return false;
    }
  }
  return true;
}

}  // namespace

CheckRecord check_cuspidal_not_induced(int n_max) {
  const std::string name = "cuspidal-not-induced";
  std::int64_t induced = 0;
  for (const PairContext& ctx : all_contexts(n_max)) {
    for (const CharacterSheafLabel& label : all_character_sheaves(ctx)) {
      const auto datum = induction_datum_for_sheaf(label, ctx);
      const bool cuspidal = is_cuspidal(label, ctx);
      if (datum.has_value() == cuspidal) {
        return failed(name,
                      "induction datum presence disagrees with cuspidality "
                      "at " + ctx_str(ctx));
      }
      if (!datum.has_value()) continue;
      if (datum->whole_group()) {
        return failed(name, "whole-group datum for a non-cuspidal sheaf at " +
                                ctx_str(ctx));
      }
      const DualStratumLabel& stratum =
          std::holds_alternative<OddSheaf>(label)
              ? std::get<OddSheaf>(label).stratum
              : std::get<EvenSheaf>(label).stratum;
      const SignedYoungDiagram merged = merged_diagram(stratum);
      if (!levi_datum_sound(*datum, ctx, stratum.m,
                            merged.size() / stratum.m)) {
        return failed(name, "unsound induction datum at " + ctx_str(ctx));
      }
      ++induced;
    }
  }
  std::ostringstream detail;
  detail << induced
         << " induced sheaves carry sound proper Levi data; cuspidal ones "
            "none, p+q <= " << n_max;
  return passed(name, detail.str());
}

CheckRecord check_levi_laws(int n_max) {
  const std::string name = "levi-block-laws";
  std::int64_t data = 0;
  for (const PairContext& ctx : all_contexts(n_max)) {
    for (const SignedYoungDiagram& lam : enumerate_orbits(ctx)) {
      if (!is_richardson(lam)) continue;
      const int d = d_lambda(lam);
      for (int m = 1; m <= d; m += 2) {
        if (d % m != 0) continue;
        const LeviDatum datum = levi_for_nilpotent_support(lam, m);
        if (!levi_datum_sound(datum, ctx, m, lam.size() / m)) {
          std::ostringstream detail;
          detail << "laws fail for " << to_ascii(lam) << " m=" << m << " at "
                 << ctx_str(ctx);
          return failed(name, detail.str());
        }
        if (datum.sign_sequence.size() != datum.block_sizes.size()) {
          return failed(name, "missing sign sequence at " + ctx_str(ctx));
        }
        for (std::size_t i = 0; i < datum.source_orbits.size(); ++i) {
          const SignedYoungDiagram& source = datum.source_orbits[i];
          if (source.blocks.size() != 1 || source.blocks[0].length != m) {
            return failed(name, "source is not an m-row orbit at " +
                                    ctx_str(ctx));
          }
          const bool plus = datum.sign_sequence[i] > 0;
          if ((plus ? source.blocks[0].minus : source.blocks[0].plus) != 0) {
            return failed(name, "source sign off at " + ctx_str(ctx));
          }
        }
        const bool whole = datum.whole_group();
        const bool contracted_trivial = lam.blocks[0].length == m;
        if (whole != contracted_trivial) {
          std::ostringstream detail;
          detail << "whole-group iff all contracted rows are 1 fails for "
                 << to_ascii(lam) << " m=" << m << " at " << ctx_str(ctx);
          return failed(name, detail.str());
        }
        ++data;
      }
    }
  }
  std::ostringstream detail;
  detail << data << " (orbit, m) data satisfy the block laws, p+q <= "
         << n_max;
  return passed(name, detail.str());
}

std::vector<CheckRecord> run_verification(const VerifyOptions& options) {
  const int n = options.n_max;
  std::vector<CheckRecord> out;
  out.push_back(check_partition_recurrence(std::max(n, 20)));
  out.push_back(check_character_order_partition(60));
  out.push_back(check_transpose_involution(std::max(n, 20)));
  out.push_back(check_orbit_signatures(n));
  out.push_back(check_orbit_count_independent(n));
  out.push_back(check_parity_law(n));
  out.push_back(check_orbit_dimension_oracle(std::min(n, options.orbit_dim_cap)));
  out.push_back(check_stratum_merge_signature(n));
  out.push_back(check_stratum_richardson_embedding(n));
  out.push_back(check_stratum_pi1_divisibility(n));
  out.push_back(check_stratum_label_collisions(n));
  out.push_back(
      check_stratum_dimension_formula(std::min(n, options.stratum_dim_cap)));
  out.push_back(check_counting_identity(n));
  out.push_back(check_bijection_round_trip(n));
  out.push_back(check_nilpotent_support_consistency(n));
  out.push_back(check_cuspidal_counts(n));
  out.push_back(check_cuspidal_not_induced(n));
  out.push_back(check_levi_laws(std::min(n, options.levi_cap)));
  return out;
}

}  // namespace sympair
