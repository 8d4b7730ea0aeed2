#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "sympair/combinat.hpp"
#include "sympair/orbits.hpp"
#include "sympair/strata.hpp"

namespace sympair {

/// Simple K-equivariant perverse sheaf on the nilpotent cone: an orbit
/// together with a character of its (cyclic) component group.
struct OrbitalComplex {
  SignedYoungDiagram orbit;
  CyclicCharacter character;  // modulus == d_lambda(orbit)

  OrbitalComplex(SignedYoungDiagram orbit_in, CyclicCharacter character_in);

  auto operator<=>(const OrbitalComplex&) const = default;
};

/// Character sheaf with central character of odd order m = stratum.m:
/// a stratum (m, l, mu), a partition tau of l (the braid part of the local
/// system), and a character psi of the cyclic part with order exactly m.
struct OddSheaf {
  DualStratumLabel stratum;
  Partition tau;
  CyclicCharacter psi;

  OddSheaf(DualStratumLabel stratum_in, Partition tau_in,
           CyclicCharacter psi_in);

  auto operator<=>(const OddSheaf&) const = default;
};

/// Character sheaf with central character of even order 2k, k = stratum.m:
/// the stratum is (k, n/2k, empty), the braid part is a bipartition rho of
/// l = n/2k, and psi has modulus and order 2k.
struct EvenSheaf {
  DualStratumLabel stratum;
  Bipartition rho;
  CyclicCharacter psi;

  EvenSheaf(DualStratumLabel stratum_in, Bipartition rho_in,
            CyclicCharacter psi_in);

  auto operator<=>(const EvenSheaf&) const = default;
};

using CharacterSheafLabel = std::variant<OddSheaf, EvenSheaf>;

/// Order of the central character: stratum.m for odd labels, 2 * stratum.m
/// for even labels.
int central_order(const CharacterSheafLabel& label);

/// True iff the sheaf is supported on the nilpotent cone (odd type, l = 0).
bool has_nilpotent_support(const CharacterSheafLabel& label);

/// Witness that a sheaf is induced: a theta-stable Levi of block type
/// S(GL_{b_1} x ... x GL_{b_r}) with V decomposed per block, and per block
/// the source orbit its cuspidal-support datum lives on.
struct LeviDatum {
  std::vector<int> block_sizes;                      // sum equals n
  std::vector<std::pair<int, int>> theta_blocks;     // (dim V+, dim V-) cut per block
  std::vector<SignedYoungDiagram> source_orbits;     // one diagram per block
  std::vector<int> sign_sequence;  // +1/-1 per block; only the alternating
                                   // one-sign-per-block construction fills it
  std::vector<int> l_sequence;     // row count of each block's source at scale m

  bool whole_group() const { return block_sizes.size() <= 1; }
};

/// Orbit-character pairs (lambda, chi) with chi of exact order m, ordered by
/// the orbit enumeration and then by exponent.
std::vector<OrbitalComplex> orbital_complexes(const PairContext& ctx, int m);

/// All character sheaf labels with central character of order m.
std::vector<CharacterSheafLabel> character_sheaves(const PairContext& ctx,
                                                   int m);

/// character_sheaves for every m = 1..n, concatenated in ascending m.
std::vector<CharacterSheafLabel> all_character_sheaves(const PairContext& ctx);

/// Nilpotent-to-dual direction of the Fourier transform bijection.
CharacterSheafLabel fourier_forward(const OrbitalComplex& complex);

/// Dual-to-nilpotent direction; validates the label against (p, q).
OrbitalComplex fourier_inverse(const CharacterSheafLabel& label,
                               const PairContext& ctx);

/// Pairs (lambda, psi) with lambda Richardson and psi of odd order: the
/// sheaves whose Fourier transform again has nilpotent support.
std::vector<OrbitalComplex> nilpotent_support_sheaves(const PairContext& ctx);

std::vector<CharacterSheafLabel> cuspidal_sheaves(const PairContext& ctx);

bool is_cuspidal(const CharacterSheafLabel& label, const PairContext& ctx);

/// Theta-stable Levi datum attached to a Richardson orbit lam and an odd
/// order m dividing every row length: row lengths are contracted by m, the
/// contracted diagram is cut into sign-alternating column groups l_1, ...,
/// l_r, and block a carries the source orbit (m^{l_a}) with constant sign.
LeviDatum levi_for_nilpotent_support(const SignedYoungDiagram& lam, int m);

/// Levi datum from which the sheaf is obtained by parabolic induction, or
/// std::nullopt exactly when the sheaf is cuspidal.
std::optional<LeviDatum> induction_datum_for_sheaf(
    const CharacterSheafLabel& label, const PairContext& ctx);

}  // namespace sympair
