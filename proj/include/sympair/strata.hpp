#pragma once

#include <compare>
#include <vector>

#include "sympair/combinat.hpp"
#include "sympair/orbits.hpp"

namespace sympair {

/// Label (m, l, mu) for a stratum of the dual variety: l balanced pairs of
/// rows of length m on top of a Richardson diagram mu (the empty diagram
/// encodes the no-residue case, which forces 2ml = n and p = q).
struct DualStratumLabel {
  int m = 1;
  int l = 0;
  SignedYoungDiagram mu;

  DualStratumLabel() = default;
  DualStratumLabel(int m_in, int l_in, SignedYoungDiagram mu_in);

  auto operator<=>(const DualStratumLabel&) const = default;
};

/// Fundamental-group data of a stratum: the stratum fibers over a torus
/// quotient with braid_rank free strands, and its cyclic part has the given
/// modulus.
struct Pi1Data {
  int braid_rank = 0;
  int cyclic_modulus = 1;

  auto operator<=>(const Pi1Data&) const = default;
};

/// Diagram underlying a stratum: mu with l extra rows (m)_+ and l extra rows
/// (m)_- merged into its length-m block.
SignedYoungDiagram merged_diagram(int m, int l, const SignedYoungDiagram& mu);
SignedYoungDiagram merged_diagram(const DualStratumLabel& label);

/// braid_rank = l; cyclic_modulus = gcd(2m, d_mu) if l > 0 and mu nonempty,
/// d_mu if l = 0, and 2m if mu is empty.
Pi1Data pi1_data(const DualStratumLabel& label);

/// All stratum labels for (p, q):
///  (a) m odd, mu a nonempty Richardson diagram of signature (p-ml, q-ml)
///      with m | d_mu, for every l >= 0;
///  (b) mu empty, any m >= 1 with 2ml = n, only when p = q.
/// Sorted by (m, l, mu); labels are pairwise distinct, though distinct l = 0
/// labels with different m share their underlying orbit.
std::vector<DualStratumLabel> cs_orbits(const PairContext& ctx);

}  // namespace sympair
