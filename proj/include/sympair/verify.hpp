#pragma once

#include <string>
#include <vector>

namespace sympair {

/// Result of one named invariant suite: stable check name, verdict, and a
/// short human-readable account (counterexample on failure, coverage on
/// success).
struct CheckRecord {
  std::string check;
  bool pass = false;
  std::string detail;
};

/// Each check sweeps every signature (p, q) with 1 <= p + q <= n_max unless
/// stated otherwise.

/// partitions_of sizes against the pentagonal-number recurrence, n <= n_max.
CheckRecord check_partition_recurrence(int n_max);

/// Sum over m | d of |characters_of_order(d, m)| equals d, orders and counts
/// are exact, and m not dividing d yields no characters; d <= d_max.
CheckRecord check_character_order_partition(int d_max);

/// transpose is a size-preserving involution on partitions of n <= n_max.
CheckRecord check_transpose_involution(int n_max);

/// Enumerated diagrams are distinct, have signature exactly (p, q), and
/// round-trip through the text form.
CheckRecord check_orbit_signatures(int n_max);

/// enumerate_orbits size matches the independent recursive counter.
CheckRecord check_orbit_count_independent(int n_max);

/// A diagram whose row lengths are all even has balanced signature.
CheckRecord check_parity_law(int n_max);

/// orbit_dimension agrees with dim k minus the centralizer dimension of an
/// explicit representative, whose Jordan type is re-derived from ranks.
CheckRecord check_orbit_dimension_oracle(int n_max);

/// Merged diagrams of all stratum labels have signature (p, q), with mu
/// Richardson and m dividing d_mu.
CheckRecord check_stratum_merge_signature(int n_max);

/// (m, 0, mu) is listed for every Richardson mu and every odd m | d_mu.
CheckRecord check_stratum_richardson_embedding(int n_max);

/// pi1 moduli match their defining cases and admit exactly phi(m) characters
/// of order m.
CheckRecord check_stratum_pi1_divisibility(int n_max);

/// For fixed m the label -> merged diagram map is injective; across m the
/// only collisions are the l = 0 families sharing a Richardson orbit, whose
/// count is compared against the divisor formula.
CheckRecord check_stratum_label_collisions(int n_max);

/// stratum_dim on the balanced strata (mu empty) equals 2m^2 l^2 - ml + l.
CheckRecord check_stratum_dimension_formula(int n_max);

/// Sum of d_lambda over all orbits equals the total number of sheaf labels,
/// and per order m the sheaf count matches the orbit-character count.
CheckRecord check_counting_identity(int n_max);

/// fourier_forward is a bijection from orbit-character pairs of order m onto
/// the order-m sheaf labels, with fourier_inverse as two-sided inverse.
CheckRecord check_bijection_round_trip(int n_max);

/// The sheaves with nilpotent support are exactly the pairs (Richardson
/// orbit, character of odd order), in both directions.
CheckRecord check_nilpotent_support_consistency(int n_max);

/// Cuspidal counts: 0 when |p-q| >= 2, phi(n) when |p-q| = 1, and
/// 2 phi(n) (+ phi(n/2) for odd n/2) when p = q; the list agrees with the
/// is_cuspidal filter of the full classification.
CheckRecord check_cuspidal_counts(int n_max);

/// induction_datum_for_sheaf returns nothing exactly for cuspidal sheaves,
/// and otherwise a proper Levi datum satisfying the block laws.
CheckRecord check_cuspidal_not_induced(int n_max);

/// Laws of the sign-alternating Levi datum on every (Richardson lam, odd
/// m | d_lambda): block sizes m*l_a summing to n, theta block sums equal to
/// the signature, alternating signs, sum of l_a equal to sum of lam_j / m,
/// and whole-group degeneration exactly when lam / m has all parts 1.
CheckRecord check_levi_laws(int n_max);

struct VerifyOptions {
  int n_max = 8;             // sweep bound on p + q for combinatorial checks
  int orbit_dim_cap = 6;     // bound for the orbit-dimension oracle
  int stratum_dim_cap = 8;   // bound for the stratum-dimension oracle
  int levi_cap = 10;         // bound for the Levi-law sweep
};

/// All checks, each capped at min(n_max, its own cap).
std::vector<CheckRecord> run_verification(const VerifyOptions& options);

}  // namespace sympair
