// Acceptance gate: eight end-to-end criteria, one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#include "sympair/classify.hpp"
#include "sympair/oracle.hpp"
#include "sympair/orbits.hpp"
#include "sympair/strata.hpp"
#include "sympair/verify.hpp"

namespace {

using sympair::CheckRecord;
using sympair::PairContext;

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str());
  if (!pass) ++failures;
}

void criterion_1_counting_identity() {
  const auto start = std::chrono::steady_clock::now();
  const CheckRecord sweep = sympair::check_counting_identity(12);
  const PairContext ctx(2, 2);
  const std::size_t m1 = sympair::character_sheaves(ctx, 1).size();
  const std::size_t m2 = sympair::character_sheaves(ctx, 2).size();
  const std::size_t m3 = sympair::character_sheaves(ctx, 3).size();
  const std::size_t m4 = sympair::character_sheaves(ctx, 4).size();
  const bool spot = m1 == 10 && m2 == 5 && m3 == 0 && m4 == 4 &&
                    sympair::all_character_sheaves(ctx).size() == 19;
  const double elapsed = seconds_since(start);
  const bool in_time = elapsed < 60.0;  // pinned runtime budget

  std::ostringstream detail;
  detail << "counting identity, sweep p+q <= 12";
  if (!sweep.pass) detail << "; sweep failed: " << sweep.detail;
  if (!spot)
    detail << "; (2,2) split is " << m1 << "+" << m2 << "+" << m3 << "+" << m4
           << ", expected 19 = 10+5+0+4";
  else
    detail << "; (2,2) splits 19 = 10+5+4 over orders {1,2,4}";
  detail << " (" << elapsed << " s, budget 60 s)";
  report(1, sweep.pass && spot && in_time, detail.str());
}

void criterion_2_bijection() {
  const CheckRecord sweep = sympair::check_bijection_round_trip(12);
  std::ostringstream detail;
  detail << "fourier bijection round-trips both ways, p+q <= 12; "
         << sweep.detail;
  report(2, sweep.pass, detail.str());
}

void criterion_3_cuspidal_counts() {
  const CheckRecord sweep = sympair::check_cuspidal_counts(12);
  const bool spots =
      sympair::cuspidal_sheaves(PairContext(2, 1)).size() == 2 &&
      sympair::cuspidal_sheaves(PairContext(1, 1)).size() == 3 &&
      sympair::cuspidal_sheaves(PairContext(2, 2)).size() == 4 &&
      sympair::cuspidal_sheaves(PairContext(3, 3)).size() == 6 &&
      sympair::cuspidal_sheaves(PairContext(4, 1)).empty() &&
      sympair::cuspidal_sheaves(PairContext(5, 2)).empty();
  std::ostringstream detail;
  detail << "cuspidal counts (2,1)->2 (1,1)->3 (2,2)->4 (3,3)->6, none "
            "outside |p-q| <= 1";
  if (!sweep.pass) detail << "; sweep failed: " << sweep.detail;
  if (!spots) detail << "; spot counts disagree";
  report(3, sweep.pass && spots, detail.str());
}

void criterion_4_nilpotent_support() {
  const CheckRecord sweep = sympair::check_nilpotent_support_consistency(12);
  std::size_t direct = 0;
  for (const auto& label :
       sympair::all_character_sheaves(PairContext(2, 2))) {
    if (sympair::has_nilpotent_support(label)) ++direct;
  }
  const bool spot =
      sympair::nilpotent_support_sheaves(PairContext(2, 2)).size() == 6 &&
      direct == 6;
  std::ostringstream detail;
  detail << "nilpotent-support sheaves match (richardson, odd order) pairs, "
            "p+q <= 12";
  if (!sweep.pass) detail << "; sweep failed: " << sweep.detail;
  detail << "; (2,2) has " << direct << " of them (expected 6)";
  report(4, sweep.pass && spot, detail.str());
}

void criterion_5_dimension_oracles() {
  const auto start = std::chrono::steady_clock::now();
  const CheckRecord orbit = sympair::check_orbit_dimension_oracle(6);
  const CheckRecord stratum = sympair::check_stratum_dimension_formula(8);
  const bool spot =
      sympair::stratum_dim(
          sympair::DualStratumLabel(2, 1, sympair::SignedYoungDiagram()),
          PairContext(2, 2)) == 7;
  const double elapsed = seconds_since(start);
  const bool in_time = elapsed < 120.0;  // pinned runtime budget

  std::ostringstream detail;
  detail << "orbit dimensions vs centralizer oracle (n <= 6), stratum "
            "dimensions vs 2m^2l^2-ml+l (n <= 8)";
  if (!orbit.pass) detail << "; orbit oracle failed: " << orbit.detail;
  if (!stratum.pass) detail << "; stratum formula failed: " << stratum.detail;
  if (!spot) detail << "; (m=2,l=1) at (2,2) is not 7";
  detail << " (" << elapsed << " s, budget 120 s)";
  report(5, orbit.pass && stratum.pass && spot && in_time, detail.str());
}

void criterion_6_enumeration_cross_check() {
  const CheckRecord sweep = sympair::check_orbit_count_independent(14);
  const bool spots =
      sympair::count_orbits_independent(PairContext(1, 1)) == 3 &&
      sympair::count_orbits_independent(PairContext(2, 1)) == 4 &&
      sympair::count_orbits_independent(PairContext(2, 2)) == 10;
  std::ostringstream detail;
  detail << "orbit enumeration vs independent count, p+q <= 14; "
         << sweep.detail;
  if (!spots) detail << "; spot counts disagree";
  report(6, sweep.pass && spots, detail.str());
}

void criterion_7_levi_laws() {
  const CheckRecord sweep = sympair::check_levi_laws(10);
  std::ostringstream detail;
  detail << "levi block laws and whole-group characterization, p+q <= 10; "
         << sweep.detail;
  report(7, sweep.pass, detail.str());
}

void criterion_8_parity_law() {
  bool pass = true;
  std::ostringstream counterexample;
  for (int p = 0; pass && p <= 12; ++p) {
    for (int q = 0; pass && p + q <= 12; ++q) {
      if (p + q < 1 || p == q) continue;
      const PairContext ctx(p, q);
      for (int m = 2; m <= ctx.n(); m += 2) {
        if (!sympair::character_sheaves(ctx, m).empty()) {
          pass = false;
          counterexample << "; (" << p << "," << q << ") has order-" << m
                         << " sheaves";
          break;
        }
      }
    }
  }
  const CheckRecord diagrams = sympair::check_parity_law(12);
  std::ostringstream detail;
  detail << "even central orders occur only when p = q, p+q <= 12";
  detail << counterexample.str();
  if (!diagrams.pass) detail << "; diagram parity failed: " << diagrams.detail;
  report(8, pass && diagrams.pass, detail.str());
}

}  // namespace

int main() {
  criterion_1_counting_identity();
  criterion_2_bijection();
  criterion_3_cuspidal_counts();
  criterion_4_nilpotent_support();
  criterion_5_dimension_oracles();
  criterion_6_enumeration_cross_check();
  criterion_7_levi_laws();
  criterion_8_parity_law();
  return failures;
}
