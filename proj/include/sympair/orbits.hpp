#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sympair/combinat.hpp"

namespace sympair {

/// All rows of one length in a signed Young diagram: `plus` rows whose first
/// box is marked +, `minus` rows whose first box is marked -.  Signs alternate
/// along each row, so a row of length L starting with + covers ceil(L/2) plus
/// boxes and floor(L/2) minus boxes.
struct SignedBlock {
  int length = 0;
  int plus = 0;
  int minus = 0;

  auto operator<=>(const SignedBlock&) const = default;
};

/// Signed Young diagram in normal form: blocks with strictly decreasing
/// lengths, each with plus + minus >= 1.  The empty diagram is valid.
struct SignedYoungDiagram {
  std::vector<SignedBlock> blocks;

  SignedYoungDiagram() = default;
  explicit SignedYoungDiagram(std::vector<SignedBlock> blocks_in);

  bool empty() const { return blocks.empty(); }

  /// Total number of boxes.
  int size() const;

  /// (number of + boxes, number of - boxes).
  std::pair<int, int> signature() const;

  /// Row lengths with multiplicity, as a partition of size().
  Partition unsigned_partition() const;

  /// Block with the given row length, or nullptr.
  const SignedBlock* block_of_length(int length) const;

  auto operator<=>(const SignedYoungDiagram&) const = default;
};

/// The pair (p, q) fixing the group S(GL_p x GL_q) inside SL_n, n = p + q.
struct PairContext {
  int p = 0;
  int q = 0;

  PairContext(int p_in, int q_in);
  int n() const { return p + q; }
};

/// All signed Young diagrams of signature (p, q), i.e. the nilpotent
/// K-orbits in g_1.  Order: unsigned partition reverse-lexicographic, then
/// plus-multiplicity vector lexicographically decreasing.
std::vector<SignedYoungDiagram> enumerate_orbits(const PairContext& ctx);

/// gcd of the distinct row lengths; the component group of the orbit is
/// cyclic of this order.  Requires a nonempty diagram.
int d_lambda(const SignedYoungDiagram& lam);

/// True iff every row length carries a single sign (plus = 0 or minus = 0 in
/// every block).  These are the orbits induced from the zero orbit of a
/// theta-stable parabolic.
bool is_richardson(const SignedYoungDiagram& lam);

/// Dimension of the K-orbit through a representative of lam:
/// (n^2 - sum of squared column lengths) / 2.
std::int64_t orbit_dimension(const SignedYoungDiagram& lam,
                             const PairContext& ctx);

/// Characters of the component group Z/d_lambda of exact order `order`.
/// Depends on lam only through d_lambda.
std::vector<CyclicCharacter> component_character_set(
    const SignedYoungDiagram& lam, int order);

/// Text form "3+^1 2-^2 1+^1": tokens length/sign/'^'/multiplicity, lengths
/// strictly decreasing, '+' token before '-' at equal length, multiplicity
/// always printed.  The empty diagram prints as "".
std::string to_ascii(const SignedYoungDiagram& lam);

/// Strict inverse of to_ascii; throws std::invalid_argument on any deviation
/// from the grammar (wrong order, zero multiplicity, duplicate sign token).
SignedYoungDiagram diagram_from_ascii(const std::string& text);

}  // namespace sympair
