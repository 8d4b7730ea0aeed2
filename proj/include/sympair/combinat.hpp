#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace sympair {

/// Integer partition in normal form: weakly decreasing positive parts.
/// The empty partition is valid.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> parts_in);

  bool empty() const { return parts.empty(); }
  int size() const;

  auto operator<=>(const Partition&) const = default;
};

/// Ordered pair of partitions; its size is the sum of both sizes.
struct Bipartition {
  Partition first;
  Partition second;

  Bipartition() = default;
  Bipartition(Partition a, Partition b)
      : first(std::move(a)), second(std::move(b)) {}

  int size() const { return first.size() + second.size(); }

  auto operator<=>(const Bipartition&) const = default;
};

/// Character of the cyclic group Z/dZ, recorded by its value on a fixed
/// generator zeta_d: chi(zeta_d) = exp(2*pi*i*exponent/modulus).
///
/// Only order-level data is canonical; which exponents realize a given order
/// depends on the generator convention and must not leak into results.
struct CyclicCharacter {
  int modulus = 1;
  int exponent = 0;

  CyclicCharacter() = default;
  CyclicCharacter(int modulus_in, int exponent_in);

  /// modulus / gcd(modulus, exponent); the trivial character has order 1.
  int order() const;
  bool trivial() const { return exponent == 0; }

  /// The unit u (mod order) with exponent = (modulus/order)*u.
  int primitive_residue() const;

  /// Character of Z/modulus with the given order whose primitive residue is
  /// `unit` (taken mod order). Requires order | modulus.
  static CyclicCharacter from_order_class(int modulus, int order, int unit);

  auto operator<=>(const CyclicCharacter&) const = default;
};

/// Conjugate diagram: column lengths of p.
Partition transpose(const Partition& p);

/// All partitions of n in reverse-lexicographic (decreasing) order,
/// e.g. 4 -> (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> partitions_of(int n);

/// All bipartitions of n: |first| descending, then each side in
/// reverse-lexicographic order.
std::vector<Bipartition> bipartitions_of(int n);

std::int64_t euler_phi(int m);

/// All characters of Z/modulus of exact order `order`, exponent ascending.
/// Empty iff order does not divide modulus; otherwise phi(order) entries.
std::vector<CyclicCharacter> characters_of_order(int modulus, int order);

}  // namespace sympair
