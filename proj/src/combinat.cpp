#include "sympair/combinat.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace sympair {

Partition::Partition(std::vector<int> parts_in) : parts(std::move(parts_in)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) {
      throw std::invalid_argument("Partition: parts must be positive");
    }
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }
}

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

CyclicCharacter::CyclicCharacter(int modulus_in, int exponent_in)
    : modulus(modulus_in), exponent(exponent_in) {
  if (modulus < 1) {
    throw std::invalid_argument("CyclicCharacter: modulus must be positive");
  }
  if (exponent < 0 || exponent >= modulus) {
    throw std::invalid_argument("CyclicCharacter: exponent out of range");
  }
}

int CyclicCharacter::order() const {
  return modulus / std::gcd(modulus, exponent);
}

int CyclicCharacter::primitive_residue() const {
  const int m = order();
  // exponent = (modulus/m) * u with gcd(u, m) = 1; division is exact.
  return (exponent / (modulus / m)) % m;
}

CyclicCharacter CyclicCharacter::from_order_class(int modulus, int order,
                                                  int unit) {
  if (order < 1 || modulus % order != 0) {
    throw std::invalid_argument(
        "CyclicCharacter: order must divide the modulus");
  }
  int u = unit % order;
  if (u < 0) u += order;
  if (std::gcd(u == 0 ? order : u, order) != 1) {
    throw std::invalid_argument(
        "CyclicCharacter: residue not a unit for the requested order");
  }
  return CyclicCharacter(modulus, (modulus / order) * u);
}

Partition transpose(const Partition& p) {
  if (p.empty()) return Partition();
  std::vector<int> cols(static_cast<std::size_t>(p.parts[0]), 0);
  for (int part : p.parts) {
    for (int j = 0; j < part; ++j) cols[static_cast<std::size_t>(j)] += 1;
  }
  return Partition(std::move(cols));
}

namespace {

void generate_partitions(int n, int max_part, std::vector<int>& prefix,
                         std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    prefix.push_back(k);
    generate_partitions(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate_partitions(n, n, prefix, out);
  return out;
}

std::vector<Bipartition> bipartitions_of(int n) {
  if (n < 0) throw std::invalid_argument("bipartitions_of: negative size");
  std::vector<Bipartition> out;
  for (int a = n; a >= 0; --a) {
    for (const Partition& f : partitions_of(a)) {
      for (const Partition& s : partitions_of(n - a)) {
        out.emplace_back(f, s);
      }
    }
  }
  return out;
}

std::int64_t euler_phi(int m) {
  if (m < 1) throw std::invalid_argument("euler_phi: argument must be >= 1");
  std::int64_t result = m;
  int rest = m;
  for (int d = 2; static_cast<std::int64_t>(d) * d <= rest; ++d) {
    if (rest % d == 0) {
      while (rest % d == 0) rest /= d;
      result -= result / d;
    }
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::vector<CyclicCharacter> characters_of_order(int modulus, int order) {
  if (modulus < 1 || order < 1) {
    throw std::invalid_argument("characters_of_order: arguments must be >= 1");
  }
  std::vector<CyclicCharacter> out;
  if (modulus % order != 0) return out;
  for (int k = 0; k < modulus; ++k) {
    if (modulus / std::gcd(modulus, k) == order) {
      out.push_back(CyclicCharacter(modulus, k));
    }
  }
  return out;
}

}  // namespace sympair
