#include "sympair/orbits.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sympair {

SignedYoungDiagram::SignedYoungDiagram(std::vector<SignedBlock> blocks_in)
    : blocks(std::move(blocks_in)) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const SignedBlock& b = blocks[i];
    if (b.length <= 0) {
      throw std::invalid_argument("SignedYoungDiagram: lengths must be positive");
    }
    if (b.plus < 0 || b.minus < 0 || b.plus + b.minus < 1) {
      throw std::invalid_argument("SignedYoungDiagram: bad multiplicities");
    }
    if (i > 0 && b.length >= blocks[i - 1].length) {
      throw std::invalid_argument(
          "SignedYoungDiagram: lengths must strictly decrease");
    }
  }
}

int SignedYoungDiagram::size() const {
  int total = 0;
  for (const SignedBlock& b : blocks) total += b.length * (b.plus + b.minus);
  return total;
}

std::pair<int, int> SignedYoungDiagram::signature() const {
  int p = 0;
  int q = 0;
  for (const SignedBlock& b : blocks) {
    const int hi = (b.length + 1) / 2;
    const int lo = b.length / 2;
    p += b.plus * hi + b.minus * lo;
    q += b.plus * lo + b.minus * hi;
  }
  return {p, q};
}

Partition SignedYoungDiagram::unsigned_partition() const {
  std::vector<int> parts;
  for (const SignedBlock& b : blocks) {
    parts.insert(parts.end(), static_cast<std::size_t>(b.plus + b.minus),
                 b.length);
  }
  return Partition(std::move(parts));
}

const SignedBlock* SignedYoungDiagram::block_of_length(int length) const {
  for (const SignedBlock& b : blocks) {
    if (b.length == length) return &b;
  }
  return nullptr;
}

PairContext::PairContext(int p_in, int q_in) : p(p_in), q(q_in) {
  if (p < 0 || q < 0 || p + q < 1) {
    throw std::invalid_argument("PairContext: need p, q >= 0 and p + q >= 1");
  }
}

namespace {

/// Distinct lengths of `shape` with multiplicities, longest first.
std::vector<std::pair<int, int>> length_multiplicities(const Partition& shape) {
  std::vector<std::pair<int, int>> out;
  for (int part : shape.parts) {
    if (!out.empty() && out.back().first == part) {
      out.back().second += 1;
    } else {
      out.emplace_back(part, 1);
    }
  }
  return out;
}

void assign_signs(const std::vector<std::pair<int, int>>& lengths,
                  std::size_t index, std::vector<SignedBlock>& prefix,
                  const PairContext& ctx,
                  std::vector<SignedYoungDiagram>& out) {
  if (index == lengths.size()) {
    SignedYoungDiagram candidate(prefix);
    if (candidate.signature() == std::pair<int, int>{ctx.p, ctx.q}) {
      out.push_back(std::move(candidate));
    }
    return;
  }
  const auto [length, mult] = lengths[index];
  for (int plus = mult; plus >= 0; --plus) {
    prefix.push_back(SignedBlock{length, plus, mult - plus});
    assign_signs(lengths, index + 1, prefix, ctx, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<SignedYoungDiagram> enumerate_orbits(const PairContext& ctx) {
  std::vector<SignedYoungDiagram> out;
  for (const Partition& shape : partitions_of(ctx.n())) {
    const auto lengths = length_multiplicities(shape);
    std::vector<SignedBlock> prefix;
    assign_signs(lengths, 0, prefix, ctx, out);
  }
  return out;
}

int d_lambda(const SignedYoungDiagram& lam) {
  if (lam.empty()) {
    throw std::invalid_argument("d_lambda: diagram must be nonempty");
  }
  int d = 0;
  for (const SignedBlock& b : lam.blocks) d = std::gcd(d, b.length);
  return d;
}

bool is_richardson(const SignedYoungDiagram& lam) {
  for (const SignedBlock& b : lam.blocks) {
    if (b.plus > 0 && b.minus > 0) return false;
  }
  return true;
}

std::int64_t orbit_dimension(const SignedYoungDiagram& lam,
                             const PairContext& ctx) {
  if (lam.signature() != std::pair<int, int>{ctx.p, ctx.q}) {
    throw std::invalid_argument("orbit_dimension: signature mismatch");
  }
  const std::int64_t n = ctx.n();
  std::int64_t sum_sq = 0;
  for (int col : transpose(lam.unsigned_partition()).parts) {
    sum_sq += static_cast<std::int64_t>(col) * col;
  }
  return (n * n - sum_sq) / 2;
}

std::vector<CyclicCharacter> component_character_set(
    const SignedYoungDiagram& lam, int order) {
  return characters_of_order(d_lambda(lam), order);
}

std::string to_ascii(const SignedYoungDiagram& lam) {
  std::ostringstream out;
  bool first = true;
  for (const SignedBlock& b : lam.blocks) {
    if (b.plus > 0) {
      out << (first ? "" : " ") << b.length << "+^" << b.plus;
      first = false;
    }
    if (b.minus > 0) {
      out << (first ? "" : " ") << b.length << "-^" << b.minus;
      first = false;
    }
  }
  return out.str();
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, const char* what) {
  throw std::invalid_argument("diagram_from_ascii: " + std::string(what) +
                              " in \"" + text + "\"");
}

}  // namespace

SignedYoungDiagram diagram_from_ascii(const std::string& text) {
  std::vector<SignedBlock> blocks;
  std::size_t pos = 0;
  int prev_length = 0;
  int prev_sign = 0;  // +1 or -1 for the previous token
  while (pos < text.size()) {
    if (!blocks.empty() || prev_length > 0) {
      if (text[pos] != ' ') parse_fail(text, "expected single space");
      ++pos;
    }
    std::size_t digits = 0;
    int length = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      length = length * 10 + (text[pos] - '0');
      ++pos;
      ++digits;
    }
    if (digits == 0 || length <= 0) parse_fail(text, "expected row length");
    if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) {
      parse_fail(text, "expected sign");
    }
    const int sign = text[pos] == '+' ? +1 : -1;
    ++pos;
    if (pos >= text.size() || text[pos] != '^') parse_fail(text, "expected '^'");
    ++pos;
    digits = 0;
    int mult = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      mult = mult * 10 + (text[pos] - '0');
      ++pos;
      ++digits;
    }
    if (digits == 0 || mult <= 0) parse_fail(text, "expected multiplicity");

    if (length == prev_length) {
      if (!(prev_sign == +1 && sign == -1)) {
        parse_fail(text, "tokens of equal length must be '+' then '-'");
      }
      blocks.back().minus = mult;
    } else {
      if (prev_length != 0 && length > prev_length) {
        parse_fail(text, "lengths must decrease");
      }
      SignedBlock b{length, 0, 0};
      (sign > 0 ? b.plus : b.minus) = mult;
      blocks.push_back(b);
    }
    prev_length = length;
    prev_sign = sign;
  }
  return SignedYoungDiagram(std::move(blocks));
}

}  // namespace sympair
