#include "sympair/strata.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sympair {

DualStratumLabel::DualStratumLabel(int m_in, int l_in, SignedYoungDiagram mu_in)
    : m(m_in), l(l_in), mu(std::move(mu_in)) {
  if (m < 1) throw std::invalid_argument("DualStratumLabel: m must be >= 1");
  if (l < 0) throw std::invalid_argument("DualStratumLabel: l must be >= 0");
  if (l == 0 && mu.empty()) {
    throw std::invalid_argument("DualStratumLabel: l = 0 needs nonempty mu");
  }
  if (!mu.empty() && !is_richardson(mu)) {
    throw std::invalid_argument("DualStratumLabel: mu must be Richardson");
  }
}

SignedYoungDiagram merged_diagram(int m, int l, const SignedYoungDiagram& mu) {
  if (m < 1 || l < 0) {
    throw std::invalid_argument("merged_diagram: need m >= 1 and l >= 0");
  }
  if (l == 0) return mu;
  std::vector<SignedBlock> blocks;
  bool inserted = false;
  for (const SignedBlock& b : mu.blocks) {
    if (b.length == m) {
      blocks.push_back(SignedBlock{m, b.plus + l, b.minus + l});
      inserted = true;
    } else {
      if (b.length < m && !inserted) {
        blocks.push_back(SignedBlock{m, l, l});
        inserted = true;
      }
      blocks.push_back(b);
    }
  }
  if (!inserted) blocks.push_back(SignedBlock{m, l, l});
  return SignedYoungDiagram(std::move(blocks));
}

SignedYoungDiagram merged_diagram(const DualStratumLabel& label) {
  return merged_diagram(label.m, label.l, label.mu);
}

Pi1Data pi1_data(const DualStratumLabel& label) {
  Pi1Data out;
  out.braid_rank = label.l;
  if (label.mu.empty()) {
    out.cyclic_modulus = 2 * label.m;
  } else if (label.l == 0) {
    out.cyclic_modulus = d_lambda(label.mu);
  } else {
    out.cyclic_modulus = std::gcd(2 * label.m, d_lambda(label.mu));
  }
  return out;
}

std::vector<DualStratumLabel> cs_orbits(const PairContext& ctx) {
  std::vector<DualStratumLabel> out;
  const int half = std::min(ctx.p, ctx.q);
  for (int l = 0; l <= half; ++l) {
    const int max_m = l == 0 ? ctx.n() : half / l;
    for (int m = 1; m <= max_m; m += 2) {
      const int rp = ctx.p - m * l;
      const int rq = ctx.q - m * l;
      if (rp + rq < 1) continue;
      for (const SignedYoungDiagram& mu : enumerate_orbits(PairContext(rp, rq))) {
        if (!is_richardson(mu)) continue;
        if (d_lambda(mu) % m != 0) continue;
        out.push_back(DualStratumLabel(m, l, mu));
      }
    }
  }
  if (ctx.p == ctx.q) {
    for (int m = 1; 2 * m <= ctx.n(); ++m) {
      if (ctx.n() % (2 * m) == 0) {
        out.push_back(DualStratumLabel(m, ctx.n() / (2 * m), SignedYoungDiagram()));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sympair
