#include "sympair/oracle.hpp"

#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

namespace sympair {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("RationalMatrix: negative shape");
  }
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) {
    throw std::invalid_argument("RationalMatrix: shape mismatch in product");
  }
  RationalMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        out.at(i, j) += a * other.at(k, j);
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("RationalMatrix: shape mismatch in sum");
  }
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = data_[i] + other.data_[i];
  }
  return out;
}

int RationalMatrix::rank() const {
  std::vector<Rational> work = data_;
  auto entry = [&](int r, int c) -> Rational& {
    return work[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                static_cast<std::size_t>(c)];
  };
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r) {
      if (entry(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = col; c < cols_; ++c) std::swap(entry(pivot, c), entry(rank, c));
    }
    const Rational lead = entry(rank, col);
    for (int r = rank + 1; r < rows_; ++r) {
      if (entry(r, col) == 0) continue;
      const Rational factor = entry(r, col) / lead;
      entry(r, col) = 0;
      for (int c = col + 1; c < cols_; ++c) {
        entry(r, c) -= factor * entry(rank, c);
      }
    }
    ++rank;
  }
  return rank;
}

bool RationalMatrix::is_zero() const {
  for (const Rational& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

MatrixRepresentative representative(const SignedYoungDiagram& lam,
                                    const PairContext& ctx) {
  if (lam.signature() != std::pair<int, int>{ctx.p, ctx.q}) {
    throw std::invalid_argument("representative: signature mismatch");
  }
  MatrixRepresentative rep;
  rep.n = ctx.n();
  rep.entries = RationalMatrix(rep.n, rep.n);
  int next_plus = 0;        // indices 0..p-1
  int next_minus = ctx.p;   // indices p..n-1
  for (const SignedBlock& b : lam.blocks) {
    for (int r = 0; r < b.plus + b.minus; ++r) {
      MatrixRepresentative::Row row;
      row.length = b.length;
      row.sign = r < b.plus ? +1 : -1;
      int side = row.sign;
      for (int j = 0; j < b.length; ++j) {
        row.cells.push_back(side > 0 ? next_plus++ : next_minus++);
        side = -side;
      }
      rep.rows.push_back(std::move(row));
    }
  }
  if (next_plus != ctx.p || next_minus != rep.n) {
    throw std::logic_error("representative: basis bookkeeping failed");
  }
  for (int i = 0; i < ctx.p; ++i) rep.plus_indices.push_back(i);
  for (int i = ctx.p; i < rep.n; ++i) rep.minus_indices.push_back(i);
  for (const auto& row : rep.rows) {
    for (std::size_t j = 0; j + 1 < row.cells.size(); ++j) {
      rep.entries.at(row.cells[j + 1], row.cells[j]) = 1;
    }
  }
  return rep;
}

Partition jordan_type(const RationalMatrix& x) {
  if (x.rows() != x.cols()) {
    throw std::invalid_argument("jordan_type: matrix must be square");
  }
  const int n = x.rows();
  // ranks[j] = rank(x^j); the count of rows of length >= j is
  // ranks[j-1] - ranks[j].
  std::vector<int> ranks{n};
  RationalMatrix power = x;
  while (!power.is_zero()) {
    ranks.push_back(power.rank());
    power = power * x;
    if (static_cast<int>(ranks.size()) > n + 1) {
      throw std::invalid_argument("jordan_type: matrix is not nilpotent");
    }
  }
  ranks.push_back(0);
  std::vector<int> at_least;
  for (std::size_t j = 1; j < ranks.size(); ++j) {
    at_least.push_back(ranks[j - 1] - ranks[j]);
  }
  std::vector<int> parts;
  for (std::size_t j = at_least.size(); j > 0; --j) {
    const int longer = j < at_least.size() ? at_least[j] : 0;
    for (int r = 0; r < at_least[j - 1] - longer; ++r) {
      parts.push_back(static_cast<int>(j));
    }
  }
  return Partition(std::move(parts));
}

int centralizer_dim_in_k(const RationalMatrix& x, const PairContext& ctx) {
  const int n = ctx.n();
  if (x.rows() != n || x.cols() != n) {
    throw std::invalid_argument("centralizer_dim_in_k: shape mismatch");
  }
  // Unknown y = diag(A, B) with A of size p, B of size q; columns of the
  // constraint matrix are the entries of A then B, rows are the n*n entries
  // of y*x - x*y.
  const int unknowns = ctx.p * ctx.p + ctx.q * ctx.q;
  auto unknown_index = [&](int r, int c) {
    // Block-diagonal coordinates: (r, c) with both on the same side.
    if (r < ctx.p) return r * ctx.p + c;
    return ctx.p * ctx.p + (r - ctx.p) * ctx.q + (c - ctx.p);
  };
  auto same_side = [&](int r, int c) {
    return (r < ctx.p) == (c < ctx.p);
  };
  RationalMatrix constraints(n * n, unknowns);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int eq = i * n + j;
      // (y x)_{ i j } = sum_k y_{i k} x_{k j}  contributes +x_{k j} to y_{i k}.
      for (int k = 0; k < n; ++k) {
        if (same_side(i, k) && x.at(k, j) != 0) {
          constraints.at(eq, unknown_index(i, k)) += x.at(k, j);
        }
      }
      // (x y)_{ i j } = sum_k x_{i k} y_{k j}  contributes -x_{i k} to y_{k j}.
      for (int k = 0; k < n; ++k) {
        if (same_side(k, j) && x.at(i, k) != 0) {
          constraints.at(eq, unknown_index(k, j)) -= x.at(i, k);
        }
      }
    }
  }
  const int kernel = unknowns - constraints.rank();
  // The identity matrix always lies in the kernel and has trace n != 0, so
  // the traceless slice loses exactly one dimension.
  return kernel - 1;
}

namespace {

/// One generic point a + e of the stratum and the centralizer-based orbit
/// dimension at it.  `draw` seeds the weight choice.
std::int64_t stratum_point_orbit_dim(const DualStratumLabel& label,
                                     const PairContext& ctx,
                                     unsigned long draw) {
  const SignedYoungDiagram merged = merged_diagram(label);
  MatrixRepresentative rep = representative(merged, ctx);

  // The j-th balanced pair consists of the j-th plus-started and the j-th
  // minus-started row of length m.
  std::vector<const MatrixRepresentative::Row*> plus_rows;
  std::vector<const MatrixRepresentative::Row*> minus_rows;
  for (const auto& row : rep.rows) {
    if (row.length != label.m) continue;
    (row.sign > 0 ? plus_rows : minus_rows).push_back(&row);
  }
  if (static_cast<int>(plus_rows.size()) < label.l ||
      static_cast<int>(minus_rows.size()) < label.l) {
    throw std::logic_error("stratum_dim: merged diagram lacks balanced rows");
  }

  std::mt19937_64 rng(0x5157ac3fu ^ (draw * 0x9e3779b97f4a7c15ull));
  std::uniform_int_distribution<int> pick(0, 16 * label.l + 32);
  std::set<int> used;
  RationalMatrix point = rep.entries;
  for (int j = 0; j < label.l; ++j) {
    int t = 0;
    do {
      t = 2 * pick(rng) + 1;
    } while (used.count(t) > 0);
    used.insert(t);
    const auto& u = plus_rows[static_cast<std::size_t>(j)]->cells;
    const auto& w = minus_rows[static_cast<std::size_t>(j)]->cells;
    for (int i = 0; i < label.m; ++i) {
      point.at(w[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(i)]) += t;
      point.at(u[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]) += t;
    }
  }
  const std::int64_t dim_k =
      static_cast<std::int64_t>(ctx.p) * ctx.p +
      static_cast<std::int64_t>(ctx.q) * ctx.q - 1;
  return dim_k - centralizer_dim_in_k(point, ctx);
}

}  // namespace

std::int64_t stratum_dim(const DualStratumLabel& label,
                         const PairContext& ctx) {
  const std::int64_t first = stratum_point_orbit_dim(label, ctx, 1);
  const std::int64_t second = stratum_point_orbit_dim(label, ctx, 2);
  if (first != second) {
    throw std::runtime_error("non-generic sample in stratum_dim");
  }
  return first + label.l;
}

namespace {

std::int64_t count_with_max_length(int max_length, int p, int q,
                                   std::map<std::tuple<int, int, int>,
                                            std::int64_t>& memo) {
  if (p == 0 && q == 0) return 1;
  if (max_length == 0) return 0;
  const auto key = std::make_tuple(max_length, p, q);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int hi = (max_length + 1) / 2;
  const int lo = max_length / 2;
  std::int64_t total = 0;
  // Choose the signed multiplicities (a, b) of rows of length max_length.
  for (int a = 0; a * hi <= p && a * lo <= q; ++a) {
    for (int b = 0;; ++b) {
      const int cost_p = a * hi + b * lo;
      const int cost_q = a * lo + b * hi;
      if (cost_p > p || cost_q > q) break;
      total += count_with_max_length(max_length - 1, p - cost_p, q - cost_q,
                                     memo);
    }
  }
  return memo[key] = total;
}

}  // namespace

std::int64_t count_orbits_independent(const PairContext& ctx) {
  std::map<std::tuple<int, int, int>, std::int64_t> memo;
  return count_with_max_length(ctx.n(), ctx.p, ctx.q, memo);
}

}  // namespace sympair
