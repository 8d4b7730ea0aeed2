#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <vector>

#include "sympair/combinat.hpp"
#include "sympair/orbits.hpp"
#include "sympair/strata.hpp"

namespace sympair {

using Rational = mpq_class;

/// Dense matrix over Q with exact arithmetic.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[index(r, c)]; }
  const Rational& at(int r, int c) const { return data_[index(r, c)]; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator+(const RationalMatrix& other) const;

  /// Rank by fraction-exact Gaussian elimination.
  int rank() const;

  bool is_zero() const;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

/// Nilpotent matrix realizing a signed Young diagram on the graded space
/// V = V+ (+) V-, with basis indices 0..p-1 spanning V+ and p..n-1 spanning
/// V-.  Each diagram row becomes a Jordan chain v_1 -> v_2 -> ... alternating
/// between V+ and V-, starting on the side given by the row's sign.
struct MatrixRepresentative {
  struct Row {
    int length = 0;
    int sign = 0;                // +1 or -1: side of the first chain vector
    std::vector<int> cells;      // basis indices of the chain, in order
  };

  int n = 0;
  std::vector<int> plus_indices;   // basis of V+
  std::vector<int> minus_indices;  // basis of V-
  std::vector<Row> rows;           // rows in block order, + rows before - rows
  RationalMatrix entries;

  MatrixRepresentative() : entries(0, 0) {}
};

/// Explicit representative of the orbit labelled by lam inside g_1.
/// Throws if the diagram's signature differs from (ctx.p, ctx.q).
MatrixRepresentative representative(const SignedYoungDiagram& lam,
                                    const PairContext& ctx);

/// Jordan type of a nilpotent matrix, from ranks of its powers.
Partition jordan_type(const RationalMatrix& x);

/// Dimension of the centralizer of x in k = s(gl_p + gl_q), computed as the
/// kernel dimension of y -> [y, x] on block-diagonal matrices, minus one for
/// the trace condition (the identity always centralizes and has trace n != 0).
int centralizer_dim_in_k(const RationalMatrix& x, const PairContext& ctx);

/// Dimension of the stratum labelled by `label`, computed from an explicit
/// generic point: e is the representative of the merged diagram, a acts on
/// the j-th balanced pair of length-m rows by swapping the two chains with a
/// random odd weight t_j (distinct across pairs).  The stratum dimension is
/// dim K.(a + e) + l = (dim k - dim z_k(a + e)) + l.
///
/// The computation is repeated with an independent draw of weights; if the
/// two draws disagree the sample was non-generic and a std::runtime_error
/// with message "non-generic sample" is thrown.
std::int64_t stratum_dim(const DualStratumLabel& label, const PairContext& ctx);

/// Independent count of signed Young diagrams of signature (p, q), by
/// recursion over the largest row length and its signed multiplicities.
/// Shares no code with enumerate_orbits.
std::int64_t count_orbits_independent(const PairContext& ctx);

}  // namespace sympair
