#ifndef ORBITLIFT_LINALG_HPP
#define ORBITLIFT_LINALG_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace orbitlift {

using Z = mpz_class;
using Q = mpq_class;
using IVec = std::vector<long>;
using QVec = std::vector<Q>;
using ZVec = std::vector<Z>;
using QMat = std::vector<QVec>;
using ZMat = std::vector<ZVec>;

/// Internal consistency check; throws std::logic_error when violated.
void require(bool cond, const std::string& msg);

QVec to_q(const IVec& v);
/// Exact integer image of a rational vector, or nullopt if any entry has a
/// denominator.
std::optional<IVec> to_i(const QVec& v);

/// Inverse of a square nonsingular rational matrix.
QMat mat_inv(const QMat& m);

/// Solve m*x = rhs for square nonsingular m.
QVec gauss_solve(QMat m, QVec rhs);

/// Rational span membership and coordinates for a fixed list of vectors.
/// Precomputes a reduced echelon form so repeated solves are cheap.
class LinSolver {
 public:
  explicit LinSolver(const std::vector<QVec>& vecs);

  /// Coefficients x with sum_c x_c vecs[c] = v, or nullopt if v lies outside
  /// the rational span.  Coordinates of dependent vectors come back as 0.
  std::optional<QVec> solve(const QVec& v) const;

  int rank() const { return rank_; }

 private:
  int dim_ = 0, k_ = 0, rank_ = 0;
  QMat r_;                   // reduced echelon form of the column matrix
  QMat t_;                   // transform with t_ * M = r_
  std::vector<int> pivots_;  // pivot column of each of the first rank_ rows
};

/// Smith normal form d = u * m * v.  Only u and its inverse are tracked; v is
/// applied but discarded.  uinv lets callers read off generators of the
/// cokernel torsion directly.
struct Snf {
  ZMat d, u, uinv;
  int rank = 0;
  std::vector<Z> divisors() const;  // nonzero diagonal entries in order
};

Snf smith_normal_form(ZMat m);

/// Membership of a vector in the integer (or rational) span of a fixed list
/// of columns, decided through a precomputed Smith form.
class SpanTester {
 public:
  SpanTester(const std::vector<IVec>& cols, int dim);

  bool contains_z(const IVec& b) const;
  bool contains_q(const IVec& b) const;
  const Snf& snf() const { return snf_; }

 private:
  int dim_, k_;
  Snf snf_;
};

}  // namespace orbitlift

#endif
