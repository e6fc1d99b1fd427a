#include "orbitlift/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace orbitlift {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error(msg);
}

QVec to_q(const IVec& v) {
  QVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

std::optional<IVec> to_i(const QVec& v) {
  IVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) return std::nullopt;
    out[i] = v[i].get_num().get_si();
  }
  return out;
}

QMat mat_inv(const QMat& m) {
  const size_t n = m.size();
  QMat a(n, QVec(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    require(m[i].size() == n, "mat_inv: matrix not square");
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    require(p < n, "mat_inv: singular matrix");
    std::swap(a[p], a[c]);
    Q inv = Q(1) / a[c][c];
    for (size_t j = 0; j < 2 * n; ++j) a[c][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Q f = a[i][c];
      for (size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  QMat out(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

QVec gauss_solve(QMat m, QVec rhs) {
  const size_t n = m.size();
  require(rhs.size() == n, "gauss_solve: size mismatch");
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    require(p < n, "gauss_solve: singular matrix");
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Q f = m[i][c] / m[c][c];
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
      rhs[i] -= f * rhs[c];
    }
  }
  QVec x(n, 0);
  for (size_t i = n; i-- > 0;) {
    Q s = rhs[i];
    for (size_t j = i + 1; j < n; ++j) s -= m[i][j] * x[j];
    x[i] = s / m[i][i];
  }
  return x;
}

LinSolver::LinSolver(const std::vector<QVec>& vecs) {
  k_ = static_cast<int>(vecs.size());
  require(k_ > 0, "LinSolver: no vectors");
  dim_ = static_cast<int>(vecs[0].size());
  // Row reduce [M | I] where M has the given vectors as columns.
  r_.assign(dim_, QVec(k_, 0));
  t_.assign(dim_, QVec(dim_, 0));
  for (int c = 0; c < k_; ++c) {
    require(static_cast<int>(vecs[c].size()) == dim_, "LinSolver: ragged input");
    for (int r = 0; r < dim_; ++r) r_[r][c] = vecs[c][r];
  }
  for (int r = 0; r < dim_; ++r) t_[r][r] = 1;
  int row = 0;
  for (int c = 0; c < k_ && row < dim_; ++c) {
    int p = row;
    while (p < dim_ && r_[p][c] == 0) ++p;
    if (p == dim_) continue;
    std::swap(r_[p], r_[row]);
    std::swap(t_[p], t_[row]);
    Q inv = Q(1) / r_[row][c];
    for (auto& x : r_[row]) x *= inv;
    for (auto& x : t_[row]) x *= inv;
    for (int i = 0; i < dim_; ++i) {
      if (i == row || r_[i][c] == 0) continue;
      Q f = r_[i][c];
      for (int j = 0; j < k_; ++j) r_[i][j] -= f * r_[row][j];
      for (int j = 0; j < dim_; ++j) t_[i][j] -= f * t_[row][j];
    }
    pivots_.push_back(c);
    ++row;
  }
  rank_ = row;
}

std::optional<QVec> LinSolver::solve(const QVec& v) const {
  require(static_cast<int>(v.size()) == dim_, "LinSolver: size mismatch");
  QVec w(dim_, 0);
  for (int r = 0; r < dim_; ++r) {
    Q s = 0;
    for (int j = 0; j < dim_; ++j) {
      if (t_[r][j] != 0 && v[j] != 0) s += t_[r][j] * v[j];
    }
    w[r] = s;
  }
  for (int r = rank_; r < dim_; ++r)
    if (w[r] != 0) return std::nullopt;
  QVec x(k_, 0);
  for (int r = 0; r < rank_; ++r) x[pivots_[r]] = w[r];
  // With dependent columns the reduced form can leave residue on free
  // columns; verify the reconstruction to stay exact.
  for (int r = 0; r < rank_; ++r) {
    Q s = 0;
    for (int c = 0; c < k_; ++c)
      if (r_[r][c] != 0 && x[c] != 0) s += r_[r][c] * x[c];
    if (s != w[r]) return std::nullopt;
  }
  return x;
}

std::vector<Z> Snf::divisors() const {
  std::vector<Z> out;
  const size_t m = d.size();
  const size_t n = m ? d[0].size() : 0;
  for (size_t i = 0; i < m && i < n; ++i)
    if (d[i][i] != 0) out.push_back(d[i][i]);
  return out;
}

namespace {

struct SnfWork {
  ZMat& d;
  ZMat& u;
  ZMat& uinv;
  int m, n;

  void row_swap(int i, int j) {
    std::swap(d[i], d[j]);
    std::swap(u[i], u[j]);
    for (int r = 0; r < m; ++r) std::swap(uinv[r][i], uinv[r][j]);
  }
  void row_neg(int i) {
    for (auto& x : d[i]) x = -x;
    for (auto& x : u[i]) x = -x;
    for (int r = 0; r < m; ++r) uinv[r][i] = -uinv[r][i];
  }
  // row_j += k * row_i; inverse tracked as col_i -= k * col_j.
  void row_add(int i, int j, const Z& k) {
    for (int c = 0; c < n; ++c) d[j][c] += k * d[i][c];
    for (int c = 0; c < m; ++c) u[j][c] += k * u[i][c];
    for (int r = 0; r < m; ++r) uinv[r][i] -= k * uinv[r][j];
  }
  void col_swap(int i, int j) {
    for (int r = 0; r < m; ++r) std::swap(d[r][i], d[r][j]);
  }
  void col_neg(int i) {
    for (int r = 0; r < m; ++r) d[r][i] = -d[r][i];
  }
  void col_add(int i, int j, const Z& k) {
    for (int r = 0; r < m; ++r) d[r][j] += k * d[r][i];
  }
};

}  // namespace

Snf smith_normal_form(ZMat m) {
  Snf s;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  s.d = std::move(m);
  s.u.assign(rows, ZVec(rows, 0));
  s.uinv.assign(rows, ZVec(rows, 0));
  for (int i = 0; i < rows; ++i) s.u[i][i] = s.uinv[i][i] = 1;
  SnfWork w{s.d, s.u, s.uinv, rows, cols};

  int t = 0;
  while (t < rows && t < cols) {
    // Locate the entry of least absolute value in the remaining block.
    int pi = -1, pj = -1;
    Z best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (s.d[i][j] == 0) continue;
        Z a = abs(s.d[i][j]);
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) w.row_swap(pi, t);
    if (pj != t) w.col_swap(pj, t);
    if (s.d[t][t] < 0) w.row_neg(t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (s.d[i][t] == 0) continue;
        Z q = s.d[i][t] / s.d[t][t];  // truncated division
        w.row_add(t, i, -q);
        if (s.d[i][t] != 0) {
          w.row_swap(t, i);
          if (s.d[t][t] < 0) w.row_neg(t);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (s.d[t][j] == 0) continue;
        Z q = s.d[t][j] / s.d[t][t];
        w.col_add(t, j, -q);
        if (s.d[t][j] != 0) {
          w.col_swap(t, j);
          if (s.d[t][t] < 0) w.col_neg(t);
          clean = false;
        }
      }
      if (clean) {
        // Enforce divisibility of the remaining block by the pivot.
        for (int i = t + 1; i < rows && clean; ++i)
          for (int j = t + 1; j < cols && clean; ++j)
            if (s.d[i][j] % s.d[t][t] != 0) {
              w.row_add(i, t, 1);
              clean = false;
            }
      }
    }
    ++t;
  }
  s.rank = 0;
  for (int i = 0; i < rows && i < cols; ++i)
    if (s.d[i][i] != 0) ++s.rank;
  return s;
}

SpanTester::SpanTester(const std::vector<IVec>& cols, int dim) : dim_(dim) {
  k_ = static_cast<int>(cols.size());
  ZMat m(dim_, ZVec(k_, 0));
  for (int c = 0; c < k_; ++c) {
    require(static_cast<int>(cols[c].size()) == dim_, "SpanTester: ragged input");
    for (int r = 0; r < dim_; ++r) m[r][c] = cols[c][r];
  }
  snf_ = smith_normal_form(std::move(m));
}

bool SpanTester::contains_z(const IVec& b) const {
  require(static_cast<int>(b.size()) == dim_, "SpanTester: size mismatch");
  for (int i = 0; i < dim_; ++i) {
    Z c = 0;
    for (int j = 0; j < dim_; ++j)
      if (snf_.u[i][j] != 0 && b[j] != 0) c += snf_.u[i][j] * b[j];
    if (i < snf_.rank) {
      if (c % snf_.d[i][i] != 0) return false;
    } else if (c != 0) {
      return false;
    }
  }
  return true;
}

bool SpanTester::contains_q(const IVec& b) const {
  require(static_cast<int>(b.size()) == dim_, "SpanTester: size mismatch");
  for (int i = snf_.rank; i < dim_; ++i) {
    Z c = 0;
    for (int j = 0; j < dim_; ++j)
      if (snf_.u[i][j] != 0 && b[j] != 0) c += snf_.u[i][j] * b[j];
    if (c != 0) return false;
  }
  return true;
}

}  // namespace orbitlift
