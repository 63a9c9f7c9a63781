#include "kmsph/linalg.hpp"

#include <algorithm>

#include "kmsph/errors.hpp"

namespace kmsph {

Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) fail(Errc::internal_error, "dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec vec_add(QVec a, const QVec& b) {
  if (a.size() != b.size()) fail(Errc::internal_error, "vec_add: size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

QVec vec_sub(QVec a, const QVec& b) {
  if (a.size() != b.size()) fail(Errc::internal_error, "vec_sub: size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

QVec vec_scale(const Rat& c, QVec a) {
  for (auto& x : a) x *= c;
  return a;
}

bool is_zero_vec(const QVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    const Rat inv = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank_of(QMat m) { return static_cast<int>(rref(m).size()); }

QMat row_space_basis(const QMat& rows) {
  QMat m = rows;
  rref(m);
  QMat out;
  for (auto& row : m)
    if (!is_zero_vec(row)) out.push_back(std::move(row));
  return out;
}

SolveResult solve_linear(const QMat& a, const QVec& b) {
  const int rows = static_cast<int>(a.size());
  if (rows != static_cast<int>(b.size()))
    fail(Errc::internal_error, "solve_linear: rhs size mismatch");
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  QMat aug(rows, QVec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  const std::vector<int> pivots = rref(aug);
  for (int p : pivots)
    if (p == cols) return {SolveStatus::none, {}};
  if (static_cast<int>(pivots.size()) < cols) {
    // Consistent (no pivot in the rhs column) but with free variables.
    return {SolveStatus::underdetermined, {}};
  }
  QVec x(cols);
  for (int i = 0; i < cols; ++i) x[pivots[i]] = aug[i][cols];
  return {SolveStatus::unique, std::move(x)};
}

ZVec primitive_integer(const QVec& v) {
  Int lcm = 1;
  for (const auto& q : v) {
    Int d = q.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    lcm = lcm / g * d;
  }
  ZVec out;
  out.reserve(v.size());
  Int content = 0;
  for (const auto& q : v) {
    Int x = q.get_num() * (lcm / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    out.push_back(std::move(x));
  }
  if (content > 1)
    for (auto& x : out) x /= content;
  return out;
}

namespace {

// Row Hermite form computed in place over the leading `pivot_cols` columns;
// trailing columns just follow the row operations. Returns pivot (row, col) pairs.
std::vector<std::pair<int, int>> hermite_inplace(ZMat& m, int pivot_cols) {
  std::vector<std::pair<int, int>> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  int r = 0;
  for (int c = 0; c < pivot_cols && r < rows; ++c) {
    while (true) {
      int best = -1;
      for (int i = r; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        if (best < 0 || cmp(abs(m[i][c]), abs(m[best][c])) < 0) best = i;
      }
      if (best < 0) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (int i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        Int q = m[i][c] / m[r][c];  // truncated division is fine, we iterate
        if (q != 0)
          for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (auto& x : m[r]) x = -x;
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= q * m[r][j];
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  return pivots;
}

}  // namespace

ZMat hermite_basis(ZMat rows) {
  if (rows.empty()) return {};
  const int cols = static_cast<int>(rows[0].size());
  const auto pivots = hermite_inplace(rows, cols);
  ZMat out;
  out.reserve(pivots.size());
  for (const auto& [r, c] : pivots) out.push_back(std::move(rows[r]));
  return out;
}

ZMat integer_kernel(const ZMat& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  // Row-reduce [m^T | I]; rows whose left block vanishes give a kernel basis,
  // saturated because the transformation is unimodular.
  ZMat aug(cols, ZVec(rows + cols, 0));
  for (int i = 0; i < cols; ++i) {
    for (int j = 0; j < rows; ++j) aug[i][j] = m[j][i];
    aug[i][rows + i] = 1;
  }
  hermite_inplace(aug, rows);
  ZMat kernel;
  for (const auto& row : aug) {
    bool zero_left = true;
    for (int j = 0; j < rows; ++j)
      if (row[j] != 0) {
        zero_left = false;
        break;
      }
    if (!zero_left) continue;
    kernel.emplace_back(row.begin() + rows, row.end());
  }
  return hermite_basis(std::move(kernel));
}

std::vector<Int> smith_divisors(ZMat m) {
  std::vector<Int> divisors;
  if (m.empty() || m[0].empty()) return divisors;
  int top = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  while (top < rows && top < cols) {
    int pi = -1, pj = -1;
    for (int i = top; i < rows; ++i)
      for (int j = top; j < cols; ++j)
        if (m[i][j] != 0 && (pi < 0 || cmp(abs(m[i][j]), abs(m[pi][pj])) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(m[top], m[pi]);
    for (int i = top; i < rows; ++i) std::swap(m[i][top], m[i][pj]);
    bool clean = true;
    for (int i = top + 1; i < rows; ++i) {
      Int q = m[i][top] / m[top][top];
      if (q != 0)
        for (int j = top; j < cols; ++j) m[i][j] -= q * m[top][j];
      if (m[i][top] != 0) clean = false;
    }
    for (int j = top + 1; j < cols; ++j) {
      Int q = m[top][j] / m[top][top];
      if (q != 0)
        for (int i = top; i < rows; ++i) m[i][j] -= q * m[i][top];
      if (m[top][j] != 0) clean = false;
    }
    if (!clean) continue;
    // Enforce the divisibility chain: fold any non-divisible entry into row top.
    bool divisible = true;
    for (int i = top + 1; i < rows && divisible; ++i)
      for (int j = top + 1; j < cols && divisible; ++j)
        if (m[i][j] % m[top][top] != 0) {
          for (int k = top; k < cols; ++k) m[top][k] += m[i][k];
          divisible = false;
        }
    if (!divisible) continue;
    divisors.push_back(abs(m[top][top]));
    ++top;
  }
  return divisors;
}

Int det_bareiss(ZMat m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) fail(Errc::internal_error, "det: not square");
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::string format_qvec(const QVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rat_string(v[i]);
  }
  out += ")";
  return out;
}

}  // namespace kmsph
