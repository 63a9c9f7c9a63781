#include "kmsph/lp.hpp"

#include "kmsph/errors.hpp"

namespace kmsph {

namespace {

struct Tableau {
  QMat t;                  // rows x (cols + 1), last column is the rhs
  std::vector<int> basis;  // basic column per row
  int cols = 0;

  void pivot(int r, int c) {
    const Rat p = t[r][c];
    for (int j = 0; j <= cols; ++j) t[r][j] /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (static_cast<int>(i) == r || t[i][c] == 0) continue;
      const Rat f = t[i][c];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }
};

}  // namespace

std::optional<QVec> feasible_point(const FeasibilityProblem& problem) {
  const int n = problem.num_vars;
  const int m = static_cast<int>(problem.rows.size());
  if (static_cast<int>(problem.senses.size()) != m ||
      static_cast<int>(problem.rhs.size()) != m ||
      static_cast<int>(problem.nonneg.size()) != n)
    fail(Errc::internal_error, "feasibility problem shape mismatch");
  for (const auto& row : problem.rows)
    if (static_cast<int>(row.size()) != n)
      fail(Errc::internal_error, "feasibility row length mismatch");

  // Column layout: for each variable one column (nonneg) or a split pair
  // u - w (free); then one slack/surplus column per inequality row; then one
  // artificial column per row that needs it.
  std::vector<int> var_col(n), var_neg_col(n, -1);
  int cols = 0;
  for (int j = 0; j < n; ++j) {
    var_col[j] = cols++;
    if (!problem.nonneg[j]) var_neg_col[j] = cols++;
  }
  std::vector<int> slack_col(m, -1);
  for (int i = 0; i < m; ++i)
    if (problem.senses[i] != Sense::eq) slack_col[i] = cols++;
  const int first_artificial = cols;

  Tableau tab;
  tab.basis.assign(m, -1);
  QMat rows(m);
  std::vector<bool> needs_artificial(m, false);
  for (int i = 0; i < m; ++i) {
    QVec row(cols, Rat(0));
    Rat rhs = problem.rhs[i];
    Sense sense = problem.senses[i];
    Rat sign = 1;
    if (rhs < 0) {  // scale the row so the rhs is nonnegative
      sign = -1;
      rhs = -rhs;
      if (sense == Sense::le)
        sense = Sense::ge;
      else if (sense == Sense::ge)
        sense = Sense::le;
    }
    for (int j = 0; j < n; ++j) {
      const Rat c = sign * problem.rows[i][j];
      row[var_col[j]] = c;
      if (var_neg_col[j] >= 0) row[var_neg_col[j]] = -c;
    }
    if (sense == Sense::le) {
      row[slack_col[i]] = 1;
      tab.basis[i] = slack_col[i];
    } else if (sense == Sense::ge) {
      row[slack_col[i]] = -1;
      needs_artificial[i] = true;
    } else {
      needs_artificial[i] = true;
    }
    row.push_back(rhs);
    rows[i] = std::move(row);
  }
  int total_cols = cols;
  for (int i = 0; i < m; ++i)
    if (needs_artificial[i]) ++total_cols;
  tab.cols = total_cols;
  int next_art = cols;
  for (int i = 0; i < m; ++i) {
    QVec& row = rows[i];
    const Rat rhs = row.back();
    row.pop_back();
    row.resize(total_cols, Rat(0));
    if (needs_artificial[i]) {
      row[next_art] = 1;
      tab.basis[i] = next_art++;
    }
    row.push_back(rhs);
  }
  tab.t = std::move(rows);

  auto cost = [&](int c) { return c >= first_artificial ? Rat(1) : Rat(0); };

  // Phase 1: minimize the sum of artificials, Bland's rule throughout.
  while (true) {
    int entering = -1;
    for (int c = 0; c < tab.cols && entering < 0; ++c) {
      bool basic = false;
      for (int r = 0; r < m; ++r)
        if (tab.basis[r] == c) {
          basic = true;
          break;
        }
      if (basic) continue;
      Rat reduced = cost(c);
      for (int r = 0; r < m; ++r)
        if (cost(tab.basis[r]) != 0) reduced -= cost(tab.basis[r]) * tab.t[r][c];
      if (reduced < 0) entering = c;
    }
    if (entering < 0) break;
    int leaving = -1;
    Rat best_ratio = 0;
    for (int r = 0; r < m; ++r) {
      if (tab.t[r][entering] <= 0) continue;
      const Rat ratio = tab.t[r][tab.cols] / tab.t[r][entering];
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && tab.basis[r] < tab.basis[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving < 0)
      fail(Errc::internal_error, "phase-1 objective unbounded");
    tab.pivot(leaving, entering);
  }

  Rat objective = 0;
  for (int r = 0; r < m; ++r)
    if (cost(tab.basis[r]) != 0) objective += tab.t[r][tab.cols];
  if (objective != 0) return std::nullopt;

  QVec x(n, Rat(0));
  for (int r = 0; r < m; ++r) {
    const int c = tab.basis[r];
    if (c >= first_artificial) continue;  // basic artificials sit at zero here
    for (int j = 0; j < n; ++j) {
      if (c == var_col[j]) x[j] += tab.t[r][tab.cols];
      if (c == var_neg_col[j]) x[j] -= tab.t[r][tab.cols];
    }
  }

  // Defensive exact re-check of every constraint.
  for (int i = 0; i < m; ++i) {
    const Rat v = dot(problem.rows[i], x);
    const bool ok = problem.senses[i] == Sense::le   ? v <= problem.rhs[i]
                    : problem.senses[i] == Sense::ge ? v >= problem.rhs[i]
                                                     : v == problem.rhs[i];
    if (!ok) fail(Errc::internal_error, "simplex returned an infeasible point");
  }
  for (int j = 0; j < n; ++j)
    if (problem.nonneg[j] && x[j] < 0)
      fail(Errc::internal_error, "simplex violated a sign constraint");
  return x;
}

std::optional<QVec> strict_feasibility(const QMat& m, int num_cols) {
  const int k = static_cast<int>(m.size());
  const int s = num_cols;
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != s)
      fail(Errc::internal_error, "ragged generator matrix");
  if (s == 0) return QVec(k, Rat(0));
  if (k == 0) return std::nullopt;
  FeasibilityProblem p;
  p.num_vars = k;
  p.nonneg.assign(k, true);
  for (int j = 0; j < s; ++j) {
    QVec row(k);
    for (int i = 0; i < k; ++i) row[i] = m[i][j];
    p.rows.push_back(std::move(row));
    p.senses.push_back(Sense::ge);
    p.rhs.push_back(Rat(1));
  }
  return feasible_point(p);
}

}  // namespace kmsph
