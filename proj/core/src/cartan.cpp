#include "kmsph/cartan.hpp"

#include <algorithm>

#include "kmsph/linalg.hpp"

namespace kmsph {

std::vector<GcmIssue> gcm_violations(const ZMat& a) {
  std::vector<GcmIssue> issues;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(a[i].size()) != n) {
      issues.push_back({Errc::not_square, i, -1});
      return issues;  // shape is broken, nothing else is well posed
    }
  for (int i = 0; i < n; ++i) {
    if (a[i][i] != 2) issues.push_back({Errc::diagonal_not_two, i, i});
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) issues.push_back({Errc::positive_off_diagonal, i, j});
      if (i < j && (a[i][j] == 0) != (a[j][i] == 0))
        issues.push_back({Errc::zero_asymmetry, i, j});
    }
  }
  return issues;
}

GeneralizedCartanMatrix::GeneralizedCartanMatrix(ZMat a, std::vector<std::string> labels)
    : a_(std::move(a)), labels_(std::move(labels)) {}

GeneralizedCartanMatrix GeneralizedCartanMatrix::make(ZMat a,
                                                      std::vector<std::string> labels) {
  const auto issues = gcm_violations(a);
  if (!issues.empty()) {
    std::string msg;
    for (const auto& issue : issues) {
      if (!msg.empty()) msg += "; ";
      msg += errc_name(issue.code);
      msg += " at (" + std::to_string(issue.i) + "," + std::to_string(issue.j) + ")";
    }
    fail(Errc::invariant_violation, "not a generalized Cartan matrix: " + msg);
  }
  const int n = static_cast<int>(a.size());
  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n)
    fail(Errc::invariant_violation, "expected " + std::to_string(n) + " node labels");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (labels[i] == labels[j])
        fail(Errc::invariant_violation, "duplicate node label '" + labels[i] + "'");
  return GeneralizedCartanMatrix(std::move(a), std::move(labels));
}

int GeneralizedCartanMatrix::index_of(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (labels_[i] == label) return i;
  fail(Errc::unknown_label, "no node labelled '" + label + "'");
}

std::vector<int> normalize_subset(int n, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (int i : subset)
    if (i < 0 || i >= n)
      fail(Errc::invariant_violation, "node index " + std::to_string(i) + " out of range");
  return subset;
}

std::vector<std::vector<int>> connected_components(const GeneralizedCartanMatrix& gcm,
                                                   const std::vector<int>& subset) {
  const std::vector<int> nodes = normalize_subset(gcm.n(), subset);
  std::vector<std::vector<int>> components;
  std::vector<bool> seen(nodes.size(), false);
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::vector<std::size_t> stack = {s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      comp.push_back(nodes[cur]);
      for (std::size_t t = 0; t < nodes.size(); ++t)
        if (!seen[t] && gcm.at(nodes[cur], nodes[t]) != 0) {
          seen[t] = true;
          stack.push_back(t);
        }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

namespace {

bool all_principal_minors_positive(const GeneralizedCartanMatrix& gcm,
                                   const std::vector<int>& nodes) {
  const int k = static_cast<int>(nodes.size());
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> pick;
    for (int b = 0; b < k; ++b)
      if (mask & (1u << b)) pick.push_back(nodes[b]);
    ZMat sub(pick.size(), ZVec(pick.size()));
    for (std::size_t i = 0; i < pick.size(); ++i)
      for (std::size_t j = 0; j < pick.size(); ++j) sub[i][j] = gcm.at(pick[i], pick[j]);
    if (det_bareiss(std::move(sub)) <= 0) return false;
  }
  return true;
}

}  // namespace

bool is_finite_type(const GeneralizedCartanMatrix& gcm, const std::vector<int>& subset) {
  for (const auto& comp : connected_components(gcm, subset))
    if (!all_principal_minors_positive(gcm, comp)) return false;
  return true;
}

GeneralizedCartanMatrix principal_submatrix(const GeneralizedCartanMatrix& gcm,
                                            const std::vector<int>& subset) {
  const std::vector<int> nodes = normalize_subset(gcm.n(), subset);
  ZMat a(nodes.size(), ZVec(nodes.size()));
  std::vector<std::string> labels;
  labels.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) a[i][j] = gcm.at(nodes[i], nodes[j]);
    labels.push_back(gcm.label(nodes[i]));
  }
  return GeneralizedCartanMatrix::make(std::move(a), std::move(labels));
}

}  // namespace kmsph
