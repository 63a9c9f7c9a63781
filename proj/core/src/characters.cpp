#include "kmsph/characters.hpp"

#include <algorithm>

namespace kmsph {

AmbientSpace::AmbientSpace(GeneralizedCartanMatrix gcm, int dim, QMat sr, QMat cp)
    : gcm_(std::move(gcm)), dim_(dim), simple_roots_(std::move(sr)),
      coroot_pairing_(std::move(cp)) {}

AmbientSpace AmbientSpace::make(GeneralizedCartanMatrix gcm, int dim, QMat simple_roots,
                                QMat coroot_pairing) {
  const int n = gcm.n();
  if (dim < 0) fail(Errc::inconsistent_ambient, "negative dimension");
  auto check_shape = [&](const QMat& m, const char* what) {
    if (static_cast<int>(m.size()) != n)
      fail(Errc::inconsistent_ambient, std::string(what) + ": expected one row per node");
    for (const auto& row : m)
      if (static_cast<int>(row.size()) != dim)
        fail(Errc::inconsistent_ambient, std::string(what) + ": row length != dim");
  };
  check_shape(simple_roots, "simple_roots");
  check_shape(coroot_pairing, "coroot_pairing");
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (dot(coroot_pairing[i], simple_roots[k]) != Rat(gcm.at(i, k)))
        fail(Errc::inconsistent_ambient,
             "pairing of coroot " + gcm.label(i) + " with root " + gcm.label(k) +
                 " disagrees with the Cartan matrix");
  return AmbientSpace(std::move(gcm), dim, std::move(simple_roots), std::move(coroot_pairing));
}

AmbientSpace AmbientSpace::root_lattice_model(GeneralizedCartanMatrix gcm) {
  const int n = gcm.n();
  QMat sr(n, QVec(n, Rat(0)));
  QMat cp(n, QVec(n));
  for (int i = 0; i < n; ++i) {
    sr[i][i] = 1;
    for (int j = 0; j < n; ++j) cp[i][j] = Rat(gcm.at(i, j));
  }
  return AmbientSpace(std::move(gcm), n, std::move(sr), std::move(cp));
}

bool AmbientSpace::is_root_lattice_model() const {
  if (dim_ != n()) return false;
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < dim_; ++j) {
      if (simple_roots_[i][j] != (i == j ? 1 : 0)) return false;
      if (coroot_pairing_[i][j] != Rat(gcm_.at(i, j))) return false;
    }
  return true;
}

namespace {

void check_character(const AmbientSpace& space, const QVec& x) {
  if (static_cast<int>(x.size()) != space.dim())
    fail(Errc::invariant_violation, "character has wrong dimension");
}

void check_node(const AmbientSpace& space, int i) {
  if (i < 0 || i >= space.n())
    fail(Errc::invariant_violation, "node index " + std::to_string(i) + " out of range");
}

}  // namespace

Rat pair_coroot(const AmbientSpace& space, int i, const QVec& x) {
  check_node(space, i);
  check_character(space, x);
  return dot(space.coroot_pairing()[i], x);
}

QVec simple_reflection(const AmbientSpace& space, int i, QVec x) {
  const Rat c = pair_coroot(space, i, x);
  const QVec& alpha = space.simple_root(i);
  for (int j = 0; j < space.dim(); ++j) x[j] -= c * alpha[j];
  return x;
}

QVec apply_word(const AmbientSpace& space, const std::vector<int>& word, QVec x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    x = simple_reflection(space, *it, std::move(x));
  return x;
}

Expansion root_expansion(const AmbientSpace& space, const QVec& x) {
  check_character(space, x);
  // Solve sum_i c_i alpha_i = x, i.e. (simple_roots^T) c = x.
  QMat a(space.dim(), QVec(space.n()));
  for (int j = 0; j < space.dim(); ++j)
    for (int i = 0; i < space.n(); ++i) a[j][i] = space.simple_root(i)[j];
  auto res = solve_linear(a, x);
  return {res.status, std::move(res.solution)};
}

std::vector<int> support(const AmbientSpace& space, const QVec& x) {
  const Expansion e = root_expansion(space, x);
  if (e.status == SolveStatus::none)
    fail(Errc::not_in_root_span, "character " + format_qvec(x) + " is not in the root span");
  if (e.status == SolveStatus::underdetermined)
    fail(Errc::not_in_root_span,
         "character " + format_qvec(x) + " has no unique simple-root expansion");
  std::vector<int> out;
  for (int i = 0; i < space.n(); ++i)
    if (e.coeffs[i] != 0) out.push_back(i);
  return out;
}

Int s_prime_height(const AmbientSpace& space, const QVec& x,
                   const std::vector<int>& s_prime) {
  const std::vector<int> inside = normalize_subset(space.n(), s_prime);
  const Expansion e = root_expansion(space, x);
  if (e.status != SolveStatus::unique)
    fail(Errc::not_in_root_span, "character has no unique simple-root expansion");
  Int height = 0;
  for (int i = 0; i < space.n(); ++i) {
    const Rat& c = e.coeffs[i];
    if (c < 0 || !is_integer(c))
      fail(Errc::not_a_positive_root,
           "expansion coefficient " + rat_string(c) + " at node " + space.gcm().label(i));
    if (!std::binary_search(inside.begin(), inside.end(), i)) height += c.get_num();
  }
  return height;
}

std::string format_character(const AmbientSpace& space, const QVec& x) {
  const Expansion e = root_expansion(space, x);
  if (e.status != SolveStatus::unique) return format_qvec(x);
  std::string out;
  for (int i = 0; i < space.n(); ++i) {
    const Rat& c = e.coeffs[i];
    if (c == 0) continue;
    std::string coef;
    if (c == 1)
      coef = out.empty() ? "" : "+";
    else if (c == -1)
      coef = "-";
    else {
      coef = is_integer(c) ? rat_string(c) : "(" + rat_string(c) + ")";
      if (c > 0 && !out.empty()) coef = "+" + coef;
    }
    out += coef + space.gcm().label(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace kmsph
