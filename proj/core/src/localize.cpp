#include "kmsph/localize.hpp"

#include <algorithm>

#include "kmsph/errors.hpp"

namespace kmsph {

namespace {

Int zdot(const ZVec& a, const ZVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Hermite basis of the lattice generated by possibly rational rows: clear
// denominators uniformly, reduce, scale back.
QMat generated_lattice_basis(const QMat& rows) {
  Int den = 1;
  for (const auto& row : rows)
    for (const Rat& x : row) den = den / gcd(den, x.get_den()) * x.get_den();
  ZMat scaled;
  for (const auto& row : rows) {
    ZVec z(row.size());
    for (size_t j = 0; j < row.size(); ++j) {
      Rat v = row[j] * Rat(den);
      z[j] = v.get_num();
    }
    scaled.push_back(std::move(z));
  }
  ZMat h = hermite_basis(std::move(scaled));
  QMat out;
  for (const auto& row : h) {
    QVec q(row.size());
    for (size_t j = 0; j < row.size(); ++j) q[j] = Rat(row[j], den);
    out.push_back(std::move(q));
  }
  return out;
}

bool datum_passes_axioms(const HomogeneousSphericalDatum& d) {
  return check_a1(d).pass && check_a2(d).pass && check_a3(d).pass && check_sigma1(d).pass &&
         check_sigma2(d).pass;
}

}  // namespace

SystemLocalization localize_at_simple_roots(const HomogeneousSphericalDatum& datum,
                                            std::vector<int> s_prime) {
  const AmbientSpace& amb = datum.ambient();
  std::vector<int> nodes = normalize_subset(amb.n(), std::move(s_prime));
  std::vector<int> pos(amb.n(), -1);
  for (size_t k = 0; k < nodes.size(); ++k) pos[nodes[k]] = static_cast<int>(k);

  GeneralizedCartanMatrix sub = principal_submatrix(amb.gcm(), nodes);
  AmbientSpace new_amb = AmbientSpace::root_lattice_model(sub);

  // Surviving spherical roots: support inside S'.
  std::vector<int> kept_sigma;
  QMat new_sigma;
  for (int s = 0; s < datum.num_sigma(); ++s) {
    Expansion e = root_expansion(amb, datum.sigma()[s]);
    if (e.status != SolveStatus::unique)
      fail(Errc::invariant_violation, "spherical root without a unique root expansion");
    bool inside = true;
    for (int i = 0; i < amb.n(); ++i)
      if (e.coeffs[i] != 0 && pos[i] < 0) { inside = false; break; }
    if (!inside) continue;
    QVec coords(nodes.size());
    for (size_t k = 0; k < nodes.size(); ++k) coords[k] = e.coeffs[nodes[k]];
    kept_sigma.push_back(s);
    new_sigma.push_back(std::move(coords));
  }

  QMat basis = new_sigma;
  if (!basis.empty() && rank_of(basis) != static_cast<int>(basis.size()))
    basis = generated_lattice_basis(new_sigma);
  IntegerLattice new_xi = IntegerLattice::make(basis);

  // Old-lattice coordinates of each new basis vector, for restricting rho.
  ZMat basis_in_old;
  for (const auto& row : new_xi.basis()) {
    QVec x(amb.dim(), Rat(0));
    for (size_t k = 0; k < nodes.size(); ++k)
      x = vec_add(std::move(x), vec_scale(row[k], amb.simple_root(nodes[k])));
    auto coords = lattice_membership(datum.xi(), x);
    if (!coords) fail(Errc::internal_error, "localized lattice escapes the original one");
    basis_in_old.push_back(std::move(*coords));
  }

  std::vector<int> new_sp;
  for (int i : datum.sp())
    if (pos[i] >= 0) new_sp.push_back(pos[i]);

  std::vector<AElement> new_a;
  std::map<std::string, std::string> color_map;
  for (int d = 0; d < static_cast<int>(datum.a_family().size()); ++d) {
    const AElement& el = datum.a_family()[d];
    bool moves = false;
    for (int s : kept_sigma) {
      for (int i : nodes)
        if (datum.sigma()[s] == amb.simple_root(i) && datum.a_value(d, s) == 1) {
          moves = true;
          break;
        }
      if (moves) break;
    }
    if (!moves) continue;
    ZVec rho(basis_in_old.size());
    for (size_t b = 0; b < basis_in_old.size(); ++b) rho[b] = zdot(el.rho, basis_in_old[b]);
    new_a.push_back({el.name, std::move(rho)});
    color_map.emplace(el.name, el.name);
  }

  SystemLocalization out{
      HomogeneousSphericalDatum::make(std::move(new_amb), std::move(new_sp),
                                      std::move(new_sigma), std::move(new_xi), std::move(new_a)),
      std::move(nodes), std::move(color_map), datum.xi().rank() - static_cast<int>(basis.size())};
  return out;
}

DatumLocalization localize_at_spherical_roots(const HomogeneousSphericalDatum& datum,
                                              std::vector<int> sigma_sub) {
  std::sort(sigma_sub.begin(), sigma_sub.end());
  sigma_sub.erase(std::unique(sigma_sub.begin(), sigma_sub.end()), sigma_sub.end());
  for (int s : sigma_sub)
    if (s < 0 || s >= datum.num_sigma())
      fail(Errc::invariant_violation, "spherical root index out of range");

  int r = datum.xi().rank();
  QMat coords_q;
  for (const auto& row : datum.sigma_coords()) coords_q.push_back(to_qvec(row));
  QMat face = face_span(coords_q, sigma_sub, r);

  // The face must vanish exactly on the chosen subset.
  std::vector<bool> in_sub(datum.num_sigma(), false);
  for (int s : sigma_sub) in_sub[s] = true;
  for (int s = 0; s < datum.num_sigma(); ++s) {
    bool vanishes = true;
    for (const auto& w : face)
      if (dot(w, coords_q[s]) != 0) { vanishes = false; break; }
    if (vanishes != in_sub[s])
      fail(Errc::internal_error, "face span does not vanish exactly on the neighbor set");
  }

  ZMat face_z;
  for (const auto& w : face) face_z.push_back(primitive_integer(w));
  if (face_z.empty()) face_z.push_back(ZVec(r, Int(0)));
  ZMat kernel = integer_kernel(face_z);

  QMat new_basis;
  for (const auto& c : kernel) {
    QVec x(datum.ambient().dim(), Rat(0));
    for (int b = 0; b < r; ++b)
      x = vec_add(std::move(x), vec_scale(Rat(c[b]), datum.xi().basis()[b]));
    new_basis.push_back(std::move(x));
  }
  IntegerLattice new_xi = IntegerLattice::make(new_basis);

  QMat new_sigma;
  for (int s : sigma_sub) new_sigma.push_back(datum.sigma()[s]);

  std::vector<AElement> new_a;
  std::map<std::string, std::string> color_map;
  for (int d = 0; d < static_cast<int>(datum.a_family().size()); ++d) {
    bool moves = false;
    for (int s : sigma_sub) {
      for (int i = 0; i < datum.ambient().n(); ++i)
        if (datum.sigma()[s] == datum.ambient().simple_root(i) && datum.a_value(d, s) == 1) {
          moves = true;
          break;
        }
      if (moves) break;
    }
    if (!moves) continue;
    ZVec rho(kernel.size());
    for (size_t b = 0; b < kernel.size(); ++b) rho[b] = zdot(datum.a_family()[d].rho, kernel[b]);
    new_a.push_back({datum.a_family()[d].name, std::move(rho)});
    color_map.emplace(datum.a_family()[d].name, datum.a_family()[d].name);
  }

  DatumLocalization out{
      HomogeneousSphericalDatum::make(datum.ambient(), datum.sp(), std::move(new_sigma),
                                      std::move(new_xi), std::move(new_a)),
      sigma_sub, std::move(color_map), static_cast<int>(face.size())};

  if (!datum_passes_axioms(out.datum)) {
    if (datum_passes_axioms(datum))
      fail(Errc::internal_error, "localization broke the axioms on a valid datum");
    fail(Errc::invariant_violation, "localization of a datum that fails the axioms");
  }
  return out;
}

}  // namespace kmsph
