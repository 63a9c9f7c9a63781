#include "kmsph/cones.hpp"

#include <algorithm>
#include <numeric>

#include "kmsph/errors.hpp"

namespace kmsph {

IntegerLattice IntegerLattice::make(QMat basis) {
  for (const auto& row : basis)
    if (row.size() != basis[0].size())
      fail(Errc::invariant_violation, "lattice basis rows have unequal lengths");
  if (!basis.empty() && rank_of(basis) != static_cast<int>(basis.size()))
    fail(Errc::dependent_basis, "lattice basis rows are linearly dependent");
  return IntegerLattice(std::move(basis));
}

std::optional<ZVec> lattice_membership(const IntegerLattice& lattice, const QVec& x) {
  if (lattice.rank() == 0) {
    if (!is_zero_vec(x)) return std::nullopt;
    return ZVec{};
  }
  const QMat& b = lattice.basis();
  int m = static_cast<int>(b[0].size());
  if (static_cast<int>(x.size()) != m)
    fail(Errc::invariant_violation, "vector dimension does not match lattice ambient space");
  QMat cols(m, QVec(b.size()));
  for (size_t i = 0; i < b.size(); ++i)
    for (int j = 0; j < m; ++j) cols[j][i] = b[i][j];
  SolveResult res = solve_linear(cols, x);
  if (res.status != SolveStatus::unique) return std::nullopt;
  ZVec out(res.solution.size());
  for (size_t i = 0; i < res.solution.size(); ++i) {
    if (!is_integer(res.solution[i])) return std::nullopt;
    out[i] = res.solution[i].get_num();
  }
  return out;
}

bool is_primitive(const IntegerLattice& lattice, const QVec& x) {
  auto coords = lattice_membership(lattice, x);
  if (!coords) fail(Errc::not_in_lattice, "vector is not a lattice element");
  Int g = 0;
  for (const Int& c : *coords) g = gcd(g, c);
  return g == 1;
}

Int saturation_index(const IntegerLattice& lattice, const QMat& sub_rows) {
  ZMat coords;
  for (const auto& row : sub_rows) {
    auto c = lattice_membership(lattice, row);
    if (!c) fail(Errc::not_a_sublattice, "row is not a lattice element");
    coords.push_back(*c);
  }
  ZVec divisors = smith_divisors(coords);
  Int idx = 1;
  for (const Int& d : divisors) idx *= d;
  return idx;
}

namespace {

struct DDState {
  int dim = 0;
  QMat lines;            // current lineality basis
  QMat rays;             // current extreme-ray candidates
  QMat processed;        // normals already incorporated
};

QVec project_off(const QVec& v, const QVec& pivot, const Rat& pivot_val, const QVec& h) {
  // subtract the pivot line so the result is tight on h
  Rat c = dot(h, v) / pivot_val;
  return vec_sub(v, vec_scale(c, pivot));
}

void add_halfspace(DDState& st, const QVec& h) {
  // Line stage: if some line meets h, use it as a pivot to make every other
  // generator tight, then keep the feasible half of the pivot as a ray.
  int hit = -1;
  for (size_t i = 0; i < st.lines.size(); ++i)
    if (dot(h, st.lines[i]) != 0) { hit = static_cast<int>(i); break; }
  if (hit >= 0) {
    QVec pivot = st.lines[hit];
    Rat pv = dot(h, pivot);
    QMat new_lines;
    for (size_t i = 0; i < st.lines.size(); ++i) {
      if (static_cast<int>(i) == hit) continue;
      new_lines.push_back(project_off(st.lines[i], pivot, pv, h));
    }
    for (auto& r : st.rays) r = project_off(r, pivot, pv, h);
    st.lines = std::move(new_lines);
    QVec feas = (pv > 0) ? vec_scale(Rat(-1), pivot) : pivot;
    st.rays.push_back(std::move(feas));
    st.processed.push_back(h);
    return;
  }

  std::vector<Rat> val(st.rays.size());
  for (size_t i = 0; i < st.rays.size(); ++i) val[i] = dot(h, st.rays[i]);

  std::vector<int> neg, zero, pos;
  for (size_t i = 0; i < st.rays.size(); ++i) {
    int s = sgn(val[i]);
    (s < 0 ? neg : s == 0 ? zero : pos).push_back(static_cast<int>(i));
  }
  if (pos.empty()) {
    st.processed.push_back(h);
    return;
  }

  // Tight sets against the processed normals decide adjacency: p and n are
  // adjacent iff no third ray is tight everywhere both of them are.
  auto tight_set = [&](const QVec& r) {
    std::vector<bool> t(st.processed.size());
    for (size_t k = 0; k < st.processed.size(); ++k) t[k] = dot(st.processed[k], r) == 0;
    return t;
  };
  std::vector<std::vector<bool>> tights(st.rays.size());
  for (size_t i = 0; i < st.rays.size(); ++i) tights[i] = tight_set(st.rays[i]);

  QMat new_rays;
  for (int i : neg) new_rays.push_back(st.rays[i]);
  for (int i : zero) new_rays.push_back(st.rays[i]);
  for (int p : pos)
    for (int n : neg) {
      std::vector<bool> common(st.processed.size());
      for (size_t k = 0; k < st.processed.size(); ++k)
        common[k] = tights[p][k] && tights[n][k];
      bool adjacent = true;
      for (size_t q = 0; q < st.rays.size(); ++q) {
        if (static_cast<int>(q) == static_cast<size_t>(p) || static_cast<int>(q) == static_cast<size_t>(n))
          continue;
        bool dominates = true;
        for (size_t k = 0; k < st.processed.size(); ++k)
          if (common[k] && !tights[q][k]) { dominates = false; break; }
        if (dominates) { adjacent = false; break; }
      }
      if (!adjacent) continue;
      QVec w = vec_sub(vec_scale(val[p], st.rays[n]), vec_scale(val[n], st.rays[p]));
      if (!is_zero_vec(w)) new_rays.push_back(std::move(w));
    }

  for (auto& r : new_rays) r = to_qvec(primitive_integer(r));
  std::sort(new_rays.begin(), new_rays.end());
  new_rays.erase(std::unique(new_rays.begin(), new_rays.end()), new_rays.end());
  st.rays = std::move(new_rays);
  st.processed.push_back(h);
}

}  // namespace

ConeGenerators dd_generators(const PolyhedralCone& cone) {
  DDState st;
  st.dim = cone.dim;
  st.lines.resize(cone.dim, QVec(cone.dim, Rat(0)));
  for (int i = 0; i < cone.dim; ++i) st.lines[i][i] = 1;
  for (const auto& h : cone.eq) {
    add_halfspace(st, h);
    add_halfspace(st, vec_scale(Rat(-1), h));
  }
  for (const auto& h : cone.le) add_halfspace(st, h);

  ConeGenerators out;
  out.lines = row_space_basis(st.lines);
  int lin_dim = static_cast<int>(out.lines.size());

  // Span of the whole cone: lineality plus all rays.
  QMat span_rows = st.lines;
  for (const auto& r : st.rays) span_rows.push_back(r);
  QMat span = row_space_basis(span_rows);
  int span_dim = static_cast<int>(span.size());

  for (const auto& r : st.rays) {
    // Drop rays absorbed by the lineality space.
    QMat probe = out.lines;
    probe.push_back(r);
    if (rank_of(probe) == lin_dim) continue;
    // Extreme modulo lineality: the tight normals must cut the span down to
    // a face of dimension lin_dim + 1.
    QMat restricted;
    for (const auto& h : st.processed) {
      if (dot(h, r) != 0) continue;
      QVec vals(span.size());
      for (size_t s = 0; s < span.size(); ++s) vals[s] = dot(h, span[s]);
      restricted.push_back(std::move(vals));
    }
    if (rank_of(restricted) != span_dim - lin_dim - 1) continue;
    out.rays.push_back(to_qvec(primitive_integer(r)));
  }
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

bool in_generated_cone(const ConeGenerators& gens, const QVec& x) {
  int dim = static_cast<int>(x.size());
  size_t nl = gens.lines.size(), nr = gens.rays.size();
  FeasibilityProblem prob;
  prob.num_vars = static_cast<int>(nl + nr);
  prob.nonneg.assign(prob.num_vars, true);
  for (size_t i = 0; i < nl; ++i) prob.nonneg[i] = false;  // line coefficients are free
  for (int j = 0; j < dim; ++j) {
    QVec row(prob.num_vars, Rat(0));
    for (size_t i = 0; i < nl; ++i) row[i] = gens.lines[i][j];
    for (size_t i = 0; i < nr; ++i) row[nl + i] = gens.rays[i][j];
    prob.rows.push_back(std::move(row));
    prob.senses.push_back(Sense::eq);
    prob.rhs.push_back(x[j]);
  }
  return feasible_point(prob).has_value();
}

bool representations_consistent(const PolyhedralCone& cone, const ConeGenerators& gens) {
  auto satisfies = [&](const QVec& v, bool line) {
    for (const auto& h : cone.eq)
      if (dot(h, v) != 0) return false;
    for (const auto& h : cone.le) {
      Rat d = dot(h, v);
      if (line ? d != 0 : d > 0) return false;
    }
    return true;
  };
  for (const auto& l : gens.lines)
    if (!satisfies(l, true)) return false;
  for (const auto& r : gens.rays)
    if (!satisfies(r, false)) return false;

  ConeGenerators hull = dd_generators(cone);
  for (const auto& l : hull.lines) {
    if (!in_generated_cone(gens, l)) return false;
    if (!in_generated_cone(gens, vec_scale(Rat(-1), l))) return false;
  }
  for (const auto& r : hull.rays)
    if (!in_generated_cone(gens, r)) return false;
  return true;
}

bool neighbor_set(const QMat& sigma_rows, const std::vector<int>& sub, int rank) {
  std::vector<bool> in_sub(sigma_rows.size(), false);
  for (int i : sub) {
    if (i < 0 || i >= static_cast<int>(sigma_rows.size()))
      fail(Errc::invariant_violation, "neighbor-set index out of range");
    in_sub[i] = true;
  }
  FeasibilityProblem prob;
  prob.num_vars = rank;
  prob.nonneg.assign(rank, false);
  for (size_t s = 0; s < sigma_rows.size(); ++s) {
    prob.rows.push_back(sigma_rows[s]);
    if (in_sub[s]) {
      prob.senses.push_back(Sense::eq);
      prob.rhs.push_back(Rat(0));
    } else {
      prob.senses.push_back(Sense::le);
      prob.rhs.push_back(Rat(-1));
    }
  }
  return feasible_point(prob).has_value();
}

QMat face_span(const QMat& sigma_rows, const std::vector<int>& sub, int rank) {
  if (!neighbor_set(sigma_rows, sub, rank))
    fail(Errc::not_a_neighbor_set, "subset is not a neighbor set");
  std::vector<bool> in_sub(sigma_rows.size(), false);
  for (int i : sub) in_sub[i] = true;
  PolyhedralCone cone;
  cone.dim = rank;
  for (size_t s = 0; s < sigma_rows.size(); ++s)
    (in_sub[s] ? cone.eq : cone.le).push_back(sigma_rows[s]);
  ConeGenerators gens = dd_generators(cone);
  QMat rows = gens.lines;
  for (const auto& r : gens.rays) rows.push_back(r);
  return row_space_basis(rows);
}

}  // namespace kmsph
