#include "kmsph/datum.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

#include "kmsph/errors.hpp"

namespace kmsph {

namespace {

Int zdot(const ZVec& a, const ZVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

HomogeneousSphericalDatum::HomogeneousSphericalDatum(AmbientSpace ambient, std::vector<int> sp,
                                                     QMat sigma, IntegerLattice xi,
                                                     std::vector<AElement> a, ZMat coords)
    : ambient_(std::move(ambient)),
      sp_(std::move(sp)),
      sigma_(std::move(sigma)),
      xi_(std::move(xi)),
      a_(std::move(a)),
      sigma_coords_(std::move(coords)) {}

HomogeneousSphericalDatum HomogeneousSphericalDatum::make(AmbientSpace ambient,
                                                          std::vector<int> sp, QMat sigma,
                                                          IntegerLattice xi,
                                                          std::vector<AElement> a) {
  std::sort(sp.begin(), sp.end());
  sp.erase(std::unique(sp.begin(), sp.end()), sp.end());
  for (int i : sp)
    if (i < 0 || i >= ambient.n()) fail(Errc::invariant_violation, "S^p index out of range");
  if (xi.rank() > 0 && xi.ambient_dim() != ambient.dim())
    fail(Errc::invariant_violation, "Xi basis does not live in the ambient space");

  ZMat coords;
  for (size_t s = 0; s < sigma.size(); ++s) {
    if (static_cast<int>(sigma[s].size()) != ambient.dim())
      fail(Errc::invariant_violation, "spherical root has wrong dimension");
    if (is_zero_vec(sigma[s])) fail(Errc::invariant_violation, "spherical root is zero");
    for (size_t t = 0; t < s; ++t)
      if (sigma[t] == sigma[s]) fail(Errc::invariant_violation, "duplicate spherical root");
    auto c = lattice_membership(xi, sigma[s]);
    if (!c)
      fail(Errc::invariant_violation,
           "spherical root " + format_character(ambient, sigma[s]) + " is not in Xi");
    Int g = 0;
    for (const Int& v : *c) g = gcd(g, v);
    if (g != 1)
      fail(Errc::invariant_violation,
           "spherical root " + format_character(ambient, sigma[s]) + " is not primitive in Xi");
    coords.push_back(std::move(*c));
  }

  std::set<std::string> names;
  for (const auto& el : a) {
    if (el.name.empty()) fail(Errc::invariant_violation, "A-element with empty name");
    if (!names.insert(el.name).second)
      fail(Errc::invariant_violation, "duplicate A-element name " + el.name);
    if (static_cast<int>(el.rho.size()) != xi.rank())
      fail(Errc::invariant_violation, "functional of " + el.name + " has wrong length");
  }

  return HomogeneousSphericalDatum(std::move(ambient), std::move(sp), std::move(sigma),
                                   std::move(xi), std::move(a), std::move(coords));
}

bool HomogeneousSphericalDatum::in_sp(int i) const {
  return std::binary_search(sp_.begin(), sp_.end(), i);
}

int HomogeneousSphericalDatum::sigma_index_of_simple(int i) const {
  const QVec& alpha = ambient_.simple_root(i);
  for (int s = 0; s < num_sigma(); ++s)
    if (sigma_[s] == alpha) return s;
  return -1;
}

int HomogeneousSphericalDatum::sigma_index_of_doubled(int i) const {
  QVec doubled = vec_scale(Rat(2), ambient_.simple_root(i));
  for (int s = 0; s < num_sigma(); ++s)
    if (sigma_[s] == doubled) return s;
  return -1;
}

Int HomogeneousSphericalDatum::a_value(int d, int s) const {
  return zdot(a_[d].rho, sigma_coords_[s]);
}

QVec HomogeneousSphericalDatum::coroot_on_basis(int i) const {
  QVec out(xi_.rank());
  for (int b = 0; b < xi_.rank(); ++b) out[b] = pair_coroot(ambient_, i, xi_.basis()[b]);
  return out;
}

Rat HomogeneousSphericalDatum::coroot_on_sigma(int i, int s) const {
  return pair_coroot(ambient_, i, sigma_[s]);
}

CheckResult check_a1(const HomogeneousSphericalDatum& datum, bool strict) {
  CheckResult res;
  std::vector<bool> simple(datum.num_sigma(), false);
  for (int i = 0; i < datum.ambient().n(); ++i) {
    int s = datum.sigma_index_of_simple(i);
    if (s >= 0) simple[s] = true;
  }
  for (size_t d = 0; d < datum.a_family().size(); ++d)
    for (int s = 0; s < datum.num_sigma(); ++s) {
      Int v = datum.a_value(static_cast<int>(d), s);
      std::string sig = format_character(datum.ambient(), datum.sigma()[s]);
      if (v > 1) {
        res.pass = false;
        res.notes.push_back("value " + v.get_str() + " of " + datum.a_family()[d].name +
                            " on " + sig + " exceeds 1");
        continue;
      }
      bool positive = strict ? v > 0 : v == 1;
      if (positive && !simple[s]) {
        res.pass = false;
        res.notes.push_back(datum.a_family()[d].name + " is positive on " + sig +
                            ", which is not a simple root");
      }
    }
  return res;
}

CheckResult check_a2(const HomogeneousSphericalDatum& datum) {
  CheckResult res;
  for (int i = 0; i < datum.ambient().n(); ++i) {
    int s = datum.sigma_index_of_simple(i);
    if (s < 0) continue;
    std::vector<int> movers;
    for (size_t d = 0; d < datum.a_family().size(); ++d)
      if (datum.a_value(static_cast<int>(d), s) == 1) movers.push_back(static_cast<int>(d));
    const std::string& lab = datum.ambient().gcm().label(i);
    if (movers.size() != 2) {
      res.pass = false;
      res.notes.push_back("simple spherical root " + lab + " is moved by " +
                          std::to_string(movers.size()) + " A-elements, expected 2");
      continue;
    }
    QVec sum(datum.xi().rank());
    for (int b = 0; b < datum.xi().rank(); ++b)
      sum[b] = Rat(datum.a_family()[movers[0]].rho[b] + datum.a_family()[movers[1]].rho[b]);
    if (sum != datum.coroot_on_basis(i)) {
      res.pass = false;
      res.notes.push_back("functionals of " + datum.a_family()[movers[0]].name + " and " +
                          datum.a_family()[movers[1]].name +
                          " do not sum to the restricted coroot of " + lab);
    }
  }
  return res;
}

CheckResult check_a3(const HomogeneousSphericalDatum& datum) {
  CheckResult res;
  std::vector<int> simple_sigma;
  for (int i = 0; i < datum.ambient().n(); ++i) {
    int s = datum.sigma_index_of_simple(i);
    if (s >= 0) simple_sigma.push_back(s);
  }
  for (size_t d = 0; d < datum.a_family().size(); ++d) {
    bool moves = false;
    for (int s : simple_sigma)
      if (datum.a_value(static_cast<int>(d), s) == 1) { moves = true; break; }
    if (!moves) {
      res.pass = false;
      res.notes.push_back(datum.a_family()[d].name + " moves no simple spherical root");
    }
  }
  return res;
}

CheckResult check_sigma1(const HomogeneousSphericalDatum& datum) {
  CheckResult res;
  for (int i = 0; i < datum.ambient().n(); ++i) {
    if (datum.sigma_index_of_doubled(i) < 0) continue;
    QVec vals = datum.coroot_on_basis(i);
    for (int b = 0; b < datum.xi().rank(); ++b) {
      if (is_integer(vals[b]) && vals[b].get_num() % 2 == 0) continue;
      res.pass = false;
      res.notes.push_back("coroot of " + datum.ambient().gcm().label(i) +
                          " takes the non-even value " + rat_string(vals[b]) +
                          " on a basis vector of Xi");
    }
  }
  return res;
}

CheckResult check_sigma2(const HomogeneousSphericalDatum& datum) {
  CheckResult res;
  auto in_sigma = [&](const QVec& v) {
    for (const auto& row : datum.sigma())
      if (row == v) return true;
    return false;
  };
  int n = datum.ambient().n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (datum.ambient().gcm().at(i, j) != 0) continue;
      QVec sum = vec_add(datum.ambient().simple_root(i), datum.ambient().simple_root(j));
      if (!in_sigma(sum) && !in_sigma(vec_scale(Rat(1, 2), sum))) continue;
      if (datum.coroot_on_basis(i) != datum.coroot_on_basis(j)) {
        res.pass = false;
        res.notes.push_back("orthogonal pair (" + datum.ambient().gcm().label(i) + ", " +
                            datum.ambient().gcm().label(j) +
                            ") carries a spherical root but the restricted coroots differ");
      }
    }
  return res;
}

namespace {

std::vector<std::string> canonical_labels(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  return labels;
}

const CompatEntry* registry_lookup(const std::vector<CompatEntry>& registry, const QVec& coeffs,
                                   const std::vector<std::string>& sp_labels) {
  for (const auto& entry : registry)
    if (entry.sigma == coeffs && canonical_labels(entry.sp_cap_supp) == sp_labels) return &entry;
  return nullptr;
}

}  // namespace

CheckSResult check_s(const HomogeneousSphericalDatum& datum,
                     const std::vector<CompatEntry>& registry, bool strict) {
  CheckSResult res;
  const AmbientSpace& amb = datum.ambient();
  for (int s = 0; s < datum.num_sigma(); ++s) {
    SigmaCompat sc;
    sc.sigma_index = s;
    std::string sig = format_character(amb, datum.sigma()[s]);

    Expansion e = root_expansion(amb, datum.sigma()[s]);
    if (e.status != SolveStatus::unique) {
      sc.status = CompatStatus::incompatible;
      sc.note = sig + " has no unique expansion over the simple roots";
      res.entries.push_back(sc);
      res.pass = false;
      continue;
    }
    bool nonneg = true;
    std::vector<int> supp;
    for (int i = 0; i < amb.n(); ++i) {
      if (e.coeffs[i] < 0) nonneg = false;
      if (e.coeffs[i] != 0) supp.push_back(i);
    }
    if (!nonneg) {
      sc.status = CompatStatus::incompatible;
      sc.note = sig + " is not a nonnegative combination of simple roots";
      res.entries.push_back(sc);
      res.pass = false;
      continue;
    }

    std::vector<std::string> sp_labels;
    for (int i : supp)
      if (datum.in_sp(i)) sp_labels.push_back(amb.gcm().label(i));
    sp_labels = canonical_labels(sp_labels);

    auto decide_by_registry = [&](const std::string& shape) {
      if (const CompatEntry* entry = registry_lookup(registry, e.coeffs, sp_labels)) {
        sc.status = entry->compatible ? CompatStatus::compatible : CompatStatus::incompatible;
        sc.note = entry->note.empty() ? ("registry entry for " + shape) : entry->note;
      } else {
        sc.status = CompatStatus::unconfirmed;
        sc.note = "no registry entry for " + shape;
      }
    };

    if (supp.size() == 1) {
      int i = supp[0];
      const std::string& lab = amb.gcm().label(i);
      if (e.coeffs[i] == 1) {
        if (datum.in_sp(i)) {
          sc.status = CompatStatus::incompatible;
          sc.note = "simple spherical root " + lab + " lies in S^p";
        } else {
          sc.status = CompatStatus::compatible;
          sc.note = "simple root outside S^p";
        }
      } else if (e.coeffs[i] == 2) {
        if (datum.in_sp(i)) {
          sc.status = CompatStatus::incompatible;
          sc.note = "doubled root over " + lab + " which lies in S^p";
        } else {
          decide_by_registry("doubled root " + sig);
        }
      } else {
        sc.status = CompatStatus::incompatible;
        sc.note = sig + " is a multiple of " + lab + " with coefficient outside {1, 2}";
      }
    } else {
      bool ortho_pair = false;
      if (supp.size() == 2) {
        int i = supp[0], j = supp[1];
        bool unit = e.coeffs[i] == 1 && e.coeffs[j] == 1;
        bool half = e.coeffs[i] == Rat(1, 2) && e.coeffs[j] == Rat(1, 2);
        if (amb.gcm().at(i, j) == 0 && (unit || half)) {
          ortho_pair = true;
          if (datum.in_sp(i) || datum.in_sp(j)) {
            sc.status = CompatStatus::incompatible;
            sc.note = "orthogonal pair " + sig + " meets S^p";
          } else {
            decide_by_registry("orthogonal pair " + sig);
          }
        }
      }
      if (!ortho_pair) decide_by_registry(sig);
    }

    if (sc.status == CompatStatus::incompatible) res.pass = false;
    if (strict && sc.status == CompatStatus::unconfirmed) res.pass = false;
    res.entries.push_back(std::move(sc));
  }
  return res;
}

TypePartition type_partition(const HomogeneousSphericalDatum& datum) {
  TypePartition part;
  part.p = datum.sp();
  for (int i = 0; i < datum.ambient().n(); ++i) {
    bool is_a = datum.sigma_index_of_simple(i) >= 0;
    bool is_2a = datum.sigma_index_of_doubled(i) >= 0;
    if (is_a && is_2a)
      fail(Errc::invariant_violation, "both alpha and 2 alpha are spherical roots at " +
                                          datum.ambient().gcm().label(i));
    if (datum.in_sp(i)) {
      if (is_a || is_2a)
        fail(Errc::invariant_violation,
             "S^p root " + datum.ambient().gcm().label(i) + " carries a spherical root");
      auto coords = lattice_membership(datum.xi(), datum.ambient().simple_root(i));
      if (coords)
        for (const auto& el : datum.a_family())
          if (zdot(el.rho, *coords) == 1)
            fail(Errc::invariant_violation, "S^p root " + datum.ambient().gcm().label(i) +
                                                " is moved by " + el.name);
      continue;
    }
    if (is_a)
      part.a.push_back(i);
    else if (is_2a)
      part.two_a.push_back(i);
    else
      part.b.push_back(i);
  }
  return part;
}

std::vector<Color> derive_colors(const HomogeneousSphericalDatum& datum) {
  TypePartition part = type_partition(datum);
  std::vector<Color> colors;

  for (size_t d = 0; d < datum.a_family().size(); ++d) {
    Color c;
    c.id = datum.a_family()[d].name;
    c.kind = ColorKind::a;
    for (int i : part.a)
      if (datum.a_value(static_cast<int>(d), datum.sigma_index_of_simple(i)) == 1)
        c.movers.push_back(i);
    c.functional.reserve(datum.a_family()[d].rho.size());
    for (const Int& v : datum.a_family()[d].rho) c.functional.emplace_back(v);
    colors.push_back(std::move(c));
  }

  for (int i : part.two_a) {
    Color c;
    c.id = "D_" + datum.ambient().gcm().label(i);
    c.kind = ColorKind::two_a;
    c.movers = {i};
    c.functional = vec_scale(Rat(1, 2), datum.coroot_on_basis(i));
    colors.push_back(std::move(c));
  }

  // Type b: orthogonal roots joined by a spherical root share one color.
  auto in_sigma = [&](const QVec& v) {
    for (const auto& row : datum.sigma())
      if (row == v) return true;
    return false;
  };
  std::vector<int> parent(part.b.size());
  for (size_t k = 0; k < parent.size(); ++k) parent[k] = static_cast<int>(k);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (size_t p = 0; p < part.b.size(); ++p)
    for (size_t q = p + 1; q < part.b.size(); ++q) {
      int i = part.b[p], j = part.b[q];
      if (datum.ambient().gcm().at(i, j) != 0) continue;
      QVec sum = vec_add(datum.ambient().simple_root(i), datum.ambient().simple_root(j));
      if (in_sigma(sum) || in_sigma(vec_scale(Rat(1, 2), sum)))
        parent[find(static_cast<int>(p))] = find(static_cast<int>(q));
    }
  std::map<int, std::vector<int>> groups;
  for (size_t k = 0; k < part.b.size(); ++k) groups[find(static_cast<int>(k))].push_back(part.b[k]);
  for (auto& [root, members] : groups) {
    QVec functional = datum.coroot_on_basis(members[0]);
    for (size_t m = 1; m < members.size(); ++m)
      if (datum.coroot_on_basis(members[m]) != functional)
        fail(Errc::invariant_violation,
             "identified roots " + datum.ambient().gcm().label(members[0]) + " and " +
                 datum.ambient().gcm().label(members[m]) + " restrict to different coroots");
    Color c;
    c.id = "D_" + datum.ambient().gcm().label(members[0]);
    c.kind = ColorKind::b;
    c.movers = members;
    c.functional = std::move(functional);
    colors.push_back(std::move(c));
  }

  std::sort(colors.begin(), colors.end(), [](const Color& x, const Color& y) {
    int mx = x.movers.empty() ? INT_MAX : x.movers.front();
    int my = y.movers.empty() ? INT_MAX : y.movers.front();
    if (mx != my) return mx < my;
    return x.id < y.id;
  });
  return colors;
}

namespace {

unsigned long long subset_cap(const FiniteTypeOptions& options) {
  if (options.max_subsets > 0) return options.max_subsets;
  if (const char* env = std::getenv("KMSPH_MAX_SUBSETS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1ull << 20;
}

}  // namespace

FiniteTypeResult check_finite_type(const HomogeneousSphericalDatum& datum,
                                   const FiniteTypeOptions& options) {
  const AmbientSpace& amb = datum.ambient();
  int na = static_cast<int>(datum.a_family().size());

  std::vector<int> universe;  // candidates for S2
  for (int i = 0; i < amb.n(); ++i) {
    if (datum.in_sp(i)) continue;
    if (datum.sigma_index_of_simple(i) >= 0) continue;
    if (options.exclude_doubled_roots && datum.sigma_index_of_doubled(i) >= 0) continue;
    universe.push_back(i);
  }
  int k = na + static_cast<int>(universe.size());
  unsigned long long cap = subset_cap(options);
  if (k >= 63 || (1ull << k) > cap)
    fail(Errc::subset_cap_exceeded,
         "finite-type search over 2^" + std::to_string(k) + " subsets exceeds the cap");

  // Mover masks of the simple spherical roots, for deriving S1 from A1.
  std::vector<int> sa;
  std::vector<unsigned long long> amask;
  for (int i = 0; i < amb.n(); ++i) {
    int s = datum.sigma_index_of_simple(i);
    if (s < 0) continue;
    unsigned long long m = 0;
    for (int d = 0; d < na; ++d)
      if (datum.a_value(d, s) == 1) m |= 1ull << d;
    sa.push_back(i);
    amask.push_back(m);
  }

  QMat a_rows(na, QVec(datum.num_sigma()));
  for (int d = 0; d < na; ++d)
    for (int s = 0; s < datum.num_sigma(); ++s) a_rows[d][s] = Rat(datum.a_value(d, s));
  QMat u_rows(universe.size(), QVec(datum.num_sigma()));
  for (size_t u = 0; u < universe.size(); ++u)
    for (int s = 0; s < datum.num_sigma(); ++s) u_rows[u][s] = datum.coroot_on_sigma(universe[u], s);

  std::map<unsigned long long, bool> finite_memo;
  auto support_finite = [&](const std::vector<int>& f) {
    unsigned long long key = 0;
    for (int i : f) key |= 1ull << i;
    auto it = finite_memo.find(key);
    if (it != finite_memo.end()) return it->second;
    bool fin = is_finite_type(amb.gcm(), f);
    finite_memo.emplace(key, fin);
    return fin;
  };

  auto try_mask = [&](unsigned long long mask) -> std::optional<FiniteTypeWitness> {
    unsigned long long a1 = mask & ((na == 0) ? 0ull : ((1ull << na) - 1));
    std::vector<int> s1;
    for (size_t t = 0; t < sa.size(); ++t)
      if ((amask[t] & ~a1) == 0) s1.push_back(sa[t]);
    std::vector<int> s2;
    for (size_t u = 0; u < universe.size(); ++u)
      if (mask & (1ull << (na + u))) s2.push_back(universe[u]);

    std::vector<int> f = s1;
    f.insert(f.end(), s2.begin(), s2.end());
    f.insert(f.end(), datum.sp().begin(), datum.sp().end());
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (!support_finite(f)) return std::nullopt;

    QMat m;
    std::vector<std::string> a1_names;
    for (int d = 0; d < na; ++d)
      if (a1 & (1ull << d)) {
        m.push_back(a_rows[d]);
        a1_names.push_back(datum.a_family()[d].name);
      }
    for (size_t u = 0; u < universe.size(); ++u)
      if (mask & (1ull << (na + u))) m.push_back(u_rows[u]);
    auto c = strict_feasibility(m, datum.num_sigma());
    if (!c) return std::nullopt;
    for (const Rat& v : *c)
      if (v <= 0) fail(Errc::internal_error, "witness coefficient not strictly positive");

    FiniteTypeWitness w;
    w.a1 = std::move(a1_names);
    w.s2 = std::move(s2);
    w.s1 = std::move(s1);
    w.coeffs = std::move(*c);
    w.eta_on_sigma.assign(datum.num_sigma(), Rat(0));
    for (size_t r = 0; r < m.size(); ++r)
      for (int s = 0; s < datum.num_sigma(); ++s) w.eta_on_sigma[s] += w.coeffs[r] * m[r][s];
    return w;
  };

  for (int pop = 0; pop <= k; ++pop) {
    if (pop == 0) {
      if (auto w = try_mask(0)) return {true, std::move(w)};
      continue;
    }
    unsigned long long mask = (1ull << pop) - 1;
    while (mask < (1ull << k)) {
      if (auto w = try_mask(mask)) return {true, std::move(w)};
      unsigned long long u = mask & (~mask + 1);
      unsigned long long v = mask + u;
      mask = v | (((mask ^ v) / u) >> 2);
    }
  }
  return {false, std::nullopt};
}

}  // namespace kmsph
