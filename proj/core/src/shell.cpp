#include "kmsph/shell.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "kmsph/errors.hpp"

namespace kmsph {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& ctx) {
  for (const auto& item : obj.items())
    if (!allowed.count(item.key()))
      fail(Errc::schema_violation, ctx + ": unknown field " + item.key());
}

const json& req(const json& obj, const char* key, const std::string& ctx) {
  if (!obj.contains(key)) fail(Errc::schema_violation, ctx + ": missing field " + key);
  return obj.at(key);
}

Rat json_to_rat(const json& v, const std::string& ctx) {
  if (v.is_number_integer()) return Rat(Int(v.get<long>()));
  if (v.is_number_unsigned()) return Rat(Int(v.get<unsigned long>()));
  if (v.is_string()) return parse_rat(v.get<std::string>());
  if (v.is_number_float())
    fail(Errc::schema_violation, ctx + ": floating point numbers are not allowed");
  fail(Errc::schema_violation, ctx + ": expected an integer or \"p/q\" string");
}

QVec json_to_qvec(const json& v, const std::string& ctx) {
  if (!v.is_array()) fail(Errc::schema_violation, ctx + ": expected an array");
  QVec out;
  for (const auto& x : v) out.push_back(json_to_rat(x, ctx));
  return out;
}

std::string json_to_string(const json& v, const std::string& ctx) {
  if (!v.is_string()) fail(Errc::schema_violation, ctx + ": expected a string");
  return v.get<std::string>();
}

json rat_to_json(const Rat& v) {
  if (is_integer(v) && v.get_num().fits_slong_p()) return json(v.get_num().get_si());
  return json(rat_string(v));
}

json qvec_to_json(const QVec& v) {
  json arr = json::array();
  for (const Rat& x : v) arr.push_back(rat_to_json(x));
  return arr;
}

std::vector<CompatEntry> parse_registry_array(const json& arr) {
  if (!arr.is_array()) fail(Errc::schema_violation, "compat_registry: expected an array");
  std::vector<CompatEntry> out;
  for (const auto& e : arr) {
    if (!e.is_object()) fail(Errc::schema_violation, "compat_registry entry: expected an object");
    check_keys(e, {"sigma", "Sp_cap_supp", "status", "note"}, "compat_registry entry");
    CompatEntry entry;
    entry.sigma = json_to_qvec(req(e, "sigma", "compat_registry entry"), "compat_registry sigma");
    const json& sp = req(e, "Sp_cap_supp", "compat_registry entry");
    if (!sp.is_array()) fail(Errc::schema_violation, "Sp_cap_supp: expected an array");
    for (const auto& l : sp) entry.sp_cap_supp.push_back(json_to_string(l, "Sp_cap_supp"));
    std::string status = json_to_string(req(e, "status", "compat_registry entry"), "status");
    if (status == "compatible")
      entry.compatible = true;
    else if (status == "incompatible")
      entry.compatible = false;
    else
      fail(Errc::schema_violation, "status: expected compatible or incompatible");
    if (e.contains("note")) entry.note = json_to_string(e.at("note"), "note");
    out.push_back(std::move(entry));
  }
  return out;
}

json parse_top_level(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::parse_error, e.what());
  }
}

}  // namespace

LoadedDatum parse_datum_text(const std::string& text) {
  json j = parse_top_level(text);
  if (!j.is_object()) fail(Errc::schema_violation, "top level: expected an object");
  // color_map and rank_drop appear in localization output and round-trip as inert.
  check_keys(j,
             {"name", "cartan", "labels", "ambient", "datum", "compat_registry", "color_map",
              "rank_drop"},
             "top level");

  std::string name = json_to_string(req(j, "name", "top level"), "name");

  const json& cj = req(j, "cartan", "top level");
  if (!cj.is_array()) fail(Errc::schema_violation, "cartan: expected an array of rows");
  ZMat cartan;
  for (const auto& row : cj) {
    if (!row.is_array()) fail(Errc::schema_violation, "cartan: expected an array of rows");
    ZVec r;
    for (const auto& x : row) {
      if (!x.is_number_integer() && !x.is_number_unsigned())
        fail(Errc::schema_violation, "cartan: entries must be integers");
      r.push_back(Int(x.get<long>()));
    }
    cartan.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j.at("labels").is_array()) fail(Errc::schema_violation, "labels: expected an array");
    for (const auto& l : j.at("labels")) labels.push_back(json_to_string(l, "labels"));
  }
  GeneralizedCartanMatrix gcm = GeneralizedCartanMatrix::make(std::move(cartan), std::move(labels));

  AmbientSpace ambient = AmbientSpace::root_lattice_model(gcm);
  if (j.contains("ambient")) {
    const json& aj = j.at("ambient");
    if (!aj.is_object()) fail(Errc::schema_violation, "ambient: expected an object");
    check_keys(aj, {"dim", "simple_roots", "coroot_pairing"}, "ambient");
    const json& dj = req(aj, "dim", "ambient");
    if (!dj.is_number_integer() && !dj.is_number_unsigned())
      fail(Errc::schema_violation, "ambient.dim: expected an integer");
    int dim = dj.get<int>();
    QMat sr, cp;
    const json& srj = req(aj, "simple_roots", "ambient");
    if (!srj.is_array()) fail(Errc::schema_violation, "simple_roots: expected an array");
    for (const auto& row : srj) sr.push_back(json_to_qvec(row, "simple_roots"));
    const json& cpj = req(aj, "coroot_pairing", "ambient");
    if (!cpj.is_array()) fail(Errc::schema_violation, "coroot_pairing: expected an array");
    for (const auto& row : cpj) cp.push_back(json_to_qvec(row, "coroot_pairing"));
    ambient = AmbientSpace::make(gcm, dim, std::move(sr), std::move(cp));
  }

  const json& dj = req(j, "datum", "top level");
  if (!dj.is_object()) fail(Errc::schema_violation, "datum: expected an object");
  check_keys(dj, {"Sp", "Sigma", "Xi_basis", "A"}, "datum");

  std::vector<int> sp;
  const json& spj = req(dj, "Sp", "datum");
  if (!spj.is_array()) fail(Errc::schema_violation, "Sp: expected an array of labels");
  for (const auto& l : spj) sp.push_back(gcm.index_of(json_to_string(l, "Sp")));

  QMat sigma;
  const json& sj = req(dj, "Sigma", "datum");
  if (!sj.is_array()) fail(Errc::schema_violation, "Sigma: expected an array of rows");
  for (const auto& row : sj) sigma.push_back(json_to_qvec(row, "Sigma"));

  QMat xi_basis;
  const json& xj = req(dj, "Xi_basis", "datum");
  if (!xj.is_array()) fail(Errc::schema_violation, "Xi_basis: expected an array of rows");
  for (const auto& row : xj) xi_basis.push_back(json_to_qvec(row, "Xi_basis"));

  std::vector<AElement> a;
  const json& aj = req(dj, "A", "datum");
  if (!aj.is_array()) fail(Errc::schema_violation, "A: expected an array");
  for (const auto& e : aj) {
    if (!e.is_object()) fail(Errc::schema_violation, "A entry: expected an object");
    check_keys(e, {"name", "rho"}, "A entry");
    AElement el;
    el.name = json_to_string(req(e, "name", "A entry"), "A.name");
    QVec rho = json_to_qvec(req(e, "rho", "A entry"), "A.rho");
    for (const Rat& v : rho) {
      if (!is_integer(v))
        fail(Errc::invariant_violation,
             "rho of " + el.name + " must be integral, got " + rat_string(v));
      el.rho.push_back(v.get_num());
    }
    a.push_back(std::move(el));
  }

  std::vector<CompatEntry> registry;
  if (j.contains("compat_registry")) registry = parse_registry_array(j.at("compat_registry"));

  HomogeneousSphericalDatum datum = HomogeneousSphericalDatum::make(
      std::move(ambient), std::move(sp), std::move(sigma), IntegerLattice::make(xi_basis),
      std::move(a));
  return {std::move(name), std::move(datum), std::move(registry)};
}

LoadedDatum load_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_datum_text(buf.str());
}

std::vector<CompatEntry> parse_registry_text(const std::string& text) {
  json j = parse_top_level(text);
  if (!j.is_object()) fail(Errc::schema_violation, "top level: expected an object");
  check_keys(j, {"compat_registry"}, "top level");
  return parse_registry_array(req(j, "compat_registry", "top level"));
}

std::vector<CompatEntry> load_registry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_registry_text(buf.str());
}

std::string datum_file_text(const std::string& name, const HomogeneousSphericalDatum& datum,
                            const std::vector<CompatEntry>& registry,
                            const std::map<std::string, std::string>* color_map,
                            const int* rank_drop) {
  const AmbientSpace& amb = datum.ambient();
  json j;
  j["name"] = name;
  json cartan = json::array();
  for (int i = 0; i < amb.n(); ++i) {
    json row = json::array();
    for (int k = 0; k < amb.n(); ++k) row.push_back(amb.gcm().at(i, k).get_si());
    cartan.push_back(std::move(row));
  }
  j["cartan"] = std::move(cartan);
  j["labels"] = amb.gcm().labels();
  if (!amb.is_root_lattice_model()) {
    json a;
    a["dim"] = amb.dim();
    json sr = json::array(), cp = json::array();
    for (int i = 0; i < amb.n(); ++i) {
      sr.push_back(qvec_to_json(amb.simple_root(i)));
      cp.push_back(qvec_to_json(amb.coroot_pairing()[i]));
    }
    a["simple_roots"] = std::move(sr);
    a["coroot_pairing"] = std::move(cp);
    j["ambient"] = std::move(a);
  }

  json d;
  json spj = json::array();
  for (int i : datum.sp()) spj.push_back(amb.gcm().label(i));
  d["Sp"] = std::move(spj);
  json sj = json::array();
  for (const auto& row : datum.sigma()) sj.push_back(qvec_to_json(row));
  d["Sigma"] = std::move(sj);
  json xj = json::array();
  for (const auto& row : datum.xi().basis()) xj.push_back(qvec_to_json(row));
  d["Xi_basis"] = std::move(xj);
  json aj = json::array();
  for (const auto& el : datum.a_family()) {
    json e;
    e["name"] = el.name;
    json rho = json::array();
    for (const Int& v : el.rho) rho.push_back(v.get_si());
    e["rho"] = std::move(rho);
    aj.push_back(std::move(e));
  }
  d["A"] = std::move(aj);
  j["datum"] = std::move(d);

  if (!registry.empty()) {
    json rj = json::array();
    for (const auto& entry : registry) {
      json e;
      e["sigma"] = qvec_to_json(entry.sigma);
      e["Sp_cap_supp"] = entry.sp_cap_supp;
      e["status"] = entry.compatible ? "compatible" : "incompatible";
      e["note"] = entry.note;
      rj.push_back(std::move(e));
    }
    j["compat_registry"] = std::move(rj);
  }
  if (color_map) j["color_map"] = *color_map;
  if (rank_drop) j["rank_drop"] = *rank_drop;
  return j.dump(2) + "\n";
}

ValidationReport validate(const std::string& name, const HomogeneousSphericalDatum& datum,
                          const std::vector<CompatEntry>& registry,
                          const ValidationOptions& options) {
  ValidationReport r;
  r.name = name;
  r.labels = datum.ambient().gcm().labels();
  for (const auto& row : datum.sigma())
    r.sigma_names.push_back(format_character(datum.ambient(), row));

  r.a1 = check_a1(datum, !options.lenient_a1);
  r.a2 = check_a2(datum);
  r.a3 = check_a3(datum);
  r.sigma1 = check_sigma1(datum);
  r.sigma2 = check_sigma2(datum);
  r.s = check_s(datum, registry, options.strict_compat);
  r.axioms_pass = r.a1.pass && r.a2.pass && r.a3.pass && r.sigma1.pass && r.sigma2.pass && r.s.pass;

  QMat rows = datum.sigma();
  if (!rows.empty() && rank_of(rows) < datum.num_sigma())
    r.lints.push_back("Sigma is linearly dependent");
  if (datum.num_sigma() == 0) r.lints.push_back("horospherical: Sigma is empty");
  bool any_composite = false;
  for (int s = 0; s < datum.num_sigma(); ++s) {
    bool simple = false;
    for (int i = 0; i < datum.ambient().n(); ++i)
      if (datum.sigma()[s] == datum.ambient().simple_root(i)) { simple = true; break; }
    if (!simple) any_composite = true;
  }
  if (any_composite)
    r.lints.push_back("compatibility registry matches on S^p within supp(sigma) only");
  for (const auto& e : r.s.entries)
    if (e.status == CompatStatus::unconfirmed)
      r.lints.push_back("compatibility unconfirmed for " + r.sigma_names[e.sigma_index]);

  if (r.axioms_pass) {
    try {
      r.partition = type_partition(datum);
      r.colors = derive_colors(datum);
    } catch (const Error& e) {
      if (e.code() != Errc::invariant_violation) throw;
      r.structure_ok = false;
      r.lints.push_back(std::string("structure: ") + e.what());
    }
    if (r.structure_ok) r.finite = check_finite_type(datum, options.ft);
  }
  r.pass = r.axioms_pass && r.structure_ok && r.finite.has_value() && r.finite->finite;
  return r;
}

namespace {

json check_to_json(const CheckResult& c) {
  json j;
  j["pass"] = c.pass;
  j["notes"] = c.notes;
  return j;
}

const char* status_name(CompatStatus s) {
  switch (s) {
    case CompatStatus::compatible: return "compatible";
    case CompatStatus::incompatible: return "incompatible";
    case CompatStatus::unconfirmed: return "unconfirmed";
  }
  return "?";
}

const char* kind_name(ColorKind k) {
  switch (k) {
    case ColorKind::a: return "a";
    case ColorKind::two_a: return "2a";
    case ColorKind::b: return "b";
  }
  return "?";
}

std::vector<std::string> to_labels(const std::vector<int>& idx,
                                   const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(labels[i]);
  return out;
}

std::string brace_list(const std::vector<std::string>& items) {
  std::string out = "{";
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out + "}";
}

}  // namespace

std::string report_json(const ValidationReport& r) {
  json j;
  json ax;
  ax["A1"] = check_to_json(r.a1);
  ax["A2"] = check_to_json(r.a2);
  ax["A3"] = check_to_json(r.a3);
  ax["Sigma1"] = check_to_json(r.sigma1);
  ax["Sigma2"] = check_to_json(r.sigma2);
  json s;
  s["pass"] = r.s.pass;
  json entries = json::array();
  for (const auto& e : r.s.entries) {
    json je;
    je["sigma"] = r.sigma_names[e.sigma_index];
    je["status"] = status_name(e.status);
    je["note"] = e.note;
    entries.push_back(std::move(je));
  }
  s["entries"] = std::move(entries);
  ax["S"] = std::move(s);
  j["axioms"] = std::move(ax);

  if (r.partition) {
    json p;
    p["a"] = to_labels(r.partition->a, r.labels);
    p["2a"] = to_labels(r.partition->two_a, r.labels);
    p["b"] = to_labels(r.partition->b, r.labels);
    p["p"] = to_labels(r.partition->p, r.labels);
    j["partition"] = std::move(p);
  } else {
    j["partition"] = nullptr;
  }

  if (r.colors) {
    json cs = json::array();
    for (const auto& c : *r.colors) {
      json jc;
      jc["id"] = c.id;
      jc["kind"] = kind_name(c.kind);
      jc["movers"] = to_labels(c.movers, r.labels);
      jc["functional"] = qvec_to_json(c.functional);
      cs.push_back(std::move(jc));
    }
    j["colors"] = std::move(cs);
  } else {
    j["colors"] = nullptr;
  }

  if (r.finite) {
    json f;
    f["finite"] = r.finite->finite;
    if (r.finite->witness) {
      const FiniteTypeWitness& w = *r.finite->witness;
      json wj;
      wj["A1"] = w.a1;
      wj["S2"] = to_labels(w.s2, r.labels);
      wj["S1"] = to_labels(w.s1, r.labels);
      wj["coeffs"] = qvec_to_json(w.coeffs);
      wj["eta_on_sigma"] = qvec_to_json(w.eta_on_sigma);
      f["witness"] = std::move(wj);
    } else {
      f["witness"] = nullptr;
    }
    j["finite_type"] = std::move(f);
  } else {
    j["finite_type"] = nullptr;
  }

  j["lints"] = r.lints;
  j["name"] = r.name;
  j["pass"] = r.pass;
  return j.dump(2) + "\n";
}

std::string report_text(const ValidationReport& r) {
  std::ostringstream out;
  out << "datum: " << r.name << "\n";
  auto line = [&](const char* tag, const CheckResult& c) {
    out << tag << ": " << (c.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& n : c.notes) out << "  - " << n << "\n";
  };
  line("A1", r.a1);
  line("A2", r.a2);
  line("A3", r.a3);
  line("Sigma1", r.sigma1);
  line("Sigma2", r.sigma2);
  out << "S: " << (r.s.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& e : r.s.entries)
    out << "  - " << r.sigma_names[e.sigma_index] << ": " << status_name(e.status) << " ("
        << e.note << ")\n";
  if (r.partition) {
    out << "partition: a = " << brace_list(to_labels(r.partition->a, r.labels))
        << "; 2a = " << brace_list(to_labels(r.partition->two_a, r.labels))
        << "; b = " << brace_list(to_labels(r.partition->b, r.labels))
        << "; p = " << brace_list(to_labels(r.partition->p, r.labels)) << "\n";
  }
  if (r.colors) {
    out << "colors:\n";
    for (const auto& c : *r.colors)
      out << "  - " << c.id << " [" << kind_name(c.kind) << "] movers "
          << brace_list(to_labels(c.movers, r.labels)) << " -> " << format_qvec(c.functional)
          << "\n";
  }
  if (r.finite) {
    out << "finite-type: " << (r.finite->finite ? "PRESENT" : "ABSENT") << "\n";
    if (r.finite->witness) {
      const FiniteTypeWitness& w = *r.finite->witness;
      out << "  A1 = " << brace_list(w.a1) << ", S2 = " << brace_list(to_labels(w.s2, r.labels))
          << ", S1 = " << brace_list(to_labels(w.s1, r.labels))
          << ", coeffs = " << format_qvec(w.coeffs) << ", eta = " << format_qvec(w.eta_on_sigma)
          << "\n";
    }
  } else {
    out << "finite-type: SKIPPED\n";
  }
  if (!r.lints.empty()) {
    out << "lints:\n";
    for (const auto& l : r.lints) out << "  - " << l << "\n";
  }
  out << "result: " << (r.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"ex_verysolv", true, true}, {"ex_second", true, true}, {"ex_second_K", true, true},
      {"ex_conj", true, true},     {"ex_new", true, true},    {"ex_veryred", true, false},
  };
  return entries;
}

}  // namespace kmsph
