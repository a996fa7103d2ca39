#pragma once

// JSON readers and writers for the file formats: root data, automorphisms,
// sigma modules, characters, parameters, and the report emitters. All
// numbers are exact integers; writers use ordered objects so output is
// byte-stable.

#include "json.hpp"

#include "modsat/grcombi.hpp"

namespace modsat {

using json = nlohmann::ordered_json;

namespace detail {

inline json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(r);
  }
  return rows;
}

inline Mat mat_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw input_error(std::string(what) + ": expected matrix");
  std::vector<Vec> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw input_error(std::string(what) + ": expected row");
    Vec row;
    for (const auto& x : r) {
      if (!x.is_number_integer())
        throw input_error(std::string(what) + ": entries must be integers");
      row.push_back(x.get<i64>());
    }
    rows.push_back(row);
  }
  if (rows.empty()) return Mat(0, 0);
  return Mat::from_rows(rows);
}

inline json vec_to_json(const Vec& v) {
  json a = json::array();
  for (i64 x : v) a.push_back(x);
  return a;
}

inline Vec vec_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw input_error(std::string(what) + ": expected array");
  Vec v;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw input_error(std::string(what) + ": entries must be integers");
    v.push_back(x.get<i64>());
  }
  return v;
}

}  // namespace detail

inline json datum_to_json(const RootDatum& d) {
  json j;
  j["schema"] = "root_datum/1";
  j["rank"] = d.rank;
  json roots = json::array(), coroots = json::array();
  for (const RootPair& p : d.roots) {
    roots.push_back(detail::vec_to_json(p.root));
    coroots.push_back(detail::vec_to_json(p.coroot));
  }
  j["roots"] = roots;
  j["coroots"] = coroots;
  json simple = json::array();
  for (const Vec& s : d.simple_roots) {
    int idx = d.root_index(s);
    if (idx < 0) throw internal_error("simple root missing from root list");
    simple.push_back(idx);
  }
  j["simple"] = simple;
  j["isogeny"] = isogeny_name(d.isogeny);
  return j;
}

inline RootDatum datum_from_json(const json& j) {
  if (!j.contains("rank") || !j["rank"].is_number_integer())
    throw input_error("root datum: missing integer rank");
  int rank = j["rank"].get<int>();
  if (!j.contains("roots") || !j.contains("coroots") || !j.contains("simple"))
    throw input_error("root datum: missing roots/coroots/simple");
  std::vector<Vec> roots, coroots;
  for (const auto& r : j["roots"]) roots.push_back(detail::vec_from_json(r, "roots"));
  for (const auto& r : j["coroots"])
    coroots.push_back(detail::vec_from_json(r, "coroots"));
  if (roots.size() != coroots.size())
    throw input_error("root datum: roots/coroots length mismatch");
  Isogeny iso = Isogeny::General;
  if (j.contains("isogeny")) {
    std::string s = j["isogeny"].get<std::string>();
    if (s == "sc") iso = Isogeny::SimplyConnected;
    else if (s == "adjoint") iso = Isogeny::Adjoint;
    else if (s == "general") iso = Isogeny::General;
    else throw input_error("root datum: unknown isogeny " + s);
  }
  std::vector<Vec> sr, sc;
  for (const auto& ix : j["simple"]) {
    if (!ix.is_number_integer()) throw input_error("root datum: simple indices");
    int i = ix.get<int>();
    if (i < 0 || i >= static_cast<int>(roots.size()))
      throw input_error("root datum: simple index out of range");
    sr.push_back(roots[i]);
    sc.push_back(coroots[i]);
  }
  for (const Vec& v : roots)
    if (static_cast<int>(v.size()) != rank)
      throw input_error("root datum: root length != rank");
  RootDatum d = make_root_datum(rank, sr, sc, iso);
  // the supplied root list must match the generated system
  if (d.n_roots() != static_cast<int>(roots.size()))
    throw input_error("root datum: root list does not match reflection closure");
  for (size_t i = 0; i < roots.size(); ++i) {
    int idx = d.root_index(roots[i]);
    if (idx < 0 || !(d.roots[idx].coroot == coroots[i]))
      throw input_error("root datum: root/coroot pair not in the closure");
  }
  return d;
}

inline json auto_to_json(const DatumAutomorphism& a) {
  json j;
  j["schema"] = "automorphism/1";
  j["kind"] = auto_kind_name(a.kind);
  j["matrix"] = detail::mat_to_json(a.matrix);
  j["order"] = a.ell;
  if (a.kind == AutoKind::InnerTorsion) j["t"] = detail::vec_to_json(a.t);
  if (a.kind == AutoKind::Pinned) {
    json p = json::array();
    for (int x : a.perm) p.push_back(x);
    j["perm"] = p;
  }
  if (a.kind == AutoKind::General) {
    j["fixed"] = datum_to_json(a.fixed);
    j["embedding"] = detail::mat_to_json(a.cochar_embedding);
    j["projection"] = detail::mat_to_json(a.char_projection);
  }
  return j;
}

// base: the root datum the automorphism acts on. For block_cyclic the
// supplied datum is the single block m, not the product.
inline DatumAutomorphism auto_from_json(const json& j, const RootDatum& base) {
  if (!j.contains("kind") || !j.contains("order"))
    throw input_error("automorphism: missing kind or order");
  std::string kind = j["kind"].get<std::string>();
  i64 ell = j["order"].get<i64>();
  if (kind == "inner_torsion") {
    if (!j.contains("t")) throw input_error("automorphism: inner_torsion needs t");
    return inner_torsion_automorphism(base, detail::vec_from_json(j["t"], "t"),
                                      ell);
  }
  if (kind == "pinned") {
    if (!j.contains("perm")) throw input_error("automorphism: pinned needs perm");
    std::vector<int> perm;
    for (const auto& x : j["perm"]) perm.push_back(x.get<int>());
    DatumAutomorphism a = pinned_automorphism(base, perm);
    if (a.ell != ell) throw input_error("automorphism: order does not match perm");
    return a;
  }
  if (kind == "block_cyclic") return block_cyclic_automorphism(base, ell);
  if (kind == "general") {
    if (!j.contains("matrix") || !j.contains("fixed") || !j.contains("embedding"))
      throw input_error("automorphism: general needs matrix, fixed, embedding");
    RootDatum fixed = datum_from_json(j["fixed"]);
    Mat m = detail::mat_from_json(j["matrix"], "matrix");
    Mat e = detail::mat_from_json(j["embedding"], "embedding");
    Mat q = j.contains("projection")
                ? detail::mat_from_json(j["projection"], "projection")
                : transpose(e);
    return general_automorphism(base, m, ell, fixed, e, q);
  }
  throw input_error("automorphism: unknown kind " + kind);
}

inline json sigma_module_to_json(const SigmaModule& m) {
  json j;
  j["schema"] = "sigma_module/1";
  j["coeff"] = m.coeff == Coeff::Fl ? "Fl" : "Zl";
  j["ell"] = m.ell;
  j["presentation"] = detail::mat_to_json(m.presentation);
  j["sigma"] = detail::mat_to_json(m.sigma);
  return j;
}

inline SigmaModule sigma_module_from_json(const json& j) {
  SigmaModule m;
  if (!j.contains("coeff") || !j.contains("ell") || !j.contains("sigma"))
    throw input_error("sigma module: missing coeff/ell/sigma");
  std::string c = j["coeff"].get<std::string>();
  if (c == "Fl") m.coeff = Coeff::Fl;
  else if (c == "Zl") m.coeff = Coeff::Zl;
  else throw input_error("sigma module: coeff must be Fl or Zl");
  m.ell = j["ell"].get<i64>();
  m.sigma = detail::mat_from_json(j["sigma"], "sigma");
  if (j.contains("presentation") && !j["presentation"].empty())
    m.presentation = detail::mat_from_json(j["presentation"], "presentation");
  else
    m.presentation = Mat(m.sigma.rows(), 0);
  validate_sigma_module(m);
  return m;
}

inline json character_to_json(const CharacterElement& f,
                              const std::string& datum_ref) {
  json j;
  j["schema"] = "character/1";
  j["datum_ref"] = datum_ref;
  j["ring"] = f.ring.ell;  // 0 means Z
  j["frob_twist"] = f.frob_twist;
  json terms = json::array();
  for (const auto& [w, c] : f.support) {
    json t;
    t["weight"] = detail::vec_to_json(w);
    t["coeff"] = c;
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

inline CharacterElement character_from_json(const json& j, int rank) {
  if (!j.contains("terms")) throw input_error("character: missing terms");
  CharRing ring{j.value("ring", i64{0})};
  if (ring.modular() && !is_prime(ring.ell))
    throw input_error("character: ring must be 0 or a prime");
  CharacterElement f = char_zero(rank, ring);
  f.frob_twist = j.value("frob_twist", i64{0});
  for (const auto& t : j["terms"]) {
    Vec w = detail::vec_from_json(t["weight"], "weight");
    if (static_cast<int>(w.size()) != rank)
      throw input_error("character: weight length != rank");
    f.support[w] += t["coeff"].get<i64>();
  }
  f.normalize();
  return f;
}

inline json parameter_to_json(const UnramLParameter& p) {
  json j;
  j["schema"] = "parameter/1";
  json tp = json::array();
  for (const Frac& f : p.torus_part) {
    json q;
    q["num"] = f.num;
    q["den"] = f.den;
    tp.push_back(q);
  }
  j["torus_part"] = tp;
  json w = json::array();
  for (int i : p.weyl_word) w.push_back(i);
  j["weyl_part"] = w;
  j["frob_twist"] = p.frob_twist;
  return j;
}

inline TorusCharacter theta_from_json(const json& j) {
  const json& arr = j.contains("torus_part") ? j["torus_part"] : j;
  if (!arr.is_array()) throw input_error("theta: expected array of {num, den}");
  TorusCharacter th;
  for (const auto& q : arr) {
    if (!q.contains("num") || !q.contains("den"))
      throw input_error("theta: entries need num and den");
    th.push_back(Frac::make(q["num"].get<i64>(), q["den"].get<i64>()));
  }
  return th;
}

inline json satake_matrix_to_json(const SatakeMatrix& m, i64 ell) {
  json j;
  j["schema"] = "satake_matrix/1";
  j["ell"] = ell;
  json cw = json::array(), rw = json::array();
  for (const Vec& w : m.col_weights) cw.push_back(detail::vec_to_json(w));
  for (const Vec& w : m.row_weights) rw.push_back(detail::vec_to_json(w));
  j["col_weights"] = cw;
  j["row_weights"] = rw;
  j["entries"] = detail::mat_to_json(m.entries);
  json lift;
  json lifts = json::array(), coeffs = json::array();
  bool all = true;
  for (size_t i = 0; i < m.column_lifts.size(); ++i) {
    lifts.push_back(m.column_lifts[i]);
    coeffs.push_back(detail::vec_to_json(m.lift_coeffs[i]));
    if (!m.column_lifts[i]) all = false;
  }
  lift["column_lifts"] = lifts;
  lift["lift_coeffs"] = coeffs;
  lift["all_lift"] = all;
  j["liftability"] = lift;
  return j;
}

inline json tate_report_to_json(const TateGroup& t0, const TateGroup& t1) {
  json j;
  j["schema"] = "tate_report/1";
  j["t0_dim"] = t0.dim;
  j["t1_dim"] = t1.dim;
  json b0 = json::array(), b1 = json::array();
  for (const Vec& v : t0.basis) b0.push_back(detail::vec_to_json(v));
  for (const Vec& v : t1.basis) b1.push_back(detail::vec_to_json(v));
  j["t0_basis"] = b0;
  j["t1_basis"] = b1;
  return j;
}

inline json validation_to_json(const ValidationReport& r) {
  json j;
  j["schema"] = "validation/1";
  json items = json::array();
  for (const auto& it : r.items) {
    json e;
    e["axiom"] = it.axiom;
    e["status"] = it.skipped ? "skip" : (it.pass ? "pass" : "fail");
    if (!it.message.empty()) e["message"] = it.message;
    items.push_back(e);
  }
  j["items"] = items;
  j["all_pass"] = r.all_pass();
  return j;
}

inline json dl_multiset_to_json(const DlTateResult& r) {
  json j;
  j["schema"] = "dl_tate/1";
  j["subgroup_order"] = r.subgroup_order;
  j["fixed_count"] = r.fixed_count;
  json ms = json::array();
  for (const TorusCharacter& th : r.multiset) {
    json e = json::array();
    for (const Frac& f : th) {
      json q;
      q["num"] = f.num;
      q["den"] = f.den;
      e.push_back(q);
    }
    ms.push_back(e);
  }
  j["multiset"] = ms;
  return j;
}

inline json fixed_stratum_to_json(const FixedStratum& f, i64 ambient_dim) {
  json j;
  j["schema"] = "gr_fixed/1";
  j["ambient_dim"] = ambient_dim;
  j["empty"] = f.empty;
  if (!f.empty) {
    j["h_lambda"] = detail::vec_to_json(f.h_lambda);
    j["dim"] = f.dim;
  }
  return j;
}

}  // namespace modsat
