// modsat: command-line front end. Subcommands wrap the library modules and
// speak JSON on both ends. Exit codes: 0 ok, 1 bad input, 2 hypothesis
// violation, 3 internal invariant breach.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "modsat/json_io.hpp"
#include "modsat/suite.hpp"

namespace {

using namespace modsat;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw input_error(std::string("bad JSON in ") + path + ": " + e.what());
  }
  return j;
}

void emit(const json& j, const std::string& out_path) {
  std::string text = j.dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw input_error("cannot write " + out_path);
    out << text;
  }
}

std::vector<int> parse_word(const std::string& s, int n_simple) {
  // "s1 s2" or "1 2": 1-based simple reflection indices
  std::vector<int> w;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    if (!tok.empty() && (tok[0] == 's' || tok[0] == 'S')) tok = tok.substr(1);
    int i = 0;
    try {
      i = std::stoi(tok);
    } catch (...) {
      throw input_error("bad reflection token: " + tok);
    }
    if (i < 1 || i > n_simple)
      throw input_error("reflection index out of range: " + tok);
    w.push_back(i - 1);
  }
  return w;
}

Vec parse_int_list(const std::string& s) {
  Vec v;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) {
        try {
          v.push_back(std::stoll(cur));
        } catch (...) {
          throw input_error("bad integer: " + cur);
        }
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  return v;
}

RootDatum datum_from_type(const std::string& type, const std::string& iso) {
  CartanLabel l = parse_cartan_label(type);
  Isogeny i = Isogeny::General;
  if (iso == "sc") i = Isogeny::SimplyConnected;
  else if (iso == "adjoint") i = Isogeny::Adjoint;
  else if (!iso.empty() && iso != "general")
    throw input_error("isogeny must be sc, adjoint or general");
  return build_root_datum(l, i);
}

Mat word_to_matrix(const RootDatum& d, const std::vector<int>& w) {
  Mat m = Mat::identity(d.rank);
  for (int i : w) m = m * d.simple_reflection(i);
  return m;
}

int run(int argc, char** argv) {
  CLI::App app{"exact-arithmetic workbench for mod-l Satake combinatorics"};
  app.require_subcommand(1);

  std::string type = "A1", iso = "sc", out_path;
  std::string datum_path, auto_path, setup_path, module_path, theta_path;
  std::string perm_str, lambda_str, word_str, wx_str, twist_str, vartheta_str;
  i64 weight_bound = 6, degree = 0, inner_ell = 0;
  u64 seed = 0;
  int threads = 1;

  auto* c_bad = app.add_subcommand("bad-primes", "excluded-prime table");
  c_bad->add_option("--type", type, "evaluate one label, e.g. E7");
  c_bad->add_option("--out", out_path);

  auto* c_group = app.add_subcommand("group", "emit a root datum");
  c_group->add_option("--type", type)->required();
  c_group->add_option("--isogeny", iso);
  c_group->add_option("--out", out_path);

  auto* c_auto = app.add_subcommand("auto", "validate an automorphism");
  c_auto->add_option("--datum", datum_path)->required();
  c_auto->add_option("--auto", auto_path)->required();
  c_auto->add_option("--out", out_path);

  auto* c_fold = app.add_subcommand("fold", "pinned diagram folding");
  c_fold->add_option("--datum", datum_path)->required();
  c_fold->add_option("--perm", perm_str, "0-based diagram permutation")->required();
  c_fold->add_option("--out", out_path);

  auto* c_brauer = app.add_subcommand("brauer", "Brauer homomorphisms");
  auto* c_bm = c_brauer->add_subcommand("matrix", "matrix of br");
  c_bm->add_option("--setup", setup_path, "JSON {datum, auto}")->required();
  c_bm->add_option("--weight-bound", weight_bound);
  c_bm->add_option("--out", out_path);

  auto* c_tate = app.add_subcommand("tate", "Tate cohomology of a module");
  c_tate->add_option("--module", module_path)->required();
  c_tate->add_option("--degree", degree);
  c_tate->add_option("--out", out_path);

  auto* c_dl = app.add_subcommand("dl", "Deligne-Lusztig combinatorics");
  auto* c_dlt = c_dl->add_subcommand("tate", "fixed-set character multiset");
  c_dlt->add_option("--datum", datum_path)->required();
  c_dlt->add_option("--wx", wx_str, "generators, words joined by ';'")->required();
  c_dlt->add_option("--twist", twist_str, "Frobenius twist word");
  c_dlt->add_option("--vartheta", vartheta_str, "outer twist word");
  c_dlt->add_option("--theta", theta_path)->required();
  c_dlt->add_option("--out", out_path);

  auto* c_gr = app.add_subcommand("gr", "affine Grassmannian strata");
  auto* c_grf = c_gr->add_subcommand("fixed", "sigma-fixed stratum");
  c_grf->add_option("--datum", datum_path)->required();
  c_grf->add_option("--auto", auto_path)->required();
  c_grf->add_option("--lambda", lambda_str)->required();
  c_grf->add_option("--out", out_path);

  auto* c_param = app.add_subcommand("param", "unramified L-parameters");
  auto* c_pt = c_param->add_subcommand("toral", "toral parameter");
  c_pt->add_option("--datum", datum_path)->required();
  c_pt->add_option("--theta", theta_path)->required();
  c_pt->add_option("--w", word_str, "Weyl cocycle word, e.g. \"s1 s2\"");
  c_pt->add_option("--inner-ell", inner_ell, "apply the inner-case twist");
  c_pt->add_option("--out", out_path);

  auto* c_suite = app.add_subcommand("suite", "randomized property suite");
  c_suite->add_option("--seed", seed);
  c_suite->add_option("--threads", threads);
  c_suite->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (*c_bad) {
    json j;
    j["schema"] = "bad_primes/1";
    json table;
    table["A_n"] = 1;
    table["B_n"] = 2;
    table["C_n"] = "n";
    table["D_n"] = 2;
    table["G_2"] = 3;
    table["F_4"] = 3;
    table["E_6"] = 3;
    table["E_7"] = 19;
    table["E_8"] = 31;
    j["table"] = table;
    if (c_bad->count("--type")) {
      RootDatum d = datum_from_type(type, "adjoint");
      j["type"] = type;
      j["bound"] = bad_prime_bound(d);
    }
    emit(j, out_path);
  } else if (*c_group) {
    emit(datum_to_json(datum_from_type(type, iso)), out_path);
  } else if (*c_auto) {
    RootDatum d = datum_from_json(load_json(datum_path));
    DatumAutomorphism a = auto_from_json(load_json(auto_path), d);
    ValidationReport r = validate_fixed_datum(a);
    json j = validation_to_json(r);
    j["automorphism"] = auto_to_json(a);
    emit(j, out_path);
    if (!r.all_pass()) return 1;
  } else if (*c_fold) {
    RootDatum d = datum_from_json(load_json(datum_path));
    Vec p64 = parse_int_list(perm_str);
    std::vector<int> perm(p64.begin(), p64.end());
    DatumAutomorphism a = pinned_automorphism(d, perm);
    FixedDualDatum fd = satake_fixed_dual_datum(a);
    json j;
    j["schema"] = "fold/1";
    j["automorphism"] = auto_to_json(a);
    j["fixed_datum"] = datum_to_json(a.fixed);
    j["satake_dual_datum"] = datum_to_json(fd.datum);
    j["embedding"] = detail::mat_to_json(fd.embedding);
    emit(j, out_path);
  } else if (*c_bm) {
    json sj = load_json(setup_path);
    if (!sj.contains("datum") || !sj.contains("auto"))
      throw input_error("setup JSON needs datum and auto");
    RootDatum d = datum_from_json(sj["datum"]);
    DatumAutomorphism a = auto_from_json(sj["auto"], d);
    SatakeSetup s = make_satake_setup(a);
    SatakeMatrix m = satake_matrix(s, weight_bound);
    emit(satake_matrix_to_json(m, s.ell), out_path);
  } else if (*c_tate) {
    SigmaModule m = sigma_module_from_json(load_json(module_path));
    TateGroup t0 = tate_cohomology(m, static_cast<int>(degree));
    TateGroup t1 = tate_cohomology(m, static_cast<int>(degree) + 1);
    json j = tate_report_to_json(t0, t1);
    j["degree"] = degree;
    emit(j, out_path);
  } else if (*c_dlt) {
    RootDatum d = datum_from_json(load_json(datum_path));
    std::vector<Mat> gens;
    std::string cur;
    for (char c : wx_str + ";") {
      if (c == ';') {
        if (!cur.empty())
          gens.push_back(word_to_matrix(d, parse_word(cur, d.n_simple())));
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    Mat tw = word_to_matrix(d, parse_word(twist_str, d.n_simple()));
    Mat vt = word_to_matrix(d, parse_word(vartheta_str, d.n_simple()));
    TorusCharacter th = theta_from_json(load_json(theta_path));
    if (static_cast<int>(th.size()) != d.rank)
      throw input_error("theta length != rank");
    DlTateResult r = dl_tate_multiset(gens, tw, vt, th);
    emit(dl_multiset_to_json(r), out_path);
  } else if (*c_grf) {
    RootDatum d = datum_from_json(load_json(datum_path));
    DatumAutomorphism a = auto_from_json(load_json(auto_path), d);
    Vec lam = parse_int_list(lambda_str);
    if (static_cast<int>(lam.size()) != a.base.rank)
      throw input_error("lambda length != rank of the automorphism base");
    FixedStratum fs = fixed_stratum(a, lam);
    emit(fixed_stratum_to_json(fs, iwahori_orbit_dimension(a.base, lam)),
         out_path);
  } else if (*c_pt) {
    RootDatum d = datum_from_json(load_json(datum_path));
    TorusCharacter th = theta_from_json(load_json(theta_path));
    if (static_cast<int>(th.size()) != d.rank)
      throw input_error("theta length != rank");
    std::vector<int> w = parse_word(word_str, d.n_simple());
    DualHomData dh = canonical_embedding_cocycle(d, w);
    UnramLParameter p;
    if (inner_ell != 0) {
      if (!is_prime(inner_ell)) throw input_error("--inner-ell must be prime");
      i64 b = bad_prime_bound(d);
      if (inner_ell <= b)
        throw hypothesis_error(
            "inner twist requires ell > the excluded-prime bound " +
            std::to_string(b));
      dh.torus_map = scalar_mul(inner_ell, dh.torus_map);
      dh.frob_twist += 1;
      p = toral_parameter(th, dh, inner_ell);
    } else {
      p.torus_part = transport(th, dh.torus_map);
      p.weyl_part = dh.cocycle;
      p.weyl_word = dh.cocycle_word;
      p.frob_twist = dh.frob_twist;
    }
    json j = parameter_to_json(p);
    j["normal_form"] = parameter_to_json(parameter_normal_form(d, p));
    emit(j, out_path);
  } else if (*c_suite) {
    json j = run_suite(seed, threads);
    emit(j, out_path);
    if (!j["all_pass"].get<bool>()) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const modsat::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const modsat::hypothesis_error& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return 2;
  } catch (const modsat::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  }
}
