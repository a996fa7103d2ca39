#pragma once

// Seeded randomized property suite. Every property here is an identity the
// library claims exactly; the suite samples inputs deterministically from
// the seed and reports per-property verdicts. Output is byte-stable for a
// fixed seed and independent of the thread count.

#include <random>
#include <sstream>

#include "modsat/json_io.hpp"

namespace modsat {

using u64 = std::uint64_t;

struct SuiteProperty {
  std::string name;
  bool pass = true;
  i64 checks = 0;
  std::string detail;

  void tally(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      pass = false;
      if (detail.empty()) detail = what;
    }
  }
};

namespace suite_detail {

// draw in [lo, hi], deterministic across platforms (no distribution objects)
inline i64 draw(std::mt19937_64& rng, i64 lo, i64 hi) {
  return lo + static_cast<i64>(rng() % static_cast<u64>(hi - lo + 1));
}

struct NamedSetup {
  std::string name;
  SatakeSetup s;
};

inline std::vector<NamedSetup> suite_setups() {
  std::vector<NamedSetup> out;
  auto add = [&](const std::string& n, const DatumAutomorphism& a) {
    out.push_back({n, make_satake_setup(a)});
  };
  RootDatum a1a = build_root_datum({CartanSeries::A, 1}, Isogeny::Adjoint);
  RootDatum a1 = build_root_datum({CartanSeries::A, 1}, Isogeny::SimplyConnected);
  RootDatum a2 = build_root_datum({CartanSeries::A, 2}, Isogeny::SimplyConnected);
  RootDatum a3 = build_root_datum({CartanSeries::A, 3}, Isogeny::SimplyConnected);
  RootDatum b2 = build_root_datum({CartanSeries::B, 2}, Isogeny::SimplyConnected);
  RootDatum d4 = build_root_datum({CartanSeries::D, 4}, Isogeny::SimplyConnected);
  RootDatum t1 = build_root_datum({CartanSeries::Torus, 1}, Isogeny::General);
  add("inner_a1_l2", inner_torsion_automorphism(a1a, {1}, 2));
  add("inner_a1_l3", inner_torsion_automorphism(a1a, {1}, 3));
  add("inner_a1_l5", inner_torsion_automorphism(a1a, {1}, 5));
  add("inner_a2_l3", inner_torsion_automorphism(a2, {1, 1}, 3));
  add("inner_b2_l5", inner_torsion_automorphism(b2, {1, 2}, 5));
  add("pinned_a2_l2", pinned_automorphism(a2, {1, 0}));
  add("pinned_a3_l2", pinned_automorphism(a3, {2, 1, 0}));
  add("pinned_d4_l3", pinned_automorphism(d4, {2, 1, 3, 0}));
  add("cyclic_a1_l2", block_cyclic_automorphism(a1, 2));
  add("cyclic_a1_l3", block_cyclic_automorphism(a1, 3));
  add("cyclic_t1_l5", block_cyclic_automorphism(t1, 5));
  return out;
}

// random sigma-invariant element: sum of c * (orbit sum of a random weight)
inline CharacterElement random_invariant(std::mt19937_64& rng,
                                         const SatakeSetup& s) {
  CharRing fl{s.ell};
  const int r = s.g_datum.rank;
  i64 n_orbits = s.ell >= 5 ? 1 : draw(rng, 1, 2);
  i64 span = s.ell >= 5 ? 1 : 2;
  CharacterElement f = char_zero(r, fl);
  for (i64 k = 0; k < n_orbits; ++k) {
    Vec w(r);
    for (int i = 0; i < r; ++i) w[i] = draw(rng, -span, span);
    i64 c = draw(rng, 1, std::max<i64>(1, s.ell - 1));
    Vec cur = w;
    for (i64 i = 0; i < s.ell; ++i) {
      f.support[cur] += c;
      cur = s.sigma.matrix * cur;
    }
  }
  f.normalize();
  return f;
}

inline FpMat fp_inverse(const FpMat& m) {
  int n = m.rows();
  FpMat inv(n, n, m.p());
  for (int j = 0; j < n; ++j) {
    Vec e(n, 0);
    e[j] = 1;
    auto sol = fp_solve(m, e);
    if (!sol) throw input_error("fp_inverse: singular");
    inv.set_col(j, *sol);
  }
  return inv;
}

}  // namespace suite_detail

inline json run_suite(u64 seed, int threads = 1) {
  (void)threads;  // evaluation is schedule-independent; flag kept for the CLI
  using suite_detail::draw;
  std::vector<SuiteProperty> props;

  auto setups = suite_detail::suite_setups();

  // one deterministic stream per property so properties stay independent
  auto rng_for = [&](u64 salt) { return std::mt19937_64(seed ^ salt); };

  {
    // Br multiplicativity and additivity over F_l, plus route equality of
    // the two br implementations, on random sigma-invariant pairs.
    SuiteProperty mult{"brauer_multiplicative"};
    SuiteProperty addp{"brauer_additive"};
    SuiteProperty route{"brauer_route_equality"};
    auto rng = rng_for(0x6272ull);
    for (const auto& ns : setups) {
      for (int it = 0; it < 1000; ++it) {
        CharacterElement f = suite_detail::random_invariant(rng, ns.s);
        CharacterElement g = suite_detail::random_invariant(rng, ns.s);
        CharacterElement bf = normalized_brauer(f, ns.s);
        CharacterElement bg = normalized_brauer(g, ns.s);
        CharacterElement bfg = normalized_brauer(multiply(f, g), ns.s);
        mult.tally(bfg == multiply(bf, bg), ns.name);
        CharacterElement bsum = normalized_brauer(add(f, g), ns.s);
        addp.tally(bsum == add(bf, bg), ns.name);
        bool routes = brauer_closed_form(f, ns.s) == bf &&
                      brauer_closed_form(g, ns.s) == bg &&
                      brauer_closed_form(multiply(f, g), ns.s) == bfg;
        route.tally(routes, ns.name);
      }
    }
    props.push_back(mult);
    props.push_back(addp);
    props.push_back(route);
  }

  {
    // characteristic-zero negative control: Br over Z is not multiplicative
    SuiteProperty neg{"char_zero_counterexample"};
    RootDatum a1 = build_root_datum({CartanSeries::A, 1}, Isogeny::SimplyConnected);
    SatakeSetup s = make_satake_setup(block_cyclic_automorphism(a1, 2));
    CharRing z{0};
    CharacterElement f = char_zero(2, z);
    f.support[{1, 0}] = 1;
    f.support[{0, 1}] = 1;
    CharacterElement bf = brauer_restrict(f, s);
    CharacterElement bff = brauer_restrict(multiply(f, f), s);
    neg.tally(!(bff == multiply(bf, bf)), "Z-coefficients");
    props.push_back(neg);
  }

  {
    // Tate identities and 2-periodicity of random complexes
    SuiteProperty tid{"tate_identities"};
    for (i64 ell : {2, 3, 5}) {
      for (int j = -2; j <= 2; ++j) {
        TateGroup t = tate_cohomology(trivial_module(Coeff::Fl, ell), j);
        tid.tally(t.dim == 1, "T(k)");
      }
      TateGroup z0 = tate_cohomology(trivial_module(Coeff::Zl, ell), 0);
      TateGroup z1 = tate_cohomology(trivial_module(Coeff::Zl, ell), 1);
      tid.tally(z0.dim == 1 && z1.dim == 0, "T(Z)");
      for (int dv = 1; dv <= 5; ++dv) {
        TensorPowerTate tp = tate_of_tensor_power(dv, ell);
        tid.tally(tp.t0_dim == dv, "tensor power T0");
        tid.tally(tp.frob_twist == 1, "tensor power twist");
      }
    }
    props.push_back(tid);

    SuiteProperty per{"complex_two_periodicity"};
    auto rng = rng_for(0x7065ull);
    for (int it = 0; it < 100; ++it) {
      i64 ell = std::vector<i64>{2, 3, 5}[draw(rng, 0, 2)];
      // permutation of order dividing ell: some ell-cycles plus fixed points
      i64 n_cyc = draw(rng, 0, 1);
      i64 n_fix = draw(rng, n_cyc == 0 ? 1 : 0, 2);
      int n = static_cast<int>(n_cyc * ell + n_fix);
      std::vector<int> perm(n);
      int at = 0;
      for (i64 c = 0; c < n_cyc; ++c) {
        for (i64 i = 0; i < ell; ++i)
          perm[at + i] = at + static_cast<int>((i + 1) % ell);
        at += static_cast<int>(ell);
      }
      for (; at < n; ++at) perm[at] = at;
      Coeff cf = draw(rng, 0, 1) ? Coeff::Fl : Coeff::Zl;
      SigmaModule m = permutation_module(perm, cf, ell);
      i64 len = draw(rng, 1, 3);
      SigmaComplex c;
      c.lo = static_cast<int>(draw(rng, -2, 0));
      i64 parity = draw(rng, 0, 1);
      for (i64 i = 0; i < len; ++i) c.terms.push_back(m);
      for (i64 i = 0; i + 1 < len; ++i)
        c.diffs.push_back((i + parity) % 2 == 0 ? norm_matrix(m)
                                                : one_minus_sigma(m));
      validate_sigma_complex(c);
      for (int deg = -1; deg <= 1; ++deg) {
        TateGroup a = tate_of_complex(c, deg);
        TateGroup b = tate_of_complex(c, deg + 2);
        per.tally(a.dim == b.dim, "period");
      }
    }
    props.push_back(per);
  }

  {
    // goodness of Nm on random characters; bad control; lattice round-trips
    SuiteProperty good{"norm_goodness"};
    auto rng = rng_for(0x676full);
    RootDatum a1 = build_root_datum({CartanSeries::A, 1}, Isogeny::Adjoint);
    for (int it = 0; it < 50; ++it) {
      i64 ell = std::vector<i64>{2, 3}[draw(rng, 0, 1)];
      DatumAutomorphism a = inner_torsion_automorphism(a1, {1}, ell);
      CharRing fl{ell};
      CharacterElement f = char_zero(1, fl);
      i64 terms = draw(rng, 1, 3);
      for (i64 k = 0; k < terms; ++k)
        f.support[{draw(rng, -2, 2)}] += draw(rng, 1, ell - 1);
      f.normalize();
      if (f.is_zero()) f.support[{0}] = 1;
      GoodnessReport r = goodness_of_norm(f, a);
      good.tally(r.all_good, "random norm");
    }
    {
      GoodnessResult bad = is_good(augmentation_ideal_module(Coeff::Zl, 3));
      good.tally(!bad.good, "augmentation control");
    }
    props.push_back(good);

    SuiteProperty dec{"lattice_decomposition_round_trip"};
    auto rng2 = rng_for(0x6465ull);
    for (int it = 0; it < 50; ++it) {
      i64 ell = std::vector<i64>{2, 3, 5}[draw(rng2, 0, 2)];
      i64 a = draw(rng2, 0, 3), b = draw(rng2, 0, 2), c = draw(rng2, 0, 2);
      if (a + b + c == 0) a = 1;
      SigmaModule m = trivial_module(Coeff::Zl, ell, 0);
      for (i64 i = 0; i < a; ++i) m = direct_sum(m, trivial_module(Coeff::Zl, ell));
      for (i64 i = 0; i < b; ++i)
        m = direct_sum(m, augmentation_ideal_module(Coeff::Zl, ell));
      for (i64 i = 0; i < c; ++i) m = direct_sum(m, regular_module(Coeff::Zl, ell));
      LatticeDecomposition d = decompose_lattice(m);
      dec.tally(d.a == a && d.b == b && d.c == c, "round trip");
    }
    props.push_back(dec);
  }

  {
    // six-term periodic LES exactness on random short exact sequences
    SuiteProperty les{"les_exactness"};
    auto rng = rng_for(0x6c65ull);
    for (int it = 0; it < 100; ++it) {
      i64 ell = std::vector<i64>{2, 3}[draw(rng, 0, 1)];
      int n = static_cast<int>(ell + draw(rng, 0, 2));
      // sigma = g P g^{-1} mod ell, P an ell-cycle padded by fixed points
      std::vector<int> perm(n);
      for (i64 i = 0; i < ell; ++i) perm[i] = static_cast<int>((i + 1) % ell);
      for (int i = static_cast<int>(ell); i < n; ++i) perm[i] = i;
      FpMat p(n, n, ell);
      for (int j = 0; j < n; ++j) p(perm[j], j) = 1;
      FpMat g(n, n, ell);
      while (true) {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) g(i, j) = draw(rng, 0, ell - 1);
        if (fp_rank(g) == n) break;
      }
      FpMat sig = g * p * suite_detail::fp_inverse(g);
      Mat sig_int(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sig_int(i, j) = sig(i, j);
      // sigma-stable submodule: span of sigma-orbits of random vectors
      int nv = static_cast<int>(draw(rng, 1, 2));
      std::vector<Vec> cols;
      for (int v = 0; v < nv; ++v) {
        Vec x(n);
        for (int i = 0; i < n; ++i) x[i] = draw(rng, 0, ell - 1);
        for (i64 k = 0; k < ell; ++k) {
          cols.push_back(x);
          x = sig_int * x;
          for (i64& e : x) e = mod_norm(e, ell);
        }
      }
      Mat sub(n, static_cast<int>(cols.size()));
      for (size_t j = 0; j < cols.size(); ++j) sub.set_col(static_cast<int>(j), cols[j]);
      LesReport r = les_check(sig_int, sub, ell);
      les.tally(r.all_exact(), "exactness");
    }
    props.push_back(les);
  }

  {
    // stratum dimensions: dominant coweights, fixed strata, empties
    SuiteProperty str{"stratum_dimensions"};
    auto rng = rng_for(0x7374ull);
    std::vector<RootDatum> data{
        build_root_datum({CartanSeries::A, 2}, Isogeny::Adjoint),
        build_root_datum({CartanSeries::B, 2}, Isogeny::SimplyConnected),
        build_root_datum({CartanSeries::G, 2}, Isogeny::Adjoint),
        build_root_datum({CartanSeries::A, 3}, Isogeny::SimplyConnected)};
    int found = 0;
    while (found < 200) {
      const RootDatum& d = data[draw(rng, 0, static_cast<i64>(data.size()) - 1)];
      Vec lam(d.rank);
      for (int i = 0; i < d.rank; ++i) lam[i] = draw(rng, -3, 3);
      if (!d.dominant_coweight(lam)) continue;
      ++found;
      str.tally(iwahori_orbit_dimension(d, lam) == dot(d.two_rho, lam),
                "dominant dim");
    }
    RootDatum a3 = build_root_datum({CartanSeries::A, 3}, Isogeny::SimplyConnected);
    DatumAutomorphism fold = pinned_automorphism(a3, {2, 1, 0});
    for (int it = 0; it < 50; ++it) {
      Vec lh(fold.fixed.rank);
      for (int i = 0; i < fold.fixed.rank; ++i) lh[i] = draw(rng, -3, 3);
      if (!fold.fixed.dominant_coweight(lh)) continue;
      Vec lam = fold.cochar_embedding * lh;
      FixedStratum fs = fixed_stratum(fold, lam);
      str.tally(!fs.empty && fs.h_lambda == lh &&
                    fs.dim == dot(fold.fixed.two_rho, lh),
                "fixed stratum dim");
    }
    for (int it = 0; it < 50; ++it) {
      Vec lam(a3.rank);
      for (int i = 0; i < a3.rank; ++i) lam[i] = draw(rng, -3, 3);
      if (fold.matrix_cochar() * lam == lam) continue;
      str.tally(fixed_stratum(fold, lam).empty, "non-fixed empty");
    }
    props.push_back(str);
  }

  {
    // coset fixed points: bijective when gcd(|K|, ell) = 1; witnessed
    // failure when ell divides |K|
    SuiteProperty cos{"coset_fixed_points"};
    i64 triples = 0;
    for (int n : {3, 5, 7, 9, 15}) {
      Perm r(n);
      for (int i = 0; i < n; ++i) r[i] = (i + 1) % n;
      PermGroup gamma = PermGroup::generate(n, {r});
      // automorphisms r -> r^k of order ell
      for (i64 ell : {2, 3}) {
        std::vector<i64> ks;
        for (i64 k = 2; k < n; ++k) {
          i64 pw = 1;
          for (i64 e = 0; e < ell; ++e) pw = (pw * k) % n;
          i64 ord_ok = pw == 1;
          if (!ord_ok || k == 1) continue;
          // order exactly dividing ell is enough (sigma^ell = 1)
          ks.push_back(k);
          if (ks.size() >= 2) break;
        }
        for (i64 k : ks) {
          // image of the generator r is the element r^k (shift by k)
          Perm img(n);
          for (int i = 0; i < n; ++i) img[i] = static_cast<int>((i64(i) + k) % n);
          for (int d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            i64 korder = n / d;
            if (korder % ell == 0) continue;  // keep gcd(|K|, ell) = 1
            Perm rk = perm_identity(n);
            for (int e = 0; e < d; ++e) rk = perm_compose(rk, r);
            // K = <r^d> must be sigma-stable: power maps preserve it
            auto rep = coset_fixed_points(gamma, {rk}, {img}, ell);
            cos.tally(rep.hypothesis && rep.bijective, "cyclic triple");
            ++triples;
          }
        }
      }
    }
    {
      // S3 with an inner involution, K = A3
      Perm r{1, 2, 0}, t{1, 0, 2};
      PermGroup gamma = PermGroup::generate(3, {r, t});
      auto rep = coset_fixed_points(gamma, {r}, {perm_inverse(r), t}, 2);
      cos.tally(rep.hypothesis && rep.bijective, "S3 triple");
      ++triples;
    }
    cos.tally(triples >= 20, "triple count");
    {
      Perm r{1, 2, 3, 0};
      PermGroup gamma = PermGroup::generate(4, {r});
      Perm r2 = perm_compose(r, r);
      auto rep = coset_fixed_points(gamma, {r2}, {perm_inverse(r)}, 2);
      cos.tally(!rep.hypothesis && !rep.bijective, "witnessed failure");
    }
    props.push_back(cos);
  }

  json out;
  out["schema"] = "suite/1";
  out["seed"] = seed;
  bool all = true;
  json parr = json::array();
  for (const SuiteProperty& p : props) {
    json e;
    e["name"] = p.name;
    e["pass"] = p.pass;
    e["checks"] = p.checks;
    if (!p.detail.empty()) e["first_failure"] = p.detail;
    parr.push_back(e);
    if (!p.pass) all = false;
  }
  out["properties"] = parr;
  out["all_pass"] = all;
  return out;
}

}  // namespace modsat
