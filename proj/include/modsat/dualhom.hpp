#pragma once

// The sigma-dual homomorphism as data: dual-torus lattice map plus an
// unramified Weyl cocycle, the canonical L-embedding of an unramified
// torus, unramified toral L-parameters with values in the prime-to-l part
// of Q/Z, Frobenius twisting, and Weyl-conjugacy normal forms.

#include "modsat/brauer.hpp"

namespace modsat {

// Element of Q/Z with positive denominator, reduced, 0 <= num < den.
struct Frac {
  i64 num = 0;
  i64 den = 1;

  static Frac make(i64 n, i64 d) {
    if (d == 0) throw input_error("fraction with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    n %= d;
    if (n < 0) n += d;
    i64 g = std::gcd(n, d);
    if (g == 0) g = 1;
    return Frac{n / g, d / g};
  }
  Frac scaled(i64 k) const { return make(num * k, den); }
  friend Frac operator+(const Frac& a, const Frac& b) {
    return make(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool operator<(const Frac& o) const {
    return num * o.den < o.num * den;
  }
};

inline void check_prime_to_ell(const Frac& f, i64 ell) {
  if (f.den % ell == 0)
    throw input_error("parameter value has denominator divisible by ell");
}

// theta: co-lattice -> Q/Z, recorded by its values on the standard basis.
using TorusCharacter = std::vector<Frac>;

inline TorusCharacter transport(const TorusCharacter& th, const Mat& m) {
  // (th o m)(e_j) = sum_i m(i,j) th_i
  if (static_cast<int>(th.size()) != m.rows())
    throw input_error("torus character transport: shape mismatch");
  TorusCharacter out(static_cast<size_t>(m.cols()), Frac{});
  for (int j = 0; j < m.cols(); ++j) {
    Frac v{};
    for (int i = 0; i < m.rows(); ++i) v = v + th[i].scaled(m(i, j));
    out[j] = v;
  }
  return out;
}

struct DualHomData {
  Mat torus_map;               // restriction of psi-check to the dual torus
  Mat cocycle;                 // Weyl element, image of Frobenius (char side)
  std::vector<int> cocycle_word;
  i64 frob_twist = 0;
};

// ^Lj for the unramified maximal torus classified by w: identity on the
// lattice with w-twisted Frobenius.
inline DualHomData canonical_embedding_cocycle(const RootDatum& g,
                                               const std::vector<int>& w_word) {
  DualHomData d;
  d.torus_map = Mat::identity(g.rank);
  d.cocycle = Mat::identity(g.rank);
  for (int i : w_word) {
    if (i < 0 || i >= g.n_simple())
      throw input_error("cocycle word: bad simple-reflection index");
    d.cocycle = d.cocycle * g.simple_reflection(i);
  }
  d.cocycle_word = w_word;
  d.frob_twist = 0;
  return d;
}

// Inner sigma of order l with H = T: the sigma-dual homomorphism lies in
// the conjugacy class of ^Lj o Fr_l, so the torus map picks up a factor of
// l and the twist tag increments; the cocycle is unchanged.
inline DualHomData inner_case_dual_hom(const SatakeSetup& s,
                                       const std::vector<int>& w_word) {
  if (s.sigma.kind != AutoKind::InnerTorsion)
    throw input_error("inner_case_dual_hom: automorphism is not inner");
  i64 b = std::max(bad_prime_bound(s.g_datum), bad_prime_bound(s.h_datum));
  if (s.ell <= b)
    throw hypothesis_error(
        "inner_case_dual_hom: requires ell > bad-prime bound " +
        std::to_string(b));
  DualHomData d = canonical_embedding_cocycle(s.g_datum, w_word);
  d.torus_map = scalar_mul(s.ell, d.torus_map);
  d.frob_twist += 1;
  return d;
}

// N as a lattice map, with its corestriction to the fixed sublattice chart.
inline Mat sigma_dual_torus_map(const SatakeSetup& s) { return s.n_map(); }

struct UnramLParameter {
  TorusCharacter torus_part;
  Mat weyl_part;
  std::vector<int> weyl_word;
  i64 frob_twist = 0;

  bool operator==(const UnramLParameter& o) const {
    return torus_part == o.torus_part && weyl_part == o.weyl_part &&
           frob_twist == o.frob_twist;
  }
};

inline UnramLParameter toral_parameter(const TorusCharacter& theta,
                                       const DualHomData& dh, i64 ell) {
  for (const Frac& f : theta) check_prime_to_ell(f, ell);
  UnramLParameter p;
  p.torus_part = transport(theta, dh.torus_map);
  p.weyl_part = dh.cocycle;
  p.weyl_word = dh.cocycle_word;
  p.frob_twist = dh.frob_twist;
  return p;
}

inline UnramLParameter frobenius_twist_parameter(const UnramLParameter& rho,
                                                 i64 ell) {
  UnramLParameter p = rho;
  for (Frac& f : p.torus_part) {
    check_prime_to_ell(f, ell);
    f = f.scaled(ell);
  }
  p.frob_twist += 1;
  return p;
}

// Weyl-conjugacy normal form of (theta, w): v acts by theta -> theta o v^{-1}
// on cochars and w -> v w v^{-1}; take the lexicographically minimal
// serialized representative. The twist tag is conjugation-invariant.
inline UnramLParameter parameter_normal_form(const RootDatum& d,
                                             const UnramLParameter& rho,
                                             size_t weyl_cap = 100000) {
  WeylGroup w = WeylGroup::generate(d, weyl_cap);
  auto serialize = [](const UnramLParameter& p) {
    std::vector<i64> key;
    for (const Frac& f : p.torus_part) {
      key.push_back(f.den);
      key.push_back(f.num);
    }
    for (int i = 0; i < p.weyl_part.rows(); ++i)
      for (int j = 0; j < p.weyl_part.cols(); ++j) key.push_back(p.weyl_part(i, j));
    return key;
  };
  UnramLParameter best = rho;
  std::vector<i64> best_key = serialize(rho);
  for (size_t i = 0; i < w.order(); ++i) {
    const Mat& v = w.elements[i];
    // cochar action of v and of v^{-1}
    Mat vc = transpose(v);  // pairing-preserving: cochar action = (v^T)^{-1};
    // v is of finite order, invert by solving
    Mat vinv(d.rank, d.rank);
    for (int j = 0; j < d.rank; ++j) {
      Vec e(d.rank, 0);
      e[j] = 1;
      auto sol = solve_integer(v, e);
      if (!sol) throw internal_error("Weyl element not invertible");
      vinv.set_col(j, *sol);
    }
    UnramLParameter cand;
    cand.frob_twist = rho.frob_twist;
    // theta o (v^{-1} acting on cochars) = theta o transpose(v)
    cand.torus_part = transport(rho.torus_part, vc);
    cand.weyl_part = v * rho.weyl_part * vinv;
    cand.weyl_word = {};
    std::vector<i64> key = serialize(cand);
    if (key < best_key) {
      best_key = key;
      best = cand;
    }
  }
  return best;
}

// Monomial action of the dual-hom data on the Satake basis of the torus
// case: e^lambda -> e^{torus_map(lambda)}; used for cross-checking against
// the brauer matrix in the inner case.
inline CharacterElement dualhom_on_character(const CharacterElement& f,
                                             const DualHomData& dh) {
  CharacterElement out = restrict_along(f, dh.torus_map, dh.torus_map.rows());
  out.frob_twist = f.frob_twist + dh.frob_twist;
  return out;
}

}  // namespace modsat
