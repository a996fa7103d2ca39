#pragma once

// Weyl-invariant character arithmetic: sparse elements of the group algebra
// of the weight lattice over Z or F_l, Weyl characters via the Freudenthal
// recursion, tensor decomposition by leading-term elimination, restriction
// along lattice maps, minuscule/quasi-minuscule classification, and the
// norm character with its per-weight Sigma-sets of monomials.

#include <map>

#include "modsat/rootdata.hpp"
#include "modsat/tate.hpp"

namespace modsat {

// ell = 0 means Z; ell prime means F_ell.
struct CharRing {
  i64 ell = 0;
  bool modular() const { return ell != 0; }
  i64 norm(i64 x) const { return modular() ? mod_norm(x, ell) : x; }
  bool operator==(const CharRing& o) const { return ell == o.ell; }
};

struct CharacterElement {
  int rank = 0;
  CharRing ring;
  int frob_twist = 0;
  std::map<Vec, i64> support;

  void normalize() {
    for (auto it = support.begin(); it != support.end();) {
      it->second = ring.norm(it->second);
      if (it->second == 0)
        it = support.erase(it);
      else
        ++it;
    }
  }
  bool is_zero() const { return support.empty(); }
  i64 coeff(const Vec& w) const {
    auto it = support.find(w);
    return it == support.end() ? 0 : it->second;
  }
  // dimension in characteristic zero: sum of coefficients
  i64 dimension() const {
    i64 s = 0;
    for (const auto& [w, c] : support) s += c;
    return s;
  }
  bool operator==(const CharacterElement& o) const {
    return rank == o.rank && ring == o.ring && frob_twist == o.frob_twist &&
           support == o.support;
  }
};

inline CharacterElement char_zero(int rank, CharRing ring) {
  CharacterElement f;
  f.rank = rank;
  f.ring = ring;
  return f;
}

inline CharacterElement char_monomial(int rank, CharRing ring, const Vec& w,
                                      i64 c = 1) {
  CharacterElement f = char_zero(rank, ring);
  f.support[w] = c;
  f.normalize();
  return f;
}

inline CharacterElement char_one(int rank, CharRing ring) {
  return char_monomial(rank, ring, Vec(rank, 0));
}

inline void check_compatible(const CharacterElement& f,
                             const CharacterElement& g) {
  if (f.rank != g.rank || !(f.ring == g.ring) || f.frob_twist != g.frob_twist)
    throw input_error("character elements over mismatched datum/ring/twist");
}

inline CharacterElement add(const CharacterElement& f,
                            const CharacterElement& g) {
  check_compatible(f, g);
  CharacterElement h = f;
  for (const auto& [w, c] : g.support) h.support[w] += c;
  h.normalize();
  return h;
}

inline CharacterElement scale(i64 s, const CharacterElement& f) {
  CharacterElement h = f;
  for (auto& [w, c] : h.support) c *= s;
  h.normalize();
  return h;
}

inline CharacterElement sub(const CharacterElement& f,
                            const CharacterElement& g) {
  return add(f, scale(-1, g));
}

inline CharacterElement multiply(const CharacterElement& f,
                                 const CharacterElement& g) {
  check_compatible(f, g);
  CharacterElement h = char_zero(f.rank, f.ring);
  h.frob_twist = f.frob_twist;
  for (const auto& [w1, c1] : f.support)
    for (const auto& [w2, c2] : g.support) h.support[vadd(w1, w2)] += c1 * c2;
  h.normalize();
  return h;
}

// e^lambda -> e^{L lambda}, extended linearly.
inline CharacterElement restrict_along(const CharacterElement& f, const Mat& l,
                                       int target_rank) {
  if (l.cols() != f.rank || l.rows() != target_rank)
    throw input_error("restrict_along: lattice map shape mismatch");
  CharacterElement h = char_zero(target_rank, f.ring);
  h.frob_twist = f.frob_twist;
  for (const auto& [w, c] : f.support) h.support[l * w] += c;
  h.normalize();
  return h;
}

// ---------------------------------------------------------------------------
// Weyl orbits and invariance.

inline std::set<Vec> weyl_orbit(const RootDatum& d, const Vec& w) {
  std::set<Vec> orbit{w};
  std::vector<Vec> queue{w};
  while (!queue.empty()) {
    Vec v = queue.back();
    queue.pop_back();
    for (int i = 0; i < d.n_simple(); ++i) {
      i64 k = dot(v, d.simple_coroots[i]);
      Vec v2 = vsub(v, vscale(k, d.simple_roots[i]));
      if (orbit.insert(v2).second) queue.push_back(v2);
    }
  }
  return orbit;
}

inline Vec dominant_representative(const RootDatum& d, Vec w) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < d.n_simple(); ++i) {
      i64 k = dot(w, d.simple_coroots[i]);
      if (k < 0) {
        w = vsub(w, vscale(k, d.simple_roots[i]));
        moved = true;
      }
    }
  }
  return w;
}

inline bool is_weyl_invariant(const RootDatum& d, const CharacterElement& f) {
  if (d.rank != f.rank) throw input_error("invariance: rank mismatch");
  for (int i = 0; i < d.n_simple(); ++i) {
    for (const auto& [w, c] : f.support) {
      i64 k = dot(w, d.simple_coroots[i]);
      if (f.coeff(vsub(w, vscale(k, d.simple_roots[i]))) != c) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Weyl characters via Freudenthal.

namespace detail {

// W-invariant integer form B(x, y) = sum over positive roots of
// <x, a^vee><y, a^vee>.
inline i64 invariant_form(const RootDatum& d, const Vec& x, const Vec& y) {
  i64 s = 0;
  for (const RootPair& p : d.roots)
    if (p.positive) s += dot(x, p.coroot) * dot(y, p.coroot);
  return s;
}

}  // namespace detail

inline i64 weight_height(const RootDatum& d, const Vec& w) {
  return dot(w, d.two_rho_cochar);
}

constexpr i64 kDefaultWeightBound = 24;

// Full weight support of the Weyl module with highest weight mu.
inline CharacterElement weyl_character(const RootDatum& d, const Vec& mu,
                                       CharRing ring = {},
                                       i64 weight_bound = kDefaultWeightBound) {
  if (static_cast<int>(mu.size()) != d.rank)
    throw input_error("weyl_character: weight rank mismatch");
  if (!d.dominant_weight(mu))
    throw input_error("weyl_character: weight is not dominant");
  if (weight_height(d, mu) > weight_bound)
    throw input_error("weyl_character: weight exceeds configured bound");

  // saturation closure: root strings downward from mu
  std::set<Vec> weights{mu};
  std::vector<Vec> queue{mu};
  while (!queue.empty()) {
    Vec v = queue.back();
    queue.pop_back();
    for (const RootPair& p : d.roots) {
      if (!p.positive) continue;
      i64 k = dot(v, p.coroot);
      Vec cur = v;
      for (i64 s = 1; s <= k; ++s) {
        cur = vsub(cur, p.root);
        if (weights.insert(cur).second) queue.push_back(cur);
      }
    }
  }

  // dominant weights in decreasing height, multiplicities by Freudenthal
  std::vector<Vec> dom;
  for (const Vec& w : weights)
    if (d.dominant_weight(w)) dom.push_back(w);
  std::sort(dom.begin(), dom.end(), [&](const Vec& a, const Vec& b) {
    i64 ha = weight_height(d, a), hb = weight_height(d, b);
    if (ha != hb) return ha > hb;
    return a > b;
  });

  std::map<Vec, i64> mult;  // on all weights
  auto mult_of = [&](const Vec& w) -> i64 {
    auto it = mult.find(w);
    return it == mult.end() ? 0 : it->second;
  };
  for (const Vec& lam : dom) {
    if (lam == mu) {
      for (const Vec& w : weyl_orbit(d, lam)) mult[w] = 1;
      continue;
    }
    // L * m_lam = 2 * sum_{a>0} sum_{k>=1} m(lam + k a) <lam + k a, a^vee>
    i64 rhs = 0;
    for (const RootPair& p : d.roots) {
      if (!p.positive) continue;
      Vec cur = lam;
      while (true) {
        cur = vadd(cur, p.root);
        if (!weights.count(cur)) break;
        i64 m = mult_of(cur);
        if (m != 0) rhs += 2 * m * detail::invariant_form(d, cur, p.root);
      }
    }
    i64 lhs = detail::invariant_form(d, vsub(mu, lam),
                                     vadd(vadd(mu, lam), d.two_rho));
    if (lhs == 0 || rhs % lhs != 0)
      throw internal_error("Freudenthal recursion: non-integral step");
    i64 m = rhs / lhs;
    for (const Vec& w : weyl_orbit(d, lam)) mult[w] = m;
  }

  CharacterElement f = char_zero(d.rank, ring);
  for (const auto& [w, m] : mult) f.support[w] = m;
  f.normalize();
  return f;
}

// Weyl dimension formula (independent oracle for the Freudenthal support).
inline i64 weyl_dimension(const RootDatum& d, const Vec& mu) {
  if (!d.dominant_weight(mu))
    throw input_error("weyl_dimension: weight is not dominant");
  i64 num = 1, den = 1;
  for (const RootPair& p : d.roots) {
    if (!p.positive) continue;
    num *= dot(vadd(vscale(2, mu), d.two_rho), p.coroot);
    den *= dot(d.two_rho, p.coroot);
    i64 g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1 && num % den != 0)
    throw internal_error("Weyl dimension formula: non-integral value");
  return num / den;
}

// ---------------------------------------------------------------------------
// Decomposition into Weyl characters by leading-term elimination.

struct DecompositionTerm {
  Vec weight;
  i64 coeff;
};

inline std::vector<DecompositionTerm> decompose(
    const RootDatum& d, const CharacterElement& f,
    i64 weight_bound = kDefaultWeightBound) {
  if (!is_weyl_invariant(d, f))
    throw input_error("decompose: element is not Weyl-invariant");
  CharacterElement rest = f;
  std::map<Vec, i64> out;
  while (!rest.is_zero()) {
    // leading term: dominant weight of maximal height
    const Vec* lead = nullptr;
    i64 best = -1;
    for (const auto& [w, c] : rest.support) {
      if (!d.dominant_weight(w)) continue;
      i64 h = weight_height(d, w);
      if (h > best || (h == best && (!lead || w > *lead))) {
        best = h;
        lead = &w;
      }
    }
    if (!lead)
      throw internal_error("decompose: invariant element with no dominant term");
    Vec mu = *lead;
    i64 c = rest.support.at(mu);
    out[mu] += c;
    rest = sub(rest, scale(c, weyl_character(d, mu, f.ring, weight_bound)));
  }
  std::vector<DecompositionTerm> terms;
  for (const auto& [w, c] : out)
    if (c != 0) terms.push_back({w, c});
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    i64 ha = weight_height(d, a.weight), hb = weight_height(d, b.weight);
    if (ha != hb) return ha > hb;
    return a.weight > b.weight;
  });
  return terms;
}

// ---------------------------------------------------------------------------
// Minuscule / quasi-minuscule classification.

enum class WeightClass { Minuscule, QuasiMinuscule, Neither };

inline WeightClass classify_weight(const RootDatum& d, const Vec& mu) {
  if (!d.dominant_weight(mu)) throw input_error("classify_weight: not dominant");
  if (is_zero(mu)) return WeightClass::Neither;
  CharacterElement f = weyl_character(d, mu);
  auto orbit = weyl_orbit(d, mu);
  if (f.support.size() == orbit.size()) return WeightClass::Minuscule;
  // quasi-minuscule: mu is the unique shortest dominant root
  const Vec* shortest = nullptr;
  i64 best = 0;
  for (const RootPair& p : d.roots) {
    if (!d.dominant_weight(p.root)) continue;
    i64 len = detail::invariant_form(d, p.root, p.root);
    if (!shortest || len < best) {
      shortest = &p.root;
      best = len;
    }
  }
  if (shortest && *shortest == mu) return WeightClass::QuasiMinuscule;
  return WeightClass::Neither;
}

// ---------------------------------------------------------------------------
// Norm character Nm(f) = f * sigma(f) * ... * sigma^{l-1}(f) and its
// per-weight Sigma-sets of monomial tuples.

inline CharacterElement twist_character(const CharacterElement& f,
                                        const Mat& m) {
  return restrict_along(f, m, f.rank);
}

inline CharacterElement norm_character(const CharacterElement& f,
                                       const DatumAutomorphism& a) {
  if (f.rank != a.base.rank) throw input_error("norm_character: rank mismatch");
  CharacterElement out = char_one(f.rank, f.ring);
  Mat pw = Mat::identity(f.rank);
  for (i64 i = 0; i < a.ell; ++i) {
    out = multiply(out, twist_character(f, pw));
    pw = a.matrix * pw;
  }
  return out;
}

// Per-weight rotation Sigma-set of monomials of Nm(V): a monomial is an
// l-tuple of (weight, multiplicity-slot) labels, with total weight
// sum_k sigma^k(lambda_k); sigma rotates the tuple.
struct NormWeightSet {
  Vec weight;
  i64 set_size = 0;
  i64 fixed_points = 0;
  bool good = false;
};

struct GoodnessReport {
  bool all_good = true;
  std::vector<NormWeightSet> weights;
  i64 total_monomials = 0;
};

inline GoodnessReport goodness_of_norm(const CharacterElement& f,
                                       const DatumAutomorphism& a,
                                       i64 size_bound = 100000) {
  if (f.ring.modular() && f.ring.ell != a.ell)
    throw input_error("goodness_of_norm: ring and automorphism ell differ");
  // basis labels: (weight, slot) with slot < multiplicity (char-0 dims)
  std::vector<std::pair<Vec, i64>> labels;
  for (const auto& [w, c] : f.support) {
    i64 m = c;
    if (m < 0) throw input_error("goodness_of_norm: negative multiplicity");
    for (i64 s = 0; s < m; ++s) labels.emplace_back(w, s);
  }
  const i64 n = static_cast<i64>(labels.size());
  i64 total = 1;
  for (i64 i = 0; i < a.ell; ++i) {
    total *= n;
    if (total > size_bound)
      throw input_error("goodness_of_norm: size bound exceeded");
  }
  std::vector<Mat> sigma_pows;
  Mat pw = Mat::identity(f.rank);
  for (i64 i = 0; i < a.ell; ++i) {
    sigma_pows.push_back(pw);
    pw = a.matrix * pw;
  }
  // Rotation sends a tuple of weight w to one of weight sigma(w), so the
  // sigma-stable pieces are indexed by sigma-orbits of weights; group by
  // the lex-minimal representative of the orbit.
  std::map<Vec, std::vector<i64>> by_weight;
  for (i64 idx = 0; idx < total; ++idx) {
    i64 x = idx;
    Vec w(f.rank, 0);
    for (i64 k = 0; k < a.ell; ++k) {
      i64 dig = x % n;
      x /= n;
      w = vadd(w, sigma_pows[k] * labels[dig].first);
    }
    Vec rep = w, cur = w;
    for (i64 k = 1; k < a.ell; ++k) {
      cur = a.matrix * cur;
      if (cur < rep) rep = cur;
    }
    by_weight[rep].push_back(idx);
  }
  auto rotate = [&](i64 idx) {
    // digit k of result = digit k-1 of input (right rotation)
    std::vector<i64> dig(static_cast<size_t>(a.ell));
    i64 x = idx;
    for (i64 k = 0; k < a.ell; ++k) {
      dig[k] = x % n;
      x /= n;
    }
    i64 out = 0;
    for (i64 k = a.ell - 1; k >= 0; --k)
      out = out * n + dig[(k - 1 + a.ell) % a.ell];
    return out;
  };

  GoodnessReport rep;
  rep.total_monomials = total;
  for (const auto& [w, tuples] : by_weight) {
    std::map<i64, int> pos;
    for (size_t i = 0; i < tuples.size(); ++i) pos[tuples[i]] = static_cast<int>(i);
    std::vector<int> perm(tuples.size());
    i64 fixed = 0;
    for (size_t i = 0; i < tuples.size(); ++i) {
      i64 r = rotate(tuples[i]);
      auto it = pos.find(r);
      if (it == pos.end())
        throw internal_error("goodness_of_norm: rotation changes the weight");
      perm[i] = it->second;
      if (r == tuples[i]) ++fixed;
    }
    SigmaModule pm = permutation_module(perm, Coeff::Zl, a.ell);
    GoodnessResult g = is_good(pm);
    NormWeightSet ws;
    ws.weight = w;
    ws.set_size = static_cast<i64>(tuples.size());
    ws.fixed_points = fixed;
    ws.good = g.good;
    if (!g.good) rep.all_good = false;
    rep.weights.push_back(ws);
  }
  return rep;
}

}  // namespace modsat
