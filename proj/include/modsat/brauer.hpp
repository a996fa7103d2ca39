#pragma once

// Brauer homomorphisms on the Satake model: restriction Br to the
// sigma-fixed weight sublattice, the Tate diagonal Nm, its Frobenius
// linearization, the normalized br = Br o Nm^(1/l) with an independent
// closed form, and the matrix of br in Weyl-character bases.

#include "modsat/charring.hpp"

namespace modsat {

struct SatakeSetup {
  RootDatum g_datum;        // dual-side datum (Gcheck)
  DatumAutomorphism sigma;  // automorphism of g_datum
  RootDatum h_datum;        // Hcheck on Z^r identified with X^sigma
  Mat embedding;            // g.rank x h.rank, image = X^sigma
  i64 ell = 2;

  // N = 1 + sigma + ... + sigma^{l-1} on the character lattice
  Mat n_map() const {
    Mat n(g_datum.rank, g_datum.rank);
    Mat pw = Mat::identity(g_datum.rank);
    for (i64 i = 0; i < ell; ++i) {
      n = n + pw;
      pw = sigma.matrix * pw;
    }
    return n;
  }
  // N followed by the coordinate chart of X^sigma: h-coordinates of N(lambda)
  Mat n_map_h() const {
    Mat n = n_map();
    Mat out(h_datum.rank, g_datum.rank);
    for (int j = 0; j < g_datum.rank; ++j) {
      auto sol = solve_integer(embedding, n.col(j));
      if (!sol) throw internal_error("N image outside the fixed sublattice");
      out.set_col(j, *sol);
    }
    return out;
  }
};

inline SatakeSetup make_satake_setup(const DatumAutomorphism& a) {
  SatakeSetup s;
  s.g_datum = a.base;
  s.sigma = a;
  s.ell = a.ell;
  FixedDualDatum fd = satake_fixed_dual_datum(a);
  s.h_datum = fd.datum;
  s.embedding = fd.embedding;
  // invariant: N lands in the fixed sublattice and N o sigma = N
  Mat n = s.n_map();
  if (!(n * a.matrix == n))
    throw internal_error("satake setup: N not sigma-invariant");
  for (int j = 0; j < n.cols(); ++j)
    if (!in_lattice(s.embedding, n.col(j)))
      throw internal_error("satake setup: N image outside fixed sublattice");
  return s;
}

inline bool is_sigma_invariant(const CharacterElement& f,
                               const DatumAutomorphism& a) {
  for (const auto& [w, c] : f.support)
    if (f.coeff(a.matrix * w) != c) return false;
  return true;
}

// Br: keep the sigma-fixed terms, reindexed to the fixed sublattice. An
// algebra homomorphism in characteristic l only; other rings are accepted
// for the negative control.
inline CharacterElement brauer_restrict(const CharacterElement& f,
                                        const SatakeSetup& s) {
  if (f.rank != s.g_datum.rank) throw input_error("brauer_restrict: rank mismatch");
  if (!is_sigma_invariant(f, s.sigma))
    throw input_error("brauer_restrict: element is not sigma-invariant");
  CharacterElement out = char_zero(s.h_datum.rank, f.ring);
  out.frob_twist = f.frob_twist;
  for (const auto& [w, c] : f.support) {
    if (!(s.sigma.matrix * w == w)) continue;
    auto coord = solve_integer(s.embedding, w);
    if (!coord)
      throw internal_error("brauer_restrict: fixed weight outside sublattice");
    out.support[*coord] += c;
  }
  out.normalize();
  return out;
}

struct TateDiagonalClass {
  CharacterElement norm;   // Nm(f), a sigma-invariant element
  CharacterElement cls;    // its class in T^0: the sigma-fixed terms
};

// Nm(f) = f * sigma(f) * ... * sigma^{l-1}(f); the class in T^0 of the
// group algebra discards the free-orbit part (which is in the image of N).
inline TateDiagonalClass tate_diagonal(const CharacterElement& f,
                                       const DatumAutomorphism& a) {
  if (f.ring.modular() && f.ring.ell != a.ell)
    throw input_error("tate_diagonal: ring and automorphism ell differ");
  TateDiagonalClass t;
  t.norm = norm_character(f, a);
  t.norm.frob_twist = f.frob_twist + 1;  // Nm lands in the Frobenius twist
  t.cls = char_zero(f.rank, f.ring);
  t.cls.frob_twist = t.norm.frob_twist;
  for (const auto& [w, c] : t.norm.support)
    if (a.matrix * w == w) t.cls.support[w] = c;
  t.cls.normalize();
  return t;
}

// Nm^(1/l) = Frob^{-1} o Nm; over F_l the values coincide with the Tate
// diagonal and only the formal twist tag changes.
inline TateDiagonalClass linearized_norm(const CharacterElement& f,
                                         const DatumAutomorphism& a) {
  TateDiagonalClass t = tate_diagonal(f, a);
  t.norm.frob_twist -= 1;
  t.cls.frob_twist -= 1;
  return t;
}

// br = Br o Nm^(1/l).
inline CharacterElement normalized_brauer(const CharacterElement& f,
                                          const SatakeSetup& s) {
  if (!f.ring.modular() || f.ring.ell != s.ell)
    throw input_error("normalized_brauer: element must be over F_l");
  TateDiagonalClass nm = linearized_norm(f, s.sigma);
  CharacterElement out = brauer_restrict(nm.cls, s);
  return out;
}

// Independent route: br(sum a_lambda e^lambda) = sum a_lambda e^{N lambda}.
inline CharacterElement brauer_closed_form(const CharacterElement& f,
                                           const SatakeSetup& s) {
  Mat nh = s.n_map_h();
  CharacterElement out = char_zero(s.h_datum.rank, f.ring);
  out.frob_twist = f.frob_twist;
  for (const auto& [w, c] : f.support) out.support[nh * w] += c;
  out.normalize();
  return out;
}

// ---------------------------------------------------------------------------
// Matrix of br in Weyl-character bases.

struct SatakeMatrix {
  std::vector<Vec> col_weights;  // dominant weights of g_datum (height order)
  std::vector<Vec> row_weights;  // dominant weights of h_datum
  Mat entries;                   // entries in [0, l)
  std::vector<bool> column_lifts;      // char-0 liftability diagnostic
  std::vector<std::vector<i64>> lift_coeffs;  // Z-coefficients per column
};

namespace detail {

inline std::vector<Vec> dominant_weights_up_to(const RootDatum& d, i64 bound) {
  std::vector<Vec> out;
  Vec cur(d.rank, -bound);
  while (true) {
    if (d.dominant_weight(cur) && weight_height(d, cur) <= bound)
      out.push_back(cur);
    int i = 0;
    for (; i < d.rank; ++i) {
      if (cur[i] < bound) {
        ++cur[i];
        break;
      }
      cur[i] = -bound;
    }
    if (i == d.rank) break;
  }
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
    i64 ha = weight_height(d, a), hb = weight_height(d, b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

}  // namespace detail

inline SatakeMatrix satake_matrix(const SatakeSetup& s, i64 weight_bound) {
  i64 bg = bad_prime_bound(s.g_datum), bh = bad_prime_bound(s.h_datum);
  if (s.ell <= std::max(bg, bh))
    throw hypothesis_error(
        "satake_matrix: requires ell > max bad-prime bound (excluded-primes "
        "table), here ell = " + std::to_string(s.ell) + " <= " +
        std::to_string(std::max(bg, bh)));
  if (s.g_datum.rank > 4)
    throw input_error("satake_matrix: rank too large for enumeration");

  SatakeMatrix m;
  m.col_weights = detail::dominant_weights_up_to(s.g_datum, weight_bound);
  const i64 char_bound = 4 * weight_bound * s.ell + kDefaultWeightBound;

  CharRing fl{s.ell}, z{0};
  std::vector<std::vector<DecompositionTerm>> cols, lift_cols;
  std::set<Vec> rows_seen;
  for (const Vec& mu : m.col_weights) {
    CharacterElement chi = weyl_character(s.g_datum, mu, fl, weight_bound);
    CharacterElement br = normalized_brauer(chi, s);
    {
      CharacterElement br2 = brauer_closed_form(chi, s);
      br2.frob_twist = br.frob_twist;
      if (!(br2 == br))
        throw internal_error("satake_matrix: closed form disagrees with br");
    }
    if (!is_weyl_invariant(s.h_datum, br))
      throw internal_error("satake_matrix: br output not Weyl-invariant");
    cols.push_back(decompose(s.h_datum, br, char_bound));
    // characteristic-zero lift diagnostic along the closed form
    CharacterElement lift = weyl_character(s.g_datum, mu, z, weight_bound);
    lift_cols.push_back(decompose(s.h_datum, brauer_closed_form(lift, s),
                                  char_bound));
    for (const auto& t : cols.back()) rows_seen.insert(t.weight);
    for (const auto& t : lift_cols.back()) rows_seen.insert(t.weight);
  }
  m.row_weights.assign(rows_seen.begin(), rows_seen.end());
  std::sort(m.row_weights.begin(), m.row_weights.end(),
            [&](const Vec& a, const Vec& b) {
              i64 ha = weight_height(s.h_datum, a), hb = weight_height(s.h_datum, b);
              if (ha != hb) return ha < hb;
              return a < b;
            });
  std::map<Vec, int> row_of;
  for (size_t i = 0; i < m.row_weights.size(); ++i)
    row_of[m.row_weights[i]] = static_cast<int>(i);
  m.entries = Mat(static_cast<int>(m.row_weights.size()),
                  static_cast<int>(m.col_weights.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    for (const auto& t : cols[j])
      m.entries(row_of.at(t.weight), static_cast<int>(j)) =
          mod_norm(t.coeff, s.ell);
    std::vector<i64> coeffs(m.row_weights.size(), 0);
    bool nonneg = true;
    for (const auto& t : lift_cols[j]) {
      coeffs[row_of.at(t.weight)] = t.coeff;
      if (t.coeff < 0) nonneg = false;
    }
    m.lift_coeffs.push_back(coeffs);
    m.column_lifts.push_back(nonneg);
  }
  return m;
}

struct LiftabilityReport {
  std::vector<Vec> col_weights;
  std::vector<bool> lifts;
  bool all_lift = true;
};

inline LiftabilityReport char_zero_liftability(const SatakeSetup& s,
                                               i64 weight_bound) {
  SatakeMatrix m = satake_matrix(s, weight_bound);
  LiftabilityReport r;
  r.col_weights = m.col_weights;
  r.lifts = m.column_lifts;
  for (bool b : m.column_lifts)
    if (!b) r.all_lift = false;
  return r;
}

}  // namespace modsat
