#pragma once

// Affine-Grassmannian stratum combinatorics: Iwahori orbit dimensions by
// affine-root counting, sigma-fixed strata computed in the fixed datum,
// pariversities, the Weyl/Frobenius fixed-set multiset for Tate cohomology
// of deep-level Deligne-Lusztig induction, and the finite coset
// fixed-point comparison for permutation groups.

#include <functional>

#include "modsat/dualhom.hpp"

namespace modsat {

// dim of the Iwahori orbit through t^lambda: the number of affine roots
// (alpha, m) with delta_alpha <= m < <alpha, lambda>, where delta is 0 on
// one chamber's roots and 1 on the other's. For dominant lambda this
// equals <lambda, 2rho>.
inline i64 iwahori_orbit_dimension(const RootDatum& d, const Vec& lambda) {
  if (static_cast<int>(lambda.size()) != d.rank)
    throw input_error("iwahori_orbit_dimension: rank mismatch");
  i64 dim = 0;
  for (const RootPair& p : d.roots) {
    i64 k = dot(p.root, lambda);
    i64 delta = p.positive ? 0 : 1;
    dim += std::max<i64>(0, k - delta);
  }
  return dim;
}

struct FixedStratum {
  bool empty = true;
  Vec h_lambda;   // coweight of the fixed datum
  i64 dim = 0;
};

// Fixed points of sigma on the stratum of lambda: empty unless
// sigma(lambda) = lambda, in which case the fixed stratum is the H-stratum
// of lambda viewed in X_*(T_H) = X_*(T)^sigma.
inline FixedStratum fixed_stratum(const DatumAutomorphism& a,
                                  const Vec& lambda) {
  FixedStratum f;
  Mat mc = a.matrix_cochar();
  if (!(mc * lambda == lambda)) return f;
  auto coord = solve_integer(a.cochar_embedding, lambda);
  if (!coord)
    throw internal_error("fixed_stratum: fixed coweight outside embedding");
  f.empty = false;
  f.h_lambda = *coord;
  f.dim = iwahori_orbit_dimension(a.fixed, f.h_lambda);
  return f;
}

inline i64 pariversity(const RootDatum& d, const Vec& lambda) {
  return ((dot(d.two_rho, lambda) % 2) + 2) % 2;
}

inline i64 relative_pariversity(const DatumAutomorphism& a, const Vec& lambda) {
  FixedStratum f = fixed_stratum(a, lambda);
  if (f.empty)
    throw input_error("relative_pariversity: lambda is not sigma-fixed");
  i64 pg = pariversity(a.base, lambda);
  i64 ph = pariversity(a.fixed, f.h_lambda);
  return ((pg - ph) % 2 + 2) % 2;
}

// ---------------------------------------------------------------------------
// Deligne-Lusztig Tate multiset: T^j(R) = (+)_{v in W_x(T)^F} theta^v,
// independent of j. W_x(T) is given by generating matrices inside the
// finite Weyl group; F acts by v -> w vartheta(v) w^{-1}.

struct DlTateResult {
  std::vector<TorusCharacter> multiset;  // sorted; same for j = 0 and 1
  i64 fixed_count = 0;
  i64 subgroup_order = 0;
};

inline DlTateResult dl_tate_multiset(const std::vector<Mat>& w_gens,
                                     const Mat& twist_w,
                                     const Mat& vartheta,
                                     const TorusCharacter& theta,
                                     size_t cap = 100000) {
  if (w_gens.empty() && twist_w.rows() == 0)
    throw input_error("dl_tate_multiset: empty input");
  int n = twist_w.rows();
  // generate the subgroup
  std::map<std::vector<i64>, Mat> elems;
  auto key = [&](const Mat& m) { return WeylGroup::key(m); };
  std::vector<Mat> queue{Mat::identity(n)};
  elems[key(queue[0])] = queue[0];
  while (!queue.empty()) {
    Mat cur = queue.back();
    queue.pop_back();
    for (const Mat& g : w_gens) {
      Mat nxt = g * cur;
      auto k = key(nxt);
      if (!elems.count(k)) {
        elems[k] = nxt;
        queue.push_back(nxt);
        if (elems.size() > cap)
          throw input_error("dl_tate_multiset: subgroup size bound exceeded");
      }
    }
  }
  Mat winv(n, n);
  for (int j = 0; j < n; ++j) {
    Vec e(n, 0);
    e[j] = 1;
    auto sol = solve_integer(twist_w, e);
    if (!sol) throw input_error("dl_tate_multiset: twist not invertible");
    winv.set_col(j, *sol);
  }
  Mat thinv(n, n);
  for (int j = 0; j < n; ++j) {
    Vec e(n, 0);
    e[j] = 1;
    auto sol = solve_integer(vartheta, e);
    if (!sol) throw input_error("dl_tate_multiset: vartheta not invertible");
    thinv.set_col(j, *sol);
  }

  DlTateResult res;
  res.subgroup_order = static_cast<i64>(elems.size());
  for (const auto& [k, v] : elems) {
    Mat fv = twist_w * (vartheta * v * thinv) * winv;
    if (fv == v) {
      ++res.fixed_count;
      // theta^v: transport theta along the transpose (cochar action)
      res.multiset.push_back(transport(theta, transpose(v)));
    }
  }
  std::sort(res.multiset.begin(), res.multiset.end(),
            [](const TorusCharacter& a, const TorusCharacter& b) {
              for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
                if (a[i] < b[i]) return true;
                if (b[i] < a[i]) return false;
              }
              return a.size() < b.size();
            });
  return res;
}

// ---------------------------------------------------------------------------
// Finite permutation groups and the coset fixed-point comparison.

using Perm = std::vector<int>;

inline Perm perm_compose(const Perm& a, const Perm& b) {
  // (a o b)(i) = a(b(i))
  Perm c(b.size());
  for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline Perm perm_inverse(const Perm& a) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

struct PermGroup {
  int degree = 0;
  std::vector<Perm> gens;
  std::vector<Perm> elements;
  std::map<Perm, int> index_of;
  std::vector<std::vector<int>> words;  // generator words

  static PermGroup generate(int degree, std::vector<Perm> gens,
                            size_t cap = 100000) {
    PermGroup g;
    g.degree = degree;
    g.gens = std::move(gens);
    for (const Perm& p : g.gens)
      if (static_cast<int>(p.size()) != degree)
        throw input_error("permutation degree mismatch");
    Perm id = perm_identity(degree);
    g.elements.push_back(id);
    g.words.push_back({});
    g.index_of[id] = 0;
    size_t head = 0;
    while (head < g.elements.size()) {
      Perm cur = g.elements[head];
      std::vector<int> word = g.words[head];
      ++head;
      for (size_t i = 0; i < g.gens.size(); ++i) {
        Perm nxt = perm_compose(g.gens[i], cur);
        if (g.index_of.count(nxt)) continue;
        g.index_of[nxt] = static_cast<int>(g.elements.size());
        g.elements.push_back(nxt);
        std::vector<int> w = word;
        w.insert(w.begin(), static_cast<int>(i));
        g.words.push_back(w);
        if (g.elements.size() > cap)
          throw input_error("permutation group size cap exceeded");
      }
    }
    return g;
  }
  size_t order() const { return elements.size(); }
  bool contains(const Perm& p) const { return index_of.count(p) != 0; }
};

// An automorphism of gamma given by images of its generators; extended
// along generator words and checked to be a well-defined homomorphism.
inline std::vector<int> automorphism_table(const PermGroup& gamma,
                                           const std::vector<Perm>& gen_images) {
  if (gen_images.size() != gamma.gens.size())
    throw input_error("automorphism: one image per generator required");
  std::vector<int> table(gamma.order(), -1);
  std::vector<Perm> img(gamma.order());
  for (size_t i = 0; i < gamma.order(); ++i) {
    Perm m = perm_identity(gamma.degree);
    for (int g : gamma.words[i]) m = perm_compose(m, gen_images[g]);
    auto it = gamma.index_of.find(m);
    if (it == gamma.index_of.end())
      throw input_error("automorphism: image leaves the group");
    table[i] = it->second;
    img[i] = m;
  }
  // well-definedness: sigma(xy) = sigma(x) sigma(y)
  for (size_t i = 0; i < gamma.order(); ++i)
    for (size_t j = 0; j < gamma.order(); ++j) {
      Perm xy = perm_compose(gamma.elements[i], gamma.elements[j]);
      Perm sxy = perm_compose(img[i], img[j]);
      if (img[gamma.index_of.at(xy)] != sxy)
        throw input_error("automorphism: not a homomorphism");
    }
  return table;
}

struct CosetFixedReport {
  i64 coset_fixed = 0;       // |(Gamma/K)^sigma|
  i64 fixed_cosets = 0;      // |Gamma^sigma / K^sigma|
  bool bijective = false;
  bool hypothesis = false;   // gcd(|K|, ell) == 1
  i64 gamma_order = 0, k_order = 0;
};

inline CosetFixedReport coset_fixed_points(const PermGroup& gamma,
                                           const std::vector<Perm>& k_gens,
                                           const std::vector<Perm>& sigma_images,
                                           i64 ell) {
  if (!is_prime(ell)) throw input_error("coset_fixed_points: ell must be prime");
  std::vector<int> sigma = automorphism_table(gamma, sigma_images);
  // sigma^ell = id
  {
    std::vector<int> pw(gamma.order());
    for (size_t i = 0; i < gamma.order(); ++i) pw[i] = static_cast<int>(i);
    for (i64 e = 0; e < ell; ++e)
      for (size_t i = 0; i < gamma.order(); ++i) pw[i] = sigma[pw[i]];
    // pw = sigma^ell applied to identity table
    std::vector<int> check(gamma.order());
    for (size_t i = 0; i < gamma.order(); ++i) check[i] = static_cast<int>(i);
    for (i64 e = 0; e < ell; ++e)
      for (size_t i = 0; i < gamma.order(); ++i) check[i] = sigma[check[i]];
    for (size_t i = 0; i < gamma.order(); ++i)
      if (check[i] != static_cast<int>(i))
        throw input_error("coset_fixed_points: sigma^ell != identity");
  }
  PermGroup k = PermGroup::generate(gamma.degree, k_gens);
  for (const Perm& p : k.elements)
    if (!gamma.contains(p))
      throw input_error("coset_fixed_points: K not inside Gamma");
  // sigma-stability of K
  for (const Perm& p : k.elements)
    if (!k.contains(gamma.elements[sigma[gamma.index_of.at(p)]]))
      throw input_error("coset_fixed_points: K not sigma-stable");

  CosetFixedReport rep;
  rep.gamma_order = static_cast<i64>(gamma.order());
  rep.k_order = static_cast<i64>(k.order());
  rep.hypothesis = (rep.k_order % ell) != 0;

  // left cosets gK; sigma(gK) = sigma(g)K
  std::map<Perm, int> coset_of;  // canonical representative: min element
  std::vector<std::vector<int>> cosets;
  for (size_t i = 0; i < gamma.order(); ++i) {
    if (coset_of.count(gamma.elements[i])) continue;
    std::vector<int> members;
    Perm rep_min = gamma.elements[i];
    for (const Perm& kk : k.elements) {
      Perm gk = perm_compose(gamma.elements[i], kk);
      members.push_back(gamma.index_of.at(gk));
      if (gk < rep_min) rep_min = gk;
    }
    int cid = static_cast<int>(cosets.size());
    for (int midx : members) coset_of[gamma.elements[midx]] = cid;
    cosets.push_back(members);
  }
  for (size_t c = 0; c < cosets.size(); ++c) {
    int g = cosets[c][0];
    if (coset_of.at(gamma.elements[sigma[g]]) == static_cast<int>(c))
      ++rep.coset_fixed;
  }
  // |Gamma^sigma| / |K^sigma|
  i64 gfix = 0, kfix = 0;
  for (size_t i = 0; i < gamma.order(); ++i)
    if (sigma[i] == static_cast<int>(i)) ++gfix;
  for (const Perm& p : k.elements)
    if (sigma[gamma.index_of.at(p)] == gamma.index_of.at(p)) ++kfix;
  if (kfix == 0 || gfix % kfix != 0)
    throw internal_error("coset_fixed_points: K^sigma does not divide");
  rep.fixed_cosets = gfix / kfix;
  rep.bijective = rep.fixed_cosets == rep.coset_fixed;
  return rep;
}

}  // namespace modsat
