#pragma once

// Based root data over concrete integer lattices, their duals, bad-prime
// bounds, Weyl groups, and order-l automorphisms (inner torsion, pinned
// diagram folds, block-cyclic shifts) together with the fixed root datum
// H = G^sigma and the lattice embeddings relating X(H) to X(G)^sigma.

#include <map>
#include <set>
#include <sstream>

#include "modsat/linalg.hpp"

namespace modsat {

enum class CartanSeries { A, B, C, D, E, F, G, Torus };

struct CartanLabel {
  CartanSeries series = CartanSeries::Torus;
  int rank = 0;
  std::string str() const {
    static const char* names = "ABCDEFG";
    std::ostringstream os;
    if (series == CartanSeries::Torus)
      os << "T" << rank;
    else
      os << names[static_cast<int>(series)] << rank;
    return os.str();
  }
};

inline CartanLabel parse_cartan_label(const std::string& s) {
  if (s.empty()) throw input_error("empty Cartan label");
  CartanLabel l;
  switch (s[0]) {
    case 'A': l.series = CartanSeries::A; break;
    case 'B': l.series = CartanSeries::B; break;
    case 'C': l.series = CartanSeries::C; break;
    case 'D': l.series = CartanSeries::D; break;
    case 'E': l.series = CartanSeries::E; break;
    case 'F': l.series = CartanSeries::F; break;
    case 'G': l.series = CartanSeries::G; break;
    case 'T': l.series = CartanSeries::Torus; break;
    default: throw input_error("unknown Cartan series in '" + s + "'");
  }
  try {
    l.rank = std::stoi(s.substr(1));
  } catch (...) {
    throw input_error("bad rank in Cartan label '" + s + "'");
  }
  return l;
}

inline bool admissible_rank(CartanLabel l) {
  switch (l.series) {
    case CartanSeries::A: return l.rank >= 1;
    case CartanSeries::B: return l.rank >= 2;
    case CartanSeries::C: return l.rank >= 2;
    case CartanSeries::D: return l.rank >= 3;
    case CartanSeries::E: return l.rank >= 6 && l.rank <= 8;
    case CartanSeries::F: return l.rank == 4;
    case CartanSeries::G: return l.rank == 2;
    case CartanSeries::Torus: return l.rank >= 0;
  }
  return false;
}

// Cartan matrix with entries a[i][j] = <alpha_j, alpha_i^vee>.
inline Mat cartan_matrix(CartanLabel l) {
  if (!admissible_rank(l) || l.series == CartanSeries::Torus)
    throw input_error("no Cartan matrix for label " + l.str());
  const int n = l.rank;
  Mat a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) {
      a(i, i + 1) = -1;
      a(i + 1, i) = -1;
    }
  };
  switch (l.series) {
    case CartanSeries::A:
      chain(n);
      break;
    case CartanSeries::B:
      chain(n);
      a(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case CartanSeries::C:
      chain(n);
      a(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case CartanSeries::D:
      chain(n - 1);
      a(n - 3, n - 1) = -1;
      a(n - 1, n - 3) = -1;
      break;
    case CartanSeries::E:
      // Bourbaki: chain 1-3-4-5-...-n, node 2 attached to 4.
      a(0, 2) = a(2, 0) = -1;
      a(1, 3) = a(3, 1) = -1;
      for (int i = 2; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = -1;
      break;
    case CartanSeries::F:
      chain(4);
      a(1, 2) = -2;  // alpha_3 short
      a(2, 1) = -1;
      break;
    case CartanSeries::G:
      a(0, 1) = -1;
      a(1, 0) = -3;  // alpha_1 short
      break;
    default:
      break;
  }
  return a;
}

enum class Isogeny { SimplyConnected, Adjoint, General };

inline std::string isogeny_name(Isogeny i) {
  switch (i) {
    case Isogeny::SimplyConnected: return "sc";
    case Isogeny::Adjoint: return "adjoint";
    default: return "general";
  }
}

struct RootPair {
  Vec root;           // in the character-side lattice Z^rank
  Vec coroot;         // in the dual lattice
  bool positive = false;
  Vec simple_coords;  // root as an integer combination of simple roots
};

class RootDatum {
 public:
  int rank = 0;
  Isogeny isogeny = Isogeny::General;
  std::vector<Vec> simple_roots;
  std::vector<Vec> simple_coroots;
  std::vector<RootPair> roots;
  Vec two_rho;         // sum of positive roots
  Vec two_rho_cochar;  // sum of positive coroots

  int n_roots() const { return static_cast<int>(roots.size()); }
  int n_simple() const { return static_cast<int>(simple_roots.size()); }
  bool is_torus() const { return roots.empty(); }
  bool semisimple() const;

  i64 pair(const Vec& chr, const Vec& cochr) const { return dot(chr, cochr); }

  int root_index(const Vec& r) const {
    for (int i = 0; i < n_roots(); ++i)
      if (roots[i].root == r) return i;
    return -1;
  }

  Mat simple_root_matrix() const { return Mat::from_cols(simple_roots); }
  Mat simple_coroot_matrix() const { return Mat::from_cols(simple_coroots); }

  // Reflection in the i-th simple root, acting on the character lattice.
  Mat simple_reflection(int i) const {
    Mat m = Mat::identity(rank);
    for (int c = 0; c < rank; ++c) {
      Vec e(rank, 0);
      e[c] = 1;
      i64 k = dot(e, simple_coroots[i]);
      for (int r = 0; r < rank; ++r) m(r, c) = (r == c ? 1 : 0) - k * simple_roots[i][r];
    }
    return m;
  }
  // Dual reflection on the co-lattice.
  Mat simple_reflection_cochar(int i) const {
    Mat m = Mat::identity(rank);
    for (int c = 0; c < rank; ++c) {
      Vec e(rank, 0);
      e[c] = 1;
      i64 k = dot(simple_roots[i], e);
      for (int r = 0; r < rank; ++r)
        m(r, c) = (r == c ? 1 : 0) - k * simple_coroots[i][r];
    }
    return m;
  }

  bool dominant_weight(const Vec& lam) const {
    for (const Vec& c : simple_coroots)
      if (dot(lam, c) < 0) return false;
    return true;
  }
  bool dominant_coweight(const Vec& lam) const {
    for (const Vec& r : simple_roots)
      if (dot(r, lam) < 0) return false;
    return true;
  }

  // Reflection-closure height bound used when validating finiteness.
  static constexpr int kClosureCap = 100000;
};

namespace detail {

// Simple-root coordinates of a vector, if it lies in the root lattice.
inline std::optional<Vec> simple_coords_of(const std::vector<Vec>& simples,
                                           const Vec& v) {
  if (simples.empty()) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  Mat s = Mat::from_cols(simples);
  return solve_integer(s, v);
}

}  // namespace detail

// Build a root datum from its simple roots/coroots by reflection closure.
inline RootDatum make_root_datum(int rank, std::vector<Vec> simple_roots,
                                 std::vector<Vec> simple_coroots,
                                 Isogeny iso) {
  RootDatum d;
  d.rank = rank;
  d.isogeny = iso;
  d.simple_roots = std::move(simple_roots);
  d.simple_coroots = std::move(simple_coroots);
  if (d.simple_roots.size() != d.simple_coroots.size())
    throw input_error("simple roots/coroots size mismatch");
  for (size_t i = 0; i < d.simple_roots.size(); ++i)
    if (dot(d.simple_roots[i], d.simple_coroots[i]) != 2)
      throw input_error("simple root/coroot pairing is not 2");
  if (!d.simple_roots.empty() &&
      rank_z(Mat::from_cols(d.simple_roots)) != d.n_simple())
    throw input_error("simple roots are linearly dependent");

  std::map<Vec, int> seen;
  std::vector<RootPair> out;
  std::vector<std::pair<Vec, Vec>> queue;
  for (int i = 0; i < d.n_simple(); ++i)
    queue.emplace_back(d.simple_roots[i], d.simple_coroots[i]);
  size_t head = 0;
  while (head < queue.size()) {
    auto [r, c] = queue[head++];
    if (seen.count(r)) continue;
    seen[r] = static_cast<int>(out.size());
    RootPair p;
    p.root = r;
    p.coroot = c;
    out.push_back(p);
    if (out.size() > RootDatum::kClosureCap)
      throw input_error("root closure does not terminate: infinite system");
    for (int i = 0; i < d.n_simple(); ++i) {
      i64 k = dot(r, d.simple_coroots[i]);
      Vec r2 = vsub(r, vscale(k, d.simple_roots[i]));
      i64 k2 = dot(d.simple_roots[i], c);
      Vec c2 = vsub(c, vscale(k2, d.simple_coroots[i]));
      if (!seen.count(r2)) queue.emplace_back(r2, c2);
      Vec rn = vneg(r), cn = vneg(c);
      if (!seen.count(rn)) queue.emplace_back(rn, cn);
    }
  }
  for (RootPair& p : out) {
    auto coords = detail::simple_coords_of(d.simple_roots, p.root);
    if (!coords)
      throw input_error("root not in the lattice spanned by simple roots");
    bool pos = true, neg = true;
    for (i64 x : *coords) {
      if (x < 0) pos = false;
      if (x > 0) neg = false;
    }
    if (pos == neg) throw input_error("root with mixed-sign simple coordinates");
    p.positive = pos;
    p.simple_coords = *coords;
  }
  d.roots = std::move(out);
  d.two_rho = Vec(rank, 0);
  d.two_rho_cochar = Vec(rank, 0);
  for (const RootPair& p : d.roots)
    if (p.positive) {
      d.two_rho = vadd(d.two_rho, p.root);
      d.two_rho_cochar = vadd(d.two_rho_cochar, p.coroot);
    }
  return d;
}

inline bool RootDatum::semisimple() const {
  if (roots.empty()) return rank == 0;
  return rank_z(Mat::from_cols(simple_roots)) == rank;
}

// Expected number of roots, used as a construction sanity check.
inline int expected_root_count(CartanLabel l) {
  const int n = l.rank;
  switch (l.series) {
    case CartanSeries::A: return n * (n + 1);
    case CartanSeries::B:
    case CartanSeries::C: return 2 * n * n;
    case CartanSeries::D: return 2 * n * (n - 1);
    case CartanSeries::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case CartanSeries::F: return 48;
    case CartanSeries::G: return 12;
    case CartanSeries::Torus: return 0;
  }
  return 0;
}

inline RootDatum build_root_datum(CartanLabel l, Isogeny iso) {
  if (!admissible_rank(l))
    throw input_error("inadmissible rank for Cartan label " + l.str());
  if (l.series == CartanSeries::Torus) {
    RootDatum d;
    d.rank = l.rank;
    d.isogeny = Isogeny::General;
    d.two_rho = Vec(l.rank, 0);
    d.two_rho_cochar = Vec(l.rank, 0);
    return d;
  }
  Mat a = cartan_matrix(l);
  const int n = l.rank;
  std::vector<Vec> sr, sc;
  if (iso == Isogeny::SimplyConnected) {
    // basis = fundamental weights; alpha_j = column j of the Cartan matrix
    for (int j = 0; j < n; ++j) {
      sr.push_back(a.col(j));
      Vec e(n, 0);
      e[j] = 1;
      sc.push_back(e);
    }
  } else if (iso == Isogeny::Adjoint) {
    // basis = simple roots; alpha_i^vee = row i of the Cartan matrix
    for (int j = 0; j < n; ++j) {
      Vec e(n, 0);
      e[j] = 1;
      sr.push_back(e);
      sc.push_back(a.row(j));
    }
  } else {
    throw input_error("build_root_datum: isogeny must be sc or adjoint");
  }
  RootDatum d = make_root_datum(n, sr, sc, iso);
  if (d.n_roots() != expected_root_count(l))
    throw internal_error("root count mismatch for " + l.str());
  return d;
}

inline RootDatum dual_datum(const RootDatum& d) {
  Isogeny iso = d.isogeny;
  if (iso == Isogeny::SimplyConnected)
    iso = Isogeny::Adjoint;
  else if (iso == Isogeny::Adjoint)
    iso = Isogeny::SimplyConnected;
  if (d.is_torus()) {
    RootDatum t = d;
    return t;
  }
  return make_root_datum(d.rank, d.simple_coroots, d.simple_roots, iso);
}

// ---------------------------------------------------------------------------
// Classification of an (irreducible) simple factor from pairing data.

inline CartanLabel classify_component(const RootDatum& d,
                                      const std::vector<int>& comp) {
  const int m = static_cast<int>(comp.size());
  auto a = [&](int i, int j) {
    return dot(d.simple_roots[comp[j]], d.simple_coroots[comp[i]]);
  };
  if (m == 1) return {CartanSeries::A, 1};

  std::vector<std::vector<int>> adj(m);
  bool triple = false, dbl = false;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      i64 w = a(i, j) * a(j, i);
      if (w != 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        if (w == 3) triple = true;
        if (w == 2) dbl = true;
        if (w > 3) throw input_error("pairing too large: not a finite type");
      }
    }
  if (triple) {
    if (m != 2) throw input_error("triple bond in rank > 2");
    return {CartanSeries::G, 2};
  }
  if (dbl) {
    if (m == 2) return {CartanSeries::B, 2};
    // propagate squared lengths: |a(i,j)| = 2 means alpha_j twice as long
    std::vector<i64> len(m, 0);
    len[0] = 2;
    std::vector<int> st{0};
    while (!st.empty()) {
      int i = st.back();
      st.pop_back();
      for (int j : adj[i]) {
        i64 lj = len[i];
        if (a(i, j) == -2) lj = 2 * len[i];       // alpha_j long
        else if (a(j, i) == -2) lj = len[i] / 2;  // alpha_j short
        if (len[j] == 0) {
          len[j] = lj;
          st.push_back(j);
        }
      }
    }
    i64 mx = *std::max_element(len.begin(), len.end());
    int n_short = 0;
    for (i64 v : len)
      if (v < mx) ++n_short;
    if (m == 4 && n_short == 2) return {CartanSeries::F, 4};
    if (n_short == 1) return {CartanSeries::B, m};
    if (n_short == m - 1) return {CartanSeries::C, m};
    throw input_error("unrecognized multiply-laced diagram");
  }
  // simply laced: path or single branch point
  int branch = -1;
  for (int i = 0; i < m; ++i) {
    if (adj[i].size() > 3) throw input_error("diagram vertex of degree > 3");
    if (adj[i].size() == 3) {
      if (branch >= 0) throw input_error("diagram with two branch points");
      branch = i;
    }
  }
  if (branch < 0) return {CartanSeries::A, m};
  std::vector<int> arms;
  for (int s0 : adj[branch]) {
    int len = 1, prev = branch, cur = s0;
    while (true) {
      int nxt = -1;
      for (int j : adj[cur])
        if (j != prev) nxt = j;
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {CartanSeries::D, m};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return {CartanSeries::E, m};
  throw input_error("unrecognized simply-laced diagram");
}

inline std::vector<std::vector<int>> dynkin_components(const RootDatum& d) {
  const int n = d.n_simple();
  std::vector<int> comp_of(n, -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (comp_of[s] >= 0) continue;
    std::vector<int> comp, st{s};
    comp_of[s] = static_cast<int>(comps.size());
    while (!st.empty()) {
      int i = st.back();
      st.pop_back();
      comp.push_back(i);
      for (int j = 0; j < n; ++j) {
        if (comp_of[j] >= 0) continue;
        if (dot(d.simple_roots[j], d.simple_coroots[i]) != 0) {
          comp_of[j] = comp_of[s];
          st.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  return comps;
}

inline std::vector<CartanLabel> simple_factors(const RootDatum& d) {
  std::vector<CartanLabel> out;
  for (const auto& comp : dynkin_components(d))
    out.push_back(classify_component(d, comp));
  return out;
}

inline i64 bad_prime_of_type(CartanLabel l) {
  switch (l.series) {
    case CartanSeries::A: return 1;
    case CartanSeries::B:
    case CartanSeries::D: return 2;
    case CartanSeries::C: return l.rank;
    case CartanSeries::G:
    case CartanSeries::F: return 3;
    case CartanSeries::E: return l.rank == 6 ? 3 : (l.rank == 7 ? 19 : 31);
    case CartanSeries::Torus: return 1;
  }
  return 1;
}

// Empty supremum convention: a torus has bound 1, so the hypothesis
// "l > bound" excludes no prime.
inline i64 bad_prime_bound(const RootDatum& d) {
  i64 b = 1;
  for (CartanLabel l : simple_factors(d)) b = std::max(b, bad_prime_of_type(l));
  return b;
}

// ---------------------------------------------------------------------------
// Weyl group enumeration (matrices on the character lattice, with words).

struct WeylGroup {
  std::vector<Mat> elements;               // [0] = identity
  std::vector<std::vector<int>> words;     // shortlex-minimal words
  std::map<std::vector<i64>, int> index_of;

  static std::vector<i64> key(const Mat& m) {
    std::vector<i64> k;
    k.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) k.push_back(m(i, j));
    return k;
  }

  int find(const Mat& m) const {
    auto it = index_of.find(key(m));
    return it == index_of.end() ? -1 : it->second;
  }
  size_t order() const { return elements.size(); }

  static WeylGroup generate(const RootDatum& d, size_t cap = 2000000) {
    WeylGroup w;
    std::vector<Mat> gens;
    for (int i = 0; i < d.n_simple(); ++i) gens.push_back(d.simple_reflection(i));
    Mat id = Mat::identity(d.rank);
    w.elements.push_back(id);
    w.words.push_back({});
    w.index_of[key(id)] = 0;
    size_t head = 0;
    while (head < w.elements.size()) {
      Mat cur = w.elements[head];
      std::vector<int> word = w.words[head];
      ++head;
      for (size_t g = 0; g < gens.size(); ++g) {
        Mat nxt = gens[g] * cur;
        auto k = key(nxt);
        if (w.index_of.count(k)) continue;
        w.index_of[k] = static_cast<int>(w.elements.size());
        w.elements.push_back(nxt);
        std::vector<int> nw = word;
        nw.insert(nw.begin(), static_cast<int>(g));
        w.words.push_back(nw);
        if (w.elements.size() > cap)
          throw input_error("Weyl group enumeration exceeds cap");
      }
    }
    return w;
  }
};

// ---------------------------------------------------------------------------
// Order-l automorphisms.

enum class AutoKind { InnerTorsion, Pinned, BlockCyclic, General };

inline std::string auto_kind_name(AutoKind k) {
  switch (k) {
    case AutoKind::InnerTorsion: return "inner_torsion";
    case AutoKind::Pinned: return "pinned";
    case AutoKind::BlockCyclic: return "block_cyclic";
    default: return "general";
  }
}

struct DatumAutomorphism {
  RootDatum base;
  Mat matrix;  // action on the character lattice
  i64 ell = 2;
  AutoKind kind = AutoKind::General;
  Vec t;                  // inner torsion: values on the simple roots, mod ell
  std::vector<int> perm;  // pinned: permutation of the simple roots
  RootDatum fixed;
  Mat cochar_embedding;  // base.rank x fixed.rank, image = fixed co-sublattice
  Mat char_projection;   // fixed.rank x base.rank (transpose of the above)

  Mat matrix_cochar() const {
    // inverse transpose; matrix^ell = 1, so the inverse is matrix^(ell-1)
    return transpose(mat_pow(matrix, ell - 1));
  }
  Vec apply_char(const Vec& v) const { return matrix * v; }
  Vec apply_cochar(const Vec& v) const { return matrix_cochar() * v; }

  // Value of the inner-torsion functional on a root, mod ell.
  i64 torsion_value(const RootPair& p) const {
    i64 s = 0;
    for (size_t i = 0; i < t.size(); ++i) s += t[i] * p.simple_coords[i];
    return mod_norm(s, ell);
  }
};

inline DatumAutomorphism inner_torsion_automorphism(const RootDatum& d,
                                                    const Vec& t, i64 ell) {
  if (!is_prime(ell)) throw input_error("inner torsion: ell must be prime");
  if (static_cast<int>(t.size()) != d.n_simple())
    throw input_error("inner torsion: t must give one value per simple root");
  DatumAutomorphism a;
  a.base = d;
  a.matrix = Mat::identity(d.rank);
  a.ell = ell;
  a.kind = AutoKind::InnerTorsion;
  a.t = t;
  for (i64& x : a.t) x = mod_norm(x, ell);

  // Fixed subsystem: roots on which t vanishes mod ell.
  std::vector<int> keep;
  for (int i = 0; i < d.n_roots(); ++i)
    if (a.torsion_value(d.roots[i]) == 0) keep.push_back(i);
  // simple system = positive kept roots that are not sums of two kept positives
  std::set<Vec> kept_pos;
  for (int i : keep)
    if (d.roots[i].positive) kept_pos.insert(d.roots[i].root);
  std::vector<Vec> sr, sc;
  for (int i : keep) {
    const RootPair& p = d.roots[i];
    if (!p.positive) continue;
    bool decomposable = false;
    for (const Vec& b : kept_pos) {
      if (b == p.root) continue;
      if (kept_pos.count(vsub(p.root, b))) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) {
      sr.push_back(p.root);
      sc.push_back(p.coroot);
    }
  }
  a.fixed = make_root_datum(d.rank, sr, sc, Isogeny::General);
  if (a.fixed.n_roots() != static_cast<int>(keep.size()))
    throw internal_error("inner torsion: fixed subsystem closure mismatch");
  a.cochar_embedding = Mat::identity(d.rank);
  a.char_projection = Mat::identity(d.rank);
  return a;
}

namespace detail {

inline std::vector<std::vector<int>> perm_orbits(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> o;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      o.push_back(j);
      j = perm[j];
    }
    orbits.push_back(o);
  }
  return orbits;
}

inline int perm_order(const std::vector<int>& perm) {
  int ord = 1;
  for (const auto& o : perm_orbits(perm))
    ord = static_cast<int>(std::lcm<i64>(ord, static_cast<i64>(o.size())));
  return ord;
}

}  // namespace detail

// Pinned diagram automorphism of a simply connected datum. The fixed datum
// is built from the simple-root orbits: an orbit of pairwise orthogonal
// roots folds to the coroot sum, and the adjacent middle pair of A_2n folds
// with a doubled coroot.
inline DatumAutomorphism pinned_automorphism(const RootDatum& d,
                                             const std::vector<int>& perm) {
  const int n = d.n_simple();
  if (static_cast<int>(perm.size()) != n)
    throw input_error("pinned: permutation size must match simple roots");
  if (d.isogeny != Isogeny::SimplyConnected || d.rank != n)
    throw input_error("pinned: datum must be simply connected semisimple");
  {
    std::vector<bool> hit(n, false);
    for (int p : perm) {
      if (p < 0 || p >= n || hit[p]) throw input_error("pinned: not a permutation");
      hit[p] = true;
    }
  }
  i64 ell = detail::perm_order(perm);
  if (!is_prime(ell))
    throw input_error("unsupported_automorphism: permutation order " +
                      std::to_string(ell) + " is not prime");
  // diagram automorphism check
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (dot(d.simple_roots[j], d.simple_coroots[i]) !=
          dot(d.simple_roots[perm[j]], d.simple_coroots[perm[i]]))
        throw input_error(
            "unsupported_automorphism: not a diagram automorphism");

  DatumAutomorphism a;
  a.base = d;
  a.ell = ell;
  a.kind = AutoKind::Pinned;
  a.perm = perm;
  // sc datum: character basis = fundamental weights, permuted by perm
  a.matrix = Mat(n, n);
  for (int i = 0; i < n; ++i) a.matrix(perm[i], i) = 1;

  auto orbits = detail::perm_orbits(perm);
  const int r = static_cast<int>(orbits.size());
  std::vector<int> orbit_of(n, -1);
  for (int o = 0; o < r; ++o)
    for (int i : orbits[o]) orbit_of[i] = o;

  // q: Z^n -> Z^r, class map on the character side; E = q^T on cochars
  a.char_projection = Mat(r, n);
  for (int i = 0; i < n; ++i) a.char_projection(orbit_of[i], i) = 1;
  a.cochar_embedding = transpose(a.char_projection);

  std::vector<Vec> sr, sc;
  for (int o = 0; o < r; ++o) {
    const auto& orb = orbits[o];
    bool orthogonal = true;
    for (size_t x = 0; x < orb.size() && orthogonal; ++x)
      for (size_t y = x + 1; y < orb.size() && orthogonal; ++y)
        if (dot(d.simple_roots[orb[x]], d.simple_coroots[orb[y]]) != 0)
          orthogonal = false;
    Vec root = a.char_projection * d.simple_roots[orb[0]];
    Vec coroot(r, 0);
    if (orthogonal) {
      coroot[o] = 1;
    } else if (orb.size() == 2 && ell == 2) {
      coroot[o] = 2;  // A_2n middle pair
    } else {
      throw input_error(
          "unsupported_automorphism: simple-root orbit is neither orthogonal "
          "nor an adjacent pair");
    }
    sr.push_back(root);
    sc.push_back(coroot);
  }
  a.fixed = make_root_datum(r, sr, sc, Isogeny::General);
  return a;
}

// Base = m^ell with the cyclic block shift; fixed subgroup is m diagonally.
inline DatumAutomorphism block_cyclic_automorphism(const RootDatum& m, i64 ell) {
  if (!is_prime(ell)) throw input_error("block cyclic: ell must be prime");
  const int r = m.rank;
  const int n = static_cast<int>(ell) * r;
  std::vector<Vec> sr, sc;
  for (i64 b = 0; b < ell; ++b)
    for (int i = 0; i < m.n_simple(); ++i) {
      Vec rr(n, 0), cc(n, 0);
      for (int k = 0; k < r; ++k) {
        rr[b * r + k] = m.simple_roots[i][k];
        cc[b * r + k] = m.simple_coroots[i][k];
      }
      sr.push_back(rr);
      sc.push_back(cc);
    }
  DatumAutomorphism a;
  a.base = make_root_datum(n, sr, sc, m.isogeny);
  a.ell = ell;
  a.kind = AutoKind::BlockCyclic;
  a.matrix = Mat(n, n);
  for (i64 b = 0; b < ell; ++b)
    for (int k = 0; k < r; ++k) a.matrix(((b + 1) % ell) * r + k, b * r + k) = 1;
  a.fixed = m;
  a.char_projection = Mat(r, n);
  for (i64 b = 0; b < ell; ++b)
    for (int k = 0; k < r; ++k) a.char_projection(k, b * r + k) = 1;
  a.cochar_embedding = transpose(a.char_projection);
  return a;
}

inline DatumAutomorphism general_automorphism(const RootDatum& d, Mat matrix,
                                              i64 ell, RootDatum fixed,
                                              Mat cochar_embedding,
                                              Mat char_projection) {
  if (!is_prime(ell)) throw input_error("general automorphism: ell not prime");
  DatumAutomorphism a;
  a.base = d;
  a.matrix = std::move(matrix);
  a.ell = ell;
  a.kind = AutoKind::General;
  a.fixed = std::move(fixed);
  a.cochar_embedding = std::move(cochar_embedding);
  a.char_projection = std::move(char_projection);
  return a;
}

// ---------------------------------------------------------------------------
// Validation.

struct ValidationItem {
  std::string axiom;
  bool pass = false;
  bool skipped = false;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationItem> items;
  bool all_pass() const {
    return std::all_of(items.begin(), items.end(),
                       [](const ValidationItem& i) { return i.pass || i.skipped; });
  }
  void add(const std::string& ax, bool ok, const std::string& msg = "") {
    items.push_back({ax, ok, false, msg});
  }
  void skip(const std::string& ax, const std::string& msg) {
    items.push_back({ax, false, true, msg});
  }
};

inline ValidationReport validate_datum(const RootDatum& d) {
  ValidationReport rep;
  bool pair2 = true, refl = true;
  for (const RootPair& p : d.roots) {
    if (dot(p.root, p.coroot) != 2) pair2 = false;
    for (int i = 0; i < d.n_simple(); ++i) {
      i64 k = dot(p.root, d.simple_coroots[i]);
      Vec img = vsub(p.root, vscale(k, d.simple_roots[i]));
      if (d.root_index(img) < 0) refl = false;
    }
  }
  rep.add("root_coroot_pairing_two", pair2);
  rep.add("closed_under_simple_reflections", refl);
  bool indep = d.simple_roots.empty() ||
               rank_z(Mat::from_cols(d.simple_roots)) == d.n_simple();
  rep.add("simple_roots_independent", indep);
  bool posdec = true;
  for (const RootPair& p : d.roots)
    if (p.positive)
      for (i64 c : p.simple_coords)
        if (c < 0) posdec = false;
  rep.add("positive_roots_nonnegative_combinations", posdec);
  Vec tr(d.rank, 0);
  for (const RootPair& p : d.roots)
    if (p.positive) tr = vadd(tr, p.root);
  rep.add("two_rho_is_sum_of_positive_roots", tr == d.two_rho);
  return rep;
}

inline ValidationReport validate_fixed_datum(const DatumAutomorphism& a,
                                             size_t weyl_cap = 2000) {
  ValidationReport rep;
  const RootDatum& d = a.base;
  Mat mp = mat_pow(a.matrix, a.ell);
  rep.add("matrix_order_divides_ell", mp.is_identity());
  if (a.kind != AutoKind::InnerTorsion)
    rep.add("matrix_nontrivial", !a.matrix.is_identity());

  bool permutes = true;
  Mat mc = a.matrix_cochar();
  for (const RootPair& p : d.roots) {
    Vec ri = a.matrix * p.root;
    int idx = d.root_index(ri);
    if (idx < 0 || d.roots[idx].coroot != mc * p.coroot) permutes = false;
  }
  rep.add("matrix_permutes_roots_and_coroots", permutes);

  // pairing preservation: <m x, m_* y> = <x, y>  <=>  m_c^T m = 1
  rep.add("pairing_preserved", (transpose(mc) * a.matrix).is_identity());

  // embedding image = sigma-fixed co-sublattice
  Mat fixed_sub = integer_kernel(mc - Mat::identity(d.rank));
  rep.add("embedding_image_is_fixed_sublattice",
          same_lattice(a.cochar_embedding, fixed_sub));

  rep.add("char_projection_adjoint_to_embedding",
          transpose(a.char_projection) == a.cochar_embedding);

  ValidationReport sub = validate_datum(a.fixed);
  for (const ValidationItem& i : sub.items)
    rep.items.push_back({"fixed_datum." + i.axiom, i.pass, i.skipped, i.message});

  bool corestrict = true;
  for (const RootPair& p : a.fixed.roots) {
    Vec ec = a.cochar_embedding * p.coroot;
    if (!is_zero(vsub(mc * ec, ec))) corestrict = false;
  }
  rep.add("fixed_coroots_are_sigma_invariant", corestrict);

  // Weyl embedding: each simple reflection of the fixed datum descends from
  // a sigma-centralizing element of W(base) through the class map q.
  try {
    WeylGroup wb = WeylGroup::generate(d, weyl_cap);
    bool embeds = true;
    for (int i = 0; i < a.fixed.n_simple(); ++i) {
      Mat s = a.fixed.simple_reflection(i);
      bool found = false;
      for (const Mat& w : wb.elements) {
        if (!(w * a.matrix == a.matrix * w)) continue;
        if (s * a.char_projection == a.char_projection * w) {
          found = true;
          break;
        }
      }
      if (!found) embeds = false;
    }
    rep.add("weyl_group_embeds_in_sigma_centralizer", embeds);
  } catch (const input_error&) {
    rep.skip("weyl_group_embeds_in_sigma_centralizer",
             "Weyl group too large to enumerate");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The dual-side fixed datum on the sigma-invariant character sublattice,
// used by the Satake-level Brauer matrix: character lattice X^sigma inside
// X, roots given per simple-root orbit (fixed root -> itself, orthogonal
// orbit -> orbit sum, adjacent pair -> doubled pair sum), coroots obtained
// by pairing against the fixed sublattice basis.
struct FixedDualDatum {
  RootDatum datum;   // lattice Z^r identified with X^sigma
  Mat embedding;     // base.rank x r, image = X^sigma (character side)
};

inline FixedDualDatum satake_fixed_dual_datum(const DatumAutomorphism& a) {
  const RootDatum& d = a.base;
  Mat e = lattice_basis(integer_kernel(a.matrix - Mat::identity(d.rank)));
  const int r = e.cols();

  std::vector<Vec> new_roots;  // ambient vectors in X
  std::vector<Vec> amb_coroots;
  if (a.kind == AutoKind::InnerTorsion) {
    for (int i = 0; i < d.n_simple(); ++i) {
      RootPair p;
      p.root = d.simple_roots[i];
      p.coroot = d.simple_coroots[i];
      p.simple_coords = Vec(d.n_simple(), 0);
      p.simple_coords[i] = 1;
      if (a.torsion_value(p) == 0) {
        new_roots.push_back(p.root);
        amb_coroots.push_back(p.coroot);
      }
    }
    // the surviving simple roots need not be simple for the subsystem; build
    // from the full fixed subsystem instead
    new_roots.clear();
    amb_coroots.clear();
    for (int i = 0; i < a.fixed.n_simple(); ++i) {
      new_roots.push_back(a.fixed.simple_roots[i]);
      amb_coroots.push_back(a.fixed.simple_coroots[i]);
    }
  } else {
    // group the simple roots of d into sigma-orbits
    std::vector<bool> seen(d.n_simple(), false);
    for (int i = 0; i < d.n_simple(); ++i) {
      if (seen[i]) continue;
      std::vector<int> orb;
      Vec cur = d.simple_roots[i];
      while (true) {
        int idx = -1;
        for (int j = 0; j < d.n_simple(); ++j)
          if (d.simple_roots[j] == cur) idx = j;
        if (idx < 0 || seen[idx]) break;
        seen[idx] = true;
        orb.push_back(idx);
        cur = a.matrix * cur;
      }
      bool orthogonal = true;
      for (size_t x = 0; x < orb.size() && orthogonal; ++x)
        for (size_t y = x + 1; y < orb.size() && orthogonal; ++y)
          if (dot(d.simple_roots[orb[x]], d.simple_coroots[orb[y]]) != 0)
            orthogonal = false;
      Vec sum(d.rank, 0), csum(d.rank, 0);
      for (int j : orb) {
        sum = vadd(sum, d.simple_roots[j]);
        csum = vadd(csum, d.simple_coroots[j]);
      }
      if (orthogonal) {
        new_roots.push_back(sum);
        amb_coroots.push_back(d.simple_coroots[orb[0]]);
      } else if (orb.size() == 2) {
        new_roots.push_back(vscale(2, sum));
        amb_coroots.push_back(d.simple_coroots[orb[0]]);
      } else {
        throw input_error("unsupported_automorphism in satake_fixed_dual_datum");
      }
    }
  }

  std::vector<Vec> sr, sc;
  for (size_t k = 0; k < new_roots.size(); ++k) {
    auto coords = solve_integer(e, new_roots[k]);
    if (!coords)
      throw internal_error("fixed-dual root not in the invariant sublattice");
    Vec cv(r, 0);
    for (int j = 0; j < r; ++j) cv[j] = dot(e.col(j), amb_coroots[k]);
    sr.push_back(*coords);
    sc.push_back(cv);
  }
  FixedDualDatum out;
  out.datum = make_root_datum(r, sr, sc, Isogeny::General);
  out.embedding = e;
  return out;
}

}  // namespace modsat
