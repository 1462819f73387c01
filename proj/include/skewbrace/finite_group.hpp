// Finite groups as validated Cayley tables, with automorphism and
// homomorphism enumeration by generator-image backtracking.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/core.hpp"

namespace skewbrace {

/// Group on elements 0..order-1 with identity at index 0.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  std::vector<int> inverse;
  std::vector<int> generators;
  std::vector<int> element_order;

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }
  int identity() const { return 0; }

  bool operator==(const FiniteGroup& o) const {
    return order == o.order && table == o.table;
  }
};

namespace detail {

inline bool is_permutation_row(const std::vector<int>& row, int n) {
  std::vector<char> seen(n, 0);
  for (int v : row) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline std::vector<int> compute_element_orders(const FiniteGroup& g) {
  std::vector<int> ord(g.order, 0);
  for (int a = 0; a < g.order; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = g.mul(x, a);
      ++k;
    }
    ord[a] = k;
  }
  return ord;
}

}  // namespace detail

/// Closure of a subset under the group operation (identity always included).
inline std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> seed) {
  std::vector<char> in(g.order, 0);
  std::vector<int> members{0};
  in[0] = 1;
  for (int s : seed)
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  // Products of members, fixed point.  Inverses follow since the group is finite.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      for (int p : {g.mul(members[i], members[j]), g.mul(members[j], members[i])})
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
    }
  std::sort(members.begin(), members.end());
  return members;
}

/// Greedy generating chain: each element strictly enlarges the generated subgroup.
inline std::vector<int> generating_chain(const FiniteGroup& g) {
  std::vector<int> chain;
  std::vector<int> sub{0};
  while (static_cast<int>(sub.size()) < g.order) {
    int next = -1;
    for (int a = 0; a < g.order; ++a)
      if (!std::binary_search(sub.begin(), sub.end(), a)) {
        next = a;
        break;
      }
    chain.push_back(next);
    std::vector<int> seed = sub;
    seed.push_back(next);
    sub = subgroup_closure(g, seed);
  }
  return chain;
}

/// Validates a Cayley table and returns the group, relabelling so the identity
/// sits at index 0.  Rejections name the first witness element or triple.
inline FiniteGroup validate_group(std::vector<std::vector<int>> table,
                                  std::vector<int> generators = {},
                                  bool allow_relabel = true) {
  const int n = static_cast<int>(table.size());
  if (n == 0) raise("NotLatinSquare", "empty table");
  for (int r = 0; r < n; ++r)
    if (static_cast<int>(table[r].size()) != n)
      raise("NotLatinSquare", "row " + std::to_string(r) + " has wrong length");
  for (int r = 0; r < n; ++r)
    if (!detail::is_permutation_row(table[r], n))
      raise("NotLatinSquare", "row " + std::to_string(r) + " is not a permutation");
  for (int c = 0; c < n; ++c) {
    std::vector<int> col(n);
    for (int r = 0; r < n; ++r) col[r] = table[r][c];
    if (!detail::is_permutation_row(col, n))
      raise("NotLatinSquare", "column " + std::to_string(c) + " is not a permutation");
  }

  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b)
      ok = table[cand][b] == b && table[b][cand] == b;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) raise("NoIdentity", "no two-sided identity element");
  if (e != 0) {
    if (!allow_relabel) raise("NoIdentity", "identity is at index " + std::to_string(e));
    // Swap labels 0 <-> e.
    auto relabel = [&](int x) { return x == 0 ? e : (x == e ? 0 : x); };
    std::vector<std::vector<int>> t2(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        t2[relabel(a)][relabel(b)] = relabel(table[a][b]);
    table = std::move(t2);
    for (int& gch : generators) gch = relabel(gch);
  }

  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    int b = -1;
    for (int x = 0; x < n; ++x)
      if (table[a][x] == 0) {
        b = x;
        break;
      }
    if (b < 0 || table[b][a] != 0)
      raise("NoInverse", "element " + std::to_string(a) + " has no two-sided inverse");
    inverse[a] = b;
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          raise("NotAssociative", "witness triple (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");

  FiniteGroup g;
  g.order = n;
  g.table = std::move(table);
  g.inverse = std::move(inverse);
  if (generators.empty()) {
    g.generators = generating_chain(g);
    if (g.generators.empty()) g.generators = {0};  // trivial group
  } else {
    for (int s : generators)
      if (s < 0 || s >= n) raise("NotLatinSquare", "generator index out of range");
    if (static_cast<int>(subgroup_closure(g, generators).size()) != n)
      raise("GeneratorsDoNotGenerate", "given generators span a proper subgroup");
    g.generators = std::move(generators);
  }
  g.element_order = detail::compute_element_orders(g);
  return g;
}

/// Element-wise automorphism of a table group.
struct Automorphism {
  std::vector<int> img;

  int operator()(int a) const { return img[a]; }
  bool is_identity() const {
    for (int i = 0; i < static_cast<int>(img.size()); ++i)
      if (img[i] != i) return false;
    return true;
  }
  bool operator==(const Automorphism& o) const { return img == o.img; }
  bool operator<(const Automorphism& o) const { return img < o.img; }
};

inline Automorphism identity_automorphism(int n) {
  Automorphism a;
  a.img.resize(n);
  std::iota(a.img.begin(), a.img.end(), 0);
  return a;
}

// compose(f, g) applies g first: (f o g)(x) = f(g(x)).
inline Automorphism compose(const Automorphism& f, const Automorphism& g) {
  Automorphism r;
  r.img.resize(g.img.size());
  for (std::size_t x = 0; x < g.img.size(); ++x) r.img[x] = f.img[g.img[x]];
  return r;
}

inline Automorphism inverse_of(const Automorphism& f) {
  Automorphism r;
  r.img.resize(f.img.size());
  for (std::size_t x = 0; x < f.img.size(); ++x) r.img[f.img[x]] = static_cast<int>(x);
  return r;
}

inline bool preserves_table(const FiniteGroup& g, const Automorphism& f) {
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (f.img[g.mul(a, b)] != g.mul(f.img[a], f.img[b])) return false;
  return true;
}

namespace detail {

// Extends a partial multiplicative map src -> dst by product closure.
// Returns false on the first inconsistency.
inline bool close_partial_map(const FiniteGroup& src, const FiniteGroup& dst,
                              std::vector<int>& map, std::vector<int>& defined) {
  for (std::size_t i = 0; i < defined.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (auto [p, q] : {std::pair{defined[i], defined[j]}, std::pair{defined[j], defined[i]}}) {
        int r = src.mul(p, q);
        int v = dst.mul(map[p], map[q]);
        if (map[r] < 0) {
          map[r] = v;
          defined.push_back(r);
        } else if (map[r] != v) {
          return false;
        }
      }
  return true;
}

inline void hom_search(const FiniteGroup& src, const FiniteGroup& dst,
                       const std::vector<int>& chain, std::size_t level,
                       std::vector<int> map, std::vector<int> defined, bool bijective,
                       std::vector<std::vector<int>>& out) {
  if (level == chain.size()) {
    if (bijective) {
      std::vector<char> seen(dst.order, 0);
      for (int v : map) {
        if (seen[v]) return;
        seen[v] = 1;
      }
    }
    out.push_back(std::move(map));
    return;
  }
  int g = chain[level];
  for (int cand = 0; cand < dst.order; ++cand) {
    int so = src.element_order[g], dor = dst.element_order[cand];
    if (bijective ? (dor != so) : (so % dor != 0)) continue;
    auto m2 = map;
    auto d2 = defined;
    m2[g] = cand;
    d2.push_back(g);
    if (close_partial_map(src, dst, m2, d2))
      hom_search(src, dst, chain, level + 1, std::move(m2), std::move(d2), bijective, out);
  }
}

}  // namespace detail

/// Every homomorphism src -> dst, as element maps, in a deterministic order.
inline std::vector<std::vector<int>> enumerate_homomorphisms(const FiniteGroup& src,
                                                             const FiniteGroup& dst,
                                                             bool bijective_only = false) {
  std::vector<int> chain = generating_chain(src);
  std::vector<int> map(src.order, -1);
  map[0] = 0;
  std::vector<int> defined{0};
  std::vector<std::vector<int>> out;
  detail::hom_search(src, dst, chain, 0, std::move(map), std::move(defined),
                     bijective_only, out);
  std::sort(out.begin(), out.end());
  return out;
}

constexpr int kDefaultOrderBound = 12;

inline std::vector<Automorphism> all_automorphisms(const FiniteGroup& g,
                                                   int order_bound = kDefaultOrderBound) {
  if (g.order > order_bound)
    raise("SizeLimitExceeded", "order " + std::to_string(g.order) + " exceeds bound " +
                                   std::to_string(order_bound));
  std::vector<Automorphism> out;
  for (auto& m : enumerate_homomorphisms(g, g, /*bijective_only=*/true))
    out.push_back(Automorphism{std::move(m)});
  return out;
}

/// Aut(G) materialised: the automorphism list plus its composition table as a
/// FiniteGroup (index 0 is the identity automorphism).
struct AutGroup {
  std::vector<Automorphism> auts;
  FiniteGroup composition;  // composition.mul(i, j) = index of auts[i] o auts[j]

  int index_of(const Automorphism& f) const {
    auto it = std::lower_bound(auts.begin() + 1, auts.end(), f);
    if (it != auts.end() && *it == f) return static_cast<int>(it - auts.begin());
    if (auts[0] == f) return 0;
    return -1;
  }
  int compose_idx(int i, int j) const { return composition.mul(i, j); }
  int inverse_idx(int i) const { return composition.inv(i); }
  int size() const { return static_cast<int>(auts.size()); }
};

inline AutGroup make_aut_group(const FiniteGroup& g, int order_bound = kDefaultOrderBound) {
  AutGroup ag;
  ag.auts = all_automorphisms(g, order_bound);
  // Identity first, remainder sorted, so index_of can binary-search the tail.
  auto id = identity_automorphism(g.order);
  ag.auts.erase(std::find(ag.auts.begin(), ag.auts.end(), id));
  std::sort(ag.auts.begin(), ag.auts.end());
  ag.auts.insert(ag.auts.begin(), id);

  const int m = static_cast<int>(ag.auts.size());
  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < m; ++i) idx[ag.auts[i].img] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto it = idx.find(compose(ag.auts[i], ag.auts[j]).img);
      if (it == idx.end()) raise("NotAutomorphism", "automorphism list not closed");
      table[i][j] = it->second;
    }
  ag.composition = validate_group(std::move(table), {}, /*allow_relabel=*/false);
  return ag;
}

/// All homomorphisms lambda : G -> Aut(G), as per-element automorphism indices.
struct LambdaFamily {
  AutGroup aut;
  std::vector<std::vector<int>> maps;  // each: element -> automorphism index
};

inline LambdaFamily all_homomorphisms_to_aut(const FiniteGroup& g,
                                             int order_bound = kDefaultOrderBound) {
  LambdaFamily fam;
  fam.aut = make_aut_group(g, order_bound);
  fam.maps = enumerate_homomorphisms(g, fam.aut.composition);
  return fam;
}

inline std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a,
                                                        const FiniteGroup& b) {
  if (a.order != b.order) return std::nullopt;
  auto res = enumerate_homomorphisms(a, b, /*bijective_only=*/true);
  if (res.empty()) return std::nullopt;
  return res.front();
}

inline bool group_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return find_isomorphism(a, b).has_value();
}

/// All subgroups, as sorted member lists, found by closure growth.
inline std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> known;
  known.insert(subgroup_closure(g, {}));
  for (;;) {
    std::set<std::vector<int>> next = known;
    for (const auto& s : known)
      for (int x = 0; x < g.order; ++x) {
        if (std::binary_search(s.begin(), s.end(), x)) continue;
        auto seed = s;
        seed.push_back(x);
        next.insert(subgroup_closure(g, seed));
      }
    if (next.size() == known.size()) break;
    known = std::move(next);
  }
  return {known.begin(), known.end()};
}

inline bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < a; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

/// Multiset of element orders; a cheap isomorphism invariant.
inline std::vector<int> order_spectrum(const FiniteGroup& g) {
  auto s = g.element_order;
  std::sort(s.begin(), s.end());
  return s;
}

// ---- Stock groups for corpora and tests ----

namespace groups {

inline FiniteGroup cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return validate_group(std::move(t));
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order * b.order;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  auto id = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          t[id(x1, y1)][id(x2, y2)] = id(a.mul(x1, x2), b.mul(y1, y2));
  return validate_group(std::move(t));
}

inline FiniteGroup elementary_abelian(int k) {
  FiniteGroup g = cyclic(2);
  for (int i = 1; i < k; ++i) g = direct_product(g, cyclic(2));
  return g;
}

/// Dihedral group of order 2n: elements r^i s^j with s r s = r^{-1}.
inline FiniteGroup dihedral(int n) {
  const int m = 2 * n;
  auto id = [&](int i, int j) { return i + n * j; };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          int rot = j == 0 ? (i + k) % n : ((i - k) % n + n) % n;
          t[id(i, j)][id(k, l)] = id(rot, (j + l) % 2);
        }
  return validate_group(std::move(t));
}

/// Quaternion group {±1, ±i, ±j, ±k}.
inline FiniteGroup quaternion8() {
  // Index: sign * 4 + unit, units 0=1, 1=i, 2=j, 3=k.
  auto unit_mul = [](int u, int v, int& sign) {
    static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    sign = sgn[u][v];
    return prod[u][v];
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int su = a / 4 ? -1 : 1, u = a % 4;
      int sv = b / 4 ? -1 : 1, v = b % 4;
      int sw;
      int w = unit_mul(u, v, sw);
      int s = su * sv * sw;
      t[a][b] = (s < 0 ? 4 : 0) + w;
    }
  return validate_group(std::move(t));
}

/// B x| Z2 with the Z2 part acting by the involution theta.
inline FiniteGroup semidirect_z2(const FiniteGroup& b, const Automorphism& theta) {
  if (compose(theta, theta) != identity_automorphism(b.order))
    raise("NotAutomorphism", "action must be an involution");
  const int n = 2 * b.order;
  auto id = [&](int x, int e) { return x + b.order * e; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < b.order; ++x)
    for (int e = 0; e < 2; ++e)
      for (int y = 0; y < b.order; ++y)
        for (int f = 0; f < 2; ++f)
          t[id(x, e)][id(y, f)] = id(b.mul(x, e ? theta.img[y] : y), (e + f) % 2);
  return validate_group(std::move(t));
}

}  // namespace groups
}  // namespace skewbrace
