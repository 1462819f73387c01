// Braces on free abelian lattices Z^n driven by a single automorphism phi:
// a o b = a + phi^{l(a)}(b).  Includes the closed rank-2 families with their
// inverse formulas and three-type classification, the cyclic-permutation
// construction with its presentation relations, and the shear family whose
// lambda image is not cyclic for rank >= 3.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/core.hpp"
#include "skewbrace/zn.hpp"

namespace skewbrace {

/// A lattice automorphism is admissible iff it fixes every basis vector
/// modulo the zero-sum sublattice, i.e. every row of its matrix sums to 1.
inline Verdict validate_phi(const IntMatrix& m) {
  Int det = mat_det(m);
  if (det != 1 && det != -1)
    raise("NotUnimodular", "determinant " + det.str() + " is not a unit");
  for (int r = 0; r < m.n; ++r) {
    Int s = 0;
    for (int c = 0; c < m.n; ++c) s += m.at(r, c);
    if (s != 1)
      return Verdict::fail("phi-admissible",
                           "basis image " + std::to_string(r + 1) + " has coordinate sum " +
                               s.str());
  }
  return Verdict::ok("phi-admissible");
}

/// Least k in [1, bound] with phi^k = id, or 0 if none (treated as infinite).
inline long long probe_matrix_order(const IntMatrix& m, long long bound = 24) {
  IntMatrix p = m;
  for (long long k = 1; k <= bound; ++k) {
    if (p == IntMatrix::identity(m.n)) return k;
    p = mat_mul(p, m);
  }
  return 0;
}

struct LatticeBrace {
  int rank = 0;
  IntMatrix phi;
  IntMatrix phi_inverse;
  long long phi_order = 0;  // 0: no order found below the probe bound

  using Element = ZnVector;
  ZnVector identity() const { return zn_zero(rank); }
  ZnVector dot(const ZnVector& a, const ZnVector& b) const { return zn_add(a, b); }
  ZnVector dot_inverse(const ZnVector& a) const { return zn_neg(a); }
  ZnVector circ(const ZnVector& a, const ZnVector& b) const {
    return zn_add(a, apply_phi_power(b, log_vector(a)));
  }
  ZnVector circ_inverse(const ZnVector& a) const {
    return apply_phi_power(zn_neg(a), -log_vector(a));
  }
  bool equal(const ZnVector& a, const ZnVector& b) const { return a == b; }
  std::string describe(const ZnVector& a) const { return zn_to_string(a); }

  bool kernel_contains(const ZnVector& a) const {
    Int l = log_vector(a);
    return phi_order > 0 ? l % phi_order == 0 : l == 0;
  }
  // lambda lands in the cyclic group generated by phi.
  static constexpr bool lambda_image_cyclic() { return true; }

  IntMatrix phi_power(Int k) const {
    if (phi_order > 0) {
      k %= phi_order;
      if (k < 0) k += phi_order;
    }
    return k >= 0 ? matrix_power(phi, k) : matrix_power(phi_inverse, -k);
  }

  /// phi^k(v); iterates plain matrix-vector products for small exponents,
  /// which dominates the exhaustive test sweeps.
  ZnVector apply_phi_power(ZnVector v, Int k) const {
    if (phi_order > 0) {
      k %= phi_order;
      if (k < 0) k += phi_order;
    }
    if (k >= -16 && k <= 16) {
      const IntMatrix& step = k >= 0 ? phi : phi_inverse;
      for (long long i = 0, reps = to_ll(k < 0 ? Int(-k) : k); i < reps; ++i)
        v = matrix_apply(step, v);
      return v;
    }
    return matrix_apply(phi_power(std::move(k)), v);
  }
};

inline LatticeBrace make_lattice_brace(const IntMatrix& m) {
  auto v = validate_phi(m);
  if (!v) raise("NotValidPhi", v.witness);
  LatticeBrace b;
  b.rank = m.n;
  b.phi = m;
  b.phi_inverse = mat_inverse(m);
  b.phi_order = probe_matrix_order(m);
  return b;
}

/// Box of all vectors with coordinates in [-radius, radius]; exhaustive test domain.
inline std::vector<ZnVector> lattice_box(int rank, long long radius) {
  std::vector<ZnVector> out;
  ZnVector v(rank, -radius);
  for (;;) {
    out.push_back(v);
    int i = 0;
    while (i < rank && ++v[i] > radius) v[i++] = -radius;
    if (i == rank) break;
  }
  return out;
}

inline auto lattice_sampler(int rank, long long radius) {
  return [rank, radius](Rng& rng) {
    ZnVector v(rank);
    for (int i = 0; i < rank; ++i) v[i] = rng.uniform(-radius, radius);
    return v;
  };
}

// ---- The two rank-2 families ----

inline IntMatrix z2_case1_matrix(long long p) {
  return IntMatrix::from_rows({{1 + p, -p}, {p, 1 - p}});
}

inline IntMatrix z2_case2_matrix(long long p) {
  return IntMatrix::from_rows({{1 + p, -p}, {p + 2, -1 - p}});
}

/// Closed form a o b = a + b + p (a1+a2)(b1+b2) (x1 - x2).
inline ZnVector z2_case1_circ(const Int& p, const ZnVector& a, const ZnVector& b) {
  Int t = p * (a[0] + a[1]) * (b[0] + b[1]);
  return {a[0] + b[0] + t, a[1] + b[1] - t};
}

/// Closed-form circle inverse -a + p (a1+a2)^2 (x1 - x2).
inline ZnVector z2_case1_inverse(const Int& p, const ZnVector& a) {
  Int t = p * (a[0] + a[1]) * (a[0] + a[1]);
  return {-a[0] + t, -a[1] - t};
}

/// Parity-driven closed form for the order-two family.
inline ZnVector z2_case2_circ(const Int& p, const ZnVector& a, const ZnVector& b) {
  if ((a[0] + a[1]) % 2 == 0) return zn_add(a, b);
  Int t = 2 * b[1] + p * (b[0] + b[1]);
  return {a[0] + b[0] + t, a[1] + b[1] - t};
}

inline ZnVector z2_case2_inverse(const Int& p, const ZnVector& a) {
  if ((a[0] + a[1]) % 2 == 0) return zn_neg(a);
  Int t = 2 * a[1] + p * (a[0] + a[1]);
  return {-a[0] - t, -a[1] + t};
}

struct Z2Classification {
  enum class Family { Trivial, Case1, Case2 };
  enum class MultType { SameFreeAbelian, IsomorphicFreeAbelian, KleinBottle };
  Family family = Family::Trivial;
  Int p = 0;
  MultType mult_type = MultType::SameFreeAbelian;
  Verdict relations = Verdict::ok("z2-relations");
};

/// Every admissible rank-2 matrix is either I, the infinite-order shear
/// family, or the order-two family; the multiplicative group is respectively
/// the lattice itself, free abelian of rank 2, or the Klein bottle group.
inline Z2Classification z2_classify(const IntMatrix& m) {
  if (m.n != 2) raise("NotValidPhi", "classification needs rank 2");
  auto v = validate_phi(m);
  if (!v) raise("NotValidPhi", v.witness);

  Z2Classification out;
  auto br = make_lattice_brace(m);
  const ZnVector x1{1, 0};
  const ZnVector z2{1, -1};  // x1 - x2

  if (m == IntMatrix::identity(2)) {
    out.family = Z2Classification::Family::Trivial;
    out.mult_type = Z2Classification::MultType::SameFreeAbelian;
    out.relations = Verdict::ok("z2-relations");
    return out;
  }
  Int p1 = m.at(1, 0);
  if (m == matrix_power(IntMatrix::from_rows({{2, -1}, {1, 0}}), p1)) {
    out.family = Z2Classification::Family::Case1;
    out.p = p1;
    out.mult_type = Z2Classification::MultType::IsomorphicFreeAbelian;
    // x1 and x1 - x2 generate and commute: x1 o (x1-x2) = (x1-x2) o x1 = 2x1 - x2.
    auto lhs = br.circ(x1, z2);
    auto rhs = br.circ(z2, x1);
    ZnVector expect{2, -1};
    out.relations = (lhs == expect && rhs == expect)
                        ? Verdict::ok("z2-relations")
                        : Verdict::fail("z2-relations", "generator commutation fails");
    return out;
  }
  Int p2 = m.at(0, 0) - 1;
  if (m == z2_case2_matrix(to_ll(p2))) {
    out.family = Z2Classification::Family::Case2;
    out.p = p2;
    out.mult_type = Z2Classification::MultType::KleinBottle;
    // Klein bottle relation: x1-bar o z2 o x1 = z2-bar.
    auto lhs = br.circ(br.circ(br.circ_inverse(x1), z2), x1);
    auto rhs = br.circ_inverse(z2);
    out.relations = lhs == rhs ? Verdict::ok("z2-relations")
                               : Verdict::fail("z2-relations", "Klein relation fails");
    return out;
  }
  raise("NotValidPhi", "admissible matrix outside both families");  // unreachable
}

// ---- Cyclic permutation of the basis ----

/// phi cycles the basis x_i -> x_{i+1}; the multiplicative group is
/// non-abelian for n >= 3.
inline LatticeBrace cyclic_permutation_brace(int n) {
  if (n < 2) raise("BadRank", "cyclic construction needs rank >= 2");
  IntMatrix m = IntMatrix::zero(n);
  for (int i = 0; i < n; ++i) m.at(i, (i + 1) % n) = 1;
  auto b = make_lattice_brace(m);
  b.phi_order = n;
  return b;
}

/// Exact verification of the presentation of the multiplicative group on
/// x = x1, z = x2 - x1:
///   [x^{o n}, z] = 1,  (z o x)^{o n} = x^{o n},  [z, x^{o k}, z] = 1
/// for 1 <= k <= n-2, plus the conjugation relations for the kernel
/// generators z_k = x_k - x_{k-1}.
inline Verdict verify_presentation_relations(int n, int max_rank = 16) {
  if (n < 2 || n > max_rank) raise("BadRank", "rank out of range");
  auto br = cyclic_permutation_brace(n);
  auto unit = [&](int i) { return zn_unit(n, i); };
  const ZnVector x = unit(0);
  const ZnVector z = zn_sub(unit(1), unit(0));
  std::vector<Verdict> parts;

  auto xn = circ_pow(br, x, n);
  parts.push_back(zn_is_zero(circ_commutator(br, xn, z))
                      ? Verdict::ok("[x^n, z] = 1")
                      : Verdict::fail("[x^n, z] = 1", zn_to_string(circ_commutator(br, xn, z))));
  auto zx = br.circ(z, x);
  parts.push_back(circ_pow(br, zx, n) == xn
                      ? Verdict::ok("(z o x)^n = x^n")
                      : Verdict::fail("(z o x)^n = x^n", zn_to_string(circ_pow(br, zx, n))));
  for (int k = 1; k <= n - 2; ++k) {
    auto inner = circ_commutator(br, z, circ_pow(br, x, k));
    auto rel = circ_commutator(br, inner, z);
    parts.push_back(zn_is_zero(rel)
                        ? Verdict::ok("[z, x^" + std::to_string(k) + ", z] = 1")
                        : Verdict::fail("[z, x^" + std::to_string(k) + ", z] = 1",
                                        zn_to_string(rel)));
  }
  // Conjugation shifts the kernel generators: x1 o z_k o x1-bar = z_{k+1}.
  auto conj = [&](const ZnVector& w) {
    return br.circ(br.circ(x, w), br.circ_inverse(x));
  };
  for (int k = 2; k <= n - 1; ++k) {
    auto zk = zn_sub(unit(k - 1), unit(k - 2));
    auto zk1 = zn_sub(unit(k), unit(k - 1));
    parts.push_back(conj(zk) == zk1
                        ? Verdict::ok("x1 z" + std::to_string(k) + " x1-bar = z" +
                                      std::to_string(k + 1))
                        : Verdict::fail("x1 z" + std::to_string(k) + " x1-bar", ""));
  }
  {
    auto zn = zn_sub(unit(n - 1), unit(n - 2));
    auto rhs = br.identity();
    for (int k = 2; k <= n; ++k)
      rhs = br.circ(rhs, br.circ_inverse(zn_sub(unit(k - 1), unit(k - 2))));
    parts.push_back(conj(zn) == rhs ? Verdict::ok("x1 zn x1-bar = z2-bar o ... o zn-bar")
                                    : Verdict::fail("x1 zn x1-bar", zn_to_string(conj(zn))));
  }
  return merge_verdicts("cyclic-presentation n=" + std::to_string(n), parts);
}

// ---- Shear family: lambda(x_i) adds x_n, independently per generator ----

/// Commutative multiplicative group; lambda image is free abelian of rank
/// n - 1, so it is cyclic only for n = 2.
struct ShearBrace {
  int rank = 0;

  using Element = ZnVector;
  ZnVector identity() const { return zn_zero(rank); }
  ZnVector dot(const ZnVector& a, const ZnVector& b) const { return zn_add(a, b); }
  ZnVector dot_inverse(const ZnVector& a) const { return zn_neg(a); }
  ZnVector circ(const ZnVector& a, const ZnVector& b) const {
    ZnVector r = zn_add(a, b);
    Int t = 0;
    for (int i = 0; i + 1 < rank; ++i) t += a[i] * b[i];
    r[rank - 1] += t;
    return r;
  }
  ZnVector circ_inverse(const ZnVector& a) const {
    ZnVector r = zn_neg(a);
    Int t = 0;
    for (int i = 0; i + 1 < rank; ++i) t += a[i] * a[i];
    r[rank - 1] += t;
    return r;
  }
  bool equal(const ZnVector& a, const ZnVector& b) const { return a == b; }
  std::string describe(const ZnVector& a) const { return zn_to_string(a); }
  bool kernel_contains(const ZnVector& a) const {
    for (int i = 0; i + 1 < rank; ++i)
      if (a[i] != 0) return false;
    return true;
  }

  /// lambda_a as a matrix, for cross-checks against the closed form.
  IntMatrix lambda_matrix(const ZnVector& a) const {
    IntMatrix m = IntMatrix::identity(rank);
    for (int i = 0; i + 1 < rank; ++i) m.at(i, rank - 1) += a[i];
    return m;
  }
  bool lambda_image_cyclic() const { return rank <= 2; }
};

inline ShearBrace shear_brace(int n) {
  if (n < 2) raise("BadRank", "shear construction needs rank >= 2");
  return ShearBrace{n};
}

}  // namespace skewbrace
