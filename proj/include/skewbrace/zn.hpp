// Exact arithmetic on Z^n: coordinate vectors and unimodular integer
// matrices with inverse and signed powers.
//
// Matrix row i holds the basis image phi(x_i), so coordinate vectors act as
// rows: apply(M, v) = v * M.  Composition "phi then psi" is mul(Mphi, Mpsi).
#pragma once

#include <string>
#include <vector>

#include "skewbrace/core.hpp"

namespace skewbrace {

using ZnVector = std::vector<Int>;

inline ZnVector zn_zero(int n) { return ZnVector(n, 0); }

inline ZnVector zn_unit(int n, int i) {
  ZnVector v(n, 0);
  v[i] = 1;
  return v;
}

inline ZnVector zn_add(const ZnVector& a, const ZnVector& b) {
  ZnVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ZnVector zn_sub(const ZnVector& a, const ZnVector& b) {
  ZnVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline ZnVector zn_neg(const ZnVector& a) {
  ZnVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline ZnVector zn_scale(const Int& c, const ZnVector& a) {
  ZnVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool zn_is_zero(const ZnVector& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

/// Coordinate sum; additive, and invariant under any valid lattice automorphism.
inline Int log_vector(const ZnVector& a) {
  Int s = 0;
  for (const auto& x : a) s += x;
  return s;
}

inline std::string zn_to_string(const ZnVector& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].str();
  }
  return s + ")";
}

struct IntMatrix {
  int n = 0;
  std::vector<Int> e;  // row-major

  static IntMatrix zero(int n) { return IntMatrix{n, std::vector<Int>(std::size_t(n) * n, 0)}; }
  static IntMatrix identity(int n) {
    IntMatrix m = zero(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m = zero(static_cast<int>(rows.size()));
    for (int r = 0; r < m.n; ++r)
      for (int c = 0; c < m.n; ++c) m.at(r, c) = rows[r][c];
    return m;
  }

  Int& at(int r, int c) { return e[std::size_t(r) * n + c]; }
  const Int& at(int r, int c) const { return e[std::size_t(r) * n + c]; }
  bool operator==(const IntMatrix&) const = default;
};

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r = IntMatrix::zero(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < a.n; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

/// Row-vector action v -> v*M.
inline ZnVector matrix_apply(const IntMatrix& m, const ZnVector& v) {
  ZnVector r(m.n, 0);
  for (int i = 0; i < m.n; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.n; ++j) r[j] += v[i] * m.at(i, j);
  }
  return r;
}

inline Int mat_det(const IntMatrix& m) {
  // Cofactor expansion; ranks here are small.
  if (m.n == 1) return m.e[0];
  Int det = 0;
  for (int c = 0; c < m.n; ++c) {
    if (m.at(0, c) == 0) continue;
    IntMatrix sub = IntMatrix::zero(m.n - 1);
    for (int r = 1; r < m.n; ++r) {
      int cc = 0;
      for (int k = 0; k < m.n; ++k)
        if (k != c) sub.at(r - 1, cc++) = m.at(r, k);
    }
    Int term = m.at(0, c) * mat_det(sub);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

/// Exact inverse of a det = +-1 matrix via the adjugate.
inline IntMatrix mat_inverse(const IntMatrix& m) {
  Int det = mat_det(m);
  if (det != 1 && det != -1)
    raise("NotUnimodular", "determinant " + det.str() + " is not a unit");
  IntMatrix inv = IntMatrix::zero(m.n);
  if (m.n == 1) {
    inv.e[0] = det;
    return inv;
  }
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < m.n; ++c) {
      IntMatrix sub = IntMatrix::zero(m.n - 1);
      int rr = 0;
      for (int i = 0; i < m.n; ++i) {
        if (i == r) continue;
        int cc = 0;
        for (int j = 0; j < m.n; ++j)
          if (j != c) sub.at(rr, cc++) = m.at(i, j);
        ++rr;
      }
      Int cof = mat_det(sub);
      if ((r + c) % 2) cof = -cof;
      inv.at(c, r) = det * cof;  // adjugate transposes; det is +-1
    }
  return inv;
}

/// M^k for any integer k; negative powers use the exact unimodular inverse.
inline IntMatrix matrix_power(const IntMatrix& m, Int k) {
  IntMatrix base = m;
  if (k < 0) {
    base = mat_inverse(m);
    k = -k;
  }
  IntMatrix acc = IntMatrix::identity(m.n);
  while (k > 0) {
    if ((k & 1) != 0) acc = mat_mul(acc, base);
    base = mat_mul(base, base);
    k >>= 1;
  }
  return acc;
}

}  // namespace skewbrace
