// The restricted wreath product Z wr Z in normal form (shift, finitely
// supported coordinate map), and the brace induced by its exact factorization
// into the base subgroup and the top cyclic group.
#pragma once

#include <map>
#include <string>

#include "skewbrace/core.hpp"

namespace skewbrace {

/// x^t * f with f in the direct sum of copies of Z indexed by Z; conjugation
/// by x shifts indices up: x^-1 y_i x = y_{i+1}.
struct WreathElement {
  long long shift = 0;
  std::map<long long, Int> support;  // index -> coefficient, zeros dropped

  bool operator==(const WreathElement&) const = default;
};

inline WreathElement wreath_x(long long t = 1) { return {t, {}}; }

inline WreathElement wreath_y(long long index, Int coeff = 1) {
  WreathElement e;
  if (coeff != 0) e.support[index] = std::move(coeff);
  return e;
}

namespace detail {

inline std::map<long long, Int> shift_support(const std::map<long long, Int>& f,
                                              long long by) {
  std::map<long long, Int> r;
  for (const auto& [i, c] : f) r.emplace(checked_add(i, by), c);
  return r;
}

inline std::map<long long, Int> add_support(const std::map<long long, Int>& f,
                                            const std::map<long long, Int>& g) {
  std::map<long long, Int> r = f;
  for (const auto& [i, c] : g) {
    auto [it, fresh] = r.emplace(i, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

inline std::map<long long, Int> neg_support(const std::map<long long, Int>& f) {
  std::map<long long, Int> r;
  for (const auto& [i, c] : f) r.emplace(i, -c);
  return r;
}

}  // namespace detail

/// (x^t f)(x^s g) = x^{t+s} (f shifted by s) g.
inline WreathElement wreath_mul(const WreathElement& p, const WreathElement& q) {
  return {checked_add(p.shift, q.shift),
          detail::add_support(detail::shift_support(p.support, q.shift), q.support)};
}

inline WreathElement wreath_inv(const WreathElement& p) {
  return {-p.shift, detail::neg_support(detail::shift_support(p.support, -p.shift))};
}

inline std::string wreath_to_string(const WreathElement& p) {
  std::string s = "x^" + std::to_string(p.shift);
  for (const auto& [i, c] : p.support)
    s += " y" + std::to_string(i) + "^" + c.str();
  return s;
}

/// Exact factorization G = A B with A the base subgroup (shift 0) and
/// B = <x>; split(g) = (g x^-t, x^t) where t is the shift of g.
struct WreathFactorizationBrace {
  using Element = WreathElement;

  struct Split {
    WreathElement a;
    WreathElement b;
  };
  Split split(const WreathElement& g) const {
    WreathElement b = wreath_x(g.shift);
    return {wreath_mul(g, wreath_inv(b)), std::move(b)};
  }

  WreathElement identity() const { return {}; }
  WreathElement dot(const WreathElement& a, const WreathElement& b) const {
    return wreath_mul(a, b);
  }
  WreathElement dot_inverse(const WreathElement& a) const { return wreath_inv(a); }
  WreathElement circ(const WreathElement& g, const WreathElement& h) const {
    auto [a1, b1] = split(g);
    auto [a2, b2] = split(h);
    return wreath_mul(wreath_mul(a1, a2), wreath_mul(b2, b1));
  }
  WreathElement circ_inverse(const WreathElement& g) const {
    auto [a, b] = split(g);
    return wreath_mul(wreath_inv(a), wreath_inv(b));
  }
  bool equal(const WreathElement& a, const WreathElement& b) const { return a == b; }
  std::string describe(const WreathElement& a) const { return wreath_to_string(a); }
  // lambda_z is conjugation by x^{shift(z)}; trivial exactly on the base.
  bool kernel_contains(const WreathElement& g) const { return g.shift == 0; }
  WreathElement lambda_inner(const WreathElement& z, const WreathElement& y) const {
    auto b = wreath_x(z.shift);
    return wreath_mul(wreath_mul(wreath_inv(b), y), b);
  }
};

inline auto wreath_sampler(long long shift_radius = 3, long long index_radius = 3,
                           long long coeff_radius = 3) {
  return [=](Rng& rng) {
    WreathElement e;
    e.shift = rng.uniform(-shift_radius, shift_radius);
    long long terms = rng.uniform(0, 3);
    for (long long i = 0; i < terms; ++i) {
      long long idx = rng.uniform(-index_radius, index_radius);
      Int c = rng.uniform_nonzero(-coeff_radius, coeff_radius);
      auto [it, fresh] = e.support.emplace(idx, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) e.support.erase(it);
      }
    }
    return e;
  };
}

}  // namespace skewbrace
