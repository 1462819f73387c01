// Integer power series in non-commuting variables truncated at a total
// degree, the adjoint circle operation a o b = ab + a + b on the augmentation
// ideal, exact adjoint inverses, and the Magnus map from free words.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "skewbrace/core.hpp"
#include "skewbrace/free_word.hpp"

namespace skewbrace {

/// Monomial = sequence of variable indices (a word in the free monoid).
using Monomial = std::vector<int>;

struct TruncatedSeries {
  int n_vars = 0;
  int degree_cap = 0;
  std::map<Monomial, Int> terms;  // canonical: sorted keys, no zero coefficients

  bool is_zero() const { return terms.empty(); }
  bool operator==(const TruncatedSeries&) const = default;

  static TruncatedSeries zero(int n_vars, int cap) { return {n_vars, cap, {}}; }
  static TruncatedSeries variable(int i, int n_vars, int cap) {
    TruncatedSeries s{n_vars, cap, {}};
    if (i < 0 || i >= n_vars) raise("UnknownGenerator", "variable index out of range");
    if (cap >= 1) s.terms[{i}] = 1;
    return s;
  }

  Int coefficient(const Monomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Int(0) : it->second;
  }
  /// Constant coefficient; zero means membership in the augmentation ideal.
  Int constant_term() const { return coefficient({}); }
};

namespace detail {

inline void series_check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.n_vars != b.n_vars || a.degree_cap != b.degree_cap)
    raise("CapMismatch", "operands live in different truncations");
}

inline void series_accumulate(TruncatedSeries& s, const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = s.terms.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) s.terms.erase(it);
  }
}

}  // namespace detail

inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::series_check_compatible(a, b);
  TruncatedSeries r = a;
  for (const auto& [m, c] : b.terms) detail::series_accumulate(r, m, c);
  return r;
}

inline TruncatedSeries series_neg(const TruncatedSeries& a) {
  TruncatedSeries r{a.n_vars, a.degree_cap, {}};
  for (const auto& [m, c] : a.terms) r.terms.emplace(m, -c);
  return r;
}

inline TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_add(a, series_neg(b));
}

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::series_check_compatible(a, b);
  TruncatedSeries r{a.n_vars, a.degree_cap, {}};
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      if (static_cast<int>(ma.size() + mb.size()) > a.degree_cap) continue;
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      detail::series_accumulate(r, m, ca * cb);
    }
  return r;
}

/// Re-truncation to a smaller cap; commutes with all the arithmetic.
inline TruncatedSeries series_truncate(const TruncatedSeries& a, int new_cap) {
  if (new_cap > a.degree_cap) raise("CapMismatch", "cannot raise a truncation cap");
  TruncatedSeries r{a.n_vars, new_cap, {}};
  for (const auto& [m, c] : a.terms)
    if (static_cast<int>(m.size()) <= new_cap) r.terms.emplace(m, c);
  return r;
}

inline std::string series_to_string(const TruncatedSeries& a) {
  if (a.terms.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : a.terms) {
    if (!s.empty()) s += " + ";
    s += c.str();
    for (int v : m) s += "*X" + std::to_string(v + 1);
  }
  return s;
}

inline void require_augmentation(const TruncatedSeries& a) {
  if (a.constant_term() != 0)
    raise("NotAugmentation", "nonzero constant term " + a.constant_term().str());
}

/// a o b = ab + a + b on the augmentation ideal.
inline TruncatedSeries adjoint_circ(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_augmentation(a);
  require_augmentation(b);
  return series_add(series_mul(a, b), series_add(a, b));
}

/// The circle inverse -a + a^2 - a^3 + ...; exact at the cap since a has no
/// constant term.
inline TruncatedSeries adjoint_inverse(const TruncatedSeries& a) {
  require_augmentation(a);
  TruncatedSeries acc = TruncatedSeries::zero(a.n_vars, a.degree_cap);
  TruncatedSeries pw = a;
  for (int k = 1; k <= a.degree_cap && !pw.is_zero(); ++k) {
    acc = (k % 2) ? series_sub(acc, pw) : series_add(acc, pw);
    pw = series_mul(pw, a);
  }
  return acc;
}

inline TruncatedSeries adjoint_pow(const TruncatedSeries& a, long long k) {
  TruncatedSeries base = k < 0 ? adjoint_inverse(a) : a;
  long long m = k < 0 ? -k : k;
  TruncatedSeries acc = TruncatedSeries::zero(a.n_vars, a.degree_cap);
  while (m > 0) {
    if (m & 1) acc = adjoint_circ(acc, base);
    base = adjoint_circ(base, base);
    m >>= 1;
  }
  return acc;
}

/// The adjoint group of the truncated augmentation ideal, as a brace whose
/// additive group is the underlying abelian group of the ring.
struct SeriesBrace {
  int n_vars = 0;
  int degree_cap = 0;

  using Element = TruncatedSeries;
  TruncatedSeries identity() const { return TruncatedSeries::zero(n_vars, degree_cap); }
  TruncatedSeries dot(const TruncatedSeries& a, const TruncatedSeries& b) const {
    return series_add(a, b);
  }
  TruncatedSeries dot_inverse(const TruncatedSeries& a) const { return series_neg(a); }
  TruncatedSeries circ(const TruncatedSeries& a, const TruncatedSeries& b) const {
    return adjoint_circ(a, b);
  }
  TruncatedSeries circ_inverse(const TruncatedSeries& a) const {
    return adjoint_inverse(a);
  }
  bool equal(const TruncatedSeries& a, const TruncatedSeries& b) const { return a == b; }
  std::string describe(const TruncatedSeries& a) const { return series_to_string(a); }
  // lambda_k(b) = b + k b is the identity iff k annihilates the ideal, i.e.
  // every term of k already has the maximal degree.
  bool kernel_contains(const TruncatedSeries& k) const {
    for (const auto& [m, c] : k.terms)
      if (static_cast<int>(m.size()) != degree_cap) return false;
    return true;
  }
};

/// Random augmentation element with small support.
inline auto series_sampler(int n_vars, int cap, int max_terms = 4,
                           long long coeff_radius = 3) {
  return [=](Rng& rng) {
    TruncatedSeries s = TruncatedSeries::zero(n_vars, cap);
    long long terms = rng.uniform(1, max_terms);
    for (long long t = 0; t < terms; ++t) {
      Monomial m(static_cast<std::size_t>(rng.uniform(1, cap)));
      for (auto& v : m) v = static_cast<int>(rng.uniform(0, n_vars - 1));
      detail::series_accumulate(s, m, rng.uniform_nonzero(-coeff_radius, coeff_radius));
    }
    return s;
  };
}

/// Both distributive identities of a two-sided brace, on sampled triples:
///   a o (b + c) = a o b - a + a o c   and   (b + c) o a = b o a - a + c o a.
inline Verdict check_two_sided_brace(int n_vars, int cap, long samples, std::uint64_t seed) {
  SeriesBrace br{n_vars, cap};
  auto sample = series_sampler(n_vars, cap);
  Rng rng(seed);
  for (long i = 0; i < samples; ++i) {
    auto a = sample(rng), b = sample(rng), c = sample(rng);
    auto left_lhs = br.circ(a, series_add(b, c));
    auto left_rhs = series_add(series_sub(br.circ(a, b), a), br.circ(a, c));
    if (left_lhs != left_rhs)
      return Verdict::fail("two-sided-brace", "left axiom at " + series_to_string(a),
                           samples, seed);
    auto right_lhs = br.circ(series_add(b, c), a);
    auto right_rhs = series_add(series_sub(br.circ(b, a), a), br.circ(c, a));
    if (right_lhs != right_rhs)
      return Verdict::fail("two-sided-brace", "right axiom at " + series_to_string(a),
                           samples, seed);
  }
  return Verdict::ok("two-sided-brace", samples, seed);
}

/// Image of a reduced free word under x_i -> X_i, x_i^-1 -> the adjoint
/// inverse of X_i; multiplicative from words to the adjoint group.
inline TruncatedSeries magnus_image(const FreeWord& w, int n_vars, int cap) {
  TruncatedSeries acc = TruncatedSeries::zero(n_vars, cap);
  for (const auto& s : w.syl) {
    if (s.gen < 0 || s.gen >= n_vars)
      raise("UnknownGenerator", "word uses x" + std::to_string(s.gen + 1));
    acc = adjoint_circ(acc, adjoint_pow(TruncatedSeries::variable(s.gen, n_vars, cap), s.exp));
  }
  return acc;
}

namespace detail {

inline void enumerate_reduced_words(int rank, int max_len, FreeWord& w,
                                    std::vector<FreeWord>& out) {
  out.push_back(w);
  if (word_length(w) == max_len) return;
  for (int g = 0; g < rank; ++g)
    for (int e : {1, -1}) {
      if (!w.syl.empty()) {
        const auto& last = w.syl.back();
        if (last.gen == g && ((last.exp > 0) != (e > 0))) continue;  // would cancel
      }
      auto w2 = w;
      append_syllable(w2, g, e);
      enumerate_reduced_words(rank, max_len, w2, out);
    }
}

}  // namespace detail

/// All reduced words of letter-length <= max_len over the given rank.
inline std::vector<FreeWord> all_reduced_words(int rank, int max_len) {
  std::vector<FreeWord> out;
  FreeWord w;
  detail::enumerate_reduced_words(rank, max_len, w, out);
  return out;
}

/// Distinct reduced two-generator words of length <= max_len must have
/// distinct images at cap max_len: the adjoint group contains a free
/// non-abelian subgroup, witnessed up to that length.
inline Verdict free_subgroup_witness(int cap, int max_len) {
  if (cap < max_len) raise("CapMismatch", "cap must be at least the word length");
  auto words = all_reduced_words(2, max_len);
  std::map<std::string, FreeWord> images;  // keyed by canonical rendering
  for (const auto& w : words) {
    auto img = magnus_image(w, 2, cap);
    auto [it, fresh] = images.emplace(series_to_string(img), w);
    if (!fresh)
      return Verdict::fail("free-subgroup-witness",
                           word_to_string(it->second) + " and " + word_to_string(w) +
                               " collide at degree " + std::to_string(cap));
  }
  return Verdict::ok("free-subgroup-witness (" + std::to_string(words.size()) + " words)");
}

}  // namespace skewbrace
