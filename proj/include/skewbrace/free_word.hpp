// Reduced words in a free group: exact multiplication, inversion, powers,
// endomorphism substitution, exponent sums, and the x1^2*x2^-1 text form.
#pragma once

#include <string>
#include <vector>

#include "skewbrace/core.hpp"

namespace skewbrace {

struct Syllable {
  int gen = 0;
  long long exp = 0;
  bool operator==(const Syllable&) const = default;
};

/// Freely reduced word; adjacent syllables always have distinct generators
/// and nonzero exponents.  The empty word is the identity.
struct FreeWord {
  std::vector<Syllable> syl;

  bool is_identity() const { return syl.empty(); }
  bool operator==(const FreeWord&) const = default;
  bool operator<(const FreeWord& o) const {
    auto key = [](const Syllable& s) { return std::pair{s.gen, s.exp}; };
    return std::lexicographical_compare(
        syl.begin(), syl.end(), o.syl.begin(), o.syl.end(),
        [&](const Syllable& a, const Syllable& b) { return key(a) < key(b); });
  }

  static FreeWord identity() { return {}; }
  static FreeWord generator(int g, long long e = 1) {
    FreeWord w;
    if (e != 0) w.syl.push_back({g, e});
    return w;
  }
};

inline FreeWord& append_syllable(FreeWord& w, int gen, long long exp) {
  if (exp == 0) return w;
  if (!w.syl.empty() && w.syl.back().gen == gen) {
    w.syl.back().exp = checked_add(w.syl.back().exp, exp);
    if (w.syl.back().exp == 0) w.syl.pop_back();
  } else {
    w.syl.push_back({gen, exp});
  }
  return w;
}

inline FreeWord word_mul(const FreeWord& u, const FreeWord& v) {
  FreeWord r = u;
  for (const auto& s : v.syl) append_syllable(r, s.gen, s.exp);
  return r;
}

inline FreeWord word_inv(const FreeWord& u) {
  FreeWord r;
  for (auto it = u.syl.rbegin(); it != u.syl.rend(); ++it)
    r.syl.push_back({it->gen, -it->exp});
  return r;
}

inline FreeWord word_pow(const FreeWord& u, long long k) {
  FreeWord base = k < 0 ? word_inv(u) : u;
  long long m = k < 0 ? -k : k;
  FreeWord acc;
  while (m > 0) {
    if (m & 1) acc = word_mul(acc, base);
    base = word_mul(base, base);
    m >>= 1;
  }
  return acc;
}

inline FreeWord word_conjugate(const FreeWord& w, const FreeWord& by) {
  return word_mul(word_mul(word_inv(by), w), by);
}

// [u, v] = u^-1 v^-1 u v.
inline FreeWord word_commutator(const FreeWord& u, const FreeWord& v) {
  return word_mul(word_mul(word_inv(u), word_inv(v)), word_mul(u, v));
}

/// Total exponent sum (the word logarithm on homogeneous groups).
inline long long word_log(const FreeWord& w) {
  long long s = 0;
  for (const auto& x : w.syl) s = checked_add(s, x.exp);
  return s;
}

/// Exponent sum of a single generator.
inline long long exponent_sum(const FreeWord& w, int gen) {
  long long s = 0;
  for (const auto& x : w.syl)
    if (x.gen == gen) s = checked_add(s, x.exp);
  return s;
}

inline int word_length(const FreeWord& w) {
  long long n = 0;
  for (const auto& x : w.syl) n += x.exp < 0 ? -x.exp : x.exp;
  return static_cast<int>(n);
}

/// Images of generators under an endomorphism, index i -> image of x_{i+1}.
using GenImages = std::vector<FreeWord>;

inline FreeWord apply_endomorphism(const FreeWord& w, const GenImages& images) {
  FreeWord r;
  for (const auto& s : w.syl) {
    if (s.gen < 0 || s.gen >= static_cast<int>(images.size()))
      raise("UnknownGenerator", "no image for generator x" + std::to_string(s.gen + 1));
    r = word_mul(r, word_pow(images[s.gen], s.exp));
  }
  return r;
}

/// Composition: x_i -> outer(inner(x_i)).
inline GenImages compose_images(const GenImages& outer, const GenImages& inner) {
  GenImages r;
  r.reserve(inner.size());
  for (const auto& w : inner) r.push_back(apply_endomorphism(w, outer));
  return r;
}

inline GenImages identity_images(int rank) {
  GenImages r;
  for (int i = 0; i < rank; ++i) r.push_back(FreeWord::generator(i));
  return r;
}

inline std::string word_to_string(const FreeWord& w) {
  if (w.is_identity()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.syl.size(); ++i) {
    if (i) s += '*';
    s += "x" + std::to_string(w.syl[i].gen + 1);
    if (w.syl[i].exp != 1) s += "^" + std::to_string(w.syl[i].exp);
  }
  return s;
}

inline FreeWord word_from_string(const std::string& s) {
  FreeWord w;
  if (s == "1" || s.empty()) return w;
  std::size_t i = 0;
  auto parse_int = [&](bool allow_sign) {
    std::size_t start = i;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      raise("ParseError", "bad integer in word at position " + std::to_string(start));
    return std::stoll(s.substr(start, i - start));
  };
  for (;;) {
    if (i >= s.size() || s[i] != 'x') raise("ParseError", "expected generator in '" + s + "'");
    ++i;
    long long gen = parse_int(false);
    if (gen < 1) raise("ParseError", "generator indices start at 1");
    long long exp = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      exp = parse_int(true);
    }
    append_syllable(w, static_cast<int>(gen - 1), exp);
    if (i == s.size()) break;
    if (s[i] != '*') raise("ParseError", "expected '*' at position " + std::to_string(i));
    ++i;
  }
  return w;
}

/// Random reduced word: syllable count uniform in [1, max_syllables],
/// generators uniform, exponents uniform in [-3,3] minus zero.
inline FreeWord random_word(Rng& rng, int rank, int max_syllables) {
  FreeWord w;
  long long count = rng.uniform(1, max_syllables);
  for (long long i = 0; i < count; ++i)
    append_syllable(w, static_cast<int>(rng.uniform(0, rank - 1)),
                    rng.uniform_nonzero(-3, 3));
  return w;
}

}  // namespace skewbrace
