// Shared primitives: exact integers, error codes, check verdicts, seeded RNG.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewbrace {

// All symbolic carriers (lattices, series, wreath products) compute with
// arbitrary-precision integers; overflow is structurally impossible there.
using Int = boost::multiprecision::cpp_int;

inline long long to_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer too large for machine conversion");
  return static_cast<long long>(v);
}

// Checked machine arithmetic for the few places that keep 64-bit exponents.
inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("exponent overflow in checked_add");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("exponent overflow in checked_mul");
  return r;
}

/// Error with a stable machine-readable code ("NotAssociative", "NotRegular", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void raise(const std::string& code, const std::string& detail) {
  throw Error(code, detail);
}

/// Outcome of a verification pass.  Failure carries the first witness found
/// in a fixed deterministic scan order, so reruns reproduce it exactly.
struct Verdict {
  std::string check;
  bool pass = false;
  std::string witness;  // empty on pass
  long samples = 0;     // 0 means the check was exhaustive
  std::uint64_t seed = 0;

  static Verdict ok(std::string name, long samples = 0, std::uint64_t seed = 0) {
    return Verdict{std::move(name), true, "", samples, seed};
  }
  static Verdict fail(std::string name, std::string witness, long samples = 0,
                      std::uint64_t seed = 0) {
    return Verdict{std::move(name), false, std::move(witness), samples, seed};
  }
  explicit operator bool() const { return pass; }
};

inline Verdict merge_verdicts(std::string name, const std::vector<Verdict>& parts) {
  for (const auto& v : parts)
    if (!v.pass) return Verdict::fail(std::move(name), v.check + ": " + v.witness);
  return Verdict::ok(std::move(name));
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seeded generator; every sampled check records the seed it ran with.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(engine_);
  }
  // Uniform on [lo, hi] \ {0}.
  long long uniform_nonzero(long long lo, long long hi) {
    for (;;) {
      long long v = uniform(lo, hi);
      if (v != 0) return v;
    }
  }

 private:
  std::mt19937_64 engine_;
};

constexpr std::uint64_t kDefaultSeed = 0x5b7ace5eedULL;

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace skewbrace
