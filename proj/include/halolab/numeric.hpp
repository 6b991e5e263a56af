#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace halolab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// 50 significant digits; wide enough for iterated-log curves at huge arguments.
using Real = boost::multiprecision::cpp_bin_float_50;

/// Exact values are kept while they stay below this many decimal digits;
/// larger quantities are carried in log-space only.
inline constexpr long kExactDigitCap = 1'000'000;

BigInt big_pow(const BigInt& base, unsigned long exp);
BigInt big_abs(const BigInt& v);
long long approx_digits(const BigInt& v);

/// log Gamma via the Stirling series (argument lifted above 100 first).
Real log_gamma(Real z);
/// natural log of n! usable for arbitrarily large n.
Real log_factorial(const BigInt& n);
Real log_of_bigint(const BigInt& v);

/// A positive quantity: exact rational while small enough, log_e always.
class Quantity {
public:
  Quantity() : log_(0) { exact_ = Rational(1); }
  static Quantity from_int(const BigInt& v);
  static Quantity from_rational(const Rational& v);
  static Quantity from_log(const Real& log_e) {
    Quantity q;
    q.exact_.reset();
    q.log_ = log_e;
    return q;
  }
  static Quantity factorial(const BigInt& n);
  /// |GL_n(F_q)| = prod_{i<n} (q^n - q^i).
  static Quantity gl_order(const BigInt& n, int q);
  static Quantity pow_int(const BigInt& base, const BigInt& exp);

  bool has_exact() const { return exact_.has_value(); }
  const Rational& exact() const { return *exact_; }
  BigInt exact_int() const;  // throws if not exact or not integral
  const Real& log_e() const { return log_; }
  double log_e_double() const { return static_cast<double>(log_); }

  Quantity operator*(const Quantity& o) const;
  Quantity operator/(const Quantity& o) const;

  std::string to_string() const;  // decimal string, or "exp(...)" in log lane

private:
  std::optional<Rational> exact_;
  Real log_;
  void maybe_drop_exact();
};

/// Counter-based deterministic generator: every word is a pure function of
/// (seed, a, b, c, counter), so coordinate extension is order-independent.
struct StreamRng {
  std::uint64_t seed = 0;

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  std::uint64_t word(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                     std::uint64_t counter) const {
    std::uint64_t h = splitmix64(seed ^ 0x243F6A8885A308D3ULL);
    h = splitmix64(h ^ a);
    h = splitmix64(h ^ b);
    h = splitmix64(h ^ c);
    return splitmix64(h ^ counter);
  }

  /// Uniform in [0, bound) by rejection; exact, reproducible.
  BigInt below(const BigInt& bound, std::uint64_t a, std::uint64_t b,
               std::uint64_t c) const;

  double unit_double(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
    return static_cast<double>(word(a, b, c, 0) >> 11) * 0x1.0p-53;
  }
};

}  // namespace halolab
