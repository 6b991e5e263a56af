#include "halolab/numeric.hpp"

#include "halolab/errors.hpp"

#include <boost/multiprecision/number.hpp>

#include <cmath>

namespace halolab {

BigInt big_pow(const BigInt& base, unsigned long exp) {
  BigInt r = 1, b = base;
  unsigned long e = exp;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

long long approx_digits(const BigInt& v) {
  if (v == 0) return 1;
  return static_cast<long long>(boost::multiprecision::msb(big_abs(v))) * 1233 / 4096 + 1;
}

Real log_gamma(Real z) {
  // Lift small arguments: lgamma(z) = lgamma(z+m) - sum log(z+i).
  Real shift = 0;
  while (z < 100) {
    shift += log(z);
    z += 1;
  }
  static const double num[10] = {1.0,  -1.0, 1.0,  -1.0, 5.0,
                                 -691.0, 7.0, -3617.0, 43867.0, -174611.0};
  static const double den[10] = {6.0,   30.0, 42.0, 30.0, 66.0,
                                 2730.0, 6.0, 510.0, 798.0, 330.0};
  // 0.5 * log(2*pi)
  static const Real half_log_two_pi =
      Real("0.91893853320467274178032973640561763986139747363778341281715");
  Real res = (z - Real(0.5)) * log(z) - z + half_log_two_pi;
  Real zp = z;
  const Real z2 = z * z;
  for (int k = 1; k <= 10; ++k) {
    res += Real(num[k - 1]) / (Real(den[k - 1]) * Real(2 * k * (2 * k - 1)) * zp);
    zp *= z2;
  }
  return res - shift;
}

Real log_factorial(const BigInt& n) {
  if (n < 2) return Real(0);
  return log_gamma(Real(n) + 1);
}

Real log_of_bigint(const BigInt& v) {
  if (v <= 0) throw InvalidInput("log_of_bigint: nonpositive");
  return log(Real(v));
}

Quantity Quantity::from_int(const BigInt& v) { return from_rational(Rational(v)); }

Quantity Quantity::from_rational(const Rational& v) {
  if (v <= 0) throw InvalidInput("Quantity: must be positive");
  Quantity q;
  q.exact_ = v;
  q.log_ = log_of_bigint(numerator(v)) - log_of_bigint(denominator(v));
  q.maybe_drop_exact();
  return q;
}

void Quantity::maybe_drop_exact() {
  if (!exact_) return;
  if (approx_digits(numerator(*exact_)) > kExactDigitCap ||
      approx_digits(denominator(*exact_)) > kExactDigitCap)
    exact_.reset();
}

Quantity Quantity::factorial(const BigInt& n) {
  if (n < 0) throw InvalidInput("factorial of negative");
  Real lg = log_factorial(n);
  // decimal digit estimate; stay exact only below the cap
  if (lg < Real(kExactDigitCap) * 2.30258) {
    BigInt r = 1;
    for (BigInt k = 2; k <= n; ++k) r *= k;
    Quantity q;
    q.exact_ = Rational(r);
    q.log_ = lg;
    return q;
  }
  return from_log(lg);
}

Quantity Quantity::gl_order(const BigInt& n, int q) {
  if (n < 0) throw InvalidInput("gl_order of negative");
  if (n == 0) return Quantity::from_int(1);
  if (n > 100000) {
    // log(prod (q^n - q^i)) = n^2 log q + sum log(1 - q^{i-n})
    Real lq = log(Real(q));
    Real acc = Real(n) * Real(n) * lq;
    for (BigInt i = 1; i <= n; ++i) {
      Real t = -Real(i) * lq;
      if (t < -200) break;
      acc += log(Real(1) - exp(t));
    }
    return from_log(acc);
  }
  unsigned long nn = static_cast<unsigned long>(n);
  BigInt qn = big_pow(q, nn);
  BigInt r = 1;
  BigInt qi = 1;
  for (unsigned long i = 0; i < nn; ++i) {
    r *= qn - qi;
    qi *= q;
  }
  return from_int(r);
}

Quantity Quantity::pow_int(const BigInt& base, const BigInt& exp) {
  if (base <= 0 || exp < 0) throw InvalidInput("pow_int domain");
  Real lg = Real(exp) * log_of_bigint(base);
  if (lg < Real(kExactDigitCap) * 2.30258 && exp < 1000000)
    return from_int(big_pow(base, static_cast<unsigned long>(exp)));
  return from_log(lg);
}

BigInt Quantity::exact_int() const {
  if (!exact_ || denominator(*exact_) != 1)
    throw InvalidInput("Quantity: exact integer unavailable");
  return numerator(*exact_);
}

Quantity Quantity::operator*(const Quantity& o) const {
  Quantity r;
  r.log_ = log_ + o.log_;
  if (exact_ && o.exact_) {
    r.exact_ = *exact_ * *o.exact_;
    r.maybe_drop_exact();
  } else {
    r.exact_.reset();
  }
  return r;
}

Quantity Quantity::operator/(const Quantity& o) const {
  Quantity r;
  r.log_ = log_ - o.log_;
  if (exact_ && o.exact_) {
    r.exact_ = *exact_ / *o.exact_;
    r.maybe_drop_exact();
  } else {
    r.exact_.reset();
  }
  return r;
}

std::string Quantity::to_string() const {
  if (exact_) {
    if (denominator(*exact_) == 1) return numerator(*exact_).str();
    return numerator(*exact_).str() + "/" + denominator(*exact_).str();
  }
  return "exp(" + log_.str(12) + ")";
}

BigInt StreamRng::below(const BigInt& bound, std::uint64_t a, std::uint64_t b,
                        std::uint64_t c) const {
  if (bound <= 0) throw InvalidInput("StreamRng::below: bound must be positive");
  if (bound == 1) return 0;
  const unsigned bits = boost::multiprecision::msb(bound) + 1;
  const unsigned words = (bits + 63) / 64 + 1;
  BigInt m = BigInt(1) << (64 * words);
  BigInt limit = m - m % bound;
  std::uint64_t counter = 0;
  for (;;) {
    BigInt v = 0;
    for (unsigned w = 0; w < words; ++w) {
      v <<= 64;
      v += word(a, b, c, counter++);
    }
    if (v < limit) return v % bound;
  }
}

}  // namespace halolab
