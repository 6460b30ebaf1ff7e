#ifndef NILORB_RATIONAL_HPP
#define NILORB_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace nilorb {

/// Exact rational scalar over Q.
///
/// Invariants: always reduced (gcd(|num|, den) = 1), denominator > 0, zero is
/// 0/1. Values whose numerator and denominator fit a machine word are kept
/// inline; anything larger spills to a GMP rational. All arithmetic is exact.
class Rational {
public:
  Rational() : n_(0), d_(1) {}
  Rational(long long n) : n_(n), d_(1) {}
  Rational(long long n, long long d);

  Rational(const Rational& o);
  Rational(Rational&& o) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept = default;

  /// Parses "p" or "p/q" with optional sign.
  static Rational from_string(const std::string& s);

  bool is_zero() const { return big_ ? sgn(*big_) == 0 : n_ == 0; }
  bool is_one() const { return big_ ? *big_ == 1 : (n_ == 1 && d_ == 1); }
  bool is_integer() const;
  int sign() const;

  /// True when the value fits the inline representation.
  bool is_small() const { return !big_; }
  long long num_small() const { return n_; }
  long long den_small() const { return d_; }

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  /// Integer value; valid only when is_integer() and small.
  long long to_int() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const;
  Rational inverse() const;

  std::string str() const;

private:
  // Inline value n_/d_ is reduced with d_ > 0 and both within SMALL_MAX.
  // When big_ is set it holds the canonical value and n_/d_ are ignored.
  long long n_ = 0;
  long long d_ = 1;
  std::unique_ptr<mpq_class> big_;

  static constexpr long long SMALL_MAX = (1LL << 62);

  void set_from_i128(__int128 n, __int128 d);
  void set_big(const mpq_class& q);
  void demote();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace nilorb

#endif
