#ifndef NILORB_POLY_HPP
#define NILORB_POLY_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "nilorb/rational.hpp"

namespace nilorb {

/// Sparse polynomial in at most four variables over Q. No zero coefficients
/// are stored; exponent vectors always have length nvars (trailing slots 0).
class Poly {
public:
  using Exps = std::array<int, 4>;

  explicit Poly(int nvars = 1);
  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int var);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exps, Rational>& terms() const { return terms_; }

  void add_term(const Exps& e, const Rational& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;

  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous(int degree) const;

  Rational eval(const std::vector<Rational>& point) const;
  Poly substituted_zero(int var) const;

  /// Nonzero single-term polynomials: (exponents, coefficient).
  std::optional<std::pair<Exps, Rational>> as_monomial() const;
  /// Bitmask of variables that actually occur.
  unsigned support_mask() const;

  std::string str(const std::vector<std::string>& names) const;

private:
  int nvars_;
  std::map<Exps, Rational> terms_;
};

/// Univariate polynomial over Q, coefficients in ascending degree, no
/// trailing zeros.
using UPoly = std::vector<Rational>;

void upoly_trim(UPoly& p);
int upoly_deg(const UPoly& p);  // -1 for zero
UPoly upoly_mul(const UPoly& a, const UPoly& b);
/// Division with remainder; throws on zero divisor.
std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b);
/// Monic gcd.
UPoly upoly_gcd(UPoly a, UPoly b);
UPoly upoly_derivative(const UPoly& p);
Rational upoly_eval(const UPoly& p, const Rational& x);
UPoly upoly_lcm(const UPoly& a, const UPoly& b);

/// Gcd (up to scalar) of homogeneous binary forms, not all zero. The gcd is
/// constant exactly when the forms have no common projective root over the
/// algebraic closure. Computed by splitting off powers of each variable and
/// taking a univariate gcd of the dehomogenizations.
Poly poly_gcd_binary(const std::vector<Poly>& forms);

}  // namespace nilorb

#endif
