#include "nilorb/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nilorb {

Poly::Poly(int nvars) : nvars_(nvars) {
  if (nvars < 1 || nvars > 4) throw std::invalid_argument("Poly: 1..4 variables");
}

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term({0, 0, 0, 0}, c);
  return p;
}

Poly Poly::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw std::invalid_argument("Poly: bad variable");
  Poly p(nvars);
  Exps e{0, 0, 0, 0};
  e[var] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void Poly::add_term(const Exps& e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exps e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]};
      r.add_term(e, c1 * c2);
    }
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
  return d;
}

bool Poly::is_homogeneous(int degree) const {
  for (const auto& [e, c] : terms_)
    if (e[0] + e[1] + e[2] + e[3] != degree) return false;
  return true;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  if (int(point.size()) != nvars_) throw std::invalid_argument("Poly: bad point");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < nvars_; ++v)
      for (int k = 0; k < e[v]; ++k) t *= point[v];
    acc += t;
  }
  return acc;
}

Poly Poly::substituted_zero(int var) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (e[var] == 0) r.add_term(e, c);
  return r;
}

std::optional<std::pair<Poly::Exps, Rational>> Poly::as_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  return *terms_.begin();
}

unsigned Poly::support_mask() const {
  unsigned m = 0;
  for (const auto& [e, c] : terms_)
    for (int v = 0; v < nvars_; ++v)
      if (e[v] > 0) m |= 1u << v;
  return m;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      os << "*" << (v < int(names.size()) ? names[v] : "x" + std::to_string(v));
      if (e[v] > 1) os << "^" << e[v];
    }
  }
  return os.str();
}

void upoly_trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int upoly_deg(const UPoly& p) { return int(p.size()) - 1; }

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  upoly_trim(r);
  return r;
}

std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw std::invalid_argument("upoly: division by zero");
  UPoly rem = a, quo;
  upoly_trim(rem);
  int db = upoly_deg(b);
  if (upoly_deg(rem) >= db) quo.assign(rem.size() - db, Rational(0));
  Rational lead_inv = b.back().inverse();
  while (upoly_deg(rem) >= db) {
    int k = upoly_deg(rem) - db;
    Rational f = rem.back() * lead_inv;
    quo[k] = f;
    for (int i = 0; i <= db; ++i) rem[k + i] -= f * b[i];
    upoly_trim(rem);
  }
  upoly_trim(quo);
  return {quo, rem};
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  upoly_trim(a);
  upoly_trim(b);
  while (!b.empty()) {
    UPoly r = upoly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

UPoly upoly_derivative(const UPoly& p) {
  UPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational((long long)i));
  upoly_trim(d);
  return d;
}

Rational upoly_eval(const UPoly& p, const Rational& x) {
  Rational acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

UPoly upoly_lcm(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly g = upoly_gcd(a, b);
  return upoly_mul(upoly_divmod(a, g).first, b);
}

Poly poly_gcd_binary(const std::vector<Poly>& forms) {
  int minA = -1, minB = -1;
  UPoly g;
  bool any = false;
  for (const Poly& f : forms) {
    if (f.nvars() != 2) throw std::invalid_argument("poly_gcd_binary: need 2 variables");
    if (f.is_zero()) continue;
    if (!f.is_homogeneous(f.total_degree()))
      throw std::invalid_argument("poly_gcd_binary: forms must be homogeneous");
    any = true;
    int a = f.total_degree(), b = f.total_degree();
    for (const auto& [e, c] : f.terms()) {
      a = std::min(a, e[0]);
      b = std::min(b, e[1]);
    }
    minA = minA < 0 ? a : std::min(minA, a);
    minB = minB < 0 ? b : std::min(minB, b);
    // Reduced part has nonzero constant and leading univariate coefficients.
    UPoly u(size_t(f.total_degree() - a - b) + 1, Rational(0));
    for (const auto& [e, c] : f.terms()) u[size_t(e[1] - b)] += c;
    g = g.empty() ? u : upoly_gcd(g, u);
  }
  if (!any) throw std::invalid_argument("poly_gcd_binary: all forms zero");
  Poly result(2);
  int dg = upoly_deg(g);
  for (int i = 0; i <= dg; ++i) {
    if (g[size_t(i)].is_zero()) continue;
    Poly::Exps e{minA + dg - i, minB + i, 0, 0};
    result.add_term(e, g[size_t(i)]);
  }
  if (result.is_zero()) result = Poly::constant(2, Rational(1));
  return result;
}

}  // namespace nilorb
