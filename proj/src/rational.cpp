#include "nilorb/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace nilorb {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 abs128(i128 x) { return x < 0 ? u128(-x) : u128(x); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 a = abs128(v);
  mpz_class hi(static_cast<unsigned long>(a >> 64));
  mpz_class lo(static_cast<unsigned long>(a & 0xffffffffffffffffULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  set_from_i128(n, d);
}

Rational::Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this != &o) {
    n_ = o.n_;
    d_ = o.d_;
    big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  }
  return *this;
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (slash != std::string::npos && mpz_class(q.get_den()) == 0)
    throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  q.canonicalize();
  Rational r;
  r.set_big(q);
  return r;
}

void Rational::set_from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    n_ = 0;
    d_ = 1;
    big_.reset();
    return;
  }
  u128 g = gcd128(abs128(n), u128(d));
  i128 rn = n / i128(g);
  i128 rd = d / i128(g);
  if (abs128(rn) <= u128(SMALL_MAX) && u128(rd) <= u128(SMALL_MAX)) {
    n_ = static_cast<long long>(rn);
    d_ = static_cast<long long>(rd);
    big_.reset();
  } else {
    mpq_class q(mpz_from_i128(rn), mpz_from_i128(rd));
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

void Rational::set_big(const mpq_class& q) {
  big_ = std::make_unique<mpq_class>(q);
  demote();
}

void Rational::demote() {
  if (!big_) return;
  const mpz_class& num = big_->get_num();
  const mpz_class& den = big_->get_den();
  if (num.fits_slong_p() && den.fits_slong_p()) {
    long long n = num.get_si();
    long long d = den.get_si();
    if (n <= SMALL_MAX && n >= -SMALL_MAX && d <= SMALL_MAX) {
      n_ = n;
      d_ = d;
      big_.reset();
    }
  }
}

bool Rational::is_integer() const {
  return big_ ? big_->get_den() == 1 : d_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return n_ < 0 ? -1 : (n_ > 0 ? 1 : 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(static_cast<long>(n_), static_cast<long>(d_));
  q.canonicalize();
  return q;
}

mpz_class Rational::numerator() const { return to_mpq().get_num(); }
mpz_class Rational::denominator() const { return to_mpq().get_den(); }

long long Rational::to_int() const {
  if (big_ || d_ != 1) throw std::domain_error("Rational: not a small integer");
  return n_;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    i128 n = i128(n_) * o.d_ + i128(o.n_) * d_;
    i128 d = i128(d_) * o.d_;
    set_from_i128(n, d);
  } else {
    mpq_class q = to_mpq() + o.to_mpq();
    set_big(q);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!big_ && !o.big_) {
    i128 n = i128(n_) * o.d_ - i128(o.n_) * d_;
    i128 d = i128(d_) * o.d_;
    set_from_i128(n, d);
  } else {
    mpq_class q = to_mpq() - o.to_mpq();
    set_big(q);
  }
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    set_from_i128(i128(n_) * o.n_, i128(d_) * o.d_);
  } else {
    mpq_class q = to_mpq() * o.to_mpq();
    set_big(q);
  }
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  if (!big_ && !o.big_) {
    set_from_i128(i128(n_) * o.d_, i128(d_) * o.n_);
  } else {
    mpq_class q = to_mpq() / o.to_mpq();
    set_big(q);
  }
  return *this;
}

Rational Rational::operator-() const {
  Rational r(*this);
  if (r.big_)
    *r.big_ = -*r.big_;
  else
    r.n_ = -r.n_;
  return r;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
  return a.to_mpq() == b.to_mpq();
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_)
    return i128(a.n_) * b.d_ < i128(b.n_) * a.d_;
  return a.to_mpq() < b.to_mpq();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
  Rational one(1);
  return one /= *this;
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (d_ == 1) return std::to_string(n_);
  return std::to_string(n_) + "/" + std::to_string(d_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace nilorb
