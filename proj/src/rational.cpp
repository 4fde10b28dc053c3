#include "recalc/rational.hpp"

#include <functional>
#include <stdexcept>

namespace recalc {

namespace {

constexpr long long kSmallLimit = (1LL << 62);

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) { return v > -kSmallLimit && v < kSmallLimit; }

mpz_class to_mpz(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
  mpz_class r = static_cast<unsigned long>(u >> 64);
  r <<= 64;
  r += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
  return neg ? mpz_class(-r) : r;
}

} // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  set_small(n, d);
}

Rational::Rational(const mpq_class &v) { assign(v); }

Rational::Rational(const std::string &text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  if (v.get_den() == 0) throw std::domain_error("rational with zero denominator");
  v.canonicalize();
  assign(v);
}

void Rational::set_small(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  if (fits(n) && fits(d)) {
    num_ = static_cast<long long>(n);
    den_ = static_cast<long long>(d);
    big_.reset();
    return;
  }
  mpq_class v(to_mpz(n), to_mpz(d));
  big_ = std::make_shared<const mpq_class>(v);
  num_ = 0;
  den_ = 1;
}

void Rational::assign(const mpq_class &v) {
  const mpz_class &n = v.get_num();
  const mpz_class &d = v.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    long n64 = n.get_si();
    long d64 = d.get_si();
    if (fits(n64) && fits(d64)) {
      num_ = n64;
      den_ = d64;
      big_.reset();
      return;
    }
  }
  big_ = std::make_shared<const mpq_class>(v);
  num_ = 0;
  den_ = 1;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
  return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign(mpq_class(-*big_));
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational &Rational::operator+=(const Rational &o) {
  if (!big_ && !o.big_) {
    if (o.num_ == 0) return *this;
    if (den_ == 1 && o.den_ == 1) {
      __int128 s = (__int128)num_ + o.num_;
      if (fits(s)) {
        num_ = static_cast<long long>(s);
        return *this;
      }
    }
    set_small((__int128)num_ * o.den_ + (__int128)o.num_ * den_, (__int128)den_ * o.den_);
    return *this;
  }
  assign(to_mpq() + o.to_mpq());
  return *this;
}

Rational &Rational::operator-=(const Rational &o) { return *this += -o; }

Rational &Rational::operator*=(const Rational &o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      __int128 p = (__int128)num_ * o.num_;
      if (fits(p)) {
        num_ = static_cast<long long>(p);
        return *this;
      }
    }
    set_small((__int128)num_ * o.num_, (__int128)den_ * o.den_);
    return *this;
  }
  assign(to_mpq() * o.to_mpq());
  return *this;
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  return *this *= o.inverse();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  Rational r;
  if (big_) {
    r.assign(mpq_class(1) / *big_);
  } else {
    r.set_small(den_, num_);
  }
  return r;
}

Rational Rational::pow(int e) const {
  Rational base = e < 0 ? inverse() : *this;
  unsigned n = e < 0 ? -e : e;
  Rational r(1);
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

bool operator==(const Rational &a, const Rational &b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false; // normalized: a value is big iff it does not fit
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
  if (!a.big_ && !b.big_) {
    __int128 l = (__int128)a.num_ * b.den_;
    __int128 r = (__int128)b.num_ * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>()(big_->get_str());
  return std::hash<long long>()(num_) * 1000003u ^ std::hash<long long>()(den_);
}

} // namespace recalc
