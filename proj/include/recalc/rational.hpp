#ifndef RECALC_RATIONAL_HPP
#define RECALC_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>

namespace recalc {

// Exact rational number.  Values whose numerator and denominator fit in
// 62 bits are kept inline; anything larger is promoted to a shared GMP
// rational.  All results are reduced with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long long v) : num_(v) {} // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);
  explicit Rational(const mpq_class &v);
  explicit Rational(const std::string &text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  std::string str() const;
  double to_double() const;

  Rational operator-() const;
  Rational &operator+=(const Rational &o);
  Rational &operator-=(const Rational &o);
  Rational &operator*=(const Rational &o);
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b);
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

  Rational inverse() const;
  Rational pow(int e) const;

  // Numerator/denominator as GMP integers (always available).
  mpz_class numerator() const;
  mpz_class denominator() const;

  std::size_t hash() const;

private:
  void assign(const mpq_class &v);
  void set_small(__int128 n, __int128 d);

  long long num_ = 0;
  long long den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

} // namespace recalc

#endif
