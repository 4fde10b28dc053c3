#ifndef RECALC_QSCALAR_HPP
#define RECALC_QSCALAR_HPP

#include "recalc/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace recalc {

// Laurent polynomial c[0] q^lo + c[1] q^(lo+1) + ...  Nonzero values have
// nonzero first and last coefficients; zero is the empty vector with lo = 0.
struct LaurentPoly {
  int lo = 0;
  std::vector<Rational> c;

  static LaurentPoly monomial(const Rational &a, int e);
  bool is_zero() const { return c.empty(); }
  int hi() const { return lo + static_cast<int>(c.size()) - 1; }
  const Rational &lead() const { return c.back(); }
  void trim();

  friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;
};

LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly scale(const LaurentPoly &a, const Rational &s);

class PoleError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Element of Q(q).  Canonical form: value = num / den where den is a monic
// ordinary polynomial with den(0) != 0 and gcd(num, den) = 1.  All powers of
// q are carried by num, so equal values have identical representations.
class QScalar {
public:
  QScalar() = default;
  QScalar(long long v); // NOLINT(google-explicit-constructor)
  QScalar(const Rational &v); // NOLINT(google-explicit-constructor)
  explicit QScalar(LaurentPoly num);
  QScalar(LaurentPoly num, LaurentPoly den);

  static QScalar q(int e = 1);
  static QScalar parse(const std::string &text);

  const LaurentPoly &num() const { return num_; }
  const LaurentPoly &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_.c.size() == 1; }
  // A nonzero rational constant, i.e. no q-dependence at all.
  std::optional<Rational> constant() const;

  QScalar operator-() const;
  QScalar &operator+=(const QScalar &o);
  QScalar &operator-=(const QScalar &o);
  QScalar &operator*=(const QScalar &o);
  QScalar &operator/=(const QScalar &o);
  friend QScalar operator+(QScalar a, const QScalar &b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar &b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar &b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar &b) { return a /= b; }
  friend bool operator==(const QScalar &, const QScalar &) = default;

  QScalar inverse() const;
  QScalar pow(int e) const;

  std::string str(bool compact = false) const;
  std::size_t hash() const;

private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_{0, {Rational(1)}};
};

// k_q = (q^k - q^-k)/(q - q^-1), as a Laurent polynomial.
QScalar q_int(int k);
// lambda = q - q^-1
QScalar q_lambda();

Rational qs_eval(const QScalar &f, const Rational &q0);

// Coefficients c_0..c_order of (q-1)^shift * f in powers of h = q - 1.
std::vector<Rational> qs_expand_at_1(const QScalar &f, int order, int shift = 0);
// Order of vanishing of f at q = 1 (negative for a pole).  f must be nonzero.
int qs_valuation_at_1(const QScalar &f);

std::string format_laurent(const LaurentPoly &p, const std::string &var, bool compact);

} // namespace recalc

#endif
