#ifndef RECALC_COEFF_HPP
#define RECALC_COEFF_HPP

#include "recalc/qscalar.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace recalc {

// Central constants adjoined to Q(q).  `i` is the imaginary unit (i^2 = -1);
// every other parameter is a free transcendental constant.
enum class Param : int { eta = 0, eta0, r, xi, c1, c2, c3, i, count };

inline constexpr int kParamCount = static_cast<int>(Param::count);
std::string_view param_name(Param p);
bool param_from_name(std::string_view name, Param &out);

// Exponent vector of a parameter monomial, packed as eight signed bytes.
using ParamKey = std::uint64_t;

int key_exponent(ParamKey k, Param p);
ParamKey key_with(ParamKey k, Param p, int e);

// Laurent polynomial in the parameters with coefficients in Q(q).
class Coeff {
public:
  using Term = std::pair<ParamKey, QScalar>;

  Coeff() = default;
  Coeff(long long v) : Coeff(QScalar(v)) {} // NOLINT(google-explicit-constructor)
  Coeff(const QScalar &s); // NOLINT(google-explicit-constructor)
  static Coeff param(Param p, int e = 1);
  static Coeff q(int e = 1) { return Coeff(QScalar::q(e)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // True when this is c * (parameter monomial) with c != 0.
  bool is_unit() const;
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  QScalar scalar() const; // requires is_scalar()
  const std::vector<Term> &terms() const { return terms_; }

  Coeff operator-() const;
  Coeff &operator+=(const Coeff &o);
  Coeff &operator-=(const Coeff &o);
  Coeff &operator*=(const Coeff &o);
  Coeff &operator/=(const Coeff &o); // divisor must be a unit
  friend Coeff operator+(Coeff a, const Coeff &b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff &b) { return a -= b; }
  friend Coeff operator*(const Coeff &a, const Coeff &b);
  friend Coeff operator/(Coeff a, const Coeff &b) { return a /= b; }
  friend bool operator==(const Coeff &, const Coeff &) = default;

  Coeff inverse() const; // requires is_unit()
  Coeff pow(int e) const;

  // Replace p by the given value (negative powers need a unit value).
  Coeff substitute(Param p, const Coeff &value) const;
  // Set q to a rational value in every coefficient.
  Coeff eval_q(const Rational &q0) const;
  // Coefficient of h^k, k = 0..order, of (q-1)^shift times this, where h = q - 1.
  std::vector<Coeff> expand_at_1(int order, int shift = 0) const;
  // Minimal order of vanishing at q = 1 over all terms.
  int valuation_at_1() const;

  // Number of terms (for display decisions).
  std::size_t size() const { return terms_.size(); }
  std::string str(bool compact = false) const;
  std::size_t hash() const;

private:
  void add_term(ParamKey k, const QScalar &c);
  std::vector<Term> terms_; // sorted by key, no zero coefficients
};

Coeff operator*(const Coeff &a, const Coeff &b);

} // namespace recalc

#endif
