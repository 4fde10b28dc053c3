#include "recalc/qscalar.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace recalc {

namespace {

using Poly = std::vector<Rational>; // ordinary polynomial, low degree first

void trim_poly(Poly &p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly &a, const Poly &b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim_poly(r);
  return r;
}

// a = quot * b + rem
void poly_divmod(Poly a, const Poly &b, Poly &quot, Poly &rem) {
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  Rational inv = b.back().inverse();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational f = a.back() * inv;
    quot[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    trim_poly(a);
  }
  trim_poly(quot);
  rem = std::move(a);
}

void make_monic(Poly &p) {
  if (p.empty() || p.back().is_one()) return;
  Rational inv = p.back().inverse();
  for (auto &c : p) c *= inv;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly q, r;
    poly_divmod(std::move(a), b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

bool is_unit_poly(const Poly &p) { return p.size() == 1 && p[0].is_one(); }

Poly taylor_at_1(const Poly &p) {
  // coefficients of p(1 + h)
  Poly r(p.size(), Rational(0));
  Poly binom{Rational(1)};
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) {
      Poly next(k + 1, Rational(0));
      for (std::size_t j = 0; j < k; ++j) {
        next[j] += binom[j];
        next[j + 1] += binom[j];
      }
      binom = std::move(next);
    }
    if (p[k].is_zero()) continue;
    for (std::size_t j = 0; j <= k; ++j) r[j] += p[k] * binom[j];
  }
  trim_poly(r);
  return r;
}

Poly power_series_at_1(int e, int terms) {
  // (1 + h)^e truncated to the given number of terms
  Poly r(terms, Rational(0));
  Rational b(1);
  for (int j = 0; j < terms; ++j) {
    r[j] = b;
    b = b * Rational(e - j) / Rational(j + 1);
  }
  return r;
}

Poly series_mul(const Poly &a, const Poly &b, int terms) {
  Poly r(terms, Rational(0));
  for (int i = 0; i < terms && i < (int)a.size(); ++i)
    for (int j = 0; i + j < terms && j < (int)b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

int valuation(const Poly &p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].is_zero()) return static_cast<int>(i);
  return -1;
}

std::string coef_str(const Rational &c) { return c.str(); }

} // namespace

LaurentPoly LaurentPoly::monomial(const Rational &a, int e) {
  LaurentPoly p;
  if (!a.is_zero()) {
    p.lo = e;
    p.c.push_back(a);
  }
  return p;
}

void LaurentPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  std::size_t k = 0;
  while (k < c.size() && c[k].is_zero()) ++k;
  if (k > 0) {
    c.erase(c.begin(), c.begin() + static_cast<long>(k));
    lo += static_cast<int>(k);
  }
  if (c.empty()) lo = 0;
}

LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  LaurentPoly r;
  r.lo = std::min(a.lo, b.lo);
  int hi = std::max(a.hi(), b.hi());
  r.c.assign(hi - r.lo + 1, Rational(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[a.lo - r.lo + i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[b.lo - r.lo + i] += b.c[i];
  r.trim();
  return r;
}

LaurentPoly scale(const LaurentPoly &a, const Rational &s) {
  if (s.is_zero()) return {};
  LaurentPoly r = a;
  for (auto &x : r.c) x *= s;
  return r;
}

LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) {
  return a + scale(b, Rational(-1));
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly r;
  r.lo = a.lo + b.lo;
  r.c = poly_mul(a.c, b.c);
  r.trim();
  return r;
}

QScalar::QScalar(long long v) : QScalar(Rational(v)) {}

QScalar::QScalar(const Rational &v) : num_(LaurentPoly::monomial(v, 0)) {}

QScalar::QScalar(LaurentPoly num) : num_(std::move(num)) { num_.trim(); }

QScalar::QScalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  num_.trim();
  den_.trim();
  normalize();
}

QScalar QScalar::q(int e) { return QScalar(LaurentPoly::monomial(Rational(1), e)); }

bool QScalar::is_one() const {
  return is_polynomial() && num_.lo == 0 && num_.c.size() == 1 && num_.c[0].is_one();
}

std::optional<Rational> QScalar::constant() const {
  if (is_zero()) return Rational(0);
  if (is_polynomial() && num_.lo == 0 && num_.c.size() == 1) return num_.c[0];
  return std::nullopt;
}

void QScalar::normalize() {
  if (den_.is_zero()) throw std::domain_error("QScalar division by zero");
  if (num_.is_zero()) {
    den_ = LaurentPoly::monomial(Rational(1), 0);
    return;
  }
  int shift = num_.lo - den_.lo;
  Poly n = num_.c;
  Poly d = den_.c;
  if (d.size() > 1) {
    Poly g = poly_gcd(n, d);
    if (!is_unit_poly(g)) {
      Poly q, r;
      poly_divmod(n, g, q, r);
      n = std::move(q);
      poly_divmod(d, g, q, r);
      d = std::move(q);
    }
  }
  Rational lc = d.back();
  if (!lc.is_one()) {
    Rational inv = lc.inverse();
    for (auto &c : n) c *= inv;
    for (auto &c : d) c *= inv;
  }
  num_.lo = shift;
  num_.c = std::move(n);
  num_.trim();
  den_.lo = 0;
  den_.c = std::move(d);
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  for (auto &c : r.num_.c) c = -c;
  return r;
}

QScalar &QScalar::operator+=(const QScalar &o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ + o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ = num_ + o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

QScalar &QScalar::operator-=(const QScalar &o) { return *this += -o; }

QScalar &QScalar::operator*=(const QScalar &o) {
  if (is_zero() || o.is_zero()) return *this = QScalar();
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QScalar &QScalar::operator/=(const QScalar &o) {
  if (o.is_zero()) throw std::domain_error("QScalar division by zero");
  return *this *= o.inverse();
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw std::domain_error("QScalar division by zero");
  return QScalar(den_, num_);
}

QScalar QScalar::pow(int e) const {
  QScalar base = e < 0 ? inverse() : *this;
  unsigned n = e < 0 ? -e : e;
  QScalar r(1);
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

std::string format_laurent(const LaurentPoly &p, const std::string &var, bool compact) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = static_cast<int>(p.c.size()) - 1; k >= 0; --k) {
    const Rational &c = p.c[k];
    if (c.is_zero()) continue;
    int e = p.lo + k;
    bool neg = c.sign() < 0;
    Rational a = neg ? -c : c;
    std::string term;
    if (e == 0) {
      term = coef_str(a);
    } else {
      std::string m = e == 1 ? var : var + "^" + std::to_string(e);
      term = a.is_one() ? m : coef_str(a) + "*" + m;
    }
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else if (compact) {
      out += (neg ? "-" : "+") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

std::string QScalar::str(bool compact) const {
  std::string n = format_laurent(num_, "q", compact);
  if (is_polynomial()) return n;
  std::string d = format_laurent(den_, "q", compact);
  bool multi = num_.c.size() - std::count_if(num_.c.begin(), num_.c.end(),
                                             [](const Rational &c) { return c.is_zero(); }) > 1;
  if (multi) n = "(" + n + ")";
  return n + "/(" + d + ")";
}

std::size_t QScalar::hash() const {
  std::size_t h = std::hash<int>()(num_.lo);
  for (const auto &c : num_.c) h = h * 31 + c.hash();
  for (const auto &c : den_.c) h = h * 37 + c.hash();
  return h;
}

namespace {

class QParser {
public:
  explicit QParser(const std::string &s) : s_(s) {}

  QScalar run() {
    QScalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string &what) {
    throw std::invalid_argument("cannot parse scalar '" + s_ + "' at " + std::to_string(pos_) +
                                ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  QScalar expr() {
    QScalar v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  QScalar term() {
    QScalar v = unary();
    for (;;) {
      if (eat('*')) v *= unary();
      else if (eat('/')) v /= unary();
      else return v;
    }
  }
  QScalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    QScalar v = primary();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(s_.substr(start, pos_ - start));
      v = v.pow(neg ? -e : e);
    }
    return v;
  }
  QScalar primary() {
    skip();
    if (eat('(')) {
      QScalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (eat('q')) return QScalar::q();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number, q or '('");
    return QScalar(Rational(s_.substr(start, pos_ - start)));
  }

  const std::string &s_;
  std::size_t pos_ = 0;
};

} // namespace

QScalar QScalar::parse(const std::string &text) { return QParser(text).run(); }

QScalar q_int(int k) {
  int a = k < 0 ? -k : k;
  LaurentPoly p;
  if (a > 0) {
    p.lo = -(a - 1);
    p.c.assign(2 * a - 1, Rational(0));
    for (int j = 0; j < 2 * a - 1; j += 2) p.c[j] = Rational(1);
  }
  QScalar r(p);
  return k < 0 ? -r : r;
}

QScalar q_lambda() { return QScalar::q(1) - QScalar::q(-1); }

Rational qs_eval(const QScalar &f, const Rational &q0) {
  if (q0.is_zero()) throw PoleError("evaluation at q = 0 is not supported");
  auto horner = [&](const LaurentPoly &p) {
    Rational v(0);
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) v = v * q0 + *it;
    return v * q0.pow(p.lo);
  };
  Rational d = horner(f.den());
  if (d.is_zero())
    throw PoleError("pole at q = " + q0.str() + ": denominator " +
                    format_laurent(f.den(), "q", false) + " vanishes");
  return horner(f.num()) / d;
}

std::vector<Rational> qs_expand_at_1(const QScalar &f, int order, int shift) {
  if (order < 0) throw std::invalid_argument("expansion order must be nonnegative");
  std::vector<Rational> out(order + 1, Rational(0));
  if (f.is_zero()) return out;
  Poly d = taylor_at_1(f.den().c);
  int vd = valuation(d);
  Poly dred(d.begin() + vd, d.end());
  int need = std::max(order - shift + vd, vd - shift - 1) + 1;
  if (need <= 0) return out;
  Poly n = series_mul(taylor_at_1(f.num().c), power_series_at_1(f.num().lo, need), need);
  // n / dred as a power series
  Poly qs(need, Rational(0));
  Rational inv = dred[0].inverse();
  for (int k = 0; k < need; ++k) {
    Rational acc = k < (int)n.size() ? n[k] : Rational(0);
    for (int j = 1; j <= k && j < (int)dred.size(); ++j) acc -= dred[j] * qs[k - j];
    qs[k] = acc * inv;
  }
  for (int k = 0; k < need; ++k) {
    int e = k + shift - vd;
    if (e < 0) {
      if (!qs[k].is_zero())
        throw PoleError("pole at q = 1 of order " + std::to_string(-e) + " in " + f.str());
      continue;
    }
    if (e <= order) out[e] = qs[k];
  }
  return out;
}

int qs_valuation_at_1(const QScalar &f) {
  if (f.is_zero()) throw std::invalid_argument("valuation of zero");
  return valuation(taylor_at_1(f.num().c)) - valuation(taylor_at_1(f.den().c));
}

} // namespace recalc
