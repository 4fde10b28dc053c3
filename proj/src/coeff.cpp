#include "recalc/coeff.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace recalc {

namespace {

constexpr std::array<std::string_view, kParamCount> kNames = {"eta", "eta0", "r", "xi",
                                                               "c1",  "c2",   "c3", "i"};

std::array<int, kParamCount> unpack(ParamKey k) {
  std::array<int, kParamCount> e{};
  for (int s = 0; s < kParamCount; ++s) e[s] = static_cast<std::int8_t>((k >> (8 * s)) & 0xff);
  return e;
}

ParamKey pack(const std::array<int, kParamCount> &e) {
  ParamKey k = 0;
  for (int s = 0; s < kParamCount; ++s) {
    if (e[s] < -127 || e[s] > 127) throw std::overflow_error("parameter exponent out of range");
    k |= static_cast<ParamKey>(static_cast<std::uint8_t>(static_cast<std::int8_t>(e[s]))) << (8 * s);
  }
  return k;
}

constexpr int kI = static_cast<int>(Param::i);

// Product of two monomials; returns the sign produced by i^2 = -1.
int mul_keys(ParamKey a, ParamKey b, ParamKey &out) {
  if (a == 0) {
    out = b;
    return 1;
  }
  if (b == 0) {
    out = a;
    return 1;
  }
  auto ea = unpack(a);
  auto eb = unpack(b);
  for (int s = 0; s < kParamCount; ++s) ea[s] += eb[s];
  int sign = 1;
  while (ea[kI] >= 2) {
    ea[kI] -= 2;
    sign = -sign;
  }
  while (ea[kI] < 0) {
    ea[kI] += 2;
    sign = -sign;
  }
  out = pack(ea);
  return sign;
}

} // namespace

std::string_view param_name(Param p) { return kNames[static_cast<int>(p)]; }

bool param_from_name(std::string_view name, Param &out) {
  for (int s = 0; s < kParamCount; ++s) {
    if (kNames[s] == name) {
      out = static_cast<Param>(s);
      return true;
    }
  }
  return false;
}

int key_exponent(ParamKey k, Param p) { return unpack(k)[static_cast<int>(p)]; }

ParamKey key_with(ParamKey k, Param p, int e) {
  auto v = unpack(k);
  v[static_cast<int>(p)] = e;
  return pack(v);
}

Coeff::Coeff(const QScalar &s) {
  if (!s.is_zero()) terms_.emplace_back(0, s);
}

Coeff Coeff::param(Param p, int e) {
  Coeff c;
  if (p == Param::i) {
    int sign = 1;
    while (e >= 2) {
      e -= 2;
      sign = -sign;
    }
    while (e < 0) {
      e += 2;
      sign = -sign;
    }
    c.terms_.emplace_back(key_with(0, p, e), QScalar(sign));
    return c;
  }
  c.terms_.emplace_back(key_with(0, p, e), QScalar(1));
  return c;
}

bool Coeff::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one();
}

bool Coeff::is_unit() const {
  return terms_.size() == 1 && key_exponent(terms_[0].first, Param::i) == 0;
}

QScalar Coeff::scalar() const {
  if (terms_.empty()) return QScalar();
  if (!is_scalar()) throw std::logic_error("coefficient depends on parameters: " + str());
  return terms_[0].second;
}

void Coeff::add_term(ParamKey k, const QScalar &c) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term &t, ParamKey key) { return t.first < key; });
  if (it != terms_.end() && it->first == k) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (!c.is_zero()) {
    terms_.insert(it, Term(k, c));
  }
}

Coeff Coeff::operator-() const {
  Coeff r = *this;
  for (auto &t : r.terms_) t.second = -t.second;
  return r;
}

Coeff &Coeff::operator+=(const Coeff &o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].first == o.terms_[0].first) {
    terms_[0].second += o.terms_[0].second;
    if (terms_[0].second.is_zero()) terms_.clear();
    return *this;
  }
  for (const auto &t : o.terms_) add_term(t.first, t.second);
  return *this;
}

Coeff &Coeff::operator-=(const Coeff &o) { return *this += -o; }

Coeff operator*(const Coeff &a, const Coeff &b) {
  Coeff r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    ParamKey k;
    int s = mul_keys(a.terms_[0].first, b.terms_[0].first, k);
    QScalar c = a.terms_[0].second * b.terms_[0].second;
    if (s < 0) c = -c;
    r.terms_.emplace_back(k, std::move(c));
    return r;
  }
  std::map<ParamKey, QScalar> acc;
  for (const auto &x : a.terms_) {
    for (const auto &y : b.terms_) {
      ParamKey k;
      int s = mul_keys(x.first, y.first, k);
      QScalar c = x.second * y.second;
      if (s < 0) c = -c;
      acc[k] += c;
    }
  }
  for (auto &[k, c] : acc)
    if (!c.is_zero()) r.terms_.emplace_back(k, std::move(c));
  return r;
}

Coeff &Coeff::operator*=(const Coeff &o) { return *this = *this * o; }

Coeff Coeff::inverse() const {
  if (terms_.size() != 1) throw std::domain_error("coefficient is not invertible: " + str());
  auto e = unpack(terms_[0].first);
  int ipow = e[kI];
  e[kI] = 0;
  for (auto &x : e) x = -x;
  Coeff r;
  r.terms_.emplace_back(pack(e), terms_[0].second.inverse());
  if (ipow) r *= -Coeff::param(Param::i); // 1/i = -i
  return r;
}

Coeff &Coeff::operator/=(const Coeff &o) {
  if (o.is_zero()) throw std::domain_error("coefficient division by zero");
  return *this *= o.inverse();
}

Coeff Coeff::pow(int e) const {
  Coeff base = e < 0 ? inverse() : *this;
  unsigned n = e < 0 ? -e : e;
  Coeff r(1);
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

Coeff Coeff::substitute(Param p, const Coeff &value) const {
  Coeff r;
  for (const auto &[k, c] : terms_) {
    int e = key_exponent(k, p);
    Coeff rest;
    rest.terms_.emplace_back(key_with(k, p, 0), c);
    r += e == 0 ? rest : rest * value.pow(e);
  }
  return r;
}

Coeff Coeff::eval_q(const Rational &q0) const {
  Coeff r;
  for (const auto &[k, c] : terms_) {
    Coeff t;
    t.terms_.emplace_back(k, QScalar(qs_eval(c, q0)));
    if (!t.terms_[0].second.is_zero()) r += t;
  }
  return r;
}

std::vector<Coeff> Coeff::expand_at_1(int order, int shift) const {
  std::vector<Coeff> out(order + 1);
  for (const auto &[k, c] : terms_) {
    auto s = qs_expand_at_1(c, order, shift);
    for (int j = 0; j <= order; ++j) {
      if (s[j].is_zero()) continue;
      Coeff t;
      t.terms_.emplace_back(k, QScalar(s[j]));
      out[j] += t;
    }
  }
  return out;
}

int Coeff::valuation_at_1() const {
  if (terms_.empty()) throw std::invalid_argument("valuation of zero coefficient");
  int v = qs_valuation_at_1(terms_[0].second);
  for (const auto &t : terms_) v = std::min(v, qs_valuation_at_1(t.second));
  return v;
}

std::string Coeff::str(bool compact) const {
  if (terms_.empty()) return "0";
  std::string out;
  const char *plus = compact ? "+" : " + ";
  for (const auto &[k, c] : terms_) {
    std::string mono;
    auto e = unpack(k);
    for (int s = 0; s < kParamCount; ++s) {
      if (e[s] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += std::string(kNames[s]);
      if (e[s] != 1) mono += "^" + std::to_string(e[s]);
    }
    std::string cs = c.str(compact);
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (c.is_one()) {
      term = mono;
    } else if ((-c).is_one()) {
      term = "-" + mono;
    } else {
      bool simple = c.is_polynomial() && c.num().c.size() == 1;
      term = (simple ? cs : "(" + cs + ")") + "*" + mono;
    }
    if (out.empty()) out = term;
    else if (term[0] == '-') out += (compact ? "-" : " - ") + term.substr(1);
    else out += plus + term;
  }
  return out;
}

std::size_t Coeff::hash() const {
  std::size_t h = terms_.size();
  for (const auto &[k, c] : terms_) h = h * 1000003u ^ (std::hash<ParamKey>()(k) + c.hash());
  return h;
}

} // namespace recalc
