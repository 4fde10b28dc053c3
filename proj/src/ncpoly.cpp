#include "recalc/ncpoly.hpp"

#include <cctype>

namespace recalc {

Letter make_letter(GenClass c, int i, int j) {
  if (i < 0 || i > 15 || j < 0 || j > 15) throw std::out_of_range("generator index out of range");
  return static_cast<Letter>((static_cast<int>(c) << 8) | (i << 4) | j);
}

std::string class_name(GenClass c) {
  switch (c) {
  case GenClass::M: return "M";
  case GenClass::Minv: return "Minv";
  case GenClass::T: return "T";
  case GenClass::Tinv: return "Tinv";
  case GenClass::x: return "x";
  case GenClass::y: return "y";
  case GenClass::K: return "K";
  case GenClass::Q: return "Q";
  case GenClass::L: return "L";
  case GenClass::Linv: return "Linv";
  case GenClass::ainvM: return "ainvM";
  case GenClass::ainvT: return "ainvT";
  case GenClass::ainvL: return "ainvL";
  }
  return "?";
}

namespace {

bool class_from_name(const std::string &s, GenClass &out) {
  for (int c = 1; c <= 13; ++c) {
    if (class_name(static_cast<GenClass>(c)) == s) {
      out = static_cast<GenClass>(c);
      return true;
    }
  }
  return false;
}

int index_count(GenClass c) {
  if (c == GenClass::x || c == GenClass::y) return 1;
  if (is_inverse_scalar_class(c)) return 0;
  return 2;
}

} // namespace

bool is_operator_class(GenClass c) {
  return c == GenClass::K || c == GenClass::Q || c == GenClass::L || c == GenClass::Linv ||
         c == GenClass::ainvL;
}

bool is_function_class(GenClass c) { return !is_operator_class(c); }

bool is_inverse_scalar_class(GenClass c) {
  return c == GenClass::ainvM || c == GenClass::ainvT || c == GenClass::ainvL;
}

std::string letter_str(Letter l) {
  GenClass c = letter_class(l);
  std::string s = class_name(c);
  switch (index_count(c)) {
  case 0: return s;
  case 1: return s + "[" + std::to_string(letter_i(l)) + "]";
  default: return s + "[" + std::to_string(letter_i(l)) + "," + std::to_string(letter_j(l)) + "]";
  }
}

std::string word_str(const Word &w) {
  if (w.empty()) return "1";
  std::string s;
  for (Letter l : w) {
    if (!s.empty()) s += " ";
    s += letter_str(l);
  }
  return s;
}

NCPoly::NCPoly(const Coeff &c) {
  if (!c.is_zero()) terms_.emplace(Word(), c);
}

NCPoly NCPoly::word(const Word &w, const Coeff &c) {
  NCPoly p;
  if (!c.is_zero()) p.terms_.emplace(w, c);
  return p;
}

int NCPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

Coeff NCPoly::coeff(const Word &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Coeff() : it->second;
}

void NCPoly::add_term(const Word &w, const Coeff &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto &t : r.terms_) t.second = -t.second;
  return r;
}

NCPoly &NCPoly::operator+=(const NCPoly &o) {
  for (const auto &[w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly &NCPoly::operator-=(const NCPoly &o) {
  for (const auto &[w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly operator*(const NCPoly &a, const NCPoly &b) {
  PolyAccumulator acc;
  for (const auto &[u, c] : a.terms_)
    for (const auto &[v, d] : b.terms_) acc.add(u + v, c * d);
  return acc.take();
}

NCPoly operator*(const Coeff &s, const NCPoly &a) {
  NCPoly r;
  if (s.is_zero()) return r;
  for (const auto &[w, c] : a.terms_) {
    Coeff x = s * c;
    if (!x.is_zero()) r.terms_.emplace_hint(r.terms_.end(), w, std::move(x));
  }
  return r;
}

NCPoly NCPoly::map_coeffs(const std::function<Coeff(const Coeff &)> &f) const {
  NCPoly r;
  for (const auto &[w, c] : terms_) r.add_term(w, f(c));
  return r;
}

NCPoly NCPoly::substitute(const std::function<NCPoly(Letter)> &f) const {
  std::unordered_map<Letter, NCPoly> cache;
  auto image = [&](Letter l) -> const NCPoly & {
    auto it = cache.find(l);
    if (it == cache.end()) it = cache.emplace(l, f(l)).first;
    return it->second;
  };
  PolyAccumulator acc;
  for (const auto &[w, c] : terms_) {
    NCPoly prod(c);
    for (Letter l : w) {
      prod = prod * image(l);
      if (prod.is_zero()) break;
    }
    acc.add(prod);
  }
  return acc.take();
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[w, c] = *it;
    std::string cs = c.str();
    bool multi = c.size() > 1 || (c.is_scalar() && !c.scalar().is_polynomial()) ||
                 (c.is_scalar() && c.scalar().num().c.size() > 1);
    if (multi) cs = "(" + cs + ")";
    std::string term;
    if (w.empty()) term = cs;
    else if (c.is_one()) term = word_str(w);
    else if ((-c).is_one()) term = "-" + word_str(w);
    else term = cs + " * " + word_str(w);
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

void PolyAccumulator::add(const Word &w, const Coeff &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc_.try_emplace(w, c);
  if (!inserted) it->second += c;
}

void PolyAccumulator::add(const NCPoly &p, const Coeff &c) {
  if (c.is_one()) {
    for (const auto &[w, d] : p.terms()) add(w, d);
  } else {
    for (const auto &[w, d] : p.terms()) add(w, c * d);
  }
}

NCPoly PolyAccumulator::take() {
  NCPoly r;
  for (auto &[w, c] : acc_)
    if (!c.is_zero()) r.add_term(w, c);
  acc_.clear();
  return r;
}

namespace {

class PolyParser {
public:
  PolyParser(const std::string &s, const GeneratorResolver &resolver) : s_(s), resolver_(resolver) {}

  NCPoly run() {
    NCPoly v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string &what) { throw ParseError(what, pos_); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }
  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  static bool scalar_of(const NCPoly &p, Coeff &out) {
    if (p.is_zero()) {
      out = Coeff();
      return true;
    }
    if (p.degree() != 0) return false;
    out = p.constant();
    return true;
  }

  NCPoly expr() {
    NCPoly v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  NCPoly term() {
    NCPoly v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        NCPoly d = unary();
        Coeff c;
        if (!scalar_of(d, c) || c.is_zero() || !c.is_unit()) throw ParseError("division by a non-unit", at);
        v = c.inverse() * v;
      } else if (starts_primary()) {
        v = v * unary();
      } else {
        return v;
      }
    }
  }
  NCPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    NCPoly v = primary();
    if (eat('^')) {
      bool neg = eat('-');
      int e = integer();
      if (neg) {
        Coeff c;
        if (!scalar_of(v, c) || c.is_zero() || !c.is_unit()) fail("negative power of a non-unit");
        return NCPoly(c.pow(-e));
      }
      NCPoly r(1);
      for (int k = 0; k < e; ++k) r = r * v;
      return r;
    }
    return v;
  }
  NCPoly primary() {
    skip();
    if (eat('(')) {
      NCPoly v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return NCPoly(Coeff(QScalar(Rational(s_.substr(start, pos_ - start)))));
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected character '" + std::string(1, c) + "'");
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string id = s_.substr(start, pos_ - start);
    if (id == "q") return NCPoly(Coeff::q());
    Param p;
    if (param_from_name(id, p)) return NCPoly(Coeff::param(p));
    GenClass g;
    if (!class_from_name(id, g)) {
      pos_ = start;
      fail("unknown identifier '" + id + "'");
    }
    int need = index_count(g);
    int i = 0, j = 0;
    if (need > 0) {
      if (!eat('[')) fail("expected '[' after " + id);
      i = integer();
      if (need == 2) {
        if (!eat(',')) fail("expected ','");
        j = integer();
      }
      if (!eat(']')) fail("expected ']'");
      if (i < 1 || i > 15 || j > 15 || (need == 2 && j < 1)) fail("index out of range");
    }
    NCPoly value;
    if (resolver_ && resolver_(g, i, j, value)) return value;
    if (g == GenClass::Minv || g == GenClass::Linv || g == GenClass::Tinv)
      fail(id + " is not available in this presentation");
    return NCPoly::gen(g, i, j);
  }

  const std::string &s_;
  const GeneratorResolver &resolver_;
  std::size_t pos_ = 0;
};

} // namespace

NCPoly parse_ncpoly(const std::string &text, const GeneratorResolver &resolver) {
  return PolyParser(text, resolver).run();
}

Coeff parse_coeff(const std::string &text) {
  NCPoly p = parse_ncpoly(text);
  if (p.degree() > 0) throw ParseError("expected a scalar expression", 0);
  return p.constant();
}

} // namespace recalc
