#ifndef RECALC_NCPOLY_HPP
#define RECALC_NCPOLY_HPP

#include "recalc/coeff.hpp"

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace recalc {

// Generator classes.  The numeric value is the class precedence of the
// monomial order: function classes come first and operator classes after
// them, so normal words read (functions)(operators).  The adjoined inverses
// of a_m(.) sit at the end of their side.
enum class GenClass : int {
  M = 1,
  Minv = 2,
  T = 3,
  Tinv = 4,
  ainvT = 5,
  x = 6,
  y = 7,
  ainvM = 8,
  K = 9,
  Q = 10,
  L = 11,
  Linv = 12,
  ainvL = 13,
};

// A letter packs class and indices: class << 8 | i << 4 | j, indices 1-based
// (0 where the class has no such index).
using Letter = char16_t;
using Word = std::u16string;

Letter make_letter(GenClass c, int i = 0, int j = 0);
inline GenClass letter_class(Letter l) { return static_cast<GenClass>(l >> 8); }
inline int letter_i(Letter l) { return (l >> 4) & 0xf; }
inline int letter_j(Letter l) { return l & 0xf; }
std::string class_name(GenClass c);
std::string letter_str(Letter l);
std::string word_str(const Word &w);
bool is_operator_class(GenClass c);  // K, Q, L, Linv, ainvL
bool is_function_class(GenClass c);  // everything else
bool is_inverse_scalar_class(GenClass c);

// Degree-lexicographic comparison: returns true when a < b.
struct DegLex {
  bool operator()(const Word &a, const Word &b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word &w) const { return std::hash<std::u16string>()(w); }
};

class NCPoly {
public:
  using Map = std::map<Word, Coeff, DegLex>;

  NCPoly() = default;
  NCPoly(const Coeff &c); // NOLINT(google-explicit-constructor)
  NCPoly(long long v) : NCPoly(Coeff(v)) {} // NOLINT(google-explicit-constructor)
  NCPoly(const QScalar &v) : NCPoly(Coeff(v)) {} // NOLINT(google-explicit-constructor)
  static NCPoly word(const Word &w, const Coeff &c = Coeff(1));
  static NCPoly gen(GenClass c, int i = 0, int j = 0) { return word(Word(1, make_letter(c, i, j))); }

  const Map &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int degree() const; // -1 for zero
  Coeff coeff(const Word &w) const;
  // Coefficient of the empty word.
  Coeff constant() const { return coeff(Word()); }
  // Largest word in the order (requires nonzero).
  const Word &leading_word() const { return terms_.rbegin()->first; }

  void add_term(const Word &w, const Coeff &c);
  NCPoly operator-() const;
  NCPoly &operator+=(const NCPoly &o);
  NCPoly &operator-=(const NCPoly &o);
  friend NCPoly operator+(NCPoly a, const NCPoly &b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly &b) { return a -= b; }
  friend NCPoly operator*(const NCPoly &a, const NCPoly &b);
  friend NCPoly operator*(const Coeff &s, const NCPoly &a);
  friend bool operator==(const NCPoly &, const NCPoly &) = default;

  NCPoly map_coeffs(const std::function<Coeff(const Coeff &)> &f) const;
  // Algebra homomorphism of the free algebra defined on letters.
  NCPoly substitute(const std::function<NCPoly(Letter)> &f) const;

  std::string str() const;

private:
  Map terms_;
};

NCPoly operator*(const NCPoly &a, const NCPoly &b);
NCPoly operator*(const Coeff &s, const NCPoly &a);

// Unordered accumulator used on hot paths.
class PolyAccumulator {
public:
  void add(const Word &w, const Coeff &c);
  void add(const NCPoly &p, const Coeff &c = Coeff(1));
  NCPoly take();

private:
  std::unordered_map<Word, Coeff, WordHash> acc_;
};

struct ParseError : std::invalid_argument {
  ParseError(const std::string &what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// Resolves generators whose value is not a single letter (e.g. Minv[i,j]).
using GeneratorResolver = std::function<bool(GenClass, int, int, NCPoly &)>;

NCPoly parse_ncpoly(const std::string &text, const GeneratorResolver &resolver = nullptr);
Coeff parse_coeff(const std::string &text);

} // namespace recalc

#endif
