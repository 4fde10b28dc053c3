#ifndef RECALC_CLIMIT_HPP
#define RECALC_CLIMIT_HPP

#include "recalc/bdalg.hpp"

#include <functional>
#include <map>
#include <optional>

namespace recalc {

// X = I - (q - q^-1) K for the operator class X (L or Q), and
// eta = 1 - (q - q^-1) eta0 in every coefficient.
NCPoly shift_to_K(const NCPoly &p, GenClass from);
std::vector<NCPoly> shift_to_K(const std::vector<NCPoly> &rels, GenClass from);
// K = (I - X) / (q - q^-1), eta0 = (1 - eta) / (q - q^-1).
NCPoly unshift_from_K(const NCPoly &p, GenClass to);

// Relations expanded in h = q - 1.  Each relation is divided by its lowest
// power h^v; leading is the h^0 part of the result and next the h^1 part.
struct HExpansion {
  std::vector<NCPoly> source;
  std::vector<int> valuation;
  std::vector<NCPoly> leading, next;
};
// Throws PoleError naming the relation when a coefficient has a pole at q = 1.
HExpansion limit_relations(const std::vector<NCPoly> &rels);
// Leading parts of all relations of a shifted presentation, grouped.
struct ClassicalSystem {
  std::vector<NCPoly> op, fn, ofp;
};
ClassicalSystem classical_system(const BDPresentation &P);

// First element of a outside the linear span of b.
std::optional<NCPoly> outside_span(const std::vector<NCPoly> &a, const std::vector<NCPoly> &b);
// True when both lists span the same subspace of the free algebra.
bool same_span(const std::vector<NCPoly> &a, const std::vector<NCPoly> &b);

// Classical targets written out in index form.
// [K_ij, K_kl] = d_kj K_il - d_il K_kj
std::vector<NCPoly> gl_limit_target(int N);
// x_i x_j - x_j x_i over the given class and index shape
std::vector<NCPoly> commutative_target(const std::vector<Letter> &letters);
std::vector<NCPoly> anticommutative_target(const std::vector<Letter> &letters);
// [K_kl, x_i] = eta0 d_kl x_i + d_il x_k
std::vector<NCPoly> ell_act_target(int N);
// [K_kl, M_ij] = d_il M_kj - d_kj M_il
std::vector<NCPoly> adjoint_limit_target(int N);

// Commutative polynomials in a fixed number of variables.
class CPoly {
public:
  using Mono = std::vector<int>;
  CPoly() = default;
  explicit CPoly(int nvars) : n_(nvars) {}
  static CPoly constant(int nvars, const Coeff &c);
  static CPoly var(int nvars, int v);
  static CPoly monomial(const Mono &m);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, Coeff> &terms() const { return terms_; }
  CPoly derivative(int v) const;
  CPoly &operator+=(const CPoly &o);
  friend CPoly operator+(CPoly a, const CPoly &b) { return a += b; }
  friend CPoly operator-(const CPoly &a, const CPoly &b);
  friend CPoly operator*(const CPoly &a, const CPoly &b);
  friend CPoly operator*(const Coeff &c, const CPoly &a);
  friend bool operator==(const CPoly &, const CPoly &) = default;
  std::string str() const;

private:
  void add(const Mono &m, const Coeff &c);
  int n_ = 0;
  std::map<Mono, Coeff> terms_;
};

using DiffOp = std::function<CPoly(const CPoly &)>;
DiffOp multiply_by(const CPoly &f);

// Letters realized as differential operators on polynomials in nvars variables.
struct OperatorModel {
  int nvars = 0;
  std::map<Letter, DiffOp> ops;
};
// x_i, K_ij = x_i d_j + eta0 d_ij (x . d)
OperatorModel vector_field_model(int N);
// M_ij, K_ij = m_is d/dm_js - m_sj d/dm_si
OperatorModel coadjoint_model(int N);
// N = 2: M and k_sign * K in the compact parameterization by x_1..x_3 and
// X_i = e_ijk x_j d_k.
OperatorModel su2_model(int k_sign = -1);
// X_i = e_ijk x_j d_k on three variables (0-based index).
DiffOp su2_field(int i);

// A word acts right to left.  Returns the first monomial (degree <= max_degree)
// on which the relation does not vanish, as text, or empty.
std::string model_violation(const OperatorModel &model, const NCPoly &rel, int max_degree = 3);
std::vector<CPoly::Mono> monomials_up_to(int nvars, int degree);

// The classical-limit checks as named stages.
std::vector<StageResult> classical_limit_checks(int N = 2);

} // namespace recalc

#endif
