#ifndef RECALC_BDALG_HPP
#define RECALC_BDALG_HPP

#include "recalc/qmalg.hpp"

#include <map>
#include <optional>
#include <string>

namespace recalc {

enum class Flavor { free, qplane, extplane, covector, adjoint, right_invariant };
std::string flavor_name(Flavor f);

// Inverse of a generating matrix X realized as adj(X) * ainv with
// ainv = a_m(X)^{-1} adjoined as a letter.
struct InverseData {
  GenClass matrix_cls;
  Letter letter;      // the ainv letter
  NCPoly a;           // a_m(X)
  PolyMatrix adj;     // X adj = adj X = a I
};

// Braided differential algebra: an RE algebra of operators acting on a
// function algebra through an operator-function permutation (OFP) rule.
struct BDPresentation {
  Flavor flavor = Flavor::free;
  ROperator R, F;
  int N = 0, m = 0;
  QMAPresentation op_part;                // REA in op_cls
  std::optional<QMAPresentation> fn_part; // RTT/REA/QM part for matrix function classes
  GenClass op_cls = GenClass::L;
  GenClass fn_cls = GenClass::x;
  Coeff eta = Coeff(1), eta_tilde = Coeff(1);
  Coeff xi = Coeff(1); // counit of op_cls is xi * delta
  std::vector<NCPoly> fn_relations, op_relations, ofp_relations, extra_relations;
  std::map<GenClass, InverseData> inverses; // keyed by matrix class
  std::size_t completion_len = 0;           // > 0: complete rule sets up to this word length

  std::shared_ptr<const RewriteSystem> system;      // everything
  std::shared_ptr<const RewriteSystem> fn_system;   // function relations only
  std::shared_ptr<const RewriteSystem> free_system; // without function relations
  std::shared_ptr<Normalizer> nf, fn_nf, free_nf;

  TraceForm trace_form() const { return op_part.trace_form; }
  NCPoly normal_form(const NCPoly &p) const { return nf->normal_form(p); }
  PolyMatrix normal_form(const PolyMatrix &m) const;
  std::vector<Letter> letters() const;
  // Rebuild rewrite systems after changing relation lists.
  void rebuild();
};

BDPresentation bd_free(const ROperator &R, const Coeff &eta);
BDPresentation bd_quantum_plane(const ROperator &R, const Coeff &eta);
BDPresentation bd_ext_plane(const ROperator &R, const Coeff &eta);
BDPresentation bd_covector(const ROperator &R, const Coeff &eta_tilde);
// op_cls is L, or Q with counit xi * I for the Q/M adjoint algebra.
BDPresentation bd_adjoint(const ROperator &R, GenClass op_cls = GenClass::L, const Coeff &xi = Coeff(1));
BDPresentation bd_right_invariant(const ROperator &R, const ROperator &F, const Coeff &eta);

// Counit of an operator letter.
Coeff op_counit(const BDPresentation &P, Letter l);
// a . f, normal ordered, with the counit applied to the trailing operator word.
NCPoly act(const BDPresentation &P, const NCPoly &a, const NCPoly &f);
// Applies the action to a polynomial whose words read (operators)(functions).
NCPoly act_split(const BDPresentation &P, const NCPoly &p);
// act(g, rel) for every operator generator g and function relation rel.
std::vector<NCPoly> action_wellposed_residual(const BDPresentation &P);
// Generators as slot matrices of the presentation.
SlotMatrix fn_generator(const BDPresentation &P, int slot, int slots);
SlotMatrix op_generator(const BDPresentation &P, int slot, int slots);

// L_1 R_{1->p} f_1..f_p |> 1 - eta^p R^{-1}_{1->p} f_1..f_p, with f the x
// generators (free and plane flavours) or the F-copies of M (right-invariant).
std::vector<NCPoly> p_order_action_residual(const BDPresentation &P, int p);
// Degree-one action of the adjoint (on R_1 M_1 R_1^-1) and covector (on y_1) flavours.
std::vector<NCPoly> degree_one_action_residual(const BDPresentation &P);
// Normal forms of [Tr_R(M^k), g] over all generators g.
std::vector<NCPoly> trace_commutators(const BDPresentation &P, int k);

// --- inverses -------------------------------------------------------------

// Coefficients c with sum c_i basis_i = target, if any.
std::optional<std::vector<Coeff>> solve_in_span(const std::vector<NCPoly> &basis, const NCPoly &target);
// Adjoins a_m(X)^{-1} for the listed matrix classes (M, L or T).
BDPresentation extend_with_inverses(const BDPresentation &P, const std::vector<GenClass> &classes);
// X^{-1} as adj(X) * ainv.
PolyMatrix inverse_matrix(const BDPresentation &P, GenClass cls);
// Resolver for Minv/Linv/Tinv in parsed text.
GeneratorResolver inverse_resolver(const BDPresentation &P);
// Normal form of a_M^E p a_L^E after clearing every ainv letter; zero iff p = 0.
NCPoly cleared_residual(const BDPresentation &P, const NCPoly &p);
bool is_zero_in(const BDPresentation &P, const NCPoly &p);

// delta(R1 L1 R1 x1) - delta(eta x1 L2) in the T-extended quantum-plane system.
// corrupt scales one antipode entry (negative control).
std::vector<NCPoly> rtt_covariance_residual(const BDPresentation &P, bool corrupt = false);

// --- Q/N layer ------------------------------------------------------------

struct QNMatrices {
  PolyMatrix Q, Nm, Minv;
};
QNMatrices qn_matrices(const BDPresentation &P);

struct NamedResidual {
  std::string name;
  std::vector<NCPoly> nonzero; // cleared residual entries that did not vanish
  bool budget_exhausted = false;
};
std::vector<NamedResidual> prop_qm_residual(const BDPresentation &P, const QNMatrices &qn);
// act(Q, 1) - xi I with xi = eta^{-1} q^{2m}.
PolyMatrix q_unit_action(const BDPresentation &P, const QNMatrices &qn);
Coeff expected_xi(const BDPresentation &P);
// Residual entries of (Q_1..Q_k) |> (M_{k+1}..M_{k+p}) - xi^k (M_under ...).  The
// underlined copies multiply as M_{k+p}..M_{k+1}; printed_order uses
// M_{k+1}..M_{k+p} instead, which differs from the action once p >= 2.
std::vector<NCPoly> q_action_residual(const BDPresentation &P, int k, int p, const PolyMatrix *Q = nullptr,
                                      const Coeff &xi = Coeff(1), bool printed_order = false);
// M_{bar k} and M_{under k} built with R.
SlotMatrix matrix_copy_under(const ROperator &R, GenClass cls, int k, int slots);

// --- orbits ---------------------------------------------------------------

struct OrbitSpec {
  std::vector<Coeff> c; // Tr_R(M^k) = c_k, k = 1..m
};
OrbitSpec sphere_orbit(const Coeff &r);
// Tr_R(X) for an N x N polynomial matrix.
NCPoly r_trace_poly(const TraceForm &tf, const PolyMatrix &x);
// Tr_{R(2)}(R_1^{+-1} X_1 R_1^{-+1}) - Tr_R(X) I for symbolic X (two residual matrices).
std::vector<NCPoly> trace_property_residual(const ROperator &R);
// Adds the trace relations of the orbit and the first-order operator
// restriction Tr_R(M^{-1} Q) = value, with M^{-1} = c M where available.
BDPresentation orbit_quotient(const BDPresentation &P, const OrbitSpec &spec);
// M^{-1} on a GL(2) orbit as a polynomial matrix, from Cayley-Hamilton.
PolyMatrix orbit_inverse(const BDPresentation &P, const OrbitSpec &spec);

struct StageResult {
  std::string name;
  bool pass = false;
  std::string witness; // first nonzero residual, empty when passing
};
// Quantum part of the GL(2) sphere chain in the Q/M adjoint algebra.
std::vector<StageResult> gl2_sphere(const ROperator &R, const Coeff &r, const Coeff &xi);

} // namespace recalc

#endif
