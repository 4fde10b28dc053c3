#ifndef RECALC_QMALG_HPP
#define RECALC_QMALG_HPP

#include "recalc/rewrite.hpp"
#include "recalc/slotmatrix.hpp"

#include <memory>
#include <vector>

namespace recalc {

using PolyMatrix = std::vector<std::vector<NCPoly>>;

// Quantum matrix algebra M(R,F) generated by the entries of one matrix.
struct QMAPresentation {
  ROperator R;
  ROperator F;
  int N = 0;
  int m = 0; // GL(m) type; 0 when R is not of GL type
  GenClass cls = GenClass::M;
  std::vector<NCPoly> relations;
  std::shared_ptr<const RewriteSystem> system;
  TraceForm trace_form;
  std::shared_ptr<Normalizer> nf;

  NCPoly normal_form(const NCPoly &p) const { return nf->normal_form(p); }
  PolyMatrix normal_form(const PolyMatrix &m) const;
};

class IncompatiblePair : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// k-th copy M_{bar k} = F_{k-1}..F_1 M_1 F_1^{-1}..F_{k-1}^{-1} in a space of `slots` factors.
SlotMatrix matrix_copy(const ROperator &F, GenClass cls, int k, int slots);
// M_{bar 1} M_{bar 2} .. M_{bar k} in k slots.
SlotMatrix copies_product(const ROperator &F, GenClass cls, int k);
// R_{k-1} .. R_1 in k slots.
SlotMatrix cyclic_element(const ROperator &R, int k);
// Tr over slots first..k with the trace form C.
SlotMatrix r_trace_slots(const SlotMatrix &x, const QMatrix &c, int first, int k);

QMAPresentation qma_relations(const ROperator &R, const ROperator &F, GenClass cls = GenClass::M);
QMAPresentation rtt_instance(const ROperator &R);
QMAPresentation rea_instance(const ROperator &R, GenClass cls = GenClass::L);

// Normal forms of R_k M_k M_{k+1} - M_k M_{k+1} R_k entries for the copies k = 2..kmax-1.
std::vector<NCPoly> consecutive_copy_residuals(const QMAPresentation &P, int kmax = 3);

NCPoly power_sum(const QMAPresentation &P, int k);
NCPoly elem_sym(const QMAPresentation &P, int k);
NCPoly newton_residual(const QMAPresentation &P, int k);
PolyMatrix matrix_power_over(const QMAPresentation &P, int k);
// Normal form of the ordinary matrix power M^k.
PolyMatrix matrix_power_plain(const QMAPresentation &P, int k);
PolyMatrix cayley_hamilton_residual(const QMAPresentation &P);
std::vector<NCPoly> centrality_residual(const QMAPresentation &P, const NCPoly &element);

// Counit of RTT and RE algebras: generating matrix -> identity.
NCPoly counit(const QMAPresentation &P, const NCPoly &p);

// Generating matrix as polynomials.
PolyMatrix generating_matrix(GenClass cls, int N);
PolyMatrix poly_mul(const PolyMatrix &a, const PolyMatrix &b);
bool is_zero(const PolyMatrix &m);

} // namespace recalc

#endif
