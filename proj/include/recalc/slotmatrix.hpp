#ifndef RECALC_SLOTMATRIX_HPP
#define RECALC_SLOTMATRIX_HPP

#include "recalc/ncpoly.hpp"
#include "recalc/rmatrix.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace recalc {

// Matrix with NCPoly entries acting on a tensor product of n slots.  Each
// slot is either the identity (implicit delta) or carries a row and a column
// dimension in {1, N}: (N,N) for matrices like L_k, (N,1) for the column
// x_k, (1,N) for the row y_k.  Entries are keyed by packing the row and
// column index of every slot into 4 bits each.
class SlotMatrix {
public:
  struct Shape {
    int rows = 0; // 0 marks an identity slot
    int cols = 0;
    bool identity() const { return rows == 0; }
    friend bool operator==(const Shape &, const Shape &) = default;
  };
  using Key = std::uint64_t;

  SlotMatrix(int N, int slots);
  static SlotMatrix identity(int N, int slots) { return SlotMatrix(N, slots); }
  // Scalar operator occupying `arity` consecutive slots starting at `first` (1-based).
  static SlotMatrix from_op(const ROperator &op, int first, int slots);
  static SlotMatrix from_matrix(const QMatrix &m, int first, int slots);
  // Generating matrix of a class placed at a slot: (N,N) for matrix classes,
  // (N,1) for x, (1,N) for y.
  static SlotMatrix generator(GenClass c, int N, int slot, int slots);
  // N x N matrix of polynomials placed at a slot.
  static SlotMatrix from_polys(const std::vector<std::vector<NCPoly>> &m, int slot, int slots);

  int N() const { return N_; }
  int slots() const { return static_cast<int>(shape_.size()); }
  const Shape &shape(int slot) const { return shape_[slot - 1]; }
  const std::map<Key, NCPoly> &entries() const { return e_; }

  // Entry with 0-based row/column indices for every slot (ignored for identity slots).
  NCPoly entry(const std::vector<int> &row, const std::vector<int> &col) const;
  static int row_of(Key k, int slot) { return (k >> (8 * (slot - 1))) & 0xf; }
  static int col_of(Key k, int slot) { return (k >> (8 * (slot - 1) + 4)) & 0xf; }

  friend SlotMatrix operator*(const SlotMatrix &a, const SlotMatrix &b);
  SlotMatrix operator-(const SlotMatrix &o) const;
  SlotMatrix operator+(const SlotMatrix &o) const;
  friend SlotMatrix operator*(const Coeff &s, const SlotMatrix &a);

  // Ordinary trace over a slot whose shape is square.
  SlotMatrix trace(int slot) const;
  // Tr(C X) over a slot.
  SlotMatrix r_trace(const QMatrix &c, int slot) const;

  SlotMatrix map(const std::function<NCPoly(const NCPoly &)> &f) const;
  bool is_zero() const { return e_.empty(); }
  // All entries as a flat list (zero entries omitted).
  std::vector<NCPoly> relations() const;
  // The single entry of a matrix with all slots of shape 1x1 or identity.
  NCPoly scalar_entry() const;
  // N x N entries of a matrix whose only non-identity slot is `slot`.
  std::vector<std::vector<NCPoly>> as_square(int slot) const;

private:
  void add(Key k, const NCPoly &p);

  int N_;
  std::vector<Shape> shape_;
  std::map<Key, NCPoly> e_;
};

SlotMatrix operator*(const SlotMatrix &a, const SlotMatrix &b);
SlotMatrix operator*(const Coeff &s, const SlotMatrix &a);

} // namespace recalc

#endif
