#include "recalc/slotmatrix.hpp"

#include <stdexcept>
#include <unordered_map>

namespace recalc {

namespace {

using Key = SlotMatrix::Key;

Key row_mask(int slot) { return Key(0xf) << (8 * (slot - 1)); }
Key col_mask(int slot) { return Key(0xf0) << (8 * (slot - 1)); }
Key pack(int slot, int row, int col) {
  return (Key(row) << (8 * (slot - 1))) | (Key(col) << (8 * (slot - 1) + 4));
}

} // namespace

SlotMatrix::SlotMatrix(int N, int slots) : N_(N), shape_(slots) {
  if (N < 1 || N > 15) throw std::invalid_argument("slot dimension must be in 1..15");
  if (slots < 1 || slots > 8) throw std::invalid_argument("slot count must be in 1..8");
  e_.emplace(0, NCPoly(1));
}

void SlotMatrix::add(Key k, const NCPoly &p) {
  if (p.is_zero()) return;
  auto [it, inserted] = e_.emplace(k, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) e_.erase(it);
  }
}

SlotMatrix SlotMatrix::from_op(const ROperator &op, int first, int slots) {
  if (first < 1 || first + op.arity - 1 > slots) throw std::out_of_range("operator does not fit in slots");
  SlotMatrix r(op.N, slots);
  r.e_.clear();
  for (int s = 0; s < op.arity; ++s) r.shape_[first - 1 + s] = {op.N, op.N};
  for (int a = 0; a < op.m.rows(); ++a) {
    auto ri = multi_index(a, op.N, op.arity);
    for (int b = 0; b < op.m.cols(); ++b) {
      const QScalar &v = op.m(a, b);
      if (v.is_zero()) continue;
      auto ci = multi_index(b, op.N, op.arity);
      Key k = 0;
      for (int s = 0; s < op.arity; ++s) k |= pack(first + s, ri[s], ci[s]);
      r.e_.emplace(k, NCPoly(Coeff(v)));
    }
  }
  return r;
}

SlotMatrix SlotMatrix::from_matrix(const QMatrix &m, int first, int slots) {
  if (m.rows() != m.cols()) throw std::invalid_argument("from_matrix: square matrix expected");
  ROperator op{m.rows(), 1, m, QScalar::q()};
  return from_op(op, first, slots);
}

SlotMatrix SlotMatrix::generator(GenClass c, int N, int slot, int slots) {
  if (is_inverse_scalar_class(c)) throw std::invalid_argument("generator: not a matrix class");
  SlotMatrix r(N, slots);
  r.e_.clear();
  if (c == GenClass::x) {
    r.shape_[slot - 1] = {N, 1};
    for (int i = 0; i < N; ++i) r.e_.emplace(pack(slot, i, 0), NCPoly::gen(c, i + 1));
  } else if (c == GenClass::y) {
    r.shape_[slot - 1] = {1, N};
    for (int j = 0; j < N; ++j) r.e_.emplace(pack(slot, 0, j), NCPoly::gen(c, j + 1));
  } else {
    r.shape_[slot - 1] = {N, N};
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r.e_.emplace(pack(slot, i, j), NCPoly::gen(c, i + 1, j + 1));
  }
  return r;
}

SlotMatrix SlotMatrix::from_polys(const std::vector<std::vector<NCPoly>> &m, int slot, int slots) {
  int n = static_cast<int>(m.size());
  SlotMatrix r(n, slots);
  r.e_.clear();
  r.shape_[slot - 1] = {n, n};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.add(pack(slot, i, j), m[i][j]);
  return r;
}

NCPoly SlotMatrix::entry(const std::vector<int> &row, const std::vector<int> &col) const {
  Key k = 0;
  for (int s = 1; s <= slots(); ++s)
    if (!shape(s).identity()) k |= pack(s, row[s - 1], col[s - 1]);
  auto it = e_.find(k);
  return it == e_.end() ? NCPoly() : it->second;
}

SlotMatrix operator*(const SlotMatrix &a, const SlotMatrix &b) {
  if (a.N_ != b.N_ || a.slots() != b.slots()) throw std::invalid_argument("slot matrix size mismatch");
  SlotMatrix r(a.N_, a.slots());
  r.e_.clear();
  Key keep_a = 0, keep_b = 0, a_contract = 0, b_contract = 0;
  for (int s = 1; s <= a.slots(); ++s) {
    const auto &sa = a.shape(s), &sb = b.shape(s);
    if (sa.identity() && sb.identity()) continue;
    if (sa.identity()) {
      r.shape_[s - 1] = sb;
      keep_b |= row_mask(s) | col_mask(s);
    } else if (sb.identity()) {
      r.shape_[s - 1] = sa;
      keep_a |= row_mask(s) | col_mask(s);
    } else {
      if (sa.cols != sb.rows) throw std::invalid_argument("slot shapes do not contract");
      r.shape_[s - 1] = {sa.rows, sb.cols};
      keep_a |= row_mask(s);
      keep_b |= col_mask(s);
      a_contract |= col_mask(s);
      b_contract |= row_mask(s);
    }
  }
  std::unordered_map<Key, std::vector<const std::pair<const Key, NCPoly> *>> by_row;
  for (const auto &e : b.e_) by_row[e.first & b_contract].push_back(&e);
  for (const auto &[ka, pa] : a.e_) {
    auto it = by_row.find((ka & a_contract) >> 4);
    if (it == by_row.end()) continue;
    for (const auto *eb : it->second) r.add((ka & keep_a) | (eb->first & keep_b), pa * eb->second);
  }
  return r;
}

namespace {

// Replace an identity slot by an explicit N x N delta.
SlotMatrix expanded(const SlotMatrix &m, int slot) {
  SlotMatrix id = SlotMatrix::from_matrix(QMatrix::identity(m.N()), slot, m.slots());
  return id * m;
}

SlotMatrix aligned(SlotMatrix a, const SlotMatrix &b) {
  for (int s = 1; s <= a.slots(); ++s)
    if (a.shape(s).identity() && !b.shape(s).identity()) a = expanded(a, s);
  return a;
}

} // namespace

SlotMatrix SlotMatrix::operator+(const SlotMatrix &o) const {
  SlotMatrix a = aligned(*this, o), b = aligned(o, *this);
  if (a.shape_ != b.shape_) throw std::invalid_argument("slot shapes differ in sum");
  for (const auto &[k, p] : b.e_) a.add(k, p);
  return a;
}

SlotMatrix SlotMatrix::operator-(const SlotMatrix &o) const { return *this + Coeff(-1) * o; }

SlotMatrix operator*(const Coeff &s, const SlotMatrix &a) {
  SlotMatrix r = a;
  r.e_.clear();
  for (const auto &[k, p] : a.e_) r.add(k, s * p);
  return r;
}

SlotMatrix SlotMatrix::trace(int slot) const {
  const Shape &sh = shape(slot);
  SlotMatrix r = *this;
  r.shape_[slot - 1] = {1, 1};
  r.e_.clear();
  if (sh.identity()) {
    for (const auto &[k, p] : e_) r.add(k, Coeff(N_) * p);
    return r;
  }
  if (sh.rows != sh.cols) throw std::invalid_argument("trace over a non-square slot");
  for (const auto &[k, p] : e_)
    if (row_of(k, slot) == col_of(k, slot)) r.add(k & ~(row_mask(slot) | col_mask(slot)), p);
  return r;
}

SlotMatrix SlotMatrix::r_trace(const QMatrix &c, int slot) const {
  return (from_matrix(c, slot, slots()) * *this).trace(slot);
}

SlotMatrix SlotMatrix::map(const std::function<NCPoly(const NCPoly &)> &f) const {
  SlotMatrix r = *this;
  r.e_.clear();
  for (const auto &[k, p] : e_) r.add(k, f(p));
  return r;
}

std::vector<NCPoly> SlotMatrix::relations() const {
  std::vector<NCPoly> out;
  out.reserve(e_.size());
  for (const auto &[k, p] : e_) out.push_back(p);
  return out;
}

NCPoly SlotMatrix::scalar_entry() const {
  for (const auto &s : shape_)
    if (!s.identity() && (s.rows != 1 || s.cols != 1)) throw std::invalid_argument("not a scalar slot matrix");
  auto it = e_.find(0);
  return it == e_.end() ? NCPoly() : it->second;
}

std::vector<std::vector<NCPoly>> SlotMatrix::as_square(int slot) const {
  for (int s = 1; s <= slots(); ++s) {
    if (s == slot) continue;
    const auto &sh = shape(s);
    if (!sh.identity() && (sh.rows != 1 || sh.cols != 1)) throw std::invalid_argument("extra non-scalar slot");
  }
  SlotMatrix m = shape(slot).identity() ? expanded(*this, slot) : *this;
  std::vector<std::vector<NCPoly>> out(N_, std::vector<NCPoly>(N_));
  for (const auto &[k, p] : m.e_) out[row_of(k, slot)][col_of(k, slot)] = p;
  return out;
}

} // namespace recalc
