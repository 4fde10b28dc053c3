#include "recalc/climit.hpp"

#include <stdexcept>

namespace recalc {

CPoly CPoly::constant(int nvars, const Coeff &c) {
  CPoly p(nvars);
  p.add(Mono(nvars, 0), c);
  return p;
}

CPoly CPoly::var(int nvars, int v) {
  Mono m(nvars, 0);
  m.at(v) = 1;
  return monomial(m);
}

CPoly CPoly::monomial(const Mono &m) {
  CPoly p(static_cast<int>(m.size()));
  p.add(m, Coeff(1));
  return p;
}

void CPoly::add(const Mono &m, const Coeff &c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CPoly CPoly::derivative(int v) const {
  CPoly out(n_);
  for (const auto &[m, c] : terms_) {
    if (m.at(v) == 0) continue;
    Mono d = m;
    --d[v];
    out.add(d, Coeff(m[v]) * c);
  }
  return out;
}

CPoly &CPoly::operator+=(const CPoly &o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto &[m, c] : o.terms_) add(m, c);
  return *this;
}

CPoly operator-(const CPoly &a, const CPoly &b) { return a + Coeff(-1) * b; }

CPoly operator*(const CPoly &a, const CPoly &b) {
  CPoly out(std::max(a.n_, b.n_));
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_) {
      CPoly::Mono m = ma;
      for (std::size_t k = 0; k < m.size(); ++k) m[k] += mb[k];
      out.add(m, ca * cb);
    }
  return out;
}

CPoly operator*(const Coeff &c, const CPoly &a) {
  CPoly out(a.n_);
  for (const auto &[m, x] : a.terms_) out.add(m, c * x);
  return out;
}

std::string CPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto &[m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0) out += " v" + std::to_string(v + 1) + (m[v] > 1 ? "^" + std::to_string(m[v]) : "");
  }
  return out;
}

DiffOp multiply_by(const CPoly &f) {
  return [f](const CPoly &g) { return f * g; };
}

namespace {

DiffOp var_times_d(int nvars, int v, int d, const Coeff &c = Coeff(1)) {
  CPoly xv = CPoly::var(nvars, v);
  return [xv, d, c](const CPoly &g) { return c * (xv * g.derivative(d)); };
}

DiffOp sum_ops(std::vector<DiffOp> ops) {
  return [ops = std::move(ops)](const CPoly &g) {
    CPoly out(g.nvars());
    for (const auto &op : ops) out += op(g);
    return out;
  };
}

DiffOp combine(const std::vector<std::pair<Coeff, DiffOp>> &terms) {
  std::vector<DiffOp> ops;
  for (const auto &[c, op] : terms) ops.push_back([c, op](const CPoly &g) { return c * op(g); });
  return sum_ops(std::move(ops));
}

// Compact 2x2 parameterization [[i a3, i a1 - a2], [i a1 + a2, -i a3]].
template <class T, class Lin>
std::map<std::pair<int, int>, DiffOp> compact(const std::vector<T> &a, Lin lin) {
  Coeff i = Coeff::param(Param::i);
  return {{{1, 1}, lin({{i, a[2]}})},
          {{1, 2}, lin({{i, a[0]}, {Coeff(-1), a[1]}})},
          {{2, 1}, lin({{i, a[0]}, {Coeff(1), a[1]}})},
          {{2, 2}, lin({{-i, a[2]}})}};
}

} // namespace

OperatorModel vector_field_model(int N) {
  OperatorModel m{N, {}};
  std::vector<DiffOp> euler_terms;
  for (int k = 0; k < N; ++k) euler_terms.push_back(var_times_d(N, k, k));
  DiffOp euler = sum_ops(euler_terms);
  Coeff eta0 = Coeff::param(Param::eta0);
  for (int i = 1; i <= N; ++i) {
    m.ops[make_letter(GenClass::x, i)] = multiply_by(CPoly::var(N, i - 1));
    for (int j = 1; j <= N; ++j) {
      std::vector<DiffOp> parts{var_times_d(N, i - 1, j - 1)};
      if (i == j) parts.push_back([euler, eta0](const CPoly &g) { return eta0 * euler(g); });
      m.ops[make_letter(GenClass::K, i, j)] = sum_ops(parts);
    }
  }
  return m;
}

OperatorModel coadjoint_model(int N) {
  int n = N * N;
  auto var = [N](int i, int j) { return (i - 1) * N + (j - 1); };
  OperatorModel m{n, {}};
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      m.ops[make_letter(GenClass::M, i, j)] = multiply_by(CPoly::var(n, var(i, j)));
      std::vector<DiffOp> parts;
      for (int s = 1; s <= N; ++s) {
        parts.push_back(var_times_d(n, var(i, s), var(j, s)));
        parts.push_back(var_times_d(n, var(s, j), var(s, i), Coeff(-1)));
      }
      m.ops[make_letter(GenClass::K, i, j)] = sum_ops(parts);
    }
  return m;
}

DiffOp su2_field(int i) {
  std::vector<DiffOp> parts;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      int s = (i == j || j == k || i == k) ? 0 : (((j - i + 3) % 3 == 1) ? 1 : -1);
      if (s != 0) parts.push_back(var_times_d(3, j, k, Coeff(s)));
    }
  return sum_ops(parts);
}

OperatorModel su2_model(int k_sign) {
  OperatorModel m{3, {}};
  std::vector<CPoly> x;
  std::vector<DiffOp> X;
  for (int k = 0; k < 3; ++k) {
    x.push_back(CPoly::var(3, k));
    X.push_back(su2_field(k));
  }
  auto lin_poly = [](const std::vector<std::pair<Coeff, CPoly>> &t) {
    CPoly out(3);
    for (const auto &[c, p] : t) out += c * p;
    return multiply_by(out);
  };
  for (const auto &[ij, op] : compact(x, lin_poly)) m.ops[make_letter(GenClass::M, ij.first, ij.second)] = op;
  for (const auto &[ij, op] : compact(X, combine))
    m.ops[make_letter(GenClass::K, ij.first, ij.second)] = [op, k_sign](const CPoly &g) { return Coeff(k_sign) * op(g); };
  return m;
}

std::vector<CPoly::Mono> monomials_up_to(int nvars, int degree) {
  std::vector<CPoly::Mono> out;
  CPoly::Mono m(nvars, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == nvars) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[v] = e;
      rec(v + 1, left - e);
    }
    m[v] = 0;
  };
  rec(0, degree);
  return out;
}

std::string model_violation(const OperatorModel &model, const NCPoly &rel, int max_degree) {
  for (const auto &mono : monomials_up_to(model.nvars, max_degree)) {
    CPoly f = CPoly::monomial(mono);
    CPoly total(model.nvars);
    for (const auto &[w, c] : rel.terms()) {
      CPoly g = f;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        auto op = model.ops.find(*it);
        if (op == model.ops.end()) throw std::invalid_argument("model has no operator for " + letter_str(*it));
        g = op->second(g);
      }
      total += c * g;
    }
    if (!total.is_zero()) return rel.str() + " on " + f.str() + " gives " + total.str();
  }
  return "";
}

} // namespace recalc
