#include "doctest.h"
#include "recalc/qscalar.hpp"

#include <random>

using namespace recalc;

namespace {

QScalar q(int e = 1) { return QScalar::q(e); }

QScalar random_scalar(std::mt19937 &rng) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(-2, 2), len(1, 3);
  auto poly = [&] {
    QScalar p;
    int n = len(rng);
    for (int k = 0; k < n; ++k) p += QScalar(coef(rng)) * q(deg(rng));
    return p;
  };
  QScalar d = poly();
  while (d.is_zero()) d = poly();
  return poly() / d;
}

} // namespace

TEST_CASE("qfield arithmetic examples") {
  CHECK(q() * q() == q(2));
  CHECK((q() - q(-1)) * (q() + q(-1)) == q(2) - q(-2));
  QScalar a = (q(2) - QScalar(1)) / q();
  QScalar r = a / (q() - QScalar(1));
  CHECK(r == (q() + QScalar(1)) / q());
  CHECK(r.str() == "1 + q^-1");
  CHECK_THROWS_AS(q() / QScalar(), std::domain_error);
}

TEST_CASE("canonical printing") {
  QScalar x = (q(2) - q(-2)) / (q() - q(-1));
  CHECK(x.str() == "q + q^-1");
  CHECK(QScalar(1).str() == "1");
  CHECK((QScalar(1) / (q() - QScalar(1))).str() == "1/(q - 1)");
  CHECK((QScalar(3) / (QScalar(2) * q(2))).str() == "3/2*q^-2");
  CHECK(QScalar::parse("(q^2 - q^-2)/(q - q^-1)") == q() + q(-1));
  for (const char *s : {"q + q^-1", "-q^3 + 1/2*q - 7", "(q^2 + 1)/(q - 2)", "-q^-1/(q^2 + q + 1)"}) {
    QScalar v = QScalar::parse(s);
    CHECK(QScalar::parse(v.str()) == v);
    CHECK(QScalar::parse(v.str(true)) == v);
  }
}

TEST_CASE("q-integers") {
  CHECK(q_int(1) == QScalar(1));
  CHECK(q_int(2) == q() + q(-1));
  CHECK(q_int(-3) == -(q(2) + QScalar(1) + q(-2)));
  CHECK(q_int(0).is_zero());
  for (int k = -20; k <= 20; ++k) CHECK(q_int(k) * (q() - q(-1)) == q(k) - q(-k));
}

TEST_CASE("evaluation") {
  CHECK(qs_eval(q_int(2), Rational(1)) == Rational(2));
  CHECK(qs_eval(q() - q(-1), Rational(2)) == Rational(3, 2));
  CHECK_THROWS_AS(qs_eval(QScalar(1) / (q() - QScalar(1)), Rational(1)), PoleError);
}

TEST_CASE("expansion at q = 1") {
  auto e1 = qs_expand_at_1(q() - q(-1), 1);
  CHECK(e1 == std::vector<Rational>{Rational(0), Rational(2)});
  CHECK(qs_expand_at_1(q_int(2), 0) == std::vector<Rational>{Rational(2)});
  CHECK(qs_expand_at_1(q(2), 2) == std::vector<Rational>{Rational(1), Rational(2), Rational(1)});
  QScalar pole = QScalar(1) / (q() - QScalar(1));
  CHECK_THROWS_AS(qs_expand_at_1(pole, 1), PoleError);
  CHECK(qs_expand_at_1(pole, 1, 1) == std::vector<Rational>{Rational(1), Rational(0)});
  // 1/(q - q^-1) has a simple pole: (q - 1)/(q - q^-1) = q/(q + 1) = 1/2 + h/4 + ...
  auto e = qs_expand_at_1(QScalar(1) / (q() - q(-1)), 2, 1);
  CHECK(e == std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(-1, 8)});
  CHECK(qs_valuation_at_1(q() - q(-1)) == 1);
  CHECK(qs_valuation_at_1(pole) == -1);
}

TEST_CASE("truncation error vanishes to the next order") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    QScalar f = random_scalar(rng);
    try {
      qs_eval(f, Rational(1));
    } catch (const PoleError &) {
      continue;
    }
    const int n = 3;
    auto c = qs_expand_at_1(f, n);
    // f(1 + h) - sum c_k h^k = O(h^{n+1}): the ratio stays bounded as h -> 0,
    // checked exactly by expanding the difference as a rational function.
    QScalar h = q() - QScalar(1);
    QScalar trunc;
    for (int k = n; k >= 0; --k) trunc = trunc * h + QScalar(c[k]);
    QScalar diff = f - trunc;
    if (!diff.is_zero()) CHECK(qs_valuation_at_1(diff) >= n + 1);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    QScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!a.is_zero()) CHECK(a * a.inverse() == QScalar(1));
    // canonical representation: same value, same text
    if (!b.is_zero()) {
      QScalar d = (a * b) / b;
      CHECK(d == a);
      CHECK(d.str() == a.str());
    }
  }
}
