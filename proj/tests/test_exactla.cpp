#include "doctest.h"

#include "nilorb/poly.hpp"
#include "nilorb/qmatrix.hpp"
#include "nilorb/rational.hpp"
#include "nilorb/rng.hpp"

using namespace nilorb;

TEST_CASE("rational basics") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b) == Rational(1, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK((a - a).is_zero());
  CHECK(Rational(7, 3).str() == "7/3");
  CHECK(Rational(-4).str() == "-4");
  CHECK(Rational::from_string("-22/44") == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  CHECK(Rational(3, 2) < Rational(2, 1));
  CHECK(Rational(-5).abs() == Rational(5));
  CHECK(Rational(3, 7).inverse() == Rational(7, 3));
}

TEST_CASE("rational arithmetic is exact on random values, including overflow") {
  // Cross-check the inline fast path against pure GMP arithmetic.
  Rng rng(42);
  for (int t = 0; t < 3000; ++t) {
    long long a = rng.uniform_int(-1000000, 1000000);
    long long b = rng.uniform_int(1, 1000000);
    long long c = rng.uniform_int(-1000000, 1000000);
    long long d = rng.uniform_int(1, 1000000);
    Rational x(a, b), y(c, d);
    mpq_class qx((long)a, (long)b);
    mpq_class qy((long)c, (long)d);
    qx.canonicalize();
    qy.canonicalize();
    CHECK((x + y).to_mpq() == qx + qy);
    CHECK((x - y).to_mpq() == qx - qy);
    CHECK((x * y).to_mpq() == qx * qy);
    if (!y.is_zero()) CHECK((x / y).to_mpq() == qx / qy);
  }
  // Force promotion to big integers and back.
  Rational big(1);
  for (int i = 0; i < 50; ++i) big *= Rational(1000000007LL);
  Rational inv = big.inverse();
  CHECK((big * inv).is_one());
  CHECK(!big.is_small());
  Rational sum = big + Rational(1) - big;
  CHECK(sum == Rational(1));
  CHECK(sum.is_small());
}

TEST_CASE("rref on canonical examples") {
  QMatrix z(3, 3);
  auto rz = rref(z);
  CHECK(rz.pivots.empty());
  CHECK(rz.r == z);

  QMatrix id = QMatrix::identity(4);
  auto ri = rref(id);
  CHECK(ri.pivots == std::vector<int>{0, 1, 2, 3});
  CHECK(ri.r == id);

  QMatrix m = QMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
  auto rm = rref(m);
  CHECK(rm.pivots == std::vector<int>{0});
  CHECK(rank(m) == 1);
}

TEST_CASE("rref idempotence and rank-nullity on random matrices") {
  Rng rng(7);
  for (int t = 0; t < 60; ++t) {
    int r = int(rng.uniform_int(1, 6)), c = int(rng.uniform_int(1, 7));
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        m.at(i, j) = Rational(rng.uniform_int(-4, 4), rng.uniform_int(1, 3));
    auto rr = rref(m);
    auto rr2 = rref(rr.r);
    CHECK(rr2.r == rr.r);
    CHECK(rank(m) + kernel_basis(m).rows() == c);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(QMatrix::identity(5)).rows() == 0);
  CHECK(kernel_basis(QMatrix(2, 3)).rows() == 3);
  QMatrix m = QMatrix::from_rows({{Rational(1), Rational(1), Rational(0)}});
  QMatrix k = kernel_basis(m);
  CHECK(k.rows() == 2);
  for (int i = 0; i < k.rows(); ++i) {
    auto v = k.row(i);
    CHECK((m.apply(v)[0]).is_zero());
  }
}

TEST_CASE("solve examples and soundness") {
  QMatrix id = QMatrix::identity(3);
  std::vector<Rational> b{Rational(3), Rational(-1), Rational(1, 2)};
  auto x = solve(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  QMatrix m1 = QMatrix::from_rows({{Rational(1), Rational(1)}});
  auto x1 = solve(m1, {Rational(2)});
  REQUIRE(x1.has_value());
  CHECK(*x1 == std::vector<Rational>{Rational(2), Rational(0)});

  QMatrix m2 = QMatrix::from_rows({{Rational(1)}, {Rational(1)}});
  CHECK(!solve(m2, {Rational(1), Rational(2)}).has_value());
  CHECK_THROWS_AS(solve(m2, {Rational(1)}), std::invalid_argument);

  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    int r = int(rng.uniform_int(1, 5)), c = int(rng.uniform_int(1, 5));
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = Rational(rng.uniform_int(-3, 3));
    std::vector<Rational> rhs(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) rhs[size_t(i)] = Rational(rng.uniform_int(-3, 3));
    auto sol = solve(m, rhs);
    if (sol) {
      auto back = m.apply(*sol);
      CHECK(back == rhs);
    }
  }
}

TEST_CASE("determinant") {
  QMatrix m = QMatrix::from_rows({{Rational(2), Rational(1)}, {Rational(5), Rational(3)}});
  CHECK(determinant(m) == Rational(1));
  CHECK(determinant(QMatrix(3, 3)) == Rational(0));
}

TEST_CASE("poly basics") {
  Poly a = Poly::variable(2, 0);  // alpha
  Poly b = Poly::variable(2, 1);  // beta
  Poly p = a * a + b.scaled(Rational(-3)) * a;
  CHECK(p.total_degree() == 2);
  CHECK(p.is_homogeneous(2));
  CHECK(p.eval({Rational(2), Rational(1)}) == Rational(-2));
  CHECK(p.substituted_zero(1).as_monomial().has_value());
  CHECK(!p.as_monomial().has_value());
  CHECK(p.support_mask() == 3u);
}

TEST_CASE("poly_gcd_binary examples") {
  Poly a = Poly::variable(2, 0);
  Poly b = Poly::variable(2, 1);
  // {alpha^2, beta^2} -> constant
  Poly g1 = poly_gcd_binary({a * a, b * b});
  CHECK(g1.total_degree() == 0);
  // {alpha*beta, alpha^2} -> alpha
  Poly g2 = poly_gcd_binary({a * b, a * a});
  auto m2 = g2.as_monomial();
  REQUIRE(m2.has_value());
  CHECK(m2->first == Poly::Exps{1, 0, 0, 0});
  // {alpha} -> alpha
  Poly g3 = poly_gcd_binary({a});
  CHECK(g3.as_monomial()->first == Poly::Exps{1, 0, 0, 0});
  CHECK_THROWS_AS(poly_gcd_binary({Poly(2)}), std::invalid_argument);
}

TEST_CASE("poly_gcd_binary divides every input exactly") {
  Rng rng(5);
  Poly a = Poly::variable(2, 0);
  Poly b = Poly::variable(2, 1);
  for (int t = 0; t < 30; ++t) {
    // Build forms as products of random linear factors times a common one.
    Poly common = a.scaled(Rational(rng.uniform_int(-3, 3))) +
                  b.scaled(Rational(rng.uniform_int(1, 3)));
    std::vector<Poly> forms;
    for (int f = 0; f < 3; ++f) {
      Poly p = common;
      for (int k = 0; k < int(rng.uniform_int(0, 2)); ++k) {
        Poly lin = a.scaled(Rational(rng.uniform_int(-2, 2))) +
                   b.scaled(Rational(rng.uniform_int(-2, 2)));
        if (lin.is_zero()) lin = a;
        p = p * lin;
      }
      forms.push_back(p);
    }
    Poly g = poly_gcd_binary(forms);
    // Divide each form by g in the univariate model and check zero remainder.
    for (const Poly& f : forms) {
      UPoly uf, ug;
      int df = f.total_degree(), dg = g.total_degree();
      uf.assign(size_t(df) + 1, Rational(0));
      ug.assign(size_t(dg) + 1, Rational(0));
      for (const auto& [e, c] : f.terms()) uf[size_t(e[1])] += c;
      for (const auto& [e, c] : g.terms()) ug[size_t(e[1])] += c;
      upoly_trim(uf);
      upoly_trim(ug);
      auto [q, r] = upoly_divmod(uf, ug);
      CHECK(r.empty());
    }
  }
}
