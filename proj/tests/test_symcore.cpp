#include "sph/config.hpp"
#include "sph/symfunc.hpp"

#include <gtest/gtest.h>

#include <map>
#include <vector>

using namespace sph;

namespace {

// Explicit polynomials in a fixed number of variables, used as an independent oracle.
using Mono = std::vector<int>;
using Poly = std::map<Mono, mpq_class>;

Poly power_sum_poly(int r, int nv) {
  Poly p;
  for (int i = 0; i < nv; ++i) {
    Mono m(nv, 0);
    m[i] = r;
    p[m] += 1;
  }
  return p;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r[m] += ca * cb;
    }
  return r;
}

// coefficient of the sorted exponent vector mu
mpq_class monomial_coeff(const Poly& p, const Partition& mu, int nv) {
  Mono m(nv, 0);
  for (int i = 0; i < mu.length(); ++i) m[i] = mu[i];
  auto it = p.find(m);
  return it == p.end() ? mpq_class(0) : it->second;
}

}  // namespace

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(conjugate(Partition{}), Partition{});
  EXPECT_EQ(conjugate(Partition{2, 2}), (Partition{2, 2}));
  for (int n = 0; n <= 9; ++n)
    for (const auto& p : partitions_of(n)) {
      EXPECT_EQ(conjugate(conjugate(p)), p);
      EXPECT_EQ(conjugate(p).size(), p.size());
    }
}

TEST(Partition, ZFactor) {
  EXPECT_EQ(z_factor(Partition{1}), 1);
  EXPECT_EQ(z_factor(Partition{2, 1}), 2);
  EXPECT_EQ(z_factor(Partition{2, 2, 1, 1}), 16);
  // sum over partitions of n!/z equals n!
  for (int n = 1; n <= 10; ++n) {
    mpq_class s = 0;
    for (const auto& p : partitions_of(n)) s += mpq_class(1, z_factor(p));
    EXPECT_EQ(s, 1) << n;
  }
}

TEST(Partition, Dominance) {
  EXPECT_TRUE(dominance_leq(Partition{2, 2}, Partition{3, 1}));
  EXPECT_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
  EXPECT_TRUE(dominance_leq(Partition{2, 1, 1}, Partition{2, 1, 1}));
  EXPECT_THROW(dominance_leq(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST(Partition, Counts) {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(partitions_of(n).size(), expected[n]);
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_EQ(parse_partition("(2,1,1)"), (Partition{2, 1, 1}));
  EXPECT_EQ(parse_partition("1,2"), (Partition{2, 1}));
}

TEST(ParamPoly, ArithmeticAndGcd) {
  ParamPoly k = ParamPoly::k();
  ParamPoly a = (k + ParamPoly(1)) * (k + ParamPoly(2));
  ParamPoly b = (k + ParamPoly(1)) * (k - ParamPoly(3));
  EXPECT_EQ(ParamPoly::gcd(a, b), k + ParamPoly(1));
  ParamRat r(a, b);
  EXPECT_EQ(r.numerator(), k + ParamPoly(2));
  EXPECT_EQ(r.denominator(), k - ParamPoly(3));
  EXPECT_EQ(ParamPoly().degree(), ParamPoly::kZeroDegree);
  ParamRat half(ParamPoly(1), ParamPoly(2) * k);
  EXPECT_EQ(half.denominator(), k);
  EXPECT_EQ(half.numerator(), ParamPoly(mpq_class(1, 2)));
  EXPECT_EQ((half + half) * ParamRat(k), ParamRat(1));
  EXPECT_EQ(a.eval(2), 12);
}

TEST(SymCore, ChangeBasisExamples) {
  auto p1 = SymFuncExpr::single(Basis::power_sum, Partition{1});
  EXPECT_EQ(change_basis(p1, Basis::monomial), SymFuncExpr::single(Basis::monomial, Partition{1}));
  auto p2 = SymFuncExpr::single(Basis::power_sum, Partition{2});
  EXPECT_EQ(change_basis(p2, Basis::monomial), SymFuncExpr::single(Basis::monomial, Partition{2}));
  auto p11 = change_basis(SymFuncExpr::single(Basis::power_sum, Partition{1, 1}), Basis::monomial);
  SymFuncExpr expect(Basis::monomial, 2);
  expect.add(Partition{2}, 1);
  expect.add(Partition{1, 1}, 2);
  EXPECT_EQ(p11, expect);
}

TEST(SymCore, PowerSumToMonomialMatchesExplicitExpansion) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& rho : partitions_of(n)) {
      Poly prod{{Mono(n, 0), 1}};
      for (int r : rho.parts()) prod = mul(prod, power_sum_poly(r, n));
      auto f = change_basis(SymFuncExpr::single(Basis::power_sum, rho), Basis::monomial);
      for (const auto& mu : partitions_of(n))
        EXPECT_EQ(f.coeff(mu), ParamRat(monomial_coeff(prod, mu, n))) << rho.str() << " " << mu.str();
    }
  }
}

TEST(SymCore, ElementaryAndHomogeneousMatchExplicit) {
  // e_2 = m_11, h_2 = m_2 + m_11, e_3 = m_111
  auto e2 = change_basis(SymFuncExpr::single(Basis::elementary, Partition{2}), Basis::monomial);
  EXPECT_EQ(e2, SymFuncExpr::single(Basis::monomial, Partition{1, 1}));
  auto h2 = change_basis(SymFuncExpr::single(Basis::homogeneous, Partition{2}), Basis::monomial);
  SymFuncExpr exp(Basis::monomial, 2);
  exp.add(Partition{2}, 1);
  exp.add(Partition{1, 1}, 1);
  EXPECT_EQ(h2, exp);
  // h_n is the sum of all monomials of degree n
  for (int n = 1; n <= 7; ++n) {
    auto h = change_basis(SymFuncExpr::single(Basis::homogeneous, Partition{n}), Basis::monomial);
    for (const auto& mu : partitions_of(n)) EXPECT_EQ(h.coeff(mu), ParamRat(1));
    auto e = change_basis(SymFuncExpr::single(Basis::elementary, Partition{n}), Basis::monomial);
    EXPECT_EQ(e, SymFuncExpr::single(Basis::monomial, Partition(std::vector<int>(n, 1))));
  }
}

TEST(SymCore, RoundTrips) {
  for (int n = 0; n <= 12; ++n) {
    for (const auto& lam : partitions_of(n)) {
      for (Basis b : {Basis::monomial, Basis::elementary, Basis::homogeneous}) {
        auto f = SymFuncExpr::single(b, lam, ParamRat(ParamPoly::k() + ParamPoly(1)));
        EXPECT_EQ(change_basis(change_basis(f, Basis::power_sum), b), f);
      }
    }
  }
}

TEST(SymCore, Multiply) {
  auto p1 = SymFuncExpr::single(Basis::power_sum, Partition{1});
  EXPECT_EQ(multiply(p1, p1), SymFuncExpr::single(Basis::power_sum, Partition{1, 1}));
  auto p2 = SymFuncExpr::single(Basis::power_sum, Partition{2});
  EXPECT_EQ(multiply(p2, p1), SymFuncExpr::single(Basis::power_sum, Partition{2, 1}));
  auto m1 = SymFuncExpr::single(Basis::monomial, Partition{1});
  SymFuncExpr expect(Basis::monomial, 2);
  expect.add(Partition{2}, 1);
  expect.add(Partition{1, 1}, 2);
  EXPECT_EQ(multiply(m1, m1), expect);
  // commutativity and associativity in the m-basis
  auto a = SymFuncExpr::single(Basis::monomial, Partition{2, 1});
  auto b = SymFuncExpr::single(Basis::monomial, Partition{1, 1});
  auto c = SymFuncExpr::single(Basis::monomial, Partition{2});
  EXPECT_EQ(multiply(a, b), multiply(b, a));
  EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
  // distributivity
  auto ab = change_basis(a, Basis::power_sum);
  auto s = change_basis(b, Basis::power_sum);
  SymFuncExpr sum = s;
  sum += change_basis(SymFuncExpr::single(Basis::monomial, Partition{2}), Basis::power_sum);
  auto lhs = multiply(ab, sum);
  auto rhs = multiply(ab, s);
  rhs += multiply(ab, change_basis(SymFuncExpr::single(Basis::monomial, Partition{2}), Basis::power_sum));
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(lhs.degree(), 5);
}

TEST(SymCore, InnerProduct) {
  ParamPoly k = ParamPoly::k();
  EXPECT_EQ(inner_product_k(SymFuncExpr::single(Basis::power_sum, Partition{1}),
                            SymFuncExpr::single(Basis::power_sum, Partition{1})),
            ParamRat(k));
  EXPECT_EQ(inner_product_k(SymFuncExpr::single(Basis::power_sum, Partition{2, 1}),
                            SymFuncExpr::single(Basis::power_sum, Partition{2, 1})),
            ParamRat(k * k * mpq_class(2)));
  EXPECT_TRUE(inner_product_k(SymFuncExpr::single(Basis::power_sum, Partition{2}),
                              SymFuncExpr::single(Basis::power_sum, Partition{1, 1}))
                  .is_zero());
  // symmetry on the m-basis
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n)) {
        auto fa = SymFuncExpr::single(Basis::monomial, a);
        auto fb = SymFuncExpr::single(Basis::monomial, b);
        EXPECT_EQ(inner_product_k(fa, fb), inner_product_k(fb, fa));
      }
  // at k = 1, <h_lambda, m_mu> = delta
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n)) {
        ParamRat v = inner_product_k(SymFuncExpr::single(Basis::homogeneous, a),
                                     SymFuncExpr::single(Basis::monomial, b));
        EXPECT_EQ(v.eval(1), a == b ? 1 : 0);
      }
}

TEST(SymCore, DegreeCap) {
  int old = degree_cap();
  set_degree_cap(4);
  auto p = SymFuncExpr::single(Basis::power_sum, Partition{3});
  EXPECT_THROW(multiply(p, p), DegreeCapExceeded);
  EXPECT_THROW(change_basis(SymFuncExpr::single(Basis::monomial, Partition{5}), Basis::power_sum),
               DegreeCapExceeded);
  set_degree_cap(old);
}
