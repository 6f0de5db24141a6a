#include "sph/jack.hpp"
#include "sph/symfunc.hpp"

#include <gtest/gtest.h>

#include <vector>

using namespace sph;

namespace {

const ParamPoly K = ParamPoly::k();

SymFuncExpr jack_in_m(const Partition& lam) {
  SymFuncExpr f(Basis::monomial, lam.size());
  for (const auto& [mu, c] : jack_J(lam).monomial_coeffs) f.add(mu, c);
  return f;
}

// Gram-Schmidt over Q(k) in a linear extension of dominance, independent of the recurrence.
std::vector<SymFuncExpr> gram_schmidt_monic(int n) {
  auto parts = partitions_of(n);  // lex decreasing, so reverse for increasing
  std::vector<SymFuncExpr> out;
  std::vector<Partition> order(parts.rbegin(), parts.rend());
  for (const auto& lam : order) {
    SymFuncExpr f = SymFuncExpr::single(Basis::monomial, lam);
    for (const auto& g : out) {
      ParamRat c = inner_product_k(f, g) / inner_product_k(g, g);
      SymFuncExpr t = g;
      t *= -c;
      f += t;
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace

TEST(Jack, SmallExpansions) {
  EXPECT_EQ(jack_in_m(Partition{1}), SymFuncExpr::single(Basis::monomial, Partition{1}));
  SymFuncExpr j2(Basis::monomial, 2);
  j2.add(Partition{2}, ParamRat(K + ParamPoly(1)));
  j2.add(Partition{1, 1}, 2);
  EXPECT_EQ(jack_in_m(Partition{2}), j2);
  EXPECT_EQ(jack_in_m(Partition{1, 1}), SymFuncExpr::single(Basis::monomial, Partition{1, 1}, 2));
  // power-sum forms p1^2 + k p2 and p1^2 - p2
  const auto& p2 = jack_J(Partition{2}).power_sum_coeffs;
  EXPECT_EQ(p2.at(Partition{1, 1}), ParamPoly(1));
  EXPECT_EQ(p2.at(Partition{2}), K);
  const auto& p11 = jack_J(Partition{1, 1}).power_sum_coeffs;
  EXPECT_EQ(p11.at(Partition{1, 1}), ParamPoly(1));
  EXPECT_EQ(p11.at(Partition{2}), ParamPoly(-1));
}

TEST(Jack, MatchesGramSchmidtOracle) {
  for (int n = 1; n <= 6; ++n) {
    auto gs = gram_schmidt_monic(n);
    for (const auto& g : gs) {
      // leading term is the largest partition in the support
      Partition lead;
      for (const auto& [mu, c] : g.terms())
        if (lead.empty() || dominance_leq(lead, mu)) lead = mu;
      SymFuncExpr J = jack_in_m(lead);
      ParamRat scale = J.coeff(lead);
      SymFuncExpr scaled = g;
      scaled *= scale;
      EXPECT_EQ(scaled, J) << lead.str();
    }
  }
}

TEST(Jack, KernelExactnessToDegree8) {
  for (int n = 1; n <= 8; ++n) {
    auto parts = partitions_of(n);
    mpz_class fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    Partition ones(std::vector<int>(n, 1));
    for (const auto& lam : parts) {
      const auto& J = jack_J(lam);
      EXPECT_EQ(J.monomial_coeffs.at(ones), ParamPoly(mpq_class(fact)));
      for (const auto& [mu, c] : J.monomial_coeffs) {
        EXPECT_TRUE(dominance_leq(mu, lam));
        EXPECT_TRUE(c.has_integer_coefficients() && c.has_nonnegative_coefficients()) << c.str();
      }
      EXPECT_EQ(jack_norm_j(lam), hook_product(lam));
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        EXPECT_TRUE(inner_product_k(SymFuncExpr::single(Basis::jack, parts[i]),
                                    SymFuncExpr::single(Basis::jack, parts[j]))
                        .is_zero());
  }
}

TEST(Jack, Norms) {
  EXPECT_EQ(jack_norm_j(Partition{1}), K);
  EXPECT_EQ(jack_norm_j(Partition{2}), K * K * (K + ParamPoly(1)) * mpq_class(2));
  EXPECT_EQ(jack_norm_j(Partition{1, 1}), K * (K + ParamPoly(1)) * mpq_class(2));
}

TEST(Jack, StructureConstants) {
  EXPECT_EQ(structure_constant_g(Partition{1}, Partition{1}, Partition{2}), K * K * mpq_class(2));
  EXPECT_EQ(structure_constant_g(Partition{1}, Partition{1}, Partition{1, 1}), K * K * mpq_class(2));
  EXPECT_TRUE(structure_constant_g(Partition{1}, Partition{1}, Partition{3}).is_zero());
  // the Jack basis expansion of a product reproduces the product
  for (const auto& a : partitions_of(2))
    for (const auto& b : partitions_of(3)) {
      SymFuncExpr lhs = multiply(SymFuncExpr::single(Basis::jack, a), SymFuncExpr::single(Basis::jack, b));
      for (const auto& nu : partitions_of(5)) {
        ParamRat expected = ParamRat(structure_constant_g(a, b, nu)) / ParamRat(jack_norm_j(nu));
        EXPECT_EQ(lhs.coeff(nu), expected);
      }
    }
}

TEST(Jack, ChangeBasisToJack) {
  auto p11 = SymFuncExpr::single(Basis::power_sum, Partition{1, 1});
  auto inJ = change_basis(p11, Basis::jack);
  // p1^2 = (J_2 + k J_11)/(1+k)
  ParamRat d(K + ParamPoly(1));
  EXPECT_EQ(inJ.coeff(Partition{2}), ParamRat(1) / d);
  EXPECT_EQ(inJ.coeff(Partition{1, 1}), ParamRat(K) / d);
  EXPECT_EQ(change_basis(inJ, Basis::power_sum), p11);
}

TEST(Jack, Pieri) {
  std::set<Partition> e{{4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}};
  EXPECT_EQ(pieri_support(Partition{2, 1}, 2), e);
  EXPECT_EQ(pieri_support(Partition{}, 3), (std::set<Partition>{{3}}));
  EXPECT_EQ(pieri_support(Partition{1}, 1), (std::set<Partition>{{2}, {1, 1}}));
}

TEST(Jack, SpecializeAndProductSupport) {
  EXPECT_EQ(specialize(K * K * mpq_class(2), 1), 2);
  EXPECT_EQ(specialize(K * K * (K + ParamPoly(1)) * mpq_class(2), mpq_class(1, 2)), mpq_class(3, 4));
  EXPECT_EQ(specialize(ParamPoly(), 2), 0);
  EXPECT_EQ(product_support_at(Partition{1}, Partition{1}, 2, 2), (std::set<Partition>{{2}, {}}));
  EXPECT_EQ(product_support_at(Partition{1}, Partition{1}, 1, 3), (std::set<Partition>{{2}, {1, 1}}));
  EXPECT_EQ(product_support_at(Partition{1}, Partition{1}, 2, 1), (std::set<Partition>{{2}}));
  EXPECT_THROW(product_support_at(Partition{1, 1}, Partition{1}, 2, 1), std::invalid_argument);
}
