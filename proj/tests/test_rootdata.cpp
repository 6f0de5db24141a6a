#include "sph/root_datum.hpp"
#include "sph/root_system.hpp"

#include <gtest/gtest.h>

using namespace sph;

TEST(RootSystem, PositiveRootCounts) {
  struct Case {
    const char* type;
    std::size_t count;
  } cases[] = {{"A1", 1}, {"A2", 3}, {"A4", 10}, {"B2", 4}, {"B3", 9}, {"C3", 9}, {"C4", 16},
               {"D4", 12}, {"D5", 20}, {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6},
               {"A1xB2", 5}, {"A1xA1", 2}};
  for (const auto& c : cases) {
    RootSystem rs = build_root_system(c.type);
    EXPECT_EQ(rs.positive_roots().size(), c.count) << c.type;
    EXPECT_EQ(cartan_type_str(rs.recognize()), c.type) << c.type;
    // closure under simple reflections
    for (const auto& r : rs.positive_roots())
      for (int i = 0; i < rs.rank(); ++i) EXPECT_TRUE(rs.is_root(rs.reflect_root(r, i)));
  }
  EXPECT_THROW(build_root_system("H3"), std::invalid_argument);
  EXPECT_THROW(build_root_system("E9"), std::invalid_argument);
}

TEST(RootSystem, CartanEntries) {
  RootSystem b2 = build_root_system("B2");
  // alpha_2 short: <alpha_1, alpha_2^vee> = -2, <alpha_2, alpha_1^vee> = -1
  EXPECT_EQ(b2.cartan()[0][1], -2);
  EXPECT_EQ(b2.cartan()[1][0], -1);
  RootSystem g2 = build_root_system("G2");
  EXPECT_EQ(g2.cartan()[1][0], -3);
  // highest root of D5 in simple-root coordinates is the adjoint weight omega_2
  RootSystem d5 = build_root_system("D5");
  IVec theta{1, 2, 2, 1, 1};
  EXPECT_TRUE(d5.is_root(theta));
  EXPECT_EQ(d5.root_to_weight(theta), (IVec{0, 1, 0, 0, 0}));
}

TEST(RootSystem, StronglyOrthogonal) {
  RootSystem a2 = build_root_system("A2");
  EXPECT_FALSE(strongly_orthogonal({1, 0}, {0, 1}, a2));
  RootSystem a3 = build_root_system("A3");
  EXPECT_TRUE(strongly_orthogonal({1, 0, 0}, {0, 0, 1}, a3));
  EXPECT_FALSE(strongly_orthogonal({1, 0, 0}, {1, 0, 0}, a3));
  RootSystem b3 = build_root_system("B3");
  // alpha_1 and alpha_1 + 2 alpha_2 + 2 alpha_3 are strongly orthogonal in B3
  EXPECT_TRUE(strongly_orthogonal({1, 0, 0}, {1, 2, 2}, b3));
  EXPECT_THROW(strongly_orthogonal({1, 0, 1}, {1, 0, 0}, a3), std::invalid_argument);
}

TEST(Lattice, SmithNormalForm) {
  auto id = lattice_map_diagnostics({{1, 0}, {0, 1}});
  EXPECT_TRUE(id.injective);
  EXPECT_EQ(*id.cokernel_index, 1);
  auto m = lattice_map_diagnostics({{1, 1}, {-1, 1}});
  EXPECT_TRUE(m.injective);
  EXPECT_EQ(*m.cokernel_index, 2);
  auto z = lattice_map_diagnostics({{1, 1}, {0, 0}});
  EXPECT_FALSE(z.injective);
  EXPECT_FALSE(z.cokernel_index.has_value());
  auto d = smith_diagonal({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0], 2);
  EXPECT_EQ(d[1], 6);
  EXPECT_EQ(d[2], 12);
  auto tall = lattice_map_diagnostics({{1, 0}, {0, 3}, {0, 0}});
  EXPECT_TRUE(tall.injective);
  EXPECT_FALSE(tall.cokernel_index.has_value());
}

TEST(Lattice, BasisAndSolve) {
  IMat b = lattice_basis({{2, 0}, {0, 2}, {1, 1}});
  EXPECT_EQ(b.size(), 2u);
  auto idx = lattice_map_diagnostics({{b[0][0], b[1][0]}, {b[0][1], b[1][1]}});
  EXPECT_EQ(*idx.cokernel_index, 2);
  auto x = solve_in_span(IMat{{1, 0}, {1, 1}}, IVec{3, 1});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_FALSE(solve_in_span(IMat{{1, 0, 0}}, IVec{0, 1, 0}));
}

TEST(RootDatum, OrderLeq) {
  EXPECT_FALSE(order_leq_X({1}, {{2}}));
  EXPECT_TRUE(order_leq_X({1, 2, 2, 1, 1}, {{1, 2, 1, 0, 0}, {0, 0, 1, 1, 1}}));
  EXPECT_TRUE(order_leq_X({0, 0}, {{1, 0}}));
  EXPECT_FALSE(order_leq_X({-1, 0}, {{1, 0}}));
  // monotonicity
  std::vector<IVec> gens{{2, 0}, {1, 1}};
  for (long long a = -3; a <= 3; ++a)
    for (long long b = -3; b <= 3; ++b)
      if (order_leq_X({a, b}, gens))
        for (const auto& g : gens) EXPECT_TRUE(order_leq_X(add({a, b}, g), gens));
}

TEST(RootDatum, VerifyAxioms) {
  // A2 datum on the weight lattice
  BasedRootDatum a2{2, {{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}}};
  auto r = verify_based_root_datum(a2);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.weyl_order, 6);
  EXPECT_EQ(r.cartan_type, "A2");
  BasedRootDatum bad{1, {{1}}, {{1}}};
  auto rb = verify_based_root_datum(bad);
  EXPECT_FALSE(rb.axiom_ii);
  EXPECT_FALSE(rb.witnesses.empty());
  // affine-type Cartan matrix: infinite Weyl group
  BasedRootDatum aff{2, {{2, -2}, {-2, 2}}, {{1, 0}, {0, 1}}};
  auto ra = verify_based_root_datum(aff, 1000);
  EXPECT_FALSE(ra.axiom_iii);
  // B2 x B2 from a rank 4 Cartan matrix
  RootSystem bb = build_root_system("B2xB2");
  BasedRootDatum d{4, {}, {}};
  for (int i = 0; i < 4; ++i) {
    d.base.push_back(bb.cartan()[i]);
    IVec e(4, 0);
    e[i] = 1;
    d.coroots.push_back(e);
  }
  auto rbb = verify_based_root_datum(d);
  EXPECT_TRUE(rbb.ok());
  EXPECT_EQ(rbb.cartan_type, "B2xB2");
  EXPECT_EQ(rbb.weyl_order, 64);
  // non-semisimple rank: extra lattice direction
  BasedRootDatum gl2{2, {{1, -1}}, {{1, -1}}};
  auto rg = verify_based_root_datum(gl2);
  EXPECT_TRUE(rg.ok());
  EXPECT_EQ(rg.weyl_order, 2);
}

TEST(RootDatum, RestrictedCoroot) {
  // SL(2)/SO(2): lattice generated by 2 omega_1
  RootSystem a1 = build_root_system("A1");
  auto c = restricted_coroot({2}, a1, {{2}});
  EXPECT_EQ(c.shape, CorootShape::doubled_simple);
  EXPECT_EQ(c.on_lattice, (IVec{1}));
  auto dag = build_delta_dagger({{2}}, a1, {{2}});
  EXPECT_EQ(dag, (std::vector<int>{0}));
  auto c2 = restricted_coroot({1}, a1, {{2}});
  EXPECT_EQ(c2.shape, CorootShape::positive_root);
  EXPECT_EQ(c2.on_lattice, (IVec{2}));
  EXPECT_EQ(a1.pair_coroot(IVec{1}, IVec{1}), 1);
  // SL(3)/SO(3): 2 alpha_i are not in the dagger set
  RootSystem a2 = build_root_system("A2");
  EXPECT_TRUE(build_delta_dagger({{2, 0}, {0, 2}}, a2, {{2, 0}, {0, 2}}).empty());
  // evenness failure: 2 alpha_1 against the full weight lattice
  EXPECT_THROW(restricted_coroot({2, 0}, a2, {{1, 0}, {0, 1}}), std::domain_error);
  // alpha + alpha' in A1 x A1 (group case)
  RootSystem a11 = build_root_system("A1xA1");
  auto s = restricted_coroot({1, 1}, a11, {{1, 1}});
  EXPECT_EQ(s.shape, CorootShape::orthogonal_sum);
  EXPECT_TRUE(s.needs_review);
  EXPECT_EQ(s.on_lattice, (IVec{1}));
  // alpha_i + alpha_{i+1} in A_{2n} is a positive root
  RootSystem a4 = build_root_system("A4");
  auto p = restricted_coroot({0, 1, 1, 0}, a4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  EXPECT_EQ(p.shape, CorootShape::positive_root);
  EXPECT_EQ(p.on_lattice, (IVec{0, 1, 1, 0}));
  // type B: 2(alpha_1 + alpha_2) in B2 as a sum of strongly orthogonal roots
  RootSystem b2 = build_root_system("B2");
  auto q = restricted_coroot({2, 2}, b2, {{1, 0}});
  EXPECT_EQ(q.on_lattice, (IVec{1}));
  EXPECT_THROW(restricted_coroot({2, 2}, b2, {{1, 0}, {0, 2}}), std::domain_error);
  EXPECT_EQ(q.shape, CorootShape::orthogonal_sum);
  EXPECT_FALSE(q.decompositions.empty());
  EXPECT_THROW(restricted_coroot({1, 3}, b2, {{1, 0}, {0, 1}}), std::domain_error);
}
