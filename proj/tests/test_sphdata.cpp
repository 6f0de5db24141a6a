#include "sph/repcalc.hpp"
#include "sph/sphdata.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace sph;

namespace {

// all generator-coordinate vectors of the given length with coordinate sum <= bound
std::vector<IVec> bounded(std::size_t n, long long bound) {
  std::vector<IVec> out;
  IVec cur(n, 0);
  std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (long long v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
    cur[i] = 0;
  };
  rec(0, bound);
  return out;
}

}  // namespace

TEST(CaseTable, LoadsAndValidatesEveryGridPoint) {
  EXPECT_EQ(case_table_version(), "sphcases 1");
  int points = 0;
  for (const auto& r : case_records())
    for (const auto& p : r.grid) {
      auto c = instantiate_case(r.id, p);
      EXPECT_TRUE(build_RX(*c).report.ok()) << c->key();
      EXPECT_EQ(canonical_type(cartan_type_str(build_RX(*c).type)), canonical_type(c->expected_type)) << c->key();
      ++points;
    }
  EXPECT_GT(points, 40);
}

TEST(CaseTable, RejectsBadRequests) {
  EXPECT_THROW(instantiate_case("Sym.A1", {{"n", 1}}), CaseDataError);
  EXPECT_THROW(instantiate_case("Sym.A1"), CaseDataError);
  EXPECT_THROW(instantiate_case("Sym.A1", {{"n", 3}, {"q", 1}}), CaseDataError);
  EXPECT_THROW(instantiate_case("Nope.A1"), CaseDataError);
}

TEST(CaseTable, SymA1) {
  auto c = instantiate_case("Sym.A1", {{"n", 3}});
  EXPECT_EQ(c->delta_x, (std::vector<IVec>{{2, 0}, {0, 2}}));
  EXPECT_EQ(c->generators, (std::vector<IVec>{{2, 0}, {0, 2}}));
  EXPECT_EQ(*c->multiplicity, 1);
  EXPECT_EQ(*c->jack_k, 2);
  // rank one: the single doubled root is halved
  auto c2 = instantiate_case("Sym.A1", {{"n", 2}});
  EXPECT_EQ(c2->delta_x, (std::vector<IVec>{{1}}));
}

TEST(CaseTable, SphA14) {
  auto c = instantiate_case("Sph.A14");
  EXPECT_EQ(c->generators, (std::vector<IVec>{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(c->delta_x, (std::vector<IVec>{{1, 1, 1, 0}, {1, 1, 0, 1}, {0, 1, 1, 1}}));
}

TEST(CaseTable, Types) {
  EXPECT_EQ(canonical_type(cartan_type_str(build_RX(*instantiate_case("ModelB", {{"p", 3}})).type)), "A1xB2");
  EXPECT_EQ(cartan_type_str(build_RX(*instantiate_case("Sym.A2", {{"n", 3}})).type), "A2");
  EXPECT_EQ(cartan_type_str(build_RX(*instantiate_case("Sph.A10", {{"n", 2}})).type), "A1xA1");
  EXPECT_EQ(cartan_type_str(build_RX(*instantiate_case("He.3", {{"p", 3}})).type), "B3");
  EXPECT_EQ(canonical_type("C2xD3xB1"), "A1xA3xB2");
}

TEST(CaseTable, SymA2GeneratorsAreFundamental) {
  auto c = instantiate_case("Sym.A2", {{"n", 3}});
  const auto& rx = build_RX(*c);
  for (std::size_t g = 0; g < 2; ++g) {
    auto x = *rx.xi_coords(c->weight(g == 0 ? IVec{1, 0} : IVec{0, 1}));
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(rx.datum.pair(x, static_cast<int>(j)), g == j ? 1 : 0);
  }
}

TEST(Isogeny, PhiImages) {
  auto a6 = instantiate_case("Sph.A6", {{"n", 3}});
  EXPECT_EQ(phi_hat(*a6, {1, 2}), (IVec{3}));
  EXPECT_EQ(phi_bar(*a6, {1, 2}), (IVec{1}));
  auto a13 = instantiate_case("Sph.A13");
  EXPECT_EQ(phi_hat(*a13, {1, 1}), (IVec{3}));
  EXPECT_EQ(phi_bar(*a13, {1, 1}), (IVec{1}));
  // 2*omega_4 of B4 is the fourth generator
  auto mb = instantiate_case("ModelB", {{"p", 4}});
  EXPECT_EQ(phi_hat(*mb, {0, 0, 0, 1}), (IVec{0, 1}));
  EXPECT_EQ(phi_bar(*mb, {0, 0, 0, 1}), (IVec{0, 1}));
  auto t = instantiate_case("He.4a", {{"p", 2}});
  EXPECT_EQ(t->weight({0, 1}), (IVec{0, 0, 0, 1, 1}));
  auto b = instantiate_case("He.4b", {{"p", 2}});
  EXPECT_EQ(b->weight({0, 1}), (IVec{0, 0, 0, 2}));
  EXPECT_THROW(phi_hat(*a6, {-1, 0}), std::invalid_argument);
}

TEST(Isogeny, IndexAndIsomorphism) {
  auto r6 = verify_isogeny(*instantiate_case("Sph.A6", {{"n", 3}}));
  ASSERT_TRUE(r6.ok()) << r6.lattice.str();
  EXPECT_EQ(*r6.lattice.cokernel_index, 2);
  auto r12 = verify_isogeny(*instantiate_case("Sph.A12"));
  ASSERT_TRUE(r12.ok());
  EXPECT_EQ(*r12.lattice.cokernel_index, 1);
  EXPECT_TRUE(instantiate_case("Sph.A12")->bar.empty());
}

TEST(Isogeny, EveryGridPointPasses) {
  for (const auto& r : case_records())
    for (const auto& p : r.grid) {
      auto c = instantiate_case(r.id, p);
      if (c->hat.empty()) continue;
      auto rep = verify_isogeny(*c);
      std::string w;
      for (const auto& s : rep.witnesses) w += s + "; ";
      EXPECT_TRUE(rep.ok()) << c->key() << ": " << w << rep.lattice.str();
    }
}

TEST(Rhs, Examples) {
  auto a1 = instantiate_case("Sym.A1", {{"n", 2}});
  auto parts = conjecture_rhs_parts(*a1, {1}, {1}, {1});
  EXPECT_FALSE(parts.order);
  EXPECT_FALSE(conjecture_rhs(*a1, {1}, {1}, {1}));
  EXPECT_TRUE(conjecture_rhs(*a1, {1}, {1}, {0}));
  auto a2 = instantiate_case("Sym.A2", {{"n", 3}});
  EXPECT_TRUE(conjecture_rhs(*a2, {1, 0}, {1, 0}, {0, 1}));
  // Spin(10)/GL(5), theta = omega_2 is the first generator: on G_X = B2 it is the vector
  // representation, which does not occur in its own square, while theta <=_X 2 theta
  auto he = instantiate_case("He.4a", {{"p", 2}});
  auto h = conjecture_rhs_parts(*he, {1, 0}, {1, 0}, {1, 0});
  EXPECT_TRUE(h.order);
  EXPECT_FALSE(h.tensor);
  EXPECT_EQ(h.multiplicity, 0);
  // the ambient multiplicity of the naive rule
  IVec theta{0, 1, 0, 0, 0};
  EXPECT_EQ(tensor_multiplicity(theta, theta, theta, he->ambient), 1);
  EXPECT_THROW(conjecture_rhs(*a1, {-1}, {0}, {0}), std::invalid_argument);
}

TEST(Lhs, Examples) {
  auto a1 = instantiate_case("Sym.A1", {{"n", 2}});
  EXPECT_TRUE(jack_oracle_lhs(*a1, {1}, {1}, {0}));
  EXPECT_TRUE(jack_oracle_lhs(*a1, {1}, {1}, {2}));
  EXPECT_FALSE(jack_oracle_lhs(*a1, {1}, {1}, {1}));
  auto a12 = instantiate_case("Sph.A12");
  EXPECT_FALSE(jack_oracle_lhs(*a12, {1}, {1}, {1}));
  EXPECT_TRUE(jack_oracle_lhs(*a12, {1}, {1}, {2}));
  EXPECT_TRUE(jack_oracle_lhs(*a12, {1}, {1}, {0}));
  EXPECT_FALSE(oracle_available(*instantiate_case("He.3", {{"p", 3}})));
  EXPECT_THROW(jack_oracle_lhs(*instantiate_case("Sph.A15"), {0}, {0}, {0}), OracleUnavailable);
  EXPECT_TRUE(oracle_available(*instantiate_case("Sph.A11", {{"n", 3}})));
}

TEST(Lhs, WeightPartitionDictionary) {
  auto a5 = instantiate_case("Sym.A5");
  EXPECT_EQ(weight_partition(*a5, {2, 1}), Partition({3, 1}));
  EXPECT_EQ(weight_partition(*a5, {2, 1}, Dictionary::alternative), Partition({3, 2}));
  auto cp = instantiate_case("Aux.CP", {{"n", 4}});
  EXPECT_EQ(weight_partition(*cp, {2}), Partition({4}));
}

TEST(Lhs, GlDetIsAGroupOfCharacters) {
  auto g = instantiate_case("Aux.GLdet");
  EXPECT_TRUE(jack_oracle_lhs(*g, {-2}, {3}, {1}));
  EXPECT_FALSE(jack_oracle_lhs(*g, {-2}, {3}, {2}));
}

TEST(Lhs, GroupCaseMatchesLittlewoodRichardson) {
  auto c = instantiate_case("Sym.A2", {{"n", 3}});
  const int nvars = 3;
  for (const auto& l : bounded(2, 3))
    for (const auto& m : bounded(2, 3))
      for (const auto& n : bounded(2, 6)) {
        Partition pl = weight_partition(*c, l), pm = weight_partition(*c, m), pn = weight_partition(*c, n);
        int extra = pl.size() + pm.size() - pn.size();
        bool lr = false;
        if (extra >= 0 && extra % nvars == 0) {
          std::vector<int> parts(nvars);
          for (int i = 0; i < nvars; ++i) parts[i] = pn[i] + extra / nvars;
          while (!parts.empty() && parts.back() == 0) parts.pop_back();
          lr = lr_coefficient(pl, pm, Partition(parts)) != 0;
        }
        EXPECT_EQ(jack_oracle_lhs(*c, l, m, n), lr) << vec_str(l) << vec_str(m) << vec_str(n);
      }
}

TEST(Rhs, TensorFactorizesAcrossIsogeny) {
  const std::pair<const char*, Params> cases[] = {
      {"Sph.A6", {{"n", 3}}}, {"Sph.A8", {{"n", 2}}}, {"Sph.A14", {}}, {"Sph.A10", {{"n", 3}}}, {"Sph.A13", {}}};
  for (const auto& [id, params] : cases) {
    auto c = instantiate_case(id, params);
    std::size_t n = c->generators.size();
    long long bound = n > 2 ? 2 : 3;
    for (const auto& l : bounded(n, bound))
      for (const auto& m : bounded(n, bound))
        for (const auto& v : bounded(n, 2 * bound)) {
          bool x = conjecture_rhs_parts(*c, l, m, v).tensor;
          bool y = true;
          for (int side = 0; side < 2; ++side) {
            const auto& refs = side == 0 ? c->hat : c->bar;
            auto f = [&](const IVec& w) { return split_targets(refs, side == 0 ? phi_hat(*c, w) : phi_bar(*c, w)); };
            auto fl = f(l), fm = f(m), fv = f(v);
            for (std::size_t i = 0; i < refs.size(); ++i)
              y = y && conjecture_rhs_parts(*instantiate_case(refs[i]), fl[i], fm[i], fv[i]).tensor;
          }
          EXPECT_EQ(x, y) << c->key() << " " << vec_str(l) << vec_str(m) << vec_str(v);
        }
  }
}
