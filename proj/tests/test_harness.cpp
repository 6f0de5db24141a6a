#include "sph/harness.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace sph;

namespace {

std::set<IVec> firsts(const std::vector<Triple>& ts) {
  std::set<IVec> out;
  for (const auto& t : ts) {
    out.insert(t.lambda);
    out.insert(t.mu);
  }
  return out;
}

}  // namespace

TEST(Enumerate, BoundZeroIsTheTrivialTriple) {
  auto ts = enumerate_triples(*instantiate_case("Sym.A1", {{"n", 2}}), 0);
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].lambda, IVec{0});
  EXPECT_EQ(ts[0].nu, IVec{0});
}

TEST(Enumerate, SymA1RankOne) {
  auto c = instantiate_case("Sym.A1", {{"n", 2}});
  auto ts = enumerate_triples(*c, 2);
  // generator 2*omega_1: lambda, mu range over 0, 2w1, 4w1
  EXPECT_EQ(firsts(ts), (std::set<IVec>{{0}, {1}, {2}}));
  for (const auto& t : ts) {
    EXPECT_LE(t.lambda, t.mu);
    EXPECT_LE(t.nu[0], t.lambda[0] + t.mu[0]);
  }
  // (1,1) pairs with nu in {0, 1, 2}: lambda + mu - nu must lie in N Delta
  std::set<IVec> nus;
  for (const auto& t : ts)
    if (t.lambda == IVec{1} && t.mu == IVec{1}) nus.insert(t.nu);
  EXPECT_EQ(nus, (std::set<IVec>{{0}, {1}, {2}}));
}

TEST(Enumerate, SymA2PairCount) {
  auto ts = enumerate_triples(*instantiate_case("Sym.A2", {{"n", 3}}), 2);
  std::set<std::pair<IVec, IVec>> pairs;
  for (const auto& t : ts) pairs.insert({t.lambda, t.mu});
  EXPECT_EQ(pairs.size(), 9u);
}

TEST(Enumerate, RejectsUnitsAndNegativeBounds) {
  EXPECT_THROW(enumerate_triples(*instantiate_case("Aux.GLdet"), 2), std::invalid_argument);
  EXPECT_THROW(enumerate_triples(*instantiate_case("Sym.A1", {{"n", 2}}), -1), std::invalid_argument);
}

TEST(Run, ParallelMatchesSerialAndRerunsAreIdentical) {
  RunOptions serial;
  serial.keep_verdicts = true;
  RunOptions parallel = serial;
  parallel.jobs = 3;
  auto a = run_conjecture_check("Sph.A6", {{"n", 3}}, 4, serial);
  auto b = run_conjecture_check("Sph.A6", {{"n", 3}}, 4, parallel);
  auto c = run_conjecture_check("Sph.A6", {{"n", 3}}, 4, serial);
  EXPECT_GT(a.counts.tested, 0);
  EXPECT_EQ(a.counts.disagreements, 0);
  EXPECT_EQ(report_text(a, false), report_text(b, false));
  EXPECT_EQ(report_text(a, false), report_text(c, false));
  EXPECT_EQ(report_csv(a), report_csv(b));
}

TEST(Run, VerdictsReplayIndividually) {
  RunOptions opt;
  opt.keep_verdicts = true;
  auto r = run_conjecture_check("Sym.A2", {{"n", 3}}, 3, opt);
  auto c = instantiate_case("Sym.A2", {{"n", 3}});
  ASSERT_EQ(static_cast<long long>(r.verdicts.size()), r.counts.tested);
  for (const auto& v : r.verdicts) {
    auto again = evaluate_triple(*c, {v.lambda, v.mu, v.nu});
    EXPECT_EQ(again.lhs, v.lhs);
    EXPECT_EQ(again.agree, v.agree);
  }
}

TEST(Run, CompareDictionariesCountsDifferences) {
  RunOptions opt;
  opt.compare_dictionaries = true;
  auto r = run_conjecture_check("Sym.A5", {}, 3, opt);
  EXPECT_EQ(r.dictionary_differences, 0);
  EXPECT_NE(report_text(r, false).find("dictionary_differences: 0"), std::string::npos);
}

TEST(Stanley, SmallBound) {
  auto r = run_stanley_scan(2);
  EXPECT_EQ(r.counts.disagreements, 0);
  int exact = 0;
  for (const auto& f : r.findings)
    if (f.subject.rfind("g[(1),(1)->", 0) == 0) {
      EXPECT_TRUE(f.ok) << f.subject;
      EXPECT_EQ(f.fields[0].second, f.fields[1].second);
      ++exact;
    }
  EXPECT_EQ(exact, 2);
}

TEST(Counterexample, AllBranchesReproduce) {
  auto r = run_counterexample();
  EXPECT_EQ(r.counts.tested, 3);
  EXPECT_TRUE(r.passed());
  for (const auto& f : r.findings) EXPECT_TRUE(f.ok) << f.subject;
}

TEST(Isogeny, SuitePasses) {
  auto r = run_isogeny_suite();
  EXPECT_TRUE(r.passed());
  EXPECT_GE(r.counts.tested, 19);
  for (const auto& f : r.findings) EXPECT_TRUE(f.ok) << f.subject;
}
