#include "sph/jack.hpp"

#include "sph/config.hpp"
#include "sph/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace sph {

namespace {

// Monomial coefficients of P_lambda via the Laplace-Beltrami eigen-recurrence.
std::map<Partition, ParamRat> jack_p_normalized(const Partition& lambda) {
  int n = lambda.size();
  auto all = partitions_of(n);
  auto rho_terms = [](const Partition& p, long& quad, long& lin) {
    quad = 0;
    lin = 0;
    for (int i = 0; i < p.length(); ++i) {
      quad += static_cast<long>(p[i]) * (p[i] - 1);
      lin += static_cast<long>(i) * p[i];
    }
  };
  long ql, ll;
  rho_terms(lambda, ql, ll);
  std::map<Partition, ParamRat> c;
  c[lambda] = ParamRat(1);
  const ParamPoly k = ParamPoly::k();
  for (const auto& mu : all) {
    if (!(mu < lambda) || !dominance_leq(mu, lambda)) continue;
    ParamRat sum;
    std::vector<int> m = mu.parts();
    int len = mu.length();
    for (int j = 1; j < len; ++j) {
      for (int i = 0; i < j; ++i) {
        for (int t = 1; t <= m[j]; ++t) {
          std::vector<int> v = m;
          v[i] += t;
          v[j] -= t;
          std::sort(v.begin(), v.end(), std::greater<int>());
          Partition nu(v);
          auto it = c.find(nu);
          if (it == c.end()) continue;
          sum += it->second * ParamRat(mpq_class(m[i] - m[j] + 2 * t));
        }
      }
    }
    if (sum.is_zero()) continue;
    long qm, lm;
    rho_terms(mu, qm, lm);
    // rho_lambda - rho_mu = A - (2/k) B, scaled by k
    ParamPoly den = k * mpq_class(ql - qm) - ParamPoly(mpq_class(2 * (ll - lm)));
    c[mu] = sum * ParamRat(ParamPoly(2), den);
  }
  return c;
}

std::unique_ptr<JackExpansion> compute_jack(const Partition& lambda) {
  int n = lambda.size();
  auto P = jack_p_normalized(lambda);
  auto J = std::make_unique<JackExpansion>();
  J->partition = lambda;
  Partition ones(std::vector<int>(n, 1));
  mpz_class fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  ParamRat scale(1);
  if (n > 0) {
    auto it = P.find(ones);
    if (it == P.end()) throw InvariantViolation("Jack: missing m_(1^n) coefficient for " + lambda.str());
    scale = ParamRat(mpq_class(fact)) / it->second;
  }
  for (auto& [mu, c] : P) {
    ParamRat v = c * scale;
    if (!v.is_polynomial())
      throw InvariantViolation("Jack: non-polynomial monomial coefficient in J" + lambda.str());
    J->monomial_coeffs.emplace(mu, v.as_poly());
  }
  const auto& t = transition_tables(n);
  std::vector<ParamPoly> pc(t.parts.size());
  for (const auto& [mu, c] : J->monomial_coeffs) {
    const auto& row = t.m_to_p[t.index.at(mu)];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) pc[j] += c * row[j];
  }
  for (std::size_t j = 0; j < pc.size(); ++j)
    if (!pc[j].is_zero()) J->power_sum_coeffs.emplace(t.parts[j], std::move(pc[j]));
  return J;
}

template <class K, class V, class H = std::hash<K>>
class ReadMostlyCache {
public:
  template <class F>
  const V& get(const K& key, F&& make) {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return *it->second;
    }
    auto value = make();
    std::unique_lock lock(mu_);
    auto [it, inserted] = map_.emplace(key, std::move(value));
    return *it->second;
  }

private:
  std::shared_mutex mu_;
  std::unordered_map<K, std::unique_ptr<V>, H> map_;
};

ReadMostlyCache<Partition, JackExpansion, PartitionHash> g_jack_cache;

struct PairHash {
  std::size_t operator()(const std::pair<Partition, Partition>& p) const {
    PartitionHash h;
    return h(p.first) * 31 + h(p.second);
  }
};
ReadMostlyCache<std::pair<Partition, Partition>, std::map<Partition, ParamPoly>, PairHash> g_g_cache;
ReadMostlyCache<Partition, ParamPoly, PartitionHash> g_norm_cache;

ParamPoly gram_pairing(const std::map<Partition, ParamPoly>& a, const std::map<Partition, ParamPoly>& b) {
  ParamPoly acc;
  for (const auto& [rho, ca] : a) {
    auto it = b.find(rho);
    if (it == b.end()) continue;
    acc += ca * it->second * ParamPoly::monomial(rho.length(), mpq_class(z_factor(rho)));
  }
  return acc;
}

}  // namespace

const JackExpansion& jack_J(const Partition& lambda) {
  check_degree(lambda.size());
  return g_jack_cache.get(lambda, [&] { return compute_jack(lambda); });
}

ParamPoly hook_product(const Partition& nu) {
  Partition conj = conjugate(nu);
  ParamPoly k = ParamPoly::k();
  ParamPoly r(1);
  for (int i = 0; i < nu.length(); ++i) {
    for (int j = 0; j < nu[i]; ++j) {
      long arm = nu[i] - j - 1;
      long leg = conj[j] - i - 1;
      ParamPoly f1 = k * mpq_class(arm) + ParamPoly(mpq_class(leg + 1));
      ParamPoly f2 = k * mpq_class(arm + 1) + ParamPoly(mpq_class(leg));
      r = r * f1 * f2;
    }
  }
  return r;
}

ParamPoly jack_norm_j(const Partition& nu) {
  check_degree(nu.size());
  return g_norm_cache.get(nu, [&] {
    ParamPoly hook = hook_product(nu);
    const auto& J = jack_J(nu);
    ParamPoly gram = gram_pairing(J.power_sum_coeffs, J.power_sum_coeffs);
    if (!(gram == hook))
      throw InvariantViolation("Jack norm mismatch for " + nu.str() + ": hook " + hook.str() +
                               " vs Gram " + gram.str());
    return std::make_unique<ParamPoly>(std::move(hook));
  });
}

const std::map<Partition, ParamPoly>& structure_constants(const Partition& lambda, const Partition& mu) {
  int n = lambda.size() + mu.size();
  check_degree(n);
  auto key = lambda < mu ? std::make_pair(lambda, mu) : std::make_pair(mu, lambda);
  return g_g_cache.get(key, [&] {
    const auto& A = jack_J(key.first).power_sum_coeffs;
    const auto& B = jack_J(key.second).power_sum_coeffs;
    std::map<Partition, ParamPoly> prod;
    for (const auto& [pa, ca] : A)
      for (const auto& [pb, cb] : B) prod[union_parts(pa, pb)] += ca * cb;
    auto out = std::make_unique<std::map<Partition, ParamPoly>>();
    for (const auto& nu : partitions_of(n)) {
      ParamPoly g = gram_pairing(prod, jack_J(nu).power_sum_coeffs);
      if (!g.has_integer_coefficients())
        throw InvariantViolation("structure constant g_{" + key.first.str() + "," + key.second.str() +
                                 "}^" + nu.str() + " = " + g.str() + " is not in Z[k]");
      if (!g.is_zero()) out->emplace(nu, std::move(g));
    }
    return out;
  });
}

ParamPoly structure_constant_g(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return ParamPoly();
  const auto& all = structure_constants(lambda, mu);
  auto it = all.find(nu);
  return it == all.end() ? ParamPoly() : it->second;
}

std::set<Partition> pieri_support(const Partition& lambda, int r) {
  if (r < 1) throw std::invalid_argument("pieri_support: r must be >= 1");
  check_degree(lambda.size() + r);
  std::set<Partition> out;
  int len = lambda.length();
  std::vector<int> nu(len + 1, 0);
  // row i may grow up to lambda[i-1] (row 0 unbounded)
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == len + 1) {
      if (left == 0) out.insert(Partition(nu));
      return;
    }
    int cap = i == 0 ? left : std::min(left, lambda[i - 1] - lambda[i]);
    for (int add = 0; add <= cap; ++add) {
      nu[i] = lambda[i] + add;
      self(self, i + 1, left - add);
    }
  };
  rec(rec, 0, r);
  return out;
}

mpq_class specialize(const ParamPoly& p, const mpq_class& k0) { return p.eval(k0); }

Partition reduce_columns(const Partition& nu, int nvars) {
  if (nvars < 2 || nu.length() < nvars) return nu;
  int drop = nu[nvars - 1];
  std::vector<int> v;
  for (int x : nu.parts())
    if (x - drop > 0) v.push_back(x - drop);
  return Partition(v);
}

std::set<Partition> product_support_at(const Partition& lambda, const Partition& mu,
                                       const mpq_class& k0, int nvars) {
  if (nvars < 1) throw std::invalid_argument("product_support_at: nvars must be >= 1");
  if (k0 <= 0) throw std::invalid_argument("product_support_at: k0 must be positive");
  if (lambda.length() > nvars || mu.length() > nvars)
    throw std::invalid_argument("product_support_at: partition longer than nvars");
  std::set<Partition> out;
  for (const auto& [nu, g] : structure_constants(lambda, mu)) {
    if (nu.length() > nvars) continue;
    if (specialize(g, k0) == 0) continue;
    out.insert(reduce_columns(nu, nvars));
  }
  return out;
}

}  // namespace sph
