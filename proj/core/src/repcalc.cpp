#include "sph/repcalc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <stdexcept>

namespace sph {

namespace {

void require_dominant(const IVec& w, const RootSystem& rs, const char* what) {
  if (static_cast<int>(w.size()) != rs.rank()) throw std::invalid_argument(std::string(what) + ": rank mismatch");
  if (!rs.is_dominant(w)) throw std::invalid_argument(std::string(what) + ": weight " + vec_str(w) + " is not dominant");
}

using Key = std::pair<IMat, std::vector<IVec>>;

template <class V>
class KeyedCache {
public:
  template <class F>
  std::shared_ptr<const V> get(const Key& key, F&& make) {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    std::shared_ptr<const V> value = make();
    std::unique_lock lock(mu_);
    return map_.emplace(key, value).first->second;
  }

private:
  std::shared_mutex mu_;
  std::map<Key, std::shared_ptr<const V>> map_;
};

KeyedCache<FormalCharacter> g_chars;
KeyedCache<WeightMultiset> g_tensors;

std::shared_ptr<FormalCharacter> freudenthal(const IVec& lambda, const RootSystem& rs) {
  int n = rs.rank();
  std::vector<IVec> pos_w;
  for (const auto& a : rs.positive_roots()) pos_w.push_back(rs.root_to_weight(a));

  // saturated set of dominant weights
  std::set<IVec> dom{lambda};
  std::vector<IVec> queue{lambda};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    IVec mu = queue[q];
    for (std::size_t r = 0; r < pos_w.size(); ++r) {
      long long m = rs.pair_coroot(mu, rs.positive_roots()[r]);
      IVec cur = mu;
      for (long long i = 1; i <= m; ++i) {
        cur = sub(cur, pos_w[r]);
        IVec d = rs.to_dominant(cur);
        if (dom.insert(d).second) queue.push_back(d);
      }
    }
  }
  // order by depth below lambda
  std::vector<std::pair<mpq_class, IVec>> order;
  for (const auto& mu : dom) {
    QVec c = rs.weight_to_root(sub(lambda, mu));
    mpq_class h = 0;
    for (const auto& x : c) h += x;
    order.emplace_back(h, mu);
  }
  std::sort(order.begin(), order.end());
  IVec rho = rs.rho();
  IVec lr = add(lambda, rho);
  long long top = rs.weight_form(lr, lr);
  std::map<IVec, long long> mult;
  mult[lambda] = 1;
  auto lookup = [&](const IVec& w) -> long long {
    auto it = mult.find(rs.to_dominant(w));
    return it == mult.end() ? 0 : it->second;
  };
  for (const auto& [h, mu] : order) {
    if (mu == lambda) continue;
    IVec mr = add(mu, rho);
    long long den = top - rs.weight_form(mr, mr);
    long long num = 0;
    for (const auto& aw : pos_w) {
      IVec cur = mu;
      while (true) {
        cur = add(cur, aw);
        long long m = lookup(cur);
        if (m == 0) break;
        num += m * rs.weight_form(cur, aw);
      }
    }
    num *= 2;
    if (den <= 0 || num % den != 0) throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
    if (num / den > 0) mult[mu] = num / den;
  }
  auto ch = std::make_shared<FormalCharacter>();
  ch->highest_weight = lambda;
  for (const auto& [mu, m] : mult)
    for (const auto& w : rs.weyl_orbit(mu)) ch->weights[w] = m;
  (void)n;
  return ch;
}

}  // namespace

long long FormalCharacter::dimension() const {
  long long d = 0;
  for (const auto& [w, m] : weights) d += m;
  return d;
}

std::shared_ptr<const FormalCharacter> dominant_character(const IVec& lambda, const RootSystem& rs) {
  require_dominant(lambda, rs, "dominant_character");
  return g_chars.get(Key{rs.cartan(), {lambda}}, [&] { return freudenthal(lambda, rs); });
}

WeightMultiset decompose_character(const WeightMultiset& ch, const RootSystem& rs) {
  IVec rho = rs.rho();
  WeightMultiset out;
  for (const auto& [xi, m] : ch) {
    int parity = 0;
    IVec d = rs.to_dominant(add(xi, rho), &parity);
    if (std::any_of(d.begin(), d.end(), [](long long x) { return x == 0; })) continue;
    IVec nu = sub(d, rho);
    out[nu] += parity ? -m : m;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::shared_ptr<const WeightMultiset> tensor_decomposition(const IVec& lambda, const IVec& mu, const RootSystem& rs) {
  require_dominant(lambda, rs, "tensor_multiplicity");
  require_dominant(mu, rs, "tensor_multiplicity");
  const IVec& a = std::min(lambda, mu);
  const IVec& b = std::max(lambda, mu);
  return g_tensors.get(Key{rs.cartan(), {a, b}}, [&] {
    auto ca = dominant_character(a, rs);
    auto cb = dominant_character(b, rs);
    bool a_small = ca->dimension() <= cb->dimension();
    const auto& small = a_small ? *ca : *cb;
    const IVec& big = a_small ? b : a;
    IVec rho = rs.rho();
    auto out = std::make_shared<WeightMultiset>();
    for (const auto& [xi, m] : small.weights) {
      int parity = 0;
      IVec d = rs.to_dominant(add(add(xi, big), rho), &parity);
      if (std::any_of(d.begin(), d.end(), [](long long x) { return x == 0; })) continue;
      (*out)[sub(d, rho)] += parity ? -m : m;
    }
    for (auto it = out->begin(); it != out->end();) {
      if (it->second < 0) throw std::logic_error("Brauer-Klimyk produced a negative multiplicity");
      it = it->second == 0 ? out->erase(it) : std::next(it);
    }
    return std::shared_ptr<const WeightMultiset>(out);
  });
}

long long tensor_multiplicity(const IVec& lambda, const IVec& mu, const IVec& nu, const RootSystem& rs) {
  require_dominant(nu, rs, "tensor_multiplicity");
  auto dec = tensor_decomposition(lambda, mu, rs);
  auto it = dec->find(nu);
  return it == dec->end() ? 0 : it->second;
}

namespace {
long long doubled_part(const IVec& lambda, const IVec& nu, const RootSystem& rs) {
  auto ch = dominant_character(lambda, rs);
  WeightMultiset doubled;
  for (const auto& [w, m] : ch->weights) doubled[scale(w, 2)] += m;
  auto dec = decompose_character(doubled, rs);
  auto it = dec.find(nu);
  return it == dec.end() ? 0 : it->second;
}
}  // namespace

long long sym2_multiplicity(const IVec& lambda, const IVec& nu, const RootSystem& rs) {
  require_dominant(nu, rs, "sym2_multiplicity");
  long long t = tensor_multiplicity(lambda, lambda, nu, rs);
  long long d = doubled_part(lambda, nu, rs);
  return (t + d) / 2;
}

long long alt2_multiplicity(const IVec& lambda, const IVec& nu, const RootSystem& rs) {
  require_dominant(nu, rs, "alt2_multiplicity");
  long long t = tensor_multiplicity(lambda, lambda, nu, rs);
  long long d = doubled_part(lambda, nu, rs);
  return (t - d) / 2;
}

long long weyl_dim(const IVec& lambda, const RootSystem& rs) {
  require_dominant(lambda, rs, "weyl_dim");
  IVec rho = rs.rho();
  IVec lr = add(lambda, rho);
  mpq_class d = 1;
  for (const auto& a : rs.positive_roots())
    d *= qfrac(rs.pair_coroot(lr, a), rs.pair_coroot(rho, a));
  if (d.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
  return d.get_num().get_si();
}

bool is_weyl_invariant(const WeightMultiset& ch, const RootSystem& rs) {
  for (const auto& [w, m] : ch)
    for (int i = 0; i < rs.rank(); ++i) {
      auto it = ch.find(rs.reflect_weight(w, i));
      if (it == ch.end() || it->second != m) return false;
    }
  return true;
}

IVec partition_to_sl_weight(const Partition& p, int n) {
  if (p.length() > n) throw std::invalid_argument("partition longer than the number of variables");
  IVec w(n - 1);
  for (int i = 0; i + 1 < n; ++i) w[i] = p[i] - p[i + 1];
  return w;
}

}  // namespace sph
