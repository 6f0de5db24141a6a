#include "sph/sphdata.hpp"

#include "sph/jack.hpp"
#include "sph/repcalc.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace sph {
namespace {

class RealizedCache {
public:
  template <class F>
  const RealizedDatum& get(const std::string& key, F&& make) {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return *it->second;
    }
    auto value = std::make_unique<RealizedDatum>(make());
    std::unique_lock lock(mu_);
    return *map_.emplace(key, std::move(value)).first->second;
  }

private:
  std::shared_mutex mu_;
  std::unordered_map<std::string, std::unique_ptr<RealizedDatum>> map_;
};

RealizedCache g_rx_cache;

IVec pad(const IVec& v, int dim) {
  IVec out = v;
  out.resize(dim, 0);
  return out;
}

IMat omega_parts(const IMat& rows, int rank) {
  IMat out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.begin() + rank);
  return out;
}

IVec root_weight(const SphericalPairCase& c, const IVec& root) {
  return pad(c.ambient.root_to_weight(root), c.weight_dim());
}

RealizedDatum realize(const SphericalPairCase& c) {
  RealizedDatum rx;
  const int r = c.ambient.rank();
  const int dim = c.weight_dim();
  IMat omega = omega_parts(c.generators, r);
  rx.dagger = build_delta_dagger(c.delta_n, c.ambient, omega);

  IMat spanning = c.generators;
  for (int i : rx.dagger) spanning.push_back(root_weight(c, c.delta_x[i]));
  rx.xi_basis = lattice_basis(spanning);
  for (auto& b : rx.xi_basis) b = pad(b, dim);

  rx.datum.lattice_rank = static_cast<int>(rx.xi_basis.size());
  IMat xi_omega = omega_parts(rx.xi_basis, r);
  for (const auto& sigma : c.delta_x) {
    auto x = rx.xi_coords(root_weight(c, sigma));
    if (!x) throw CaseDataError(c.key() + ": spherical root " + vec_str(sigma) + " outside Xi");
    rx.datum.base.push_back(*x);
    auto cor = restricted_coroot(sigma, c.ambient, xi_omega);
    QVec cov = cor.ambient;
    cov.resize(dim, 0);
    rx.coroot_covectors.push_back(cov);
    rx.datum.coroots.push_back(cor.on_lattice);
    rx.coroots.push_back(std::move(cor));
  }
  rx.report = verify_based_root_datum(rx.datum);
  rx.gx = RootSystem(rx.datum.cartan());
  rx.type = rx.gx.recognize();
  return rx;
}

IVec linear_image(const IMat& rows, const IVec& coords, int width) {
  IVec out(width, 0);
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (coords[j] != 0) out = add(out, scale(rows[j], coords[j]));
  return out;
}

int target_width(const std::vector<CaseRef>& targets) {
  int n = 0;
  for (const auto& t : targets) n += static_cast<int>(instantiate_case(t)->generators.size());
  return n;
}

void require_monoid(const SphericalPairCase& c, const IVec& x, const char* what) {
  if (!c.in_monoid(x))
    throw std::invalid_argument(c.key() + ": " + what + " " + vec_str(x) + " is not in the weight monoid");
}

// concatenated target Xi coordinates of a rational combination of source generators
std::optional<QVec> target_xi(const std::vector<CaseRef>& targets, const IMat& phi, const QVec& gen_coords) {
  int width = target_width(targets);
  QVec t(width, 0);
  for (std::size_t j = 0; j < gen_coords.size(); ++j)
    for (int i = 0; i < width; ++i) t[i] += gen_coords[j] * mpq_class(static_cast<long>(phi[j][i]));
  QVec out;
  int offset = 0;
  for (const auto& ref : targets) {
    auto tc = instantiate_case(ref);
    const auto& trx = build_RX(*tc);
    int dim = tc->weight_dim();
    QVec w(dim, 0);
    for (std::size_t g = 0; g < tc->generators.size(); ++g)
      for (int i = 0; i < dim; ++i) w[i] += t[offset + g] * mpq_class(static_cast<long>(tc->generators[g][i]));
    offset += static_cast<int>(tc->generators.size());
    if (trx.xi_basis.empty()) {
      for (const auto& v : w)
        if (v != 0) return std::nullopt;
      continue;
    }
    auto x = solve_in_span(to_q(trx.xi_basis), w);
    if (!x) return std::nullopt;
    out.insert(out.end(), x->begin(), x->end());
  }
  return out;
}

struct TargetBlock {
  std::vector<IVec> base;
  std::vector<IVec> coroots;
  int width = 0;
};

TargetBlock target_block(const std::vector<CaseRef>& hat, const std::vector<CaseRef>& bar) {
  TargetBlock tb;
  std::vector<const RealizedDatum*> parts;
  for (const auto* list : {&hat, &bar})
    for (const auto& ref : *list) parts.push_back(&build_RX(*instantiate_case(ref)));
  for (const auto* p : parts) tb.width += p->datum.lattice_rank;
  int offset = 0;
  for (const auto* p : parts) {
    for (std::size_t j = 0; j < p->datum.base.size(); ++j) {
      IVec b(tb.width, 0), cv(tb.width, 0);
      for (int i = 0; i < p->datum.lattice_rank; ++i) {
        b[offset + i] = p->datum.base[j][i];
        cv[offset + i] = p->datum.coroots[j][i];
      }
      tb.base.push_back(b);
      tb.coroots.push_back(cv);
    }
    offset += p->datum.lattice_rank;
  }
  return tb;
}

// support of J_lambda * J_mu in nvars variables without column reduction
std::set<Partition> unreduced_support(const Partition& lambda, const Partition& mu, const mpq_class& k0, int nvars) {
  std::set<Partition> out;
  if (lambda.length() > nvars || mu.length() > nvars) return out;
  for (const auto& [nu, g] : structure_constants(lambda, mu))
    if (nu.length() <= nvars && specialize(g, k0) != 0) out.insert(nu);
  return out;
}

Partition add_full_columns(const Partition& p, int count, int height) {
  std::vector<int> parts(height, 0);
  for (int i = 0; i < height; ++i) parts[i] = p[i] + count;
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(parts);
}

bool jack_lhs(const SphericalPairCase& c, const IVec& lambda, const IVec& mu, const IVec& nu, Dictionary dict) {
  const int nvars = c.rank() + 1;
  const mpq_class& k0 = *c.jack_k;
  Partition pl = weight_partition(c, lambda, dict);
  Partition pm = weight_partition(c, mu, dict);
  Partition pn = weight_partition(c, nu, dict);
  if (c.units.empty()) return product_support_at(pl, pm, k0, nvars).count(reduce_columns(pn, nvars)) > 0;
  if (c.units.size() != 1) throw OracleUnavailable(c.key() + ": more than one invertible generator");
  int u = c.units[0];
  long long e = nu[u] - lambda[u] - mu[u];
  if (e < 0) return false;
  return unreduced_support(pl, pm, k0, nvars).count(add_full_columns(pn, static_cast<int>(e), nvars)) > 0;
}

}  // namespace

std::optional<IVec> RealizedDatum::xi_coords(const IVec& weight) const {
  if (xi_basis.empty()) {
    if (is_zero(weight)) return IVec{};
    return std::nullopt;
  }
  auto x = solve_in_span(xi_basis, weight);
  if (!x || !is_integral(*x)) return std::nullopt;
  return to_int(*x);
}

const RealizedDatum& build_RX(const SphericalPairCase& c) {
  return g_rx_cache.get(c.key(), [&] {
    try {
      return realize(c);
    } catch (const std::domain_error& e) {
      throw CaseDataError(c.key() + ": " + e.what());
    }
  });
}

IVec phi_hat(const SphericalPairCase& c, const IVec& lambda) {
  if (c.hat.empty()) throw std::invalid_argument(c.key() + " has no isogeny data");
  require_monoid(c, lambda, "weight");
  return linear_image(c.phi_hat, lambda, target_width(c.hat));
}

IVec phi_bar(const SphericalPairCase& c, const IVec& lambda) {
  if (c.hat.empty()) throw std::invalid_argument(c.key() + " has no isogeny data");
  require_monoid(c, lambda, "weight");
  return linear_image(c.phi_bar, lambda, target_width(c.bar));
}

std::vector<IVec> split_targets(const std::vector<CaseRef>& targets, const IVec& coords) {
  std::vector<IVec> out;
  std::size_t offset = 0;
  for (const auto& t : targets) {
    std::size_t n = instantiate_case(t)->generators.size();
    if (offset + n > coords.size()) throw std::invalid_argument("target coordinates too short");
    out.emplace_back(coords.begin() + offset, coords.begin() + offset + n);
    offset += n;
  }
  if (offset != coords.size()) throw std::invalid_argument("target coordinates too long");
  return out;
}

IsogenyReport verify_isogeny(const SphericalPairCase& c) {
  IsogenyReport rep;
  rep.case_key = c.key();
  if (c.hat.empty()) {
    rep.witnesses.push_back("no isogeny data");
    return rep;
  }
  const auto& rx = build_RX(c);
  IMat phi(c.generators.size());
  for (std::size_t j = 0; j < c.generators.size(); ++j) {
    phi[j] = c.phi_hat[j];
    phi[j].insert(phi[j].end(), c.phi_bar[j].begin(), c.phi_bar[j].end());
  }
  std::vector<CaseRef> targets = c.hat;
  targets.insert(targets.end(), c.bar.begin(), c.bar.end());
  TargetBlock tb = target_block(c.hat, c.bar);

  // image of an ambient weight of Xi
  auto image = [&](const IVec& w) -> std::optional<IVec> {
    auto g = solve_in_span(c.generators, w);
    if (!g) return std::nullopt;
    auto t = target_xi(targets, phi, *g);
    if (!t || !is_integral(*t)) return std::nullopt;
    return to_int(*t);
  };

  // columns of the lattice map are images of the Xi basis
  std::vector<IVec> images;
  bool integral = true;
  for (const auto& b : rx.xi_basis) {
    auto im = image(b);
    if (!im) {
      integral = false;
      rep.witnesses.push_back("Xi basis vector " + vec_str(b) + " has no integral image");
      im = IVec(tb.width, 0);
    }
    images.push_back(*im);
  }
  IMat m(tb.width, IVec(images.size(), 0));
  for (std::size_t j = 0; j < images.size(); ++j)
    for (int i = 0; i < tb.width; ++i) m[i][j] = images[j][i];
  rep.lattice = lattice_map_diagnostics(m);
  if (!integral) rep.lattice.injective = false;
  if (!rep.lattice.injective) rep.witnesses.push_back("lattice map not injective");
  if (!rep.lattice.cokernel_index) rep.witnesses.push_back("infinite cokernel");

  // base bijection and coroot compatibility
  std::vector<int> matched(tb.base.size(), -1);
  rep.base_bijection = c.delta_x.size() == tb.base.size();
  rep.coroot_compatible = true;
  for (std::size_t s = 0; s < c.delta_x.size(); ++s) {
    IVec sx = rx.datum.base[s];
    IVec im(tb.width, 0);
    for (std::size_t j = 0; j < sx.size(); ++j) im = add(im, scale(images[j], sx[j]));
    auto it = std::find(tb.base.begin(), tb.base.end(), im);
    if (it == tb.base.end() || matched[it - tb.base.begin()] != -1) {
      rep.base_bijection = false;
      rep.coroot_compatible = false;
      rep.witnesses.push_back("spherical root " + vec_str(c.delta_x[s]) + " maps to " + vec_str(im));
      continue;
    }
    int t = static_cast<int>(it - tb.base.begin());
    matched[t] = static_cast<int>(s);
    for (std::size_t j = 0; j < images.size(); ++j) {
      long long lhs = dot(images[j], tb.coroots[t]);
      long long rhs = rx.datum.coroots[s][j];
      if (lhs != rhs) {
        rep.coroot_compatible = false;
        rep.witnesses.push_back("coroot of " + vec_str(c.delta_x[s]) + " differs on Xi basis vector " +
                                std::to_string(j));
      }
    }
  }
  if (std::count(matched.begin(), matched.end(), -1) != 0) rep.base_bijection = false;

  // additivity on generator pairs and monoid preservation
  rep.additive = true;
  const std::size_t n = c.generators.size();
  for (std::size_t a = 0; a < n; ++a) {
    IVec ea(n, 0);
    ea[a] = 1;
    auto split_ok = [&](const std::vector<CaseRef>& refs, const IVec& coords) {
      auto parts = split_targets(refs, coords);
      for (std::size_t i = 0; i < refs.size(); ++i)
        if (!instantiate_case(refs[i])->in_monoid(parts[i])) return false;
      return true;
    };
    IVec ha = phi_hat(c, ea), ba = phi_bar(c, ea);
    if (!split_ok(c.hat, ha) || !split_ok(c.bar, ba)) {
      rep.additive = false;
      rep.witnesses.push_back("generator " + std::to_string(a + 1) + " leaves the target monoid");
    }
    for (std::size_t b = a; b < n; ++b) {
      IVec eb(n, 0);
      eb[b] = 1;
      IVec sum = add(ea, eb);
      if (phi_hat(c, sum) != add(ha, phi_hat(c, eb)) || phi_bar(c, sum) != add(ba, phi_bar(c, eb))) {
        rep.additive = false;
        rep.witnesses.push_back("not additive on generators " + std::to_string(a + 1) + "," + std::to_string(b + 1));
      }
    }
  }
  return rep;
}

RhsParts conjecture_rhs_parts(const SphericalPairCase& c, const IVec& lambda, const IVec& mu, const IVec& nu) {
  require_monoid(c, lambda, "lambda");
  require_monoid(c, mu, "mu");
  require_monoid(c, nu, "nu");
  RhsParts out;
  IVec diff = c.weight(sub(add(lambda, mu), nu));

  std::vector<IVec> nroots;
  for (const auto& s : c.delta_n) nroots.push_back(root_weight(c, s));
  out.order = is_zero(diff) || (!nroots.empty() && order_leq_X(diff, nroots));

  const auto& rx = build_RX(c);
  auto dx = rx.xi_coords(diff);
  bool in_root_lattice = false;
  if (dx) {
    if (rx.datum.base.empty()) {
      in_root_lattice = is_zero(*dx);
    } else {
      auto q = solve_in_span(rx.datum.base, *dx);
      in_root_lattice = q && is_integral(*q);
    }
  }
  if (!in_root_lattice) return out;
  if (rx.datum.base.empty()) {
    out.multiplicity = 1;
  } else {
    auto gx_weight = [&](const IVec& coords) {
      auto x = rx.xi_coords(c.weight(coords));
      IVec a(rx.datum.coroots.size());
      for (std::size_t j = 0; j < a.size(); ++j) a[j] = dot(*x, rx.datum.coroots[j]);
      return a;
    };
    out.multiplicity = tensor_multiplicity(gx_weight(lambda), gx_weight(mu), gx_weight(nu), rx.gx);
  }
  out.tensor = out.multiplicity > 0;
  return out;
}

bool conjecture_rhs(const SphericalPairCase& c, const IVec& lambda, const IVec& mu, const IVec& nu) {
  return conjecture_rhs_parts(c, lambda, mu, nu).holds();
}

bool oracle_available(const SphericalPairCase& c) {
  switch (c.oracle) {
    case OracleKind::jack_type_A: return c.units.size() <= 1;
    case OracleKind::factorized:
      for (const auto* list : {&c.hat, &c.bar})
        for (const auto& t : *list)
          if (!oracle_available(*instantiate_case(t))) return false;
      return true;
    case OracleKind::delegated: return oracle_available(*instantiate_case(*c.delegate));
    case OracleKind::none: return false;
  }
  return false;
}

bool jack_oracle_lhs(const SphericalPairCase& c, const IVec& lambda, const IVec& mu, const IVec& nu, Dictionary dict) {
  require_monoid(c, lambda, "lambda");
  require_monoid(c, mu, "mu");
  require_monoid(c, nu, "nu");
  switch (c.oracle) {
    case OracleKind::jack_type_A: return jack_lhs(c, lambda, mu, nu, dict);
    case OracleKind::factorized: {
      auto side = [&](const std::vector<CaseRef>& refs, const IMat& phi) {
        int w = target_width(refs);
        auto l = split_targets(refs, linear_image(phi, lambda, w));
        auto m = split_targets(refs, linear_image(phi, mu, w));
        auto n = split_targets(refs, linear_image(phi, nu, w));
        for (std::size_t i = 0; i < refs.size(); ++i)
          if (!jack_oracle_lhs(*instantiate_case(refs[i]), l[i], m[i], n[i])) return false;
        return true;
      };
      return side(c.hat, c.phi_hat) && side(c.bar, c.phi_bar);
    }
    case OracleKind::delegated: {
      auto d = instantiate_case(*c.delegate);
      int w = static_cast<int>(d->generators.size());
      return jack_oracle_lhs(*d, linear_image(c.embed, lambda, w), linear_image(c.embed, mu, w),
                             linear_image(c.embed, nu, w), dict);
    }
    case OracleKind::none: break;
  }
  throw OracleUnavailable(c.key() + ": no product oracle for this case");
}

Partition weight_partition(const SphericalPairCase& c, const IVec& coords, Dictionary dict) {
  if (coords.size() != c.generators.size())
    throw std::invalid_argument(c.key() + ": wrong number of generator coordinates");
  std::vector<int> order;
  for (int j = 0; j < static_cast<int>(coords.size()); ++j)
    if (std::find(c.units.begin(), c.units.end(), j) == c.units.end()) order.push_back(j);
  if (dict == Dictionary::alternative) std::reverse(order.begin(), order.end());
  std::vector<int> rows(order.size(), 0);
  for (std::size_t h = 0; h < order.size(); ++h) {
    long long cols = coords[order[h]] * c.column_scale;
    if (cols < 0) throw std::invalid_argument(c.key() + ": negative coordinate outside the unit group");
    for (std::size_t r = 0; r <= h; ++r) rows[r] += static_cast<int>(cols);
  }
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return Partition(rows);
}

}  // namespace sph
