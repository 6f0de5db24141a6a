#include "sph/root_datum.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace sph {

namespace {

struct IVecHash {
  std::size_t operator()(const IVec& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (long long x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

QVec covector_on_lattice(const QVec& ambient_coroot, const IMat& lattice_omega) {
  QVec out;
  for (const auto& b : lattice_omega) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < b.size(); ++i) s += mpq_class(static_cast<long>(b[i])) * ambient_coroot[i];
    out.push_back(s);
  }
  return out;
}

}  // namespace

IVec BasedRootDatum::reflect(const IVec& x, int j) const {
  long long p = pair(x, j);
  IVec r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= p * base[j][i];
  return r;
}

IMat BasedRootDatum::cartan() const {
  std::size_t n = base.size();
  IMat c(n, IVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = dot(base[i], coroots[j]);
  return c;
}

DatumReport verify_based_root_datum(const BasedRootDatum& d, long long ceiling) {
  DatumReport r;
  std::size_t n = d.base.size();
  r.axiom_i = d.coroots.size() == n;
  for (const auto& v : d.base)
    if (static_cast<int>(v.size()) != d.lattice_rank) r.axiom_i = false;
  for (const auto& v : d.coroots)
    if (static_cast<int>(v.size()) != d.lattice_rank) r.axiom_i = false;
  if (!r.axiom_i) {
    r.witnesses.push_back("axiom i: dimension mismatch between lattice, base and coroots");
    return r;
  }
  r.axiom_ii = true;
  for (std::size_t j = 0; j < n; ++j)
    if (d.pair(d.base[j], static_cast<int>(j)) != 2) {
      r.axiom_ii = false;
      r.witnesses.push_back("axiom ii: <alpha,alpha^vee> = " + std::to_string(d.pair(d.base[j], static_cast<int>(j))) +
                            " for base element " + vec_str(d.base[j]));
    }
  if (!r.axiom_ii) return r;

  // orbit of the base
  std::unordered_set<IVec, IVecHash> seen(d.base.begin(), d.base.end());
  std::vector<IVec> roots(d.base.begin(), d.base.end());
  bool finite = true;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      IVec x = d.reflect(roots[k], static_cast<int>(j));
      if (seen.insert(x).second) roots.push_back(x);
    }
    if (static_cast<long long>(roots.size()) > ceiling) {
      finite = false;
      break;
    }
  }
  IMat C = d.cartan();
  QMat cq = to_q(C);
  bool nondegenerate = rational_rank(cq) == static_cast<int>(n);
  r.axiom_iii = finite && nondegenerate;
  if (!finite) r.witnesses.push_back("axiom iii: root orbit exceeds ceiling");
  if (!nondegenerate) r.witnesses.push_back("axiom iii: degenerate Cartan matrix, W infinite");
  if (!r.axiom_iii) return r;

  // |W| = orbit of a regular element v with <v, alpha_j^vee> = 1
  QMat rows;
  for (std::size_t j = 0; j < n; ++j) rows.push_back(cq[j]);
  QVec coeff(n);
  {
    // solve sum_i c_i C[i][j] = 1
    auto sol = solve_in_span(rows, QVec(n, 1));
    if (!sol) {
      r.axiom_iii = false;
      r.witnesses.push_back("axiom iii: no regular element");
      return r;
    }
    coeff = *sol;
  }
  mpz_class den = 1;
  for (const auto& c : coeff) den = lcm(den, mpz_class(c.get_den()));
  IVec v(d.lattice_rank, 0);
  for (std::size_t i = 0; i < n; ++i) {
    long long ci = mpq_class(coeff[i] * den).get_num().get_si();
    for (int t = 0; t < d.lattice_rank; ++t) v[t] += ci * d.base[i][t];
  }
  std::unordered_set<IVec, IVecHash> orbit{v};
  std::vector<IVec> frontier{v};
  while (!frontier.empty()) {
    std::vector<IVec> next;
    for (const auto& x : frontier)
      for (std::size_t j = 0; j < n; ++j) {
        IVec y = d.reflect(x, static_cast<int>(j));
        if (orbit.insert(y).second) next.push_back(y);
      }
    if (static_cast<long long>(orbit.size()) > ceiling) {
      r.axiom_iii = false;
      r.witnesses.push_back("axiom iii: Weyl group order exceeds ceiling");
      return r;
    }
    frontier.swap(next);
  }
  r.weyl_order = static_cast<long long>(orbit.size());
  r.root_count = static_cast<long long>(roots.size());

  // axiom iv
  r.axiom_iv = true;
  IMat base_rows(d.base.begin(), d.base.end());
  if (rational_rank(to_q(base_rows)) != static_cast<int>(n)) {
    r.axiom_iv = false;
    r.witnesses.push_back("axiom iv: base is linearly dependent");
    return r;
  }
  for (const auto& x : roots) {
    auto sol = solve_in_span(base_rows, x);
    if (!sol || !is_integral(*sol)) {
      r.axiom_iv = false;
      r.witnesses.push_back("axiom iv: root " + vec_str(x) + " is not an integer combination of the base");
      continue;
    }
    bool pos = std::all_of(sol->begin(), sol->end(), [](const mpq_class& c) { return c >= 0; });
    bool neg = std::all_of(sol->begin(), sol->end(), [](const mpq_class& c) { return c <= 0; });
    if (!pos && !neg) {
      r.axiom_iv = false;
      r.witnesses.push_back("axiom iv: root " + vec_str(x) + " has mixed signs over the base");
    }
  }
  // reduced: collinear roots differ by a sign
  for (std::size_t a = 0; a < roots.size() && r.axiom_iv; ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      const IVec &x = roots[a], &y = roots[b];
      bool collinear = true;
      for (std::size_t i = 0; i < x.size() && collinear; ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
          if (x[i] * y[j] != x[j] * y[i]) {
            collinear = false;
            break;
          }
      if (collinear && x != scale(y, -1)) {
        r.axiom_iv = false;
        r.witnesses.push_back("axiom iv: non-reduced pair " + vec_str(x) + ", " + vec_str(y));
        break;
      }
    }
  if (r.axiom_iv) {
    RootSystem rs(C);
    r.cartan_type = cartan_type_str(rs.recognize());
    if (static_cast<long long>(rs.positive_roots().size() * 2) != r.root_count) {
      r.axiom_iv = false;
      r.witnesses.push_back("axiom iv: orbit size disagrees with the root system of the Cartan matrix");
    }
  }
  return r;
}

const char* shape_name(CorootShape s) {
  switch (s) {
    case CorootShape::positive_root: return "positive-root";
    case CorootShape::doubled_simple: return "doubled-simple";
    case CorootShape::orthogonal_sum: return "orthogonal-sum";
  }
  return "?";
}

RestrictedCoroot restricted_coroot(const IVec& sigma, const RootSystem& ambient, const IMat& lattice_omega) {
  RestrictedCoroot out;
  auto restrict_int = [&](const QVec& amb) {
    QVec v = covector_on_lattice(amb, lattice_omega);
    if (!is_integral(v))
      throw std::domain_error("restricted coroot of " + vec_str(sigma) + " is not integral on the lattice");
    return to_int(v);
  };
  const auto& pos = ambient.positive_roots();
  if (std::find(pos.begin(), pos.end(), sigma) != pos.end()) {
    out.shape = CorootShape::positive_root;
    out.ambient = ambient.coroot(sigma);
    out.on_lattice = restrict_int(out.ambient);
    return out;
  }
  int nz = 0, idx = -1;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] != 0) {
      ++nz;
      idx = static_cast<int>(i);
    }
  if (nz == 1 && sigma[idx] == 2) {
    out.shape = CorootShape::doubled_simple;
    IVec alpha(sigma.size(), 0);
    alpha[idx] = 1;
    QVec full = ambient.coroot(alpha);
    QVec full_on = covector_on_lattice(full, lattice_omega);
    for (const auto& x : full_on)
      if (x.get_den() != 1 || x.get_num() % 2 != 0)
        throw std::domain_error("evenness check failed for doubled simple root " + vec_str(sigma));
    for (auto& x : full) x /= 2;
    out.ambient = full;
    out.on_lattice = restrict_int(full);
    return out;
  }
  out.shape = CorootShape::orthogonal_sum;
  std::set<IVec> seen_covectors;
  for (const auto& beta : pos) {
    IVec gamma = sub(sigma, beta);
    if (std::find(pos.begin(), pos.end(), gamma) == pos.end()) continue;
    if (!strongly_orthogonal(beta, gamma, ambient)) continue;
    out.decompositions.emplace_back(beta, gamma);
    IVec cb = restrict_int(ambient.coroot(beta));
    IVec cg = restrict_int(ambient.coroot(gamma));
    seen_covectors.insert(cb);
    seen_covectors.insert(cg);
    if (out.ambient.empty()) {
      out.ambient = ambient.coroot(beta);
      out.on_lattice = cb;
    }
    auto height = [](const IVec& v) { return std::accumulate(v.begin(), v.end(), 0LL); };
    if (height(beta) == 1 && height(gamma) == 1) out.needs_review = true;
  }
  if (out.decompositions.empty())
    throw std::domain_error("spherical root " + vec_str(sigma) + " matches no coroot rule");
  if (seen_covectors.size() != 1)
    throw std::domain_error("strongly orthogonal decompositions of " + vec_str(sigma) +
                            " give different restricted coroots");
  return out;
}

std::vector<int> build_delta_dagger(const std::vector<IVec>& delta_n, const RootSystem& ambient,
                                    const IMat& lattice_omega) {
  std::vector<QVec> cor;
  for (const auto& s : delta_n) cor.push_back(restricted_coroot(s, ambient, lattice_omega).ambient);
  std::vector<int> out;
  for (std::size_t i = 0; i < delta_n.size(); ++i) {
    const IVec& s = delta_n[i];
    int nz = 0;
    bool doubled = true;
    for (long long x : s) {
      if (x != 0) ++nz;
      if (x != 0 && x != 2) doubled = false;
    }
    if (nz != 1 || !doubled) continue;
    IVec w = ambient.root_to_weight(s);
    bool even = true;
    for (const auto& c : cor) {
      mpq_class p = 0;
      for (std::size_t t = 0; t < w.size(); ++t) p += mpq_class(static_cast<long>(w[t])) * c[t];
      if (p.get_den() != 1 || p.get_num() % 2 != 0) even = false;
    }
    if (even) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool order_leq_X(const IVec& delta, const std::vector<IVec>& generators) {
  if (is_zero(delta)) return true;
  if (generators.empty()) return false;
  auto sol = solve_in_span(IMat(generators.begin(), generators.end()), delta);
  if (!sol) return false;
  for (const auto& c : *sol)
    if (c.get_den() != 1 || c < 0) return false;
  return true;
}

}  // namespace sph
