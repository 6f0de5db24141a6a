#include "sph/symfunc.hpp"

#include "sph/config.hpp"
#include "sph/jack.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace sph {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::monomial: return "m";
    case Basis::power_sum: return "p";
    case Basis::elementary: return "e";
    case Basis::homogeneous: return "h";
    case Basis::jack: return "J";
  }
  return "?";
}

SymFuncExpr SymFuncExpr::single(Basis basis, const Partition& p, const ParamRat& c) {
  SymFuncExpr f(basis, p.size());
  f.add(p, c);
  return f;
}

ParamRat SymFuncExpr::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? ParamRat() : it->second;
}

void SymFuncExpr::add(const Partition& p, const ParamRat& c) {
  if (p.size() != degree_) throw std::invalid_argument("SymFuncExpr: inhomogeneous term " + p.str());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFuncExpr& SymFuncExpr::operator+=(const SymFuncExpr& o) {
  if (o.basis_ != basis_ || o.degree_ != degree_)
    throw std::invalid_argument("SymFuncExpr: basis or degree mismatch in sum");
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

SymFuncExpr& SymFuncExpr::operator*=(const ParamRat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

std::string SymFuncExpr::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  // dominance-large first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "[" + it->second.str() + "]" + basis_name(basis_) + it->first.str();
  }
  return s;
}

RatMatrix invert(const RatMatrix& m) {
  std::size_t n = m.size();
  RatMatrix a = m;
  RatMatrix inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("invert: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    mpq_class f = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= f;
      inv[col][j] *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class g = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (a[col][j] != 0) a[r][j] -= g * a[col][j];
        if (inv[col][j] != 0) inv[r][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

namespace {

// coefficient of x^mu in p_rho(x_1..x_l), l = length(mu)
long long power_sum_monomial_coeff(const Partition& rho, const Partition& mu) {
  std::map<std::vector<int>, long long> states{{mu.parts(), 1}};
  for (int r : rho.parts()) {
    std::map<std::vector<int>, long long> next;
    for (const auto& [rem, cnt] : states) {
      for (std::size_t j = 0; j < rem.size(); ++j) {
        if (rem[j] < r) continue;
        auto v = rem;
        v[j] -= r;
        next[v] += cnt;
      }
    }
    states.swap(next);
  }
  long long total = 0;
  for (const auto& [rem, cnt] : states) total += cnt;
  return total;
}

using SparseP = std::map<Partition, mpq_class>;

SparseP mul_sparse(const SparseP& a, const SparseP& b) {
  SparseP r;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) r[union_parts(pa, pb)] += ca * cb;
  return r;
}

std::unique_ptr<TransitionTables> build_tables(int n) {
  auto t = std::make_unique<TransitionTables>();
  t->degree = n;
  t->parts = partitions_of(n);
  std::size_t N = t->parts.size();
  for (std::size_t i = 0; i < N; ++i) t->index[t->parts[i]] = static_cast<int>(i);

  // p_rho = sum_mu L[rho][mu] m_mu, so M_m = L^{-1}
  RatMatrix L(N, std::vector<mpq_class>(N, 0));
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c)
      if (dominance_leq(t->parts[r], t->parts[c]))
        L[r][c] = static_cast<long>(power_sum_monomial_coeff(t->parts[r], t->parts[c]));
  t->p_to_m = L;
  t->m_to_p = invert(L);

  // e_j, h_j in the p-basis for j <= n
  std::vector<SparseP> e1(n + 1), h1(n + 1);
  for (int j = 0; j <= n; ++j) {
    for (const auto& rho : partitions_of(j)) {
      mpq_class w(1, z_factor(rho));
      h1[j][rho] = w;
      e1[j][rho] = ((j - rho.length()) % 2 == 0) ? w : mpq_class(-w);
    }
  }
  t->e_to_p.assign(N, std::vector<mpq_class>(N, 0));
  t->h_to_p.assign(N, std::vector<mpq_class>(N, 0));
  for (std::size_t i = 0; i < N; ++i) {
    SparseP e{{Partition(), 1}}, h{{Partition(), 1}};
    for (int part : t->parts[i].parts()) {
      e = mul_sparse(e, e1[part]);
      h = mul_sparse(h, h1[part]);
    }
    for (const auto& [rho, c] : e) t->e_to_p[i][t->index.at(rho)] = c;
    for (const auto& [rho, c] : h) t->h_to_p[i][t->index.at(rho)] = c;
  }
  t->p_to_e = invert(t->e_to_p);
  t->p_to_h = invert(t->h_to_p);
  return t;
}

std::shared_mutex g_tables_mutex;
std::map<int, std::unique_ptr<TransitionTables>> g_tables;

const RatMatrix& to_p_matrix(const TransitionTables& t, Basis b) {
  switch (b) {
    case Basis::monomial: return t.m_to_p;
    case Basis::elementary: return t.e_to_p;
    case Basis::homogeneous: return t.h_to_p;
    default: throw std::logic_error("no rational transition matrix for this basis");
  }
}

const RatMatrix& from_p_matrix(const TransitionTables& t, Basis b) {
  switch (b) {
    case Basis::monomial: return t.p_to_m;
    case Basis::elementary: return t.p_to_e;
    case Basis::homogeneous: return t.p_to_h;
    default: throw std::logic_error("no rational transition matrix for this basis");
  }
}

SymFuncExpr to_power_sum(const SymFuncExpr& f) {
  if (f.basis() == Basis::power_sum) return f;
  SymFuncExpr out(Basis::power_sum, f.degree());
  if (f.basis() == Basis::jack) {
    for (const auto& [lam, c] : f.terms()) {
      const auto& J = jack_J(lam);
      for (const auto& [rho, q] : J.power_sum_coeffs) out.add(rho, c * ParamRat(q));
    }
    return out;
  }
  const auto& t = transition_tables(f.degree());
  const auto& M = to_p_matrix(t, f.basis());
  for (const auto& [lam, c] : f.terms()) {
    const auto& row = M[t.index.at(lam)];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) out.add(t.parts[j], c * ParamRat(row[j]));
  }
  return out;
}

SymFuncExpr from_power_sum(const SymFuncExpr& f, Basis target) {
  if (target == Basis::power_sum) return f;
  SymFuncExpr out(target, f.degree());
  if (target == Basis::jack) {
    for (const auto& lam : partitions_of(f.degree())) {
      ParamRat pair = inner_product_k(f, SymFuncExpr::single(Basis::jack, lam));
      if (!pair.is_zero()) out.add(lam, pair / ParamRat(jack_norm_j(lam)));
    }
    return out;
  }
  const auto& t = transition_tables(f.degree());
  const auto& M = from_p_matrix(t, target);
  for (const auto& [rho, c] : f.terms()) {
    const auto& row = M[t.index.at(rho)];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) out.add(t.parts[j], c * ParamRat(row[j]));
  }
  return out;
}

}  // namespace

const TransitionTables& transition_tables(int degree) {
  check_degree(degree);
  {
    std::shared_lock lock(g_tables_mutex);
    auto it = g_tables.find(degree);
    if (it != g_tables.end()) return *it->second;
  }
  std::unique_lock lock(g_tables_mutex);
  auto it = g_tables.find(degree);
  if (it != g_tables.end()) return *it->second;
  auto [pos, ok] = g_tables.emplace(degree, build_tables(degree));
  return *pos->second;
}

SymFuncExpr change_basis(const SymFuncExpr& f, Basis target) {
  check_degree(f.degree());
  if (f.basis() == target) return f;
  return from_power_sum(to_power_sum(f), target);
}

SymFuncExpr multiply(const SymFuncExpr& f, const SymFuncExpr& g) {
  check_degree(f.degree() + g.degree());
  SymFuncExpr a = to_power_sum(f), b = to_power_sum(g);
  SymFuncExpr prod(Basis::power_sum, f.degree() + g.degree());
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) prod.add(union_parts(pa, pb), ca * cb);
  return from_power_sum(prod, f.basis());
}

ParamRat inner_product_k(const SymFuncExpr& f, const SymFuncExpr& g) {
  if (f.degree() != g.degree()) return ParamRat();
  check_degree(f.degree());
  SymFuncExpr a = to_power_sum(f), b = to_power_sum(g);
  ParamRat acc;
  for (const auto& [rho, ca] : a.terms()) {
    auto it = b.terms().find(rho);
    if (it == b.terms().end()) continue;
    ParamRat w(ParamPoly::monomial(rho.length(), mpq_class(z_factor(rho))));
    acc += ca * it->second * w;
  }
  return acc;
}

}  // namespace sph
