#include "sph/root_system.hpp"

#include "sph/symfunc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sph {

std::vector<CartanComponent> parse_cartan_type(const std::string& s) {
  std::vector<CartanComponent> out;
  std::string t;
  for (char c : s) t += (c == 'x' || c == '*' || c == '+' || c == ' ') ? ' ' : c;
  std::istringstream in(t);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2) throw std::invalid_argument("bad Cartan type: " + s);
    CartanComponent c{tok[0], std::stoi(tok.substr(1))};
    if (std::string("ABCDEFG").find(c.letter) == std::string::npos || c.rank < 1)
      throw std::invalid_argument("bad Cartan type: " + s);
    out.push_back(c);
  }
  return out;
}

std::string cartan_type_str(const std::vector<CartanComponent>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "x" : "") + t[i].str();
  return s;
}

namespace {

// symmetric form on simple roots for one component (Bourbaki numbering)
IMat component_form(const CartanComponent& c) {
  int n = c.rank;
  IMat B(n, IVec(n, 0));
  auto chain = [&](long long norm) {
    for (int i = 0; i < n; ++i) B[i][i] = norm;
    for (int i = 0; i + 1 < n; ++i) B[i][i + 1] = B[i + 1][i] = -norm / 2;
  };
  switch (c.letter) {
    case 'A':
      chain(2);
      break;
    case 'B':
      if (n < 2) throw std::invalid_argument("B_n needs n >= 2");
      chain(4);
      B[n - 1][n - 1] = 2;
      break;
    case 'C':
      if (n < 2) throw std::invalid_argument("C_n needs n >= 2");
      chain(2);
      B[n - 1][n - 1] = 4;
      B[n - 2][n - 1] = B[n - 1][n - 2] = -2;
      break;
    case 'D':
      if (n < 3) throw std::invalid_argument("D_n needs n >= 3");
      chain(2);
      B[n - 2][n - 1] = B[n - 1][n - 2] = 0;
      B[n - 3][n - 1] = B[n - 1][n - 3] = -1;
      break;
    case 'E': {
      if (n < 6 || n > 8) throw std::invalid_argument("E_n needs 6 <= n <= 8");
      for (int i = 0; i < n; ++i) B[i][i] = 2;
      auto link = [&](int a, int b) { B[a - 1][b - 1] = B[b - 1][a - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      break;
    }
    case 'F':
      if (n != 4) throw std::invalid_argument("F_n needs n = 4");
      B = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      break;
    case 'G':
      if (n != 2) throw std::invalid_argument("G_n needs n = 2");
      B = {{2, -3}, {-3, 6}};
      break;
    default:
      throw std::invalid_argument("unsupported Cartan type");
  }
  return B;
}

}  // namespace

IMat cartan_matrix(const std::vector<CartanComponent>& type) {
  int total = 0;
  for (const auto& c : type) total += c.rank;
  IMat C(total, IVec(total, 0));
  int off = 0;
  for (const auto& c : type) {
    IMat B = component_form(c);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) C[off + i][off + j] = 2 * B[i][j] / B[j][j];
    off += c.rank;
  }
  return C;
}

RootSystem::RootSystem(IMat cartan) : cartan_(std::move(cartan)) {
  int n = rank();
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cartan_[i].size()) != n) throw std::invalid_argument("Cartan matrix not square");
    if (cartan_[i][i] != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
  }
  // symmetrizer: (alpha_i, alpha_j) = e_j * C[i][j]
  QVec e(n, 0);
  for (int s = 0; s < n; ++s) {
    if (e[s] != 0) continue;
    e[s] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (j == i || cartan_[i][j] == 0) continue;
        if ((cartan_[j][i] == 0)) throw std::invalid_argument("Cartan matrix not symmetrizable");
        // e_j C[i][j] = e_i C[j][i]
        mpq_class ej = e[i] * qfrac(cartan_[j][i], cartan_[i][j]);
        if (e[j] == 0) {
          e[j] = ej;
          q.push(j);
        } else if (e[j] != ej) {
          throw std::invalid_argument("Cartan matrix not symmetrizable");
        }
      }
    }
  }
  mpz_class l = 1;
  for (const auto& x : e) l = lcm(l, mpz_class(x.get_den()));
  half_norm_.resize(n);
  for (int i = 0; i < n; ++i) half_norm_[i] = mpq_class(e[i] * l).get_num().get_si();

  if (n > 0) {
    QMat cq = to_q(cartan_);
    cartan_inv_ = invert(cq);
  }
  // (omega_i, omega_k) = (C^{-1})_{ik} e_k, scaled to integers
  QMat g(n, QVec(n));
  mpz_class den = 1;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      g[i][k] = cartan_inv_[i][k] * static_cast<long>(half_norm_[k]);
      den = lcm(den, mpz_class(g[i][k].get_den()));
    }
  weight_gram_.assign(n, IVec(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) weight_gram_[i][k] = mpq_class(g[i][k] * den).get_num().get_si();

  // positive roots by height
  std::set<IVec> known;
  std::vector<IVec> layer;
  for (int i = 0; i < n; ++i) {
    IVec c(n, 0);
    c[i] = 1;
    layer.push_back(c);
    known.insert(c);
  }
  while (!layer.empty()) {
    for (const auto& r : layer) positive_.push_back(r);
    std::set<IVec> next;
    for (const auto& beta : layer) {
      for (int j = 0; j < n; ++j) {
        long long p = 0;
        IVec down = beta;
        while (true) {
          down[j] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        long long pairing = 0;
        for (int i = 0; i < n; ++i) pairing += beta[i] * cartan_[i][j];
        long long q = p - pairing;
        if (q > 0) {
          IVec up = beta;
          up[j] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) known.insert(r);
    if (positive_.size() > 100000) throw std::invalid_argument("Cartan matrix is not of finite type");
  }
}

bool RootSystem::is_root(const IVec& c) const {
  IVec neg = scale(c, -1);
  for (const auto& r : positive_)
    if (r == c || r == neg) return true;
  return false;
}

IVec RootSystem::root_to_weight(const IVec& c) const {
  int n = rank();
  IVec a(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[j] += c[i] * cartan_[i][j];
  return a;
}

QVec RootSystem::weight_to_root(const IVec& a) const {
  int n = rank();
  QVec c(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[j] += mpq_class(static_cast<long>(a[i])) * cartan_inv_[i][j];
  return c;
}

long long RootSystem::root_form(const IVec& a, const IVec& b) const {
  long long s = 0;
  int n = rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += a[i] * b[j] * half_norm_[j] * cartan_[i][j];
  return s;
}

QVec RootSystem::coroot(const IVec& beta) const {
  long long nb = root_form(beta, beta);
  QVec d(rank());
  for (int i = 0; i < rank(); ++i) d[i] = qfrac(2 * beta[i] * half_norm_[i], nb);
  return d;
}

mpq_class RootSystem::pair_coroot(const QVec& weight, const IVec& beta) const {
  QVec d = coroot(beta);
  mpq_class s = 0;
  for (int i = 0; i < rank(); ++i) s += weight[i] * d[i];
  return s;
}

long long RootSystem::pair_coroot(const IVec& weight, const IVec& beta) const {
  mpq_class v = pair_coroot(to_q(weight), beta);
  if (v.get_den() != 1) throw std::logic_error("non-integral coroot pairing");
  return v.get_num().get_si();
}

long long RootSystem::weight_form(const IVec& a, const IVec& b) const {
  long long s = 0;
  int n = rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += a[i] * b[j] * weight_gram_[i][j];
  return s;
}

bool RootSystem::is_dominant(const IVec& w) const {
  return std::all_of(w.begin(), w.end(), [](long long x) { return x >= 0; });
}

IVec RootSystem::reflect_weight(const IVec& w, int i) const {
  IVec r = w;
  long long a = w[i];
  for (int j = 0; j < rank(); ++j) r[j] -= a * cartan_[i][j];
  return r;
}

IVec RootSystem::reflect_root(const IVec& c, int i) const {
  IVec r = c;
  long long p = 0;
  for (int j = 0; j < rank(); ++j) p += c[j] * cartan_[j][i];
  r[i] -= p;
  return r;
}

IVec RootSystem::to_dominant(IVec w, int* parity) const {
  int par = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank(); ++i) {
      if (w[i] < 0) {
        w = reflect_weight(w, i);
        par ^= 1;
        moved = true;
      }
    }
  }
  if (parity) *parity = par;
  return w;
}

std::vector<IVec> RootSystem::weyl_orbit(const IVec& w) const {
  IVec d = to_dominant(w);
  std::set<IVec> seen{d};
  std::vector<IVec> out{d};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rank(); ++i) {
      if (out[k][i] <= 0) continue;
      IVec r = reflect_weight(out[k], i);
      if (seen.insert(r).second) out.push_back(r);
    }
  }
  return out;
}

std::vector<CartanComponent> RootSystem::recognize() const {
  int n = rank();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(comps.size());
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && cartan_[members[k]][j] != 0) {
          comp[j] = comp[s];
          members.push_back(j);
        }
    comps.push_back(members);
  }
  std::vector<CartanComponent> out;
  for (const auto& members : comps) {
    int r = static_cast<int>(members.size());
    IMat sub(r, IVec(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) sub[i][j] = cartan_[members[i]][members[j]];
    RootSystem rs(sub);
    std::size_t npos = rs.positive_roots().size();
    std::set<long long> norms(rs.half_norm_.begin(), rs.half_norm_.end());
    long long mx = *norms.rbegin(), mn = *norms.begin();
    long long nshort = std::count(rs.half_norm_.begin(), rs.half_norm_.end(), mn);
    char letter = '?';
    if (norms.size() == 1) {
      if (npos == static_cast<std::size_t>(r * (r + 1) / 2)) letter = 'A';
      else if (npos == static_cast<std::size_t>(r * (r - 1))) letter = 'D';
      else letter = 'E';
      if (r == 1) letter = 'A';
    } else if (mx == 3 * mn) {
      letter = 'G';
    } else if (r == 4 && nshort == 2) {
      letter = 'F';
    } else if (r == 2) {
      // B2 = C2; report as B2
      letter = 'B';
    } else {
      letter = nshort == 1 ? 'B' : 'C';
    }
    out.push_back({letter, r});
  }
  std::sort(out.begin(), out.end(), [](const CartanComponent& a, const CartanComponent& b) {
    return a.letter != b.letter ? a.letter < b.letter : a.rank < b.rank;
  });
  return out;
}

RootSystem build_root_system(const std::vector<CartanComponent>& type) {
  return RootSystem(cartan_matrix(type));
}

RootSystem build_root_system(const std::string& type) { return build_root_system(parse_cartan_type(type)); }

bool strongly_orthogonal(const IVec& beta, const IVec& gamma, const RootSystem& rs) {
  if (!rs.is_root(beta) || !rs.is_root(gamma)) throw std::invalid_argument("strongly_orthogonal: input is not a root");
  if (beta == gamma || beta == scale(gamma, -1)) return false;
  return !rs.is_root(add(beta, gamma)) && !rs.is_root(sub(beta, gamma));
}

}  // namespace sph
