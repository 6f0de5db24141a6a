#include "sph/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace sph {

std::string LatticeMapReport::str() const {
  std::string s = injective ? "injective" : "not injective";
  s += ", rank " + std::to_string(rank) + ", cokernel ";
  s += cokernel_index ? "index " + cokernel_index->get_str() : "infinite";
  s += ", divisors [";
  for (std::size_t i = 0; i < elementary_divisors.size(); ++i)
    s += (i ? "," : "") + elementary_divisors[i].get_str();
  return s + "]";
}

std::vector<mpz_class> smith_diagonal(const IMat& M) {
  std::size_t rows = M.size();
  std::size_t cols = rows ? M[0].size() : 0;
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(M[i][j]);
  std::vector<mpz_class> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest non-zero absolute value in the remaining block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // divisibility: fold any entry not divisible by the pivot into row t
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
              clean = false;
              break;
            }
      }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

LatticeMapReport lattice_map_diagnostics(const IMat& M) {
  LatticeMapReport r;
  std::size_t rows = M.size();
  std::size_t cols = rows ? M[0].size() : 0;
  r.elementary_divisors = smith_diagonal(M);
  r.rank = static_cast<int>(r.elementary_divisors.size());
  r.injective = r.rank == static_cast<int>(cols);
  if (r.rank == static_cast<int>(rows)) {
    mpz_class idx = 1;
    for (const auto& d : r.elementary_divisors) idx *= d;
    r.cokernel_index = idx;
  }
  return r;
}

IMat lattice_basis(const IMat& rows_in) {
  IMat a;
  for (const auto& r : rows_in)
    if (!is_zero(r)) a.push_back(r);
  if (a.empty()) return {};
  std::size_t cols = a[0].size();
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < a.size(); ++c) {
    // Euclid down column c
    while (true) {
      std::size_t piv = a.size();
      for (std::size_t i = top; i < a.size(); ++i)
        if (a[i][c] != 0 && (piv == a.size() || std::llabs(a[i][c]) < std::llabs(a[piv][c]))) piv = i;
      if (piv == a.size()) break;
      std::swap(a[top], a[piv]);
      bool done = true;
      for (std::size_t i = top + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        long long q = a[i][c] / a[top][c];
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[top][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[top][c] != 0) {
      if (a[top][c] < 0)
        for (auto& x : a[top]) x = -x;
      ++top;
    }
  }
  a.resize(top);
  return a;
}

int rational_rank(const QMat& rows) {
  QMat a = rows;
  if (a.empty()) return 0;
  std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::optional<QVec> solve_in_span(const QMat& rows, const QVec& target) {
  // augmented system: columns are the given rows
  std::size_t n = rows.size();
  std::size_t dim = target.size();
  QMat a(dim, QVec(n + 1));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[j][i];
    a[i][n] = target[i];
  }
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < dim; ++c) {
    std::size_t piv = r;
    while (piv < dim && a[piv][c] == 0) ++piv;
    if (piv == dim) throw std::invalid_argument("solve_in_span: rows are linearly dependent");
    std::swap(a[r], a[piv]);
    mpq_class inv = 1 / a[r][c];
    for (std::size_t j = c; j <= n; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[r][j];
    }
    pivcol.push_back(c);
    ++r;
  }
  if (pivcol.size() < n) throw std::invalid_argument("solve_in_span: rows are linearly dependent");
  for (std::size_t i = r; i < dim; ++i)
    if (a[i][n] != 0) return std::nullopt;
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[pivcol[i]] = a[i][n];
  return x;
}

std::optional<QVec> solve_in_span(const IMat& rows, const IVec& target) {
  return solve_in_span(to_q(rows), to_q(target));
}

mpq_class qfrac(long long n, long long d) {
  mpq_class q(static_cast<long>(n), static_cast<long>(d));
  q.canonicalize();
  return q;
}

QVec to_q(const IVec& v) {
  QVec q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = mpq_class(static_cast<long>(v[i]));
  return q;
}

QMat to_q(const IMat& m) {
  QMat q;
  for (const auto& r : m) q.push_back(to_q(r));
  return q;
}

bool is_integral(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x.get_den() == 1; });
}

IVec to_int(const QVec& v) {
  IVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) throw std::domain_error("to_int: non-integral entry " + v[i].get_str());
    r[i] = v[i].get_num().get_si();
  }
  return r;
}

IVec add(const IVec& a, const IVec& b) {
  IVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IVec sub(const IVec& a, const IVec& b) {
  IVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IVec scale(const IVec& a, long long s) {
  IVec r(a);
  for (auto& x : r) x *= s;
  return r;
}

long long dot(const IVec& a, const IVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IVec& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

std::string vec_str(const IVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace sph
