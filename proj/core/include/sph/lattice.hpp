#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace sph {

using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;
using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

struct LatticeMapReport {
  bool injective = false;
  int rank = 0;
  // nullopt when the cokernel is infinite
  std::optional<mpz_class> cokernel_index;
  std::vector<mpz_class> elementary_divisors;
  std::string str() const;
};

// M acts on column vectors: Z^cols -> Z^rows
LatticeMapReport lattice_map_diagnostics(const IMat& M);
// Smith normal form diagonal (non-zero entries)
std::vector<mpz_class> smith_diagonal(const IMat& M);

// Z-basis of the lattice spanned by the rows (Hermite-style echelon)
IMat lattice_basis(const IMat& rows);
int rational_rank(const QMat& rows);

// Unique x with sum_i x_i * rows[i] = target, or nullopt if none exists.
// Rows must be linearly independent.
std::optional<QVec> solve_in_span(const QMat& rows, const QVec& target);
std::optional<QVec> solve_in_span(const IMat& rows, const IVec& target);

// canonicalized n/d
mpq_class qfrac(long long n, long long d);
QVec to_q(const IVec& v);
QMat to_q(const IMat& m);
// throws if any entry is not an integer
IVec to_int(const QVec& v);
bool is_integral(const QVec& v);

IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(const IVec& a, long long s);
long long dot(const IVec& a, const IVec& b);
bool is_zero(const IVec& v);
std::string vec_str(const IVec& v);

}  // namespace sph
