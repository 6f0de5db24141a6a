#pragma once

#include "sph/param_poly.hpp"
#include "sph/partition.hpp"

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace sph {

enum class Basis { monomial, power_sum, elementary, homogeneous, jack };

const char* basis_name(Basis b);

// Homogeneous symmetric function over Q(k) in a fixed basis.
class SymFuncExpr {
public:
  SymFuncExpr(Basis basis, int degree) : basis_(basis), degree_(degree) {}
  static SymFuncExpr single(Basis basis, const Partition& p, const ParamRat& c = ParamRat(1));

  Basis basis() const { return basis_; }
  int degree() const { return degree_; }
  const std::map<Partition, ParamRat>& terms() const { return terms_; }
  ParamRat coeff(const Partition& p) const;
  bool is_zero() const { return terms_.empty(); }

  // throws if |p| != degree
  void add(const Partition& p, const ParamRat& c);
  SymFuncExpr& operator+=(const SymFuncExpr& o);
  SymFuncExpr& operator*=(const ParamRat& s);
  friend SymFuncExpr operator+(SymFuncExpr a, const SymFuncExpr& b) { return a += b; }
  friend bool operator==(const SymFuncExpr& a, const SymFuncExpr& b) {
    return a.basis_ == b.basis_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string str() const;

private:
  Basis basis_;
  int degree_;
  std::map<Partition, ParamRat> terms_;
};

SymFuncExpr change_basis(const SymFuncExpr& f, Basis target);
// result is expressed in f's basis
SymFuncExpr multiply(const SymFuncExpr& f, const SymFuncExpr& g);
ParamRat inner_product_k(const SymFuncExpr& f, const SymFuncExpr& g);

// Rational transition data at one degree; rows B_lambda = sum_rho M[lambda][rho] p_rho.
using RatMatrix = std::vector<std::vector<mpq_class>>;

struct TransitionTables {
  int degree = 0;
  std::vector<Partition> parts;  // partitions_of(degree)
  std::unordered_map<Partition, int, PartitionHash> index;
  RatMatrix m_to_p, p_to_m;
  RatMatrix e_to_p, p_to_e;
  RatMatrix h_to_p, p_to_h;
};

// cached, thread-safe; throws DegreeCapExceeded past the cap
const TransitionTables& transition_tables(int degree);

RatMatrix invert(const RatMatrix& m);

}  // namespace sph
