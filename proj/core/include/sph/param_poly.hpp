#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace sph {

// Univariate polynomial in the Jack parameter k over Q, sparse.
class ParamPoly {
public:
  static constexpr int kZeroDegree = -1;

  ParamPoly() = default;
  ParamPoly(const mpq_class& c);  // NOLINT(implicit)
  ParamPoly(long c) : ParamPoly(mpq_class(c)) {}  // NOLINT(implicit)
  static ParamPoly k();
  static ParamPoly monomial(int degree, const mpq_class& c);

  const std::map<int, mpq_class>& coefficients() const { return c_; }
  mpq_class coeff(int d) const;
  int degree() const { return c_.empty() ? kZeroDegree : c_.rbegin()->first; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return degree() <= 0; }
  mpq_class leading() const;
  mpq_class eval(const mpq_class& x) const;

  bool has_integer_coefficients() const;
  bool has_nonnegative_coefficients() const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const mpq_class& s);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator-(ParamPoly a) { return a *= mpq_class(-1); }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const mpq_class& s) { return a *= s; }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.c_ == b.c_; }

  // exact division with remainder over Q; divisor non-zero
  static void divmod(const ParamPoly& a, const ParamPoly& b, ParamPoly& q, ParamPoly& r);
  // monic gcd (zero if both zero)
  static ParamPoly gcd(ParamPoly a, ParamPoly b);
  ParamPoly monic() const;

  std::string str(const std::string& var = "k") const;

private:
  void add_term(int d, const mpq_class& c);
  std::map<int, mpq_class> c_;
};

// Reduced rational function in k with monic denominator.
class ParamRat {
public:
  ParamRat() : den_(1) {}
  ParamRat(const ParamPoly& p) : num_(p), den_(1) {}  // NOLINT(implicit)
  ParamRat(const mpq_class& c) : num_(c), den_(1) {}  // NOLINT(implicit)
  ParamRat(long c) : num_(c), den_(1) {}  // NOLINT(implicit)
  ParamRat(ParamPoly num, ParamPoly den);

  const ParamPoly& numerator() const { return num_; }
  const ParamPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // valid only when is_polynomial()
  ParamPoly as_poly() const;
  mpq_class eval(const mpq_class& x) const;

  ParamRat& operator+=(const ParamRat& o);
  ParamRat& operator-=(const ParamRat& o);
  ParamRat& operator*=(const ParamRat& o);
  ParamRat& operator/=(const ParamRat& o);
  friend ParamRat operator+(ParamRat a, const ParamRat& b) { return a += b; }
  friend ParamRat operator-(ParamRat a, const ParamRat& b) { return a -= b; }
  friend ParamRat operator*(ParamRat a, const ParamRat& b) { return a *= b; }
  friend ParamRat operator/(ParamRat a, const ParamRat& b) { return a /= b; }
  friend ParamRat operator-(const ParamRat& a) { return ParamRat(-a.num_, a.den_, true); }
  friend bool operator==(const ParamRat& a, const ParamRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str(const std::string& var = "k") const;

private:
  ParamRat(ParamPoly num, ParamPoly den, bool /*reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  ParamPoly num_;
  ParamPoly den_;
};

}  // namespace sph
