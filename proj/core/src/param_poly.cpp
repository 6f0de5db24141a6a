#include "sph/param_poly.hpp"

#include <stdexcept>

namespace sph {

ParamPoly::ParamPoly(const mpq_class& c) {
  if (c != 0) c_.emplace(0, c);
}

ParamPoly ParamPoly::k() { return monomial(1, 1); }

ParamPoly ParamPoly::monomial(int degree, const mpq_class& c) {
  ParamPoly p;
  if (c != 0) p.c_.emplace(degree, c);
  return p;
}

mpq_class ParamPoly::coeff(int d) const {
  auto it = c_.find(d);
  return it == c_.end() ? mpq_class(0) : it->second;
}

mpq_class ParamPoly::leading() const { return c_.empty() ? mpq_class(0) : c_.rbegin()->second; }

mpq_class ParamPoly::eval(const mpq_class& x) const {
  // Horner over the dense range
  mpq_class acc = 0;
  int d = degree();
  for (int i = d; i >= 0; --i) {
    acc *= x;
    auto it = c_.find(i);
    if (it != c_.end()) acc += it->second;
  }
  return acc;
}

bool ParamPoly::has_integer_coefficients() const {
  for (const auto& [d, c] : c_)
    if (c.get_den() != 1) return false;
  return true;
}

bool ParamPoly::has_nonnegative_coefficients() const {
  for (const auto& [d, c] : c_)
    if (c < 0) return false;
  return true;
}

void ParamPoly::add_term(int d, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [d, c] : o.c_) add_term(d, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [d, c] : o.c_) add_term(d, -c);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const mpq_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [d, c] : c_) c *= s;
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (const auto& [da, ca] : a.c_)
    for (const auto& [db, cb] : b.c_) r.add_term(da + db, ca * cb);
  return r;
}

void ParamPoly::divmod(const ParamPoly& a, const ParamPoly& b, ParamPoly& q, ParamPoly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  q = ParamPoly();
  r = a;
  int db = b.degree();
  mpq_class lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    int shift = r.degree() - db;
    mpq_class f = r.leading() / lb;
    q.add_term(shift, f);
    for (const auto& [d, c] : b.c_) r.add_term(d + shift, -f * c);
  }
}

ParamPoly ParamPoly::monic() const {
  if (is_zero()) return *this;
  ParamPoly p = *this;
  mpq_class inv = 1 / leading();
  p *= inv;
  return p;
}

ParamPoly ParamPoly::gcd(ParamPoly a, ParamPoly b) {
  while (!b.is_zero()) {
    ParamPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string ParamPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    int d = it->first;
    mpq_class c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    bool unit = (c == 1);
    if (d == 0 || !unit) s += c.get_str();
    if (d > 0) {
      if (!unit) s += "*";
      s += var;
      if (d > 1) s += "^" + std::to_string(d);
    }
  }
  return s;
}

ParamRat::ParamRat(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void ParamRat::normalize() {
  if (num_.is_zero()) {
    den_ = ParamPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    ParamPoly g = ParamPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      ParamPoly q, r;
      ParamPoly::divmod(num_, g, q, r);
      num_ = std::move(q);
      ParamPoly::divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  mpq_class lc = den_.leading();
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

ParamPoly ParamRat::as_poly() const {
  if (!is_polynomial()) throw std::domain_error("rational function is not a polynomial: " + str());
  return num_;
}

mpq_class ParamRat::eval(const mpq_class& x) const {
  mpq_class d = den_.eval(x);
  if (d == 0) throw std::domain_error("rational function has a pole at the evaluation point");
  return num_.eval(x) / d;
}

ParamRat& ParamRat::operator+=(const ParamRat& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.degree() > 0) normalize();
    else if (num_.is_zero()) den_ = ParamPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

ParamRat& ParamRat::operator-=(const ParamRat& o) { return *this += -o; }

ParamRat& ParamRat::operator*=(const ParamRat& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = ParamRat();
  num_ = num_ * o.num_;
  if (o.den_.degree() > 0 || den_.degree() > 0) {
    den_ = den_ * o.den_;
    normalize();
  }
  return *this;
}

ParamRat& ParamRat::operator/=(const ParamRat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return *this *= ParamRat(o.den_, o.num_);
}

std::string ParamRat::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace sph
