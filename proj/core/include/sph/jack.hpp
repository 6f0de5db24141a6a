#pragma once

#include "sph/param_poly.hpp"
#include "sph/partition.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace sph {

// Raised when an exactness invariant of the Jack kernel fails.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct JackExpansion {
  Partition partition;
  std::map<Partition, ParamPoly> monomial_coeffs;
  std::map<Partition, ParamPoly> power_sum_coeffs;
};

// J-normalized Jack function; cached, thread-safe
const JackExpansion& jack_J(const Partition& lambda);
// hook-product norm, cross-checked against the Gram pairing
ParamPoly jack_norm_j(const Partition& nu);
ParamPoly hook_product(const Partition& nu);
ParamPoly structure_constant_g(const Partition& lambda, const Partition& mu, const Partition& nu);
// g for every nu of size |lambda|+|mu| (zero entries omitted)
const std::map<Partition, ParamPoly>& structure_constants(const Partition& lambda, const Partition& mu);
std::set<Partition> pieri_support(const Partition& lambda, int r);
mpq_class specialize(const ParamPoly& p, const mpq_class& k0);
std::set<Partition> product_support_at(const Partition& lambda, const Partition& mu,
                                       const mpq_class& k0, int nvars);
// subtract full columns of height nvars (no-op for nvars < 2)
Partition reduce_columns(const Partition& nu, int nvars);

}  // namespace sph
