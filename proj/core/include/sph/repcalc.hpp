#pragma once

#include "sph/lattice.hpp"
#include "sph/partition.hpp"
#include "sph/root_system.hpp"

#include <map>
#include <memory>

namespace sph {

// weight (fundamental-weight coordinates) -> multiplicity
using WeightMultiset = std::map<IVec, long long>;

struct FormalCharacter {
  IVec highest_weight;
  WeightMultiset weights;
  long long dimension() const;
};

// cached per (Cartan matrix, highest weight); throws std::invalid_argument if not dominant
std::shared_ptr<const FormalCharacter> dominant_character(const IVec& lambda, const RootSystem& rs);
// multiplicities of the irreducible constituents of V(lambda) (x) V(mu)
std::shared_ptr<const WeightMultiset> tensor_decomposition(const IVec& lambda, const IVec& mu, const RootSystem& rs);
long long tensor_multiplicity(const IVec& lambda, const IVec& mu, const IVec& nu, const RootSystem& rs);
// decomposition of a Weyl-invariant virtual character by dot-action straightening
WeightMultiset decompose_character(const WeightMultiset& ch, const RootSystem& rs);
long long sym2_multiplicity(const IVec& lambda, const IVec& nu, const RootSystem& rs);
long long alt2_multiplicity(const IVec& lambda, const IVec& nu, const RootSystem& rs);
long long weyl_dim(const IVec& lambda, const RootSystem& rs);
bool is_weyl_invariant(const WeightMultiset& ch, const RootSystem& rs);

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
// partition with at most n parts -> A_{n-1} weight
IVec partition_to_sl_weight(const Partition& p, int n);

}  // namespace sph
