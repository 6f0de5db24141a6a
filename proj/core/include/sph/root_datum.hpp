#pragma once

#include "sph/lattice.hpp"
#include "sph/root_system.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sph {

// Lattice with distinguished basis; base vectors in lattice coordinates,
// coroots as covectors in dual coordinates.
struct BasedRootDatum {
  int lattice_rank = 0;
  std::vector<IVec> base;
  std::vector<IVec> coroots;

  long long pair(const IVec& x, int j) const { return dot(x, coroots[j]); }
  IVec reflect(const IVec& x, int j) const;
  // C[i][j] = <base_i, coroot_j>
  IMat cartan() const;
};

struct DatumReport {
  bool axiom_i = false;
  bool axiom_ii = false;
  bool axiom_iii = false;
  bool axiom_iv = false;
  long long weyl_order = 0;
  long long root_count = 0;
  std::string cartan_type;
  std::vector<std::string> witnesses;
  bool ok() const { return axiom_i && axiom_ii && axiom_iii && axiom_iv; }
};

DatumReport verify_based_root_datum(const BasedRootDatum& d, long long orbit_ceiling = 10'000'000);

enum class CorootShape { positive_root, doubled_simple, orthogonal_sum };
const char* shape_name(CorootShape s);

struct RestrictedCoroot {
  CorootShape shape;
  // ambient covector in simple-coroot coordinates (first decomposition for sums)
  QVec ambient;
  // values on the lattice basis
  IVec on_lattice;
  std::vector<std::pair<IVec, IVec>> decompositions;
  // sum of two orthogonal simple roots from different components
  bool needs_review = false;
};

// sigma in ambient simple-root coordinates; lattice basis rows in fundamental-weight coordinates.
// Throws std::domain_error on unclassifiable roots or failed consistency checks.
RestrictedCoroot restricted_coroot(const IVec& sigma, const RootSystem& ambient, const IMat& lattice_omega);

// indices of the members of delta_n lying in 2*Delta with even pairings against every coroot
std::vector<int> build_delta_dagger(const std::vector<IVec>& delta_n, const RootSystem& ambient,
                                    const IMat& lattice_omega);

// delta and the generators share coordinates; generators linearly independent
bool order_leq_X(const IVec& delta, const std::vector<IVec>& generators);

}  // namespace sph
