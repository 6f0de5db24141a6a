#pragma once

#include "sph/lattice.hpp"

#include <string>
#include <vector>

namespace sph {

struct CartanComponent {
  char letter;
  int rank;
  std::string str() const { return std::string(1, letter) + std::to_string(rank); }
};

// Parses "A2", "D5", "A1xB2", "E6" (empty string = rank 0).
std::vector<CartanComponent> parse_cartan_type(const std::string& s);
std::string cartan_type_str(const std::vector<CartanComponent>& t);

// Finite reduced root system given by a Cartan matrix.
// cartan[i][j] = <alpha_i, alpha_j^vee>; row i is alpha_i in fundamental-weight coordinates.
// Roots are stored in simple-root coordinates, weights in fundamental-weight coordinates.
class RootSystem {
public:
  RootSystem() = default;
  explicit RootSystem(IMat cartan);

  int rank() const { return static_cast<int>(cartan_.size()); }
  const IMat& cartan() const { return cartan_; }
  const std::vector<IVec>& positive_roots() const { return positive_; }
  // (alpha_i, alpha_i)/2 in a normalization where these are positive integers
  const IVec& half_norms() const { return half_norm_; }

  bool is_root(const IVec& root_coords) const;
  // root coords -> weight coords
  IVec root_to_weight(const IVec& c) const;
  // weight coords -> root coords (rational)
  QVec weight_to_root(const IVec& a) const;
  // <weight, beta^vee> for a root beta (root coords)
  mpq_class pair_coroot(const QVec& weight, const IVec& beta) const;
  long long pair_coroot(const IVec& weight, const IVec& beta) const;
  // beta^vee in simple-coroot coordinates
  QVec coroot(const IVec& beta) const;
  // scaled inner product on weights (integer, positive definite)
  long long weight_form(const IVec& a, const IVec& b) const;
  // scaled inner product on roots
  long long root_form(const IVec& a, const IVec& b) const;

  IVec rho() const { return IVec(rank(), 1); }
  bool is_dominant(const IVec& w) const;
  IVec reflect_weight(const IVec& w, int i) const;
  IVec reflect_root(const IVec& c, int i) const;
  // dominant representative and parity of the number of reflections used
  IVec to_dominant(IVec w, int* parity = nullptr) const;
  std::vector<IVec> weyl_orbit(const IVec& w) const;
  std::vector<CartanComponent> recognize() const;

private:
  IMat cartan_;
  IVec half_norm_;
  std::vector<IVec> positive_;
  IMat weight_gram_;  // scaled (omega_i, omega_j)
  QMat cartan_inv_;
};

// Bourbaki-numbered Cartan data; products are block diagonal.
RootSystem build_root_system(const std::vector<CartanComponent>& type);
RootSystem build_root_system(const std::string& type);
IMat cartan_matrix(const std::vector<CartanComponent>& type);

bool strongly_orthogonal(const IVec& beta, const IVec& gamma, const RootSystem& rs);

}  // namespace sph
