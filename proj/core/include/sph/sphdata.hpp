#pragma once

#include "sph/lattice.hpp"
#include "sph/partition.hpp"
#include "sph/root_datum.hpp"
#include "sph/root_system.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sph {

class CaseDataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class OracleUnavailable : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Params = std::map<std::string, long long>;

enum class OracleKind { jack_type_A, factorized, delegated, none };
const char* oracle_name(OracleKind k);

struct CaseRef {
  std::string id;
  Params params;
  std::string str() const;
};

// Weights are passed in generator coordinates throughout.
struct SphericalPairCase {
  std::string id;
  Params params;
  std::string source;
  std::string title;
  std::string ambient_type;
  int center = 0;
  RootSystem ambient;
  std::string expected_type;
  // simple-root coordinates
  std::vector<IVec> delta_n;
  std::vector<IVec> delta_x;
  // fundamental-weight coordinates followed by central coordinates
  std::vector<IVec> generators;
  std::vector<int> units;  // 0-based
  std::optional<long long> multiplicity;
  std::optional<mpq_class> jack_k;
  int column_scale = 1;
  OracleKind oracle = OracleKind::none;
  std::vector<CaseRef> hat, bar;
  // row j = image of generator j in concatenated target generator coordinates
  IMat phi_hat, phi_bar;
  std::optional<CaseRef> delegate;
  IMat embed;

  std::string key() const;
  int weight_dim() const { return ambient.rank() + center; }
  int rank() const { return static_cast<int>(delta_x.size()); }
  bool has_isogeny() const { return oracle == OracleKind::factorized; }
  // generator coordinates -> ambient weight
  IVec weight(const IVec& coords) const;
  bool in_monoid(const IVec& coords) const;
};

struct CaseRecordInfo {
  std::string id;
  std::string source;
  std::string title;
  std::vector<std::string> param_names;
  std::vector<Params> grid;
};

// Loads and validates the table; the default path comes from SPH_CASE_FILE or the build tree.
void load_case_table(const std::string& path);
const std::vector<CaseRecordInfo>& case_records();
std::string case_table_version();

// Cached, validated instance.
std::shared_ptr<const SphericalPairCase> instantiate_case(const std::string& id, const Params& params = {});
std::shared_ptr<const SphericalPairCase> instantiate_case(const CaseRef& ref);

struct RealizedDatum {
  // basis of Xi in ambient weight coordinates
  IMat xi_basis;
  BasedRootDatum datum;
  std::vector<RestrictedCoroot> coroots;
  // coroots as ambient covectors on the weight coordinates (zero on the center)
  std::vector<QVec> coroot_covectors;
  std::vector<int> dagger;  // indices into delta_n
  DatumReport report;
  RootSystem gx;  // semisimple part of G_X
  std::vector<CartanComponent> type;

  // ambient weight -> Xi coordinates (nullopt if outside Xi)
  std::optional<IVec> xi_coords(const IVec& weight) const;
};

const RealizedDatum& build_RX(const SphericalPairCase& c);

IVec phi_hat(const SphericalPairCase& c, const IVec& lambda);
IVec phi_bar(const SphericalPairCase& c, const IVec& lambda);
// split concatenated target coordinates into per-factor coordinates
std::vector<IVec> split_targets(const std::vector<CaseRef>& targets, const IVec& coords);

struct IsogenyReport {
  std::string case_key;
  LatticeMapReport lattice;
  bool base_bijection = false;
  bool coroot_compatible = false;
  bool additive = false;
  std::vector<std::string> witnesses;
  bool ok() const {
    return lattice.injective && lattice.cokernel_index.has_value() && base_bijection && coroot_compatible && additive;
  }
};

IsogenyReport verify_isogeny(const SphericalPairCase& c);

struct RhsParts {
  bool tensor = false;
  bool order = false;
  long long multiplicity = 0;
  bool holds() const { return tensor && order; }
};

RhsParts conjecture_rhs_parts(const SphericalPairCase& c, const IVec& lambda, const IVec& mu, const IVec& nu);
bool conjecture_rhs(const SphericalPairCase& c, const IVec& lambda, const IVec& mu, const IVec& nu);

enum class Dictionary { standard, alternative };
bool oracle_available(const SphericalPairCase& c);
bool jack_oracle_lhs(const SphericalPairCase& c, const IVec& lambda, const IVec& mu, const IVec& nu,
                     Dictionary dict = Dictionary::standard);

// partition attached to a weight by the column dictionary (units excluded)
Partition weight_partition(const SphericalPairCase& c, const IVec& coords, Dictionary dict = Dictionary::standard);

// canonical spelling of a Cartan type up to the low-rank coincidences
std::string canonical_type(const std::string& t);

}  // namespace sph
