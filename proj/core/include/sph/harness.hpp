#pragma once

#include "sph/sphdata.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sph {

struct Triple {
  IVec lambda, mu, nu;
};

struct TripleVerdict {
  std::string case_id;
  Params params;
  IVec lambda, mu, nu;
  std::optional<bool> lhs;
  bool rhs_tensor = false;
  bool rhs_order = false;
  long long tensor_multiplicity = 0;
  std::optional<bool> agree;
  // set only when both dictionaries were evaluated
  std::optional<bool> lhs_alternative;
};

struct RunCounts {
  long long tested = 0;
  long long agreements = 0;
  long long disagreements = 0;
  long long unavailable = 0;
};

// One row of a tabulated check (Stanley scan, isogeny suite, counterexample branches).
struct Finding {
  std::string subject;
  bool ok = true;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  RunCounts counts;
  std::vector<TripleVerdict> witnesses;
  std::vector<TripleVerdict> verdicts;  // filled only when requested
  std::vector<Finding> findings;
  long long dictionary_differences = 0;
  double wall_time_s = 0;

  bool passed() const { return counts.disagreements == 0; }
};

struct RunOptions {
  int jobs = 1;
  Dictionary dictionary = Dictionary::standard;
  bool keep_verdicts = false;
  // evaluate the oracle under both dictionaries and count differences
  bool compare_dictionaries = false;
};

// Unordered pairs lambda <= mu with deg lambda + deg mu <= bound (degree = generator-coordinate sum),
// nu in the monoid with lambda + mu - nu in N Delta. Deterministic order.
std::vector<Triple> enumerate_triples(const SphericalPairCase& c, long long degree_bound);

TripleVerdict evaluate_triple(const SphericalPairCase& c, const Triple& t, const RunOptions& opt = {});
RunReport run_conjecture_check(const std::string& case_id, const Params& params, long long degree_bound,
                               const RunOptions& opt = {});
RunReport run_stanley_scan(int max_total_degree, const RunOptions& opt = {});
RunReport run_isogeny_suite(const RunOptions& opt = {});
RunReport run_isogeny_check(const std::string& case_id, const Params& params);
RunReport run_counterexample();

// Serializations that exclude the wall time are stable across runs and worker counts.
std::string report_text(const RunReport& r, bool with_time = true);
std::string report_csv(const RunReport& r);
std::string params_str(const Params& p);

}  // namespace sph
