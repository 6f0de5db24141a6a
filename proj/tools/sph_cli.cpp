#include "sph/config.hpp"
#include "sph/harness.hpp"
#include "sph/jack.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace sph;

namespace {

json to_json(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json to_json(const Params& p) {
  json j = json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

json to_json(const TripleVerdict& v) {
  json j;
  j["case_id"] = v.case_id;
  j["params"] = to_json(v.params);
  j["lambda"] = v.lambda;
  j["mu"] = v.mu;
  j["nu"] = v.nu;
  j["lhs"] = to_json(v.lhs);
  j["rhs_tensor"] = v.rhs_tensor;
  j["rhs_order"] = v.rhs_order;
  j["tensor_multiplicity"] = v.tensor_multiplicity;
  j["agree"] = to_json(v.agree);
  if (v.lhs_alternative) j["lhs_alternative"] = *v.lhs_alternative;
  return j;
}

json to_json(const RunReport& r) {
  json j;
  j["command"] = r.command;
  json cfg = json::object();
  for (const auto& [k, v] : r.config) cfg[k] = v;
  j["config"] = cfg;
  j["counts"] = {{"tested", r.counts.tested},
                 {"agreements", r.counts.agreements},
                 {"disagreements", r.counts.disagreements},
                 {"unavailable", r.counts.unavailable}};
  j["witnesses"] = json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(to_json(w));
  j["verdicts"] = json::array();
  for (const auto& v : r.verdicts) j["verdicts"].push_back(to_json(v));
  j["findings"] = json::array();
  for (const auto& f : r.findings) {
    json fj;
    fj["subject"] = f.subject;
    fj["ok"] = f.ok;
    json fields = json::array();
    for (const auto& [k, v] : f.fields) fields.push_back({{"key", k}, {"value", v}});
    fj["fields"] = fields;
    j["findings"].push_back(fj);
  }
  j["dictionary_differences"] = r.dictionary_differences;
  j["wall_time_s"] = r.wall_time_s;
  return j;
}

Params parse_params(const std::vector<std::string>& items) {
  Params p;
  for (const auto& s : items) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--param", "expected name=value, got " + s);
    p[s.substr(0, eq)] = std::stoll(s.substr(eq + 1));
  }
  return p;
}

IVec parse_coords(const std::string& s) {
  IVec v;
  std::string t = s;
  for (auto& ch : t)
    if (ch == ',' || ch == '[' || ch == ']' || ch == '(' || ch == ')') ch = ' ';
  std::istringstream in(t);
  long long x;
  while (in >> x) v.push_back(x);
  return v;
}

std::string render(const RunReport& r, const std::string& format, bool with_time) {
  if (format == "json") {
    json j = to_json(r);
    if (!with_time) j.erase("wall_time_s");
    return j.dump(2) + "\n";
  }
  if (format == "csv") return report_csv(r);
  return report_text(r, with_time);
}

std::string jack_report(const Partition& lambda, const Partition& mu, const std::string& format) {
  const auto& jl = jack_J(lambda);
  const auto& jm = jack_J(mu);
  const auto& g = structure_constants(lambda, mu);
  if (format == "json") {
    json j;
    auto expansion = [](const JackExpansion& e) {
      json m = json::object();
      for (const auto& [p, c] : e.monomial_coeffs) m[p.str()] = c.str();
      return m;
    };
    j["lambda"] = lambda.str();
    j["mu"] = mu.str();
    j["J_lambda"] = expansion(jl);
    j["J_mu"] = expansion(jm);
    json gj = json::object();
    for (const auto& [nu, p] : g) gj[nu.str()] = p.str();
    j["g"] = gj;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  const char* sep = format == "csv" ? "," : " ";
  if (format == "csv") os << "kind,index,partition,coefficient\n";
  auto emit = [&](const char* kind, const Partition& idx, const Partition& p, const std::string& c) {
    if (format == "csv")
      os << kind << ",\"" << idx.str() << "\",\"" << p.str() << "\",\"" << c << "\"\n";
    else
      os << kind << sep << idx.str() << sep << p.str() << sep << c << "\n";
  };
  for (const auto& [p, c] : jl.monomial_coeffs) emit("J", lambda, p, c.str());
  if (!(mu == lambda))
    for (const auto& [p, c] : jm.monomial_coeffs) emit("J", mu, p, c.str());
  for (const auto& [nu, p] : g) emit("g", nu, nu, p.str());
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jack functions, spherical root data and product-rule checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  int jobs = 1;
  int degree_cap_value = 0;
  std::string output;
  bool no_time = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--degree-cap", degree_cap_value, "Degree cap for Jack computations")->check(CLI::PositiveNumber);
  app.add_option("--output", output, "Write the report to this path");
  app.add_flag("--no-time", no_time, "Omit the wall time (byte-stable reports)");

  auto* stanley = app.add_subcommand("check-stanley", "Scan g_{lambda,mu}^nu for integrality and nonnegativity");
  int max_degree = 6;
  stanley->add_option("--max-degree", max_degree, "Bound on |lambda|+|mu|")->required();

  auto* pair = app.add_subcommand("check-pair", "Compare the product oracle with the conjectured rule");
  std::string case_id, dictionary = "standard", lam_s, mu_s, nu_s;
  std::vector<std::string> param_items;
  long long bound = 4;
  bool keep = false, compare = false;
  pair->add_option("--case", case_id, "Case identifier")->required();
  pair->add_option("--param", param_items, "Case parameter name=value");
  pair->add_option("--bound", bound, "Bound on deg lambda + deg mu");
  pair->add_option("--dictionary", dictionary, "Weight-partition dictionary")
      ->check(CLI::IsMember({"standard", "alt", "alternative"}));
  pair->add_flag("--compare-dictionaries", compare, "Evaluate the oracle under both dictionaries");
  pair->add_flag("--verdicts", keep, "Include every verdict in the report");
  pair->add_option("--lambda", lam_s, "Replay one triple: lambda in generator coordinates");
  pair->add_option("--mu", mu_s, "Replay one triple: mu");
  pair->add_option("--nu", nu_s, "Replay one triple: nu");

  auto* iso = app.add_subcommand("verify-isogeny", "Check the isogeny of based root data");
  std::string iso_case;
  std::vector<std::string> iso_params;
  iso->add_option("--case", iso_case, "Case identifier (default: the full suite)");
  iso->add_option("--param", iso_params, "Case parameter name=value");

  auto* counter = app.add_subcommand("counterexample", "Reproduce the adjoint-representation counterexample");

  auto* jack = app.add_subcommand("jack", "Print J expansions and structure constants");
  std::string jl, jm;
  jack->add_option("--lambda", jl, "Partition, e.g. 2,1")->required();
  jack->add_option("--mu", jm, "Partition")->required();

  auto* list = app.add_subcommand("list-cases", "List the case table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (degree_cap_value > 0) set_degree_cap(degree_cap_value);
    RunOptions opt;
    opt.jobs = jobs;
    std::string text;
    int status = 0;
    if (*jack) {
      text = jack_report(parse_partition(jl), parse_partition(jm), format);
    } else if (*list) {
      std::ostringstream os;
      for (const auto& r : case_records()) {
        os << r.id << "  [" << r.source << "]  " << r.title;
        for (const auto& p : r.grid) os << "  " << (p.empty() ? "-" : params_str(p));
        os << "\n";
      }
      text = os.str();
    } else {
      RunReport report;
      if (*stanley) {
        report = run_stanley_scan(max_degree, opt);
      } else if (*pair) {
        opt.dictionary = dictionary == "standard" ? Dictionary::standard : Dictionary::alternative;
        opt.keep_verdicts = keep;
        opt.compare_dictionaries = compare;
        Params params = parse_params(param_items);
        if (!lam_s.empty() || !mu_s.empty() || !nu_s.empty()) {
          if (lam_s.empty() || mu_s.empty() || nu_s.empty())
            throw CLI::ValidationError("check-pair", "--lambda, --mu and --nu go together");
          auto c = instantiate_case(case_id, params);
          auto v = evaluate_triple(*c, {parse_coords(lam_s), parse_coords(mu_s), parse_coords(nu_s)}, opt);
          report.command = "check-pair";
          report.config = {{"case", c->key()}, {"replay", "single triple"}};
          ++report.counts.tested;
          if (!v.agree) ++report.counts.unavailable;
          else if (*v.agree) ++report.counts.agreements;
          else {
            ++report.counts.disagreements;
            report.witnesses.push_back(v);
          }
          report.verdicts.push_back(v);
        } else {
          report = run_conjecture_check(case_id, params, bound, opt);
        }
      } else if (*iso) {
        report = iso_case.empty() ? run_isogeny_suite(opt) : run_isogeny_check(iso_case, parse_params(iso_params));
      } else if (*counter) {
        report = run_counterexample();
      }
      text = render(report, format, !no_time);
      status = report.passed() ? 0 : 1;
    }
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output);
      if (!out) throw std::runtime_error("cannot write " + output);
      out << text;
    }
    return status;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CaseDataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
