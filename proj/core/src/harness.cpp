#include "sph/harness.hpp"

#include "sph/config.hpp"
#include "sph/jack.hpp"
#include "sph/repcalc.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace sph {
namespace {

using Clock = std::chrono::steady_clock;

// run work(i) for i in [0, n) on `jobs` workers; results are indexed, so order is independent of scheduling
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& work) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          work(i);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<IVec> bounded_coords(std::size_t n, long long bound) {
  std::vector<IVec> out;
  IVec cur(n, 0);
  std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (long long v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
    cur[i] = 0;
  };
  rec(0, bound);
  std::stable_sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) {
    long long da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    return da < db;
  });
  return out;
}

long long degree(const IVec& v) {
  long long d = 0;
  for (auto x : v) d += x;
  return d;
}

// sum of simple-root coordinates of the semisimple part
mpq_class height(const SphericalPairCase& c, const IVec& weight) {
  IVec omega(weight.begin(), weight.begin() + c.ambient.rank());
  mpq_class h = 0;
  for (const auto& x : c.ambient.weight_to_root(omega)) h += x;
  return h;
}

bool in_root_cone(const SphericalPairCase& c, const IVec& weight) {
  for (int i = c.ambient.rank(); i < c.weight_dim(); ++i)
    if (weight[i] != 0) return false;
  IVec omega(weight.begin(), weight.begin() + c.ambient.rank());
  for (const auto& x : c.ambient.weight_to_root(omega))
    if (x < 0 || x.get_den() != 1) return false;
  return true;
}

// monoid elements nu with top - nu in N Delta
std::vector<IVec> lower_set(const SphericalPairCase& c, const IVec& top) {
  const std::size_t n = c.generators.size();
  std::vector<mpq_class> hg(n);
  for (std::size_t j = 0; j < n; ++j) {
    hg[j] = height(c, c.generators[j]);
    if (hg[j] <= 0) throw std::invalid_argument(c.key() + ": generator without positive height");
  }
  IVec top_weight = c.weight(top);
  mpq_class budget = height(c, top_weight);
  std::vector<IVec> out;
  IVec cur(n, 0);
  std::function<void(std::size_t, mpq_class)> rec = [&](std::size_t i, mpq_class left) {
    if (i == n) {
      if (in_root_cone(c, sub(top_weight, c.weight(cur)))) out.push_back(cur);
      return;
    }
    for (long long v = 0; hg[i] * static_cast<long>(v) <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - hg[i] * static_cast<long>(v));
    }
    cur[i] = 0;
  };
  rec(0, budget);
  return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }
std::string opt_str(const std::optional<bool>& b) { return b ? bool_str(*b) : "unavailable"; }

std::string coords_str(const IVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string verdict_line(const TripleVerdict& v) {
  std::ostringstream os;
  os << v.case_id << params_str(v.params) << " lambda=" << vec_str(v.lambda) << " mu=" << vec_str(v.mu)
     << " nu=" << vec_str(v.nu) << " lhs=" << opt_str(v.lhs) << " rhs_tensor=" << bool_str(v.rhs_tensor)
     << " rhs_order=" << bool_str(v.rhs_order) << " mult=" << v.tensor_multiplicity << " agree=" << opt_str(v.agree);
  if (v.lhs_alternative) os << " lhs_alt=" << bool_str(*v.lhs_alternative);
  return os.str();
}

void tally(RunReport& r, const TripleVerdict& v) {
  ++r.counts.tested;
  if (!v.agree) ++r.counts.unavailable;
  else if (*v.agree) ++r.counts.agreements;
  else {
    ++r.counts.disagreements;
    r.witnesses.push_back(v);
  }
  if (v.lhs && v.lhs_alternative && *v.lhs != *v.lhs_alternative) ++r.dictionary_differences;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Finding isogeny_finding(const SphericalPairCase& c, const IsogenyReport& rep) {
  Finding f;
  f.subject = c.key();
  f.ok = rep.ok();
  std::string divisors;
  for (const auto& d : rep.lattice.elementary_divisors) divisors += (divisors.empty() ? "" : " ") + d.get_str();
  f.fields = {{"injective", bool_str(rep.lattice.injective)},
              {"cokernel_index", rep.lattice.cokernel_index ? rep.lattice.cokernel_index->get_str() : "infinite"},
              {"elementary_divisors", divisors},
              {"base_bijection", bool_str(rep.base_bijection)},
              {"coroot_compatible", bool_str(rep.coroot_compatible)},
              {"additive", bool_str(rep.additive)}};
  std::string targets;
  for (const auto* list : {&c.hat, &c.bar})
    for (const auto& t : *list) targets += (targets.empty() ? "" : " ") + t.str();
  f.fields.push_back({"targets", targets});
  for (const auto& w : rep.witnesses) f.fields.push_back({"witness", w});
  return f;
}

}  // namespace

std::string params_str(const Params& p) {
  if (p.empty()) return "";
  std::string s = "(";
  bool first = true;
  for (const auto& [k, v] : p) {
    s += (first ? "" : ",") + k + "=" + std::to_string(v);
    first = false;
  }
  return s + ")";
}

std::vector<Triple> enumerate_triples(const SphericalPairCase& c, long long degree_bound) {
  if (!c.units.empty()) throw std::invalid_argument(c.key() + ": cases with invertible generators are not scanned");
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  auto elems = bounded_coords(c.generators.size(), degree_bound);
  std::map<IVec, std::vector<IVec>> lower;
  std::vector<Triple> out;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j) {
      if (degree(elems[i]) + degree(elems[j]) > degree_bound) continue;
      IVec top = add(elems[i], elems[j]);
      auto it = lower.find(top);
      if (it == lower.end()) it = lower.emplace(top, lower_set(c, top)).first;
      for (const auto& nu : it->second) out.push_back({elems[i], elems[j], nu});
    }
  return out;
}

TripleVerdict evaluate_triple(const SphericalPairCase& c, const Triple& t, const RunOptions& opt) {
  TripleVerdict v;
  v.case_id = c.id;
  v.params = c.params;
  v.lambda = t.lambda;
  v.mu = t.mu;
  v.nu = t.nu;
  auto rhs = conjecture_rhs_parts(c, t.lambda, t.mu, t.nu);
  v.rhs_tensor = rhs.tensor;
  v.rhs_order = rhs.order;
  v.tensor_multiplicity = rhs.multiplicity;
  if (oracle_available(c)) {
    try {
      v.lhs = jack_oracle_lhs(c, t.lambda, t.mu, t.nu, opt.dictionary);
      if (opt.compare_dictionaries) {
        Dictionary other = opt.dictionary == Dictionary::standard ? Dictionary::alternative : Dictionary::standard;
        v.lhs_alternative = jack_oracle_lhs(c, t.lambda, t.mu, t.nu, other);
      }
    } catch (const OracleUnavailable&) {
      v.lhs.reset();
    }
  }
  if (v.lhs) v.agree = *v.lhs == rhs.holds();
  return v;
}

RunReport run_conjecture_check(const std::string& case_id, const Params& params, long long degree_bound,
                               const RunOptions& opt) {
  auto t0 = Clock::now();
  auto c = instantiate_case(case_id, params);
  RunReport r;
  r.command = "check-pair";
  r.config = {{"case", c->key()},
              {"bound", std::to_string(degree_bound)},
              {"dictionary", opt.dictionary == Dictionary::standard ? "standard" : "alternative"},
              {"oracle", oracle_name(c->oracle)},
              {"jack_k", c->jack_k ? c->jack_k->get_str() : "-"},
              {"compare_dictionaries", opt.compare_dictionaries ? "true" : "false"}};
  auto triples = enumerate_triples(*c, degree_bound);
  std::vector<TripleVerdict> verdicts(triples.size());
  parallel_for(triples.size(), opt.jobs, [&](std::size_t i) { verdicts[i] = evaluate_triple(*c, triples[i], opt); });
  for (const auto& v : verdicts) tally(r, v);
  if (opt.keep_verdicts) r.verdicts = std::move(verdicts);
  r.wall_time_s = seconds_since(t0);
  return r;
}

RunReport run_stanley_scan(int max_total_degree, const RunOptions& opt) {
  auto t0 = Clock::now();
  RunReport r;
  r.command = "check-stanley";
  r.config = {{"max_degree", std::to_string(max_total_degree)}};
  check_degree(max_total_degree);
  std::vector<Partition> all;
  for (int n = 0; n <= max_total_degree; ++n)
    for (const auto& p : partitions_of(n)) all.push_back(p);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j)
      if (all[i].size() + all[j].size() <= max_total_degree) pairs.push_back({i, j});

  struct Unit {
    long long tested = 0;
    std::vector<Finding> violations;
  };
  std::vector<Unit> units(pairs.size());
  parallel_for(pairs.size(), opt.jobs, [&](std::size_t u) {
    const auto& lam = all[pairs[u].first];
    const auto& mu = all[pairs[u].second];
    for (const auto& [nu, g] : structure_constants(lam, mu)) {
      ++units[u].tested;
      bool integral = g.has_integer_coefficients();
      bool nonneg = g.has_nonnegative_coefficients();
      if (integral && nonneg) continue;
      Finding f;
      f.subject = "g[" + lam.str() + "," + mu.str() + "->" + nu.str() + "]";
      f.ok = false;
      f.fields = {{"g", g.str()}, {"integral", bool_str(integral)}, {"nonnegative", bool_str(nonneg)}};
      units[u].violations.push_back(f);
    }
  });
  for (auto& u : units) {
    r.counts.tested += u.tested;
    r.counts.agreements += u.tested - static_cast<long long>(u.violations.size());
    r.counts.disagreements += static_cast<long long>(u.violations.size());
    for (auto& f : u.violations) r.findings.push_back(std::move(f));
  }
  if (max_total_degree >= 2)
    for (const auto& nu : {Partition({2}), Partition({1, 1})}) {
      Finding f;
      f.subject = "g[(1),(1)->" + nu.str() + "]";
      ParamPoly g = structure_constant_g(Partition({1}), Partition({1}), nu);
      f.ok = g == ParamPoly::monomial(2, 2);
      f.fields = {{"g", g.str()}, {"expected", "2*k^2"}};
      if (!f.ok) ++r.counts.disagreements;
      r.findings.push_back(f);
    }
  r.wall_time_s = seconds_since(t0);
  return r;
}

RunReport run_isogeny_suite(const RunOptions& opt) {
  auto t0 = Clock::now();
  RunReport r;
  r.command = "verify-isogeny";
  r.config = {{"scope", "all cases with isogeny data over the default grid"}};
  std::vector<std::shared_ptr<const SphericalPairCase>> cases;
  for (const auto& rec : case_records())
    for (const auto& p : rec.grid) {
      auto c = instantiate_case(rec.id, p);
      if (!c->hat.empty()) cases.push_back(c);
    }
  std::vector<Finding> rows(cases.size());
  parallel_for(cases.size(), opt.jobs, [&](std::size_t i) { rows[i] = isogeny_finding(*cases[i], verify_isogeny(*cases[i])); });
  for (auto& f : rows) {
    ++r.counts.tested;
    if (f.ok) ++r.counts.agreements;
    else ++r.counts.disagreements;
    r.findings.push_back(std::move(f));
  }
  r.wall_time_s = seconds_since(t0);
  return r;
}

RunReport run_isogeny_check(const std::string& case_id, const Params& params) {
  auto t0 = Clock::now();
  auto c = instantiate_case(case_id, params);
  RunReport r;
  r.command = "verify-isogeny";
  r.config = {{"case", c->key()}};
  Finding f = isogeny_finding(*c, verify_isogeny(*c));
  ++r.counts.tested;
  if (f.ok) ++r.counts.agreements;
  else ++r.counts.disagreements;
  r.findings.push_back(std::move(f));
  r.wall_time_s = seconds_since(t0);
  return r;
}

RunReport run_counterexample() {
  auto t0 = Clock::now();
  RunReport r;
  r.command = "counterexample";
  struct Branch {
    const char* label;
    const char* case_id;
    Params params;
    IVec theta_coords;  // theta in generator coordinates
    long long tensor, sym2;
    bool naive_fails;  // LHS fails while the naive right-hand side holds
  };
  const Branch branches[] = {
      {"D5 adjoint, Spin(10)/GL(5)", "He.4a", {{"p", 2}}, {1, 0}, 1, 0, true},
      {"A4 adjoint, SL(5)/S(GL(2)xGL(3))", "He.1a", {{"p", 2}, {"q", 3}}, {1, 0}, 2, 1, false},
      {"E6 adjoint, E6/D5xC*", "He.5", {}, {0, 1}, 1, 0, true},
  };
  for (const auto& b : branches) {
    auto c = instantiate_case(b.case_id, b.params);
    IVec theta = c->weight(b.theta_coords);
    const auto& roots = c->ambient.positive_roots();
    IVec highest = c->ambient.root_to_weight(*std::max_element(
        roots.begin(), roots.end(), [](const IVec& a, const IVec& b) { return degree(a) < degree(b); }));
    long long tensor = tensor_multiplicity(theta, theta, theta, c->ambient);
    long long sym2 = sym2_multiplicity(theta, theta, c->ambient);
    auto rhs = conjecture_rhs_parts(*c, b.theta_coords, b.theta_coords, b.theta_coords);
    // the symmetric square carries the product of a component with itself
    bool lhs = sym2 > 0;
    bool naive_rhs = tensor > 0 && rhs.order;
    Finding f;
    f.subject = b.label;
    f.fields = {{"case", c->key()},
                {"theta", vec_str(theta)},
                {"theta_is_highest_root", bool_str(theta == highest)},
                {"tensor_multiplicity", std::to_string(tensor)},
                {"sym2_multiplicity", std::to_string(sym2)},
                {"order_theta_le_2theta", bool_str(rhs.order)},
                {"product_contains_theta", bool_str(lhs)},
                {"naive_rule_rhs", bool_str(naive_rhs)},
                {"naive_rule_fails", bool_str(naive_rhs && !lhs)},
                {"gx_tensor_multiplicity", std::to_string(rhs.multiplicity)}};
    f.ok = theta == highest && tensor == b.tensor && sym2 == b.sym2 && rhs.order &&
           (naive_rhs && !lhs) == b.naive_fails;
    ++r.counts.tested;
    if (f.ok) ++r.counts.agreements;
    else ++r.counts.disagreements;
    r.findings.push_back(std::move(f));
  }
  r.wall_time_s = seconds_since(t0);
  return r;
}

std::string report_text(const RunReport& r, bool with_time) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  for (const auto& [k, v] : r.config) os << "config." << k << ": " << v << "\n";
  os << "tested: " << r.counts.tested << "\nagreements: " << r.counts.agreements
     << "\ndisagreements: " << r.counts.disagreements << "\nunavailable: " << r.counts.unavailable << "\n";
  os << "dictionary_differences: " << r.dictionary_differences << "\n";
  for (const auto& f : r.findings) {
    os << (f.ok ? "ok   " : "FAIL ") << f.subject;
    for (const auto& [k, v] : f.fields) os << " " << k << "=" << v;
    os << "\n";
  }
  for (const auto& w : r.witnesses) os << "witness " << verdict_line(w) << "\n";
  for (const auto& v : r.verdicts) os << "verdict " << verdict_line(v) << "\n";
  if (with_time) os << "wall_time_s: " << r.wall_time_s << "\n";
  return os.str();
}

std::string report_csv(const RunReport& r) {
  std::ostringstream os;
  if (!r.findings.empty() && r.witnesses.empty() && r.verdicts.empty()) {
    os << "subject,ok,fields\n";
    for (const auto& f : r.findings) {
      std::string fields;
      for (const auto& [k, v] : f.fields) fields += (fields.empty() ? "" : ";") + k + "=" + v;
      os << '"' << f.subject << "\"," << bool_str(f.ok) << ",\"" << fields << "\"\n";
    }
    return os.str();
  }
  os << "case_id,params,lambda,mu,nu,lhs,rhs_tensor,rhs_order,tensor_multiplicity,agree\n";
  const auto& rows = r.verdicts.empty() ? r.witnesses : r.verdicts;
  for (const auto& v : rows)
    os << v.case_id << ",\"" << params_str(v.params) << "\"," << coords_str(v.lambda) << "," << coords_str(v.mu) << ","
       << coords_str(v.nu) << "," << opt_str(v.lhs) << "," << bool_str(v.rhs_tensor) << "," << bool_str(v.rhs_order)
       << "," << v.tensor_multiplicity << "," << opt_str(v.agree) << "\n";
  return os.str();
}

}  // namespace sph
