#include "sph/sphdata.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace sph {
namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// split on `sep` outside parentheses and braces
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == '{') ++depth;
    if (ch == ')' || ch == '}') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::string> split_ws_top(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if ((ch == ' ' || ch == '\t') && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// ---- expressions

struct Token {
  enum Kind { num, name, op, end } kind;
  std::string text;
  long long value = 0;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::num, s.substr(i, j - i), std::stoll(s.substr(i, j - i))});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::name, s.substr(i, j - i)});
      i = j;
    } else if (i + 1 < s.size() && (s.substr(i, 2) == ".." || s.substr(i, 2) == ">=" || s.substr(i, 2) == "<=" ||
                                    s.substr(i, 2) == "==" || s.substr(i, 2) == "!=")) {
      out.push_back({Token::op, s.substr(i, 2)});
      i += 2;
    } else {
      out.push_back({Token::op, std::string(1, ch)});
      ++i;
    }
  }
  out.push_back({Token::end, ""});
  return out;
}

struct VecDims {
  int roots = 0;   // a
  int rank = 0;    // w
  int center = 0;  // z
  int targets = 0; // t
};

struct Value {
  bool is_vec = false;
  long long s = 0;
  IVec v;
};

class Evaluator {
public:
  Evaluator(const std::string& text, const Params& env, const VecDims* dims)
      : toks_(lex(text)), env_(env), dims_(dims), text_(text) {}

  Value parse_all() {
    Value v = sum();
    if (toks_[pos_].kind != Token::end) fail("trailing input");
    return v;
  }

  long long scalar() {
    Value v = parse_all();
    if (v.is_vec) fail("expected a scalar");
    return v.s;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw CaseDataError("bad expression '" + text_ + "': " + why);
  }
  const Token& peek() const { return toks_[pos_]; }
  bool accept(const std::string& op) {
    if (peek().kind == Token::op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const std::string& op) {
    if (!accept(op)) fail("expected '" + op + "'");
  }

  Value combine(Value a, Value b, char op) {
    if (op == '+' || op == '-') {
      long long sg = op == '+' ? 1 : -1;
      if (!a.is_vec && !b.is_vec) return {false, a.s + sg * b.s, {}};
      if (a.is_vec && b.is_vec) {
        if (a.v.size() != b.v.size()) fail("dimension mismatch");
        return {true, 0, add(a.v, scale(b.v, sg))};
      }
      if (!a.is_vec && a.s == 0) return {true, 0, scale(b.v, sg)};
      if (!b.is_vec && b.s == 0) return a;
      fail("adding a scalar to a vector");
    }
    if (op == '*') {
      if (a.is_vec && b.is_vec) fail("product of two vectors");
      if (a.is_vec) return {true, 0, scale(a.v, b.s)};
      if (b.is_vec) return {true, 0, scale(b.v, a.s)};
      return {false, a.s * b.s, {}};
    }
    if (a.is_vec || b.is_vec) fail("division of a vector");
    if (b.s == 0 || a.s % b.s != 0) fail("inexact division");
    return {false, a.s / b.s, {}};
  }

  Value sum() {
    Value v = product();
    for (;;) {
      if (accept("+")) v = combine(v, product(), '+');
      else if (accept("-")) v = combine(v, product(), '-');
      else return v;
    }
  }
  Value product() {
    Value v = unary();
    for (;;) {
      if (accept("*")) v = combine(v, unary(), '*');
      else if (accept("/")) v = combine(v, unary(), '/');
      else return v;
    }
  }
  Value unary() {
    if (accept("-")) return combine({false, 0, {}}, unary(), '-');
    return primary();
  }
  Value primary() {
    const Token t = peek();
    if (t.kind == Token::num) {
      ++pos_;
      return {false, t.value, {}};
    }
    if (accept("(")) {
      Value v = sum();
      expect(")");
      return v;
    }
    if (t.kind == Token::name) {
      ++pos_;
      if (peek().kind == Token::op && peek().text == "{" && t.text.size() == 1 && std::string("awzt").find(t.text[0]) != std::string::npos)
        return vector_symbol(t.text[0]);
      auto it = env_.find(t.text);
      if (it == env_.end()) fail("unknown name " + t.text);
      return {false, it->second, {}};
    }
    fail("unexpected token '" + t.text + "'");
  }

  Value vector_symbol(char sym) {
    if (!dims_) fail("vectors not allowed here");
    expect("{");
    long long lo = scalar_sub();
    long long hi = lo;
    if (accept("..")) hi = scalar_sub();
    expect("}");
    int dim = 0, offset = 0, limit = 0;
    switch (sym) {
      case 'a': dim = dims_->roots; limit = dims_->roots; break;
      case 'w': dim = dims_->rank + dims_->center; limit = dims_->rank; break;
      case 'z': dim = dims_->rank + dims_->center; limit = dims_->center; offset = dims_->rank; break;
      case 't': dim = dims_->targets; limit = dims_->targets; break;
    }
    IVec v(dim, 0);
    for (long long i = lo; i <= hi; ++i) {
      if (i < 1 || i > limit) fail(std::string("index out of range for ") + sym + ": " + std::to_string(i));
      v[offset + i - 1] += 1;
    }
    return {true, 0, v};
  }
  long long scalar_sub() {
    Value v = sum();
    if (v.is_vec) fail("vector index must be a scalar");
    return v.s;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Params& env_;
  const VecDims* dims_;
  std::string text_;
};

long long eval_scalar(const std::string& s, const Params& env) { return Evaluator(s, env, nullptr).scalar(); }

IVec eval_vector(const std::string& s, const Params& env, const VecDims& dims, int dim) {
  Value v = Evaluator(s, env, &dims).parse_all();
  if (!v.is_vec) {
    if (v.s != 0) throw CaseDataError("expected a vector: " + s);
    return IVec(dim, 0);
  }
  return v.v;
}

std::vector<IVec> eval_vector_list(const std::string& text, const Params& env, const VecDims& dims, int dim) {
  std::vector<IVec> out;
  std::string t = trim(text);
  if (t == "-" || t.empty()) return out;
  for (const auto& item : split_top(t, ';')) {
    if (item.rfind("for ", 0) == 0) {
      auto colon = item.find(':');
      auto eq = item.find('=');
      auto dots = item.find("..");
      if (colon == std::string::npos || eq == std::string::npos || dots == std::string::npos || dots > colon)
        throw CaseDataError("bad loop: " + item);
      std::string var = trim(item.substr(4, eq - 4));
      long long lo = eval_scalar(item.substr(eq + 1, dots - eq - 1), env);
      long long hi = eval_scalar(item.substr(dots + 2, colon - dots - 2), env);
      auto body = split_top(item.substr(colon + 1), ',');
      Params inner = env;
      for (long long i = lo; i <= hi; ++i) {
        inner[var] = i;
        for (const auto& b : body) out.push_back(eval_vector(b, inner, dims, dim));
      }
    } else {
      for (const auto& b : split_top(item, ',')) out.push_back(eval_vector(b, env, dims, dim));
    }
  }
  return out;
}

bool eval_condition(const std::string& cond, const Params& env) {
  std::string c = trim(cond);
  auto ends_with = [&](const std::string& suf) {
    return c.size() > suf.size() && c.compare(c.size() - suf.size(), suf.size(), suf) == 0;
  };
  if (ends_with(" odd")) return eval_scalar(c.substr(0, c.size() - 4), env) % 2 != 0;
  if (ends_with(" even")) return eval_scalar(c.substr(0, c.size() - 5), env) % 2 == 0;
  for (const char* op : {">=", "<=", "==", "!=", ">", "<"}) {
    auto at = c.find(op);
    if (at == std::string::npos) continue;
    long long a = eval_scalar(c.substr(0, at), env);
    long long b = eval_scalar(c.substr(at + std::string(op).size()), env);
    std::string o = op;
    if (o == ">=") return a >= b;
    if (o == "<=") return a <= b;
    if (o == "==") return a == b;
    if (o == "!=") return a != b;
    if (o == ">") return a > b;
    return a < b;
  }
  throw CaseDataError("bad condition: " + cond);
}

// expand {expr} inside a type string
std::string expand_type(const std::string& s, const Params& env) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '{') {
      auto j = s.find('}', i);
      if (j == std::string::npos) throw CaseDataError("unbalanced brace in " + s);
      out += std::to_string(eval_scalar(s.substr(i + 1, j - i - 1), env));
      i = j;
    } else {
      out += s[i];
    }
  }
  return out == "-" ? "" : out;
}

// ---- records

struct FieldLine {
  std::vector<std::string> conds;
  std::string key;
  std::string value;
  int lineno = 0;
};

struct Constraint {
  std::string name, op, expr;
};

struct Record {
  std::string id;
  int lineno = 0;
  std::vector<FieldLine> lines;
  std::vector<Constraint> constraints;
  CaseRecordInfo info;
};

struct Table {
  std::string version;
  std::vector<Record> records;
  std::vector<CaseRecordInfo> infos;
  std::unordered_map<std::string, std::size_t> index;
};

std::shared_mutex g_table_mu;
std::unique_ptr<Table> g_table;
std::once_flag g_default_once;

std::shared_mutex g_inst_mu;
std::map<std::string, std::shared_ptr<const SphericalPairCase>> g_instances;

std::string ref_key(const std::string& id, const Params& p) {
  std::string s = id;
  if (!p.empty()) {
    s += "(";
    bool first = true;
    for (const auto& [k, v] : p) {
      if (!first) s += ",";
      first = false;
      s += k + "=" + std::to_string(v);
    }
    s += ")";
  }
  return s;
}

Table parse_table(std::istream& in, const std::string& origin) {
  Table t;
  std::string raw;
  int lineno = 0;
  Record* cur = nullptr;
  auto err = [&](const std::string& why) {
    return CaseDataError(origin + ":" + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (t.version.empty()) {
      if (line.rfind("format ", 0) != 0) throw err("missing format line");
      t.version = trim(line.substr(7));
      if (t.version != "sphcases 1") throw err("unsupported format " + t.version);
      continue;
    }
    if (!cur) {
      if (line.rfind("case ", 0) != 0) throw err("expected 'case'");
      t.records.push_back({});
      cur = &t.records.back();
      cur->id = trim(line.substr(5));
      cur->lineno = lineno;
      cur->info.id = cur->id;
      if (t.index.count(cur->id)) throw err("duplicate case " + cur->id);
      t.index[cur->id] = t.records.size() - 1;
      continue;
    }
    if (line == "end") {
      cur = nullptr;
      continue;
    }
    FieldLine f;
    f.lineno = lineno;
    while (!line.empty() && line[0] == '[') {
      auto close = line.find(']');
      if (close == std::string::npos) throw err("unterminated condition");
      f.conds.push_back(line.substr(1, close - 1));
      line = trim(line.substr(close + 1));
    }
    auto sp = line.find_first_of(" \t");
    f.key = line.substr(0, sp);
    f.value = sp == std::string::npos ? "" : trim(line.substr(sp));
    if (f.key == "param") {
      if (!f.conds.empty()) throw err("conditional param");
      std::istringstream ps(f.value);
      Constraint c;
      ps >> c.name >> c.op;
      std::getline(ps, c.expr);
      c.expr = trim(c.expr);
      if (c.name.empty() || c.expr.empty()) throw err("bad param line");
      cur->constraints.push_back(c);
      auto& names = cur->info.param_names;
      if (std::find(names.begin(), names.end(), c.name) == names.end()) names.push_back(c.name);
    } else if (f.key == "grid") {
      for (const auto& pt : split_top(f.value, '|')) {
        Params p;
        for (const auto& kv : split_top(pt, ',')) {
          auto eq = kv.find('=');
          if (eq == std::string::npos) throw err("bad grid point " + pt);
          p[trim(kv.substr(0, eq))] = std::stoll(trim(kv.substr(eq + 1)));
        }
        cur->info.grid.push_back(p);
      }
    } else if (f.key == "source" && f.conds.empty()) {
      cur->info.source = f.value;
      cur->lines.push_back(f);
    } else if (f.key == "title" && f.conds.empty()) {
      cur->info.title = f.value;
      cur->lines.push_back(f);
    } else {
      cur->lines.push_back(f);
    }
  }
  if (cur) throw CaseDataError(origin + ": unterminated case " + cur->id);
  if (t.version.empty()) throw CaseDataError(origin + ": empty case table");
  for (auto& r : t.records) {
    if (r.info.grid.empty() && r.info.param_names.empty()) r.info.grid.push_back({});
    t.infos.push_back(r.info);
  }
  return t;
}

std::optional<std::string> field(const Record& r, const std::string& key, const Params& env) {
  std::optional<std::string> out;
  for (const auto& f : r.lines) {
    if (f.key != key) continue;
    bool ok = true;
    for (const auto& c : f.conds) ok = ok && eval_condition(c, env);
    if (!ok) continue;
    if (out) throw CaseDataError(r.id + ": several '" + key + "' lines apply (line " + std::to_string(f.lineno) + ")");
    out = f.value;
  }
  return out;
}

std::string required(const Record& r, const std::string& key, const Params& env) {
  auto v = field(r, key, env);
  if (!v) throw CaseDataError(r.id + ": missing field '" + key + "' for " + ref_key(r.id, env));
  return *v;
}

std::vector<CaseRef> parse_refs(const std::string& text, const Params& env) {
  std::vector<CaseRef> out;
  if (trim(text) == "none") return out;
  for (const auto& tok : split_ws_top(text)) {
    CaseRef ref;
    auto open = tok.find('(');
    if (open == std::string::npos) {
      ref.id = tok;
    } else {
      ref.id = tok.substr(0, open);
      if (tok.back() != ')') throw CaseDataError("bad reference " + tok);
      for (const auto& kv : split_top(tok.substr(open + 1, tok.size() - open - 2), ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw CaseDataError("bad reference " + tok);
        ref.params[trim(kv.substr(0, eq))] = eval_scalar(kv.substr(eq + 1), env);
      }
    }
    out.push_back(ref);
  }
  return out;
}

int total_generators(const std::vector<CaseRef>& refs) {
  int n = 0;
  for (const auto& r : refs) n += static_cast<int>(instantiate_case(r)->generators.size());
  return n;
}

void check_params(const Record& r, const Params& p) {
  for (const auto& name : r.info.param_names)
    if (!p.count(name)) throw CaseDataError(r.id + ": missing parameter " + name);
  for (const auto& [k, v] : p)
    if (std::find(r.info.param_names.begin(), r.info.param_names.end(), k) == r.info.param_names.end())
      throw CaseDataError(r.id + ": unknown parameter " + k);
  for (const auto& c : r.constraints)
    if (!eval_condition(c.name + " " + c.op + " " + c.expr, p))
      throw CaseDataError(r.id + ": parameter out of range, need " + c.name + " " + c.op + " " + c.expr);
}

std::shared_ptr<SphericalPairCase> build_case(const Record& r, const Params& p) {
  check_params(r, p);
  auto c = std::make_shared<SphericalPairCase>();
  c->id = r.id;
  c->params = p;
  c->source = r.info.source;
  c->title = r.info.title;
  c->ambient_type = expand_type(required(r, "ambient", p), p);
  c->ambient = build_root_system(c->ambient_type);
  if (auto v = field(r, "center", p)) c->center = static_cast<int>(eval_scalar(*v, p));
  c->expected_type = expand_type(required(r, "type", p), p);

  VecDims dims;
  dims.roots = c->ambient.rank();
  dims.rank = c->ambient.rank();
  dims.center = c->center;
  c->delta_n = eval_vector_list(required(r, "nroots", p), p, dims, dims.roots);
  for (const auto& s : c->delta_n)
    if (static_cast<int>(s.size()) != dims.roots) throw CaseDataError(r.id + ": nroots has wrong dimension");
  c->generators = eval_vector_list(required(r, "gens", p), p, dims, c->weight_dim());
  for (const auto& g : c->generators)
    if (static_cast<int>(g.size()) != c->weight_dim()) throw CaseDataError(r.id + ": gens has wrong dimension");
  if (auto v = field(r, "units", p)) {
    for (const auto& tok : split_ws_top(*v)) {
      long long u = eval_scalar(tok, p);
      if (u < 1 || u > static_cast<long long>(c->generators.size())) throw CaseDataError(r.id + ": bad unit index");
      c->units.push_back(static_cast<int>(u - 1));
    }
  }
  if (auto v = field(r, "m", p)) {
    c->multiplicity = eval_scalar(*v, p);
    if (*c->multiplicity <= 0) throw CaseDataError(r.id + ": multiplicity must be positive");
    c->jack_k = qfrac(2, *c->multiplicity);
  }
  if (auto v = field(r, "colscale", p)) c->column_scale = static_cast<int>(eval_scalar(*v, p));

  std::string oracle = required(r, "oracle", p);
  if (oracle == "jack") c->oracle = OracleKind::jack_type_A;
  else if (oracle == "factorized") c->oracle = OracleKind::factorized;
  else if (oracle == "delegated") c->oracle = OracleKind::delegated;
  else if (oracle == "none") c->oracle = OracleKind::none;
  else throw CaseDataError(r.id + ": unknown oracle " + oracle);
  if (c->oracle == OracleKind::jack_type_A && !c->jack_k) throw CaseDataError(r.id + ": jack oracle needs m");

  std::size_t ngen = c->generators.size();
  auto read_map = [&](const char* key, const std::vector<CaseRef>& targets) {
    VecDims td;
    td.targets = total_generators(targets);
    IMat m = eval_vector_list(required(r, key, p), p, td, td.targets);
    if (m.size() != ngen) throw CaseDataError(r.id + ": " + key + " needs one image per generator");
    for (const auto& row : m)
      if (static_cast<int>(row.size()) != td.targets) throw CaseDataError(r.id + ": " + key + " has wrong width");
    return m;
  };
  if (auto h = field(r, "hat", p)) {
    c->hat = parse_refs(*h, p);
    c->bar = parse_refs(required(r, "bar", p), p);
    c->phi_hat = read_map("phi_hat", c->hat);
    c->phi_bar = c->bar.empty() ? IMat(ngen, IVec{}) : read_map("phi_bar", c->bar);
  }
  if (auto d = field(r, "delegate", p)) {
    auto refs = parse_refs(*d, p);
    if (refs.size() != 1) throw CaseDataError(r.id + ": delegate needs exactly one case");
    c->delegate = refs[0];
    c->embed = read_map("embed", refs);
  }
  if (c->oracle == OracleKind::factorized && c->hat.empty()) throw CaseDataError(r.id + ": factorized oracle needs hat");
  if (c->oracle == OracleKind::delegated && !c->delegate) throw CaseDataError(r.id + ": delegated oracle needs delegate");

  // halving
  IMat lattice_omega;
  for (const auto& g : c->generators) lattice_omega.emplace_back(g.begin(), g.begin() + c->ambient.rank());
  std::vector<int> dagger;
  try {
    dagger = build_delta_dagger(c->delta_n, c->ambient, lattice_omega);
  } catch (const std::exception& e) {
    throw CaseDataError(c->key() + ": " + e.what());
  }
  c->delta_x = c->delta_n;
  for (int i : dagger)
    for (auto& x : c->delta_x[i]) x /= 2;
  if (auto v = field(r, "roots", p)) {
    auto printed = eval_vector_list(*v, p, dims, dims.roots);
    if (printed != c->delta_x)
      throw CaseDataError(c->key() + ": printed roots differ from the halving of nroots");
  }
  return c;
}

void validate_instance(const SphericalPairCase& c);

const Table& table() {
  {
    std::shared_lock lock(g_table_mu);
    if (g_table) return *g_table;
  }
  std::call_once(g_default_once, [] {
    {
      std::shared_lock lock(g_table_mu);
      if (g_table) return;
    }
    const char* env = std::getenv("SPH_CASE_FILE");
    load_case_table(env && *env ? env : SPH_DEFAULT_CASE_FILE);
  });
  std::shared_lock lock(g_table_mu);
  if (!g_table) throw CaseDataError("case table not loaded");
  return *g_table;
}

void validate_instance(const SphericalPairCase& c) {
  const RealizedDatum& rx = build_RX(c);
  if (!rx.report.ok()) {
    std::string w;
    for (const auto& s : rx.report.witnesses) w += " " + s;
    throw CaseDataError(c.key() + ": root datum axioms fail:" + w);
  }
  std::string got = canonical_type(cartan_type_str(rx.type));
  std::string want = canonical_type(c.expected_type);
  if (got != want) throw CaseDataError(c.key() + ": recognized type " + got + ", table says " + want);
  for (std::size_t g = 0; g < c.generators.size(); ++g) {
    auto xc = rx.xi_coords(c.generators[g]);
    if (!xc) throw CaseDataError(c.key() + ": generator outside Xi");
    for (std::size_t j = 0; j < rx.datum.coroots.size(); ++j)
      if (rx.datum.pair(*xc, static_cast<int>(j)) < 0)
        throw CaseDataError(c.key() + ": generator " + std::to_string(g + 1) + " pairs negatively with a coroot");
  }
  if (c.source == "symmetric" && c.multiplicity && *c.jack_k != qfrac(2, *c.multiplicity))
    throw CaseDataError(c.key() + ": Jack parameter differs from 2/m");
}

}  // namespace

const char* oracle_name(OracleKind k) {
  switch (k) {
    case OracleKind::jack_type_A: return "jack_type_A";
    case OracleKind::factorized: return "factorized";
    case OracleKind::delegated: return "delegated";
    case OracleKind::none: return "none";
  }
  return "?";
}

std::string CaseRef::str() const { return ref_key(id, params); }
std::string SphericalPairCase::key() const { return ref_key(id, params); }

IVec SphericalPairCase::weight(const IVec& coords) const {
  if (coords.size() != generators.size())
    throw std::invalid_argument(key() + ": expected " + std::to_string(generators.size()) + " generator coordinates");
  IVec w(weight_dim(), 0);
  for (std::size_t j = 0; j < coords.size(); ++j) w = add(w, scale(generators[j], coords[j]));
  return w;
}

bool SphericalPairCase::in_monoid(const IVec& coords) const {
  if (coords.size() != generators.size()) return false;
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (coords[j] < 0 && std::find(units.begin(), units.end(), static_cast<int>(j)) == units.end()) return false;
  return true;
}

void load_case_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CaseDataError("cannot open case table " + path);
  auto t = std::make_unique<Table>(parse_table(in, path));
  {
    std::unique_lock lock(g_table_mu);
    g_table = std::move(t);
  }
  {
    std::unique_lock lock(g_inst_mu);
    g_instances.clear();
  }
  try {
    for (const auto& r : table().records)
      for (const auto& p : r.info.grid) instantiate_case(r.id, p);
  } catch (...) {
    std::unique_lock lock(g_table_mu);
    g_table.reset();
    throw;
  }
}

const std::vector<CaseRecordInfo>& case_records() { return table().infos; }
std::string case_table_version() { return table().version; }

std::shared_ptr<const SphericalPairCase> instantiate_case(const std::string& id, const Params& params) {
  std::string key = ref_key(id, params);
  {
    std::shared_lock lock(g_inst_mu);
    auto it = g_instances.find(key);
    if (it != g_instances.end()) return it->second;
  }
  const Table& t = table();
  auto it = t.index.find(id);
  if (it == t.index.end()) throw CaseDataError("unknown case " + id);
  std::shared_ptr<SphericalPairCase> c;
  try {
    c = build_case(t.records[it->second], params);
    validate_instance(*c);
  } catch (const std::invalid_argument& e) {
    throw CaseDataError(ref_key(id, params) + ": " + e.what());
  }
  std::unique_lock lock(g_inst_mu);
  return g_instances.emplace(key, c).first->second;
}

std::shared_ptr<const SphericalPairCase> instantiate_case(const CaseRef& ref) {
  return instantiate_case(ref.id, ref.params);
}

std::string canonical_type(const std::string& t) {
  auto comps = parse_cartan_type(t);
  for (auto& c : comps) {
    if ((c.letter == 'B' || c.letter == 'C') && c.rank == 1) c.letter = 'A';
    if (c.letter == 'C' && c.rank == 2) c.letter = 'B';
    if (c.letter == 'D' && c.rank == 3) c.letter = 'A';
  }
  std::vector<CartanComponent> out;
  for (const auto& c : comps) {
    if (c.letter == 'D' && c.rank == 2) {
      out.push_back({'A', 1});
      out.push_back({'A', 1});
    } else {
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end(), [](const CartanComponent& a, const CartanComponent& b) {
    return a.letter != b.letter ? a.letter < b.letter : a.rank < b.rank;
  });
  return cartan_type_str(out);
}

}  // namespace sph
