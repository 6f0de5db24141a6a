#include "sph/partition.hpp"
#include "sph/config.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sph {

namespace {
std::atomic<int> g_degree_cap{12};
}

DegreeCapExceeded::DegreeCapExceeded(int degree, int cap)
    : std::runtime_error("degree " + std::to_string(degree) + " exceeds configured cap " +
                         std::to_string(cap)) {}

int degree_cap() { return g_degree_cap.load(std::memory_order_relaxed); }

void set_degree_cap(int cap) {
  if (cap < 0) throw std::invalid_argument("degree cap must be non-negative");
  g_degree_cap.store(cap, std::memory_order_relaxed);
}

void check_degree(int degree) {
  int cap = degree_cap();
  if (degree > cap) throw DegreeCapExceeded(degree, cap);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::size_t PartitionHash::operator()(const Partition& p) const {
  std::size_t h = 1469598103934665603ULL;
  for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
  return h;
}

Partition conjugate(const Partition& p) {
  std::vector<int> c;
  if (p.empty()) return {};
  c.resize(p.parts()[0], 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++c[j];
  return Partition(std::move(c));
}

std::int64_t z_factor(const Partition& p) {
  std::int64_t z = 1;
  const auto& v = p.parts();
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    std::int64_t m = static_cast<std::int64_t>(j - i);
    for (std::int64_t t = 1; t <= m; ++t) z *= v[i] * t;
    i = j;
  }
  return z;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominance_leq: size mismatch");
  int sa = 0, sb = 0;
  int n = std::max(a.length(), b.length());
  for (int i = 0; i < n; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

Partition union_parts(const Partition& a, const Partition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  std::sort(v.begin(), v.end(), std::greater<int>());
  return Partition(std::move(v));
}

namespace {
void gen(int remaining, int max_part, int max_len, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) >= max_len) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen(remaining - p, p, max_len, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n, int max_len) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  gen(n, n, max_len, cur, out);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n == 0 ? 0 : n); }

Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::string t;
  for (char c : s) t += (c == '(' || c == ')' || c == '[' || c == ']') ? ' ' : (c == ',' ? ' ' : c);
  std::istringstream in(t);
  int x;
  while (in >> x) parts.push_back(x);
  if (!in.eof()) throw std::invalid_argument("cannot parse partition: " + s);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

}  // namespace sph
