#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sph {

class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 0 beyond the last part
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  // multiplicity of part value i
  int multiplicity(int i) const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // lexicographic on the part vector
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);
std::int64_t z_factor(const Partition& p);
// throws std::invalid_argument on size mismatch
bool dominance_leq(const Partition& a, const Partition& b);
Partition union_parts(const Partition& a, const Partition& b);
// all partitions of n, in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);
// partitions of n with at most `max_len` parts
std::vector<Partition> partitions_of(int n, int max_len);
Partition parse_partition(const std::string& s);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const;
};

}  // namespace sph
