#include "sph/repcalc.hpp"

#include <vector>

namespace sph {

namespace {

struct LRFiller {
  const Partition& outer;
  const Partition& inner;
  std::vector<int> content;  // remaining count per letter
  std::vector<int> used;     // letters used so far in the reading word
  std::vector<std::vector<int>> tab;
  long long count = 0;

  LRFiller(const Partition& nu, const Partition& lam, const Partition& mu)
      : outer(nu), inner(lam), content(mu.parts()), used(mu.length(), 0), tab(nu.length()) {
    for (int r = 0; r < nu.length(); ++r) tab[r].assign(nu[r], 0);
  }

  // fill row r from right to left; column c
  void fill(int r, int c) {
    if (r == outer.length()) {
      ++count;
      return;
    }
    if (c < inner[r]) {
      fill(r + 1, outer[r + 1] - 1);
      return;
    }
    int hi = (c + 1 < outer[r]) ? tab[r][c + 1] : static_cast<int>(content.size());
    int lo = 1;
    if (r > 0 && c < outer[r - 1] && c >= inner[r - 1]) lo = tab[r - 1][c] + 1;
    for (int x = lo; x <= hi; ++x) {
      int i = x - 1;
      if (content[i] == 0) continue;
      // lattice condition on the reverse reading word
      if (i > 0 && used[i] + 1 > used[i - 1]) continue;
      --content[i];
      ++used[i];
      tab[r][c] = x;
      if (c - 1 >= inner[r]) fill(r, c - 1);
      else fill(r + 1, r + 1 < outer.length() ? outer[r + 1] - 1 : 0);
      ++content[i];
      --used[i];
    }
    tab[r][c] = 0;
  }
};

bool contains(const Partition& nu, const Partition& lam) {
  if (lam.length() > nu.length()) return false;
  for (int i = 0; i < lam.length(); ++i)
    if (lam[i] > nu[i]) return false;
  return true;
}

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  if (!contains(nu, lambda) || !contains(nu, mu)) return 0;
  if (mu.empty()) return lambda == nu ? 1 : 0;
  LRFiller f(nu, lambda, mu);
  f.fill(0, nu[0] - 1);
  return f.count;
}

}  // namespace sph
