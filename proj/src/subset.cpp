#include "pbv/subset.hpp"

#include <algorithm>

namespace pbv {

std::vector<Subset> subsets_of(std::size_t r, std::size_t k) {
  std::vector<Subset> out;
  if (k > r) return out;
  Subset cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<unsigned>(i);
  for (;;) {
    out.push_back(cur);
    // advance to the next k-combination in lex order
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == r - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) {
    out.clear();
    out.push_back(Subset{});
  }
  return out;
}

int merge_wedge(const Subset& a, const Subset& b, Subset& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  int sign = 1;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining entries of a
      if ((a.size() - i) % 2 != 0) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return sign;
}

int shuffle_sign(const Subset& chosen) {
  // inversions contributed by moving chosen[i] to position i
  unsigned inv = 0;
  for (std::size_t i = 0; i < chosen.size(); ++i) inv += chosen[i] - static_cast<unsigned>(i);
  return (inv % 2 == 0) ? 1 : -1;
}

} // namespace pbv
