#include "signet/closed_forms.hpp"

#include <stdexcept>

namespace signet {

int cycle_negative_inertia(int n, bool balanced) {
  if (n < 3) throw std::invalid_argument("cycle_negative_inertia: n must be at least 3");
  const int half_up = (n + 1) / 2;
  const int r = n % 4;
  const bool full = balanced ? (r == 2 || r == 3) : (r == 0 || r == 1);
  return full ? half_up : half_up - 1;
}

int path_negative_inertia(int n) {
  if (n < 1) throw std::invalid_argument("path_negative_inertia: n must be at least 1");
  return n / 2;
}

int canonical_unicyclic_negative_inertia(const StarDecomposition& d) {
  if (d.star_count() == 0)
    throw std::invalid_argument("canonical_unicyclic_negative_inertia: pure cycle; use cycle_negative_inertia");
  int total = d.star_count();
  for (int l : d.segments) total += l / 2;
  return total;
}

}  // namespace signet
