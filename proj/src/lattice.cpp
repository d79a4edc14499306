#include "bim/lattice.hpp"

#include <algorithm>

namespace bim {

static void check_same_length(const Alloc& x, const Alloc& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("allocation length mismatch: " +
                                std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()));
}

Alloc lattice_join(const Alloc& x, const Alloc& y) {
  check_same_length(x, y);
  Alloc out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::max(x[i], y[i]);
  return out;
}

Alloc lattice_meet(const Alloc& x, const Alloc& y) {
  check_same_length(x, y);
  Alloc out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::min(x[i], y[i]);
  return out;
}

Alloc add_chi(const Alloc& b, int i, int k) {
  if (i < 0 || static_cast<std::size_t>(i) >= b.size())
    throw std::out_of_range("agent index " + std::to_string(i) +
                            " out of range for n=" + std::to_string(b.size()));
  Alloc out = b;
  out[i] = std::max(out[i], k);
  return out;
}

Alloc chi(int n, int i, int k) {
  Alloc out(n, 0);
  out.at(i) = k;
  return out;
}

bool leq(const Alloc& x, const Alloc& y) {
  check_same_length(x, y);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

}  // namespace bim
