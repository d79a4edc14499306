#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bim {

// Budget allocation over agents: b[i] = units given to agent i.
using Alloc = std::vector<int>;

Alloc lattice_join(const Alloc& x, const Alloc& y);
Alloc lattice_meet(const Alloc& x, const Alloc& y);

// b with coordinate i raised to max(b[i], k), i.e. b ∨ k·chi_i.
Alloc add_chi(const Alloc& b, int i, int k);

// Characteristic vector k·chi_i of length n.
Alloc chi(int n, int i, int k = 1);

bool leq(const Alloc& x, const Alloc& y);

inline int total(const Alloc& b) {
  int s = 0;
  for (int v : b) s += v;
  return s;
}

inline bool is_zero(const Alloc& b) {
  for (int v : b)
    if (v != 0) return false;
  return true;
}

}  // namespace bim
