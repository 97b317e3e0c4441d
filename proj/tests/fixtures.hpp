#pragma once

// Small rings written out by hand, independent of the catalog generators.

#include "fusionkit/ring.hpp"

namespace fixtures {

using fusionkit::Entry;
using fusionkit::FusionRing;

/// 1, psi, sigma: psi^2 = 1, psi sigma = sigma psi = sigma, sigma^2 = 1 + psi.
inline FusionRing ising() {
  return FusionRing::make(3, {0, 1, 2},
                          {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 2, 2, 1},
                           {2, 0, 2, 1}, {2, 1, 2, 1}, {2, 2, 0, 1}, {2, 2, 1, 1}},
                          {"1", "psi", "sigma"});
}

/// tau^2 = 1 + tau.
inline FusionRing fibonacci() {
  return FusionRing::make(2, {0, 1}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}},
                          {"1", "tau"});
}

/// Z[Z_n] with g^a g^b = g^(a+b).
inline FusionRing cyclic(int n) {
  std::vector<int> dual(n);
  std::vector<Entry> e;
  for (int a = 0; a < n; ++a) {
    dual[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) e.push_back({a, b, (a + b) % n, 1});
  }
  return FusionRing::make(n, dual, e);
}

/// Replace one constant of `ring` (0 removes it).
inline FusionRing with_entry(const FusionRing& ring, int i, int j, int k, long long value) {
  std::vector<Entry> e;
  for (const auto& x : ring.entries())
    if (!(x.i == i && x.j == j && x.k == k)) e.push_back(x);
  if (value) e.push_back({i, j, k, value});
  return FusionRing::make(ring.rank(), ring.duals(), e, ring.labels());
}

}  // namespace fixtures
