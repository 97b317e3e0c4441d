#pragma once

// Independent reference checks for the tests: a dense brute-force axiom
// checker and a mutation generator. Nothing here reuses library validation.

#include <cstdint>
#include <random>
#include <vector>

#include "fusionkit/ring.hpp"

namespace oracle {

struct Dense {
  int r = 0;
  std::vector<int> dual;
  std::vector<long long> n;  // n[(i*r + j)*r + k]

  long long& at(int i, int j, int k) { return n[(static_cast<std::size_t>(i) * r + j) * r + k]; }
  long long at(int i, int j, int k) const { return n[(static_cast<std::size_t>(i) * r + j) * r + k]; }
};

inline Dense dense(const fusionkit::FusionRing& ring) {
  Dense d{ring.rank(), ring.duals(), std::vector<long long>(static_cast<std::size_t>(ring.rank()) * ring.rank() * ring.rank(), 0)};
  for (const auto& e : ring.entries()) d.at(e.i, e.j, e.k) = e.value;
  return d;
}

inline fusionkit::FusionRing to_ring(const Dense& d) {
  std::vector<fusionkit::Entry> entries;
  for (int i = 0; i < d.r; ++i)
    for (int j = 0; j < d.r; ++j)
      for (int k = 0; k < d.r; ++k)
        if (d.at(i, j, k)) entries.push_back({i, j, k, d.at(i, j, k)});
  return fusionkit::FusionRing::make(d.r, d.dual, entries);
}

/// True iff every fusion-ring axiom holds, evaluated directly on the dense tensor.
inline bool is_fusion_ring(const Dense& d) {
  const int r = d.r;
  if (d.dual[0] != 0) return false;
  for (int i = 0; i < r; ++i)
    if (d.dual[d.dual[i]] != i) return false;
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) {
      const long long want = j == k;
      if (d.at(0, j, k) != want || d.at(j, 0, k) != want) return false;
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (d.at(i, j, 0) != (j == d.dual[i] ? 1 : 0)) return false;
      for (int k = 0; k < r; ++k) {
        if (d.at(i, j, k) < 0) return false;
        if (d.at(i, j, k) != d.at(d.dual[i], k, j)) return false;
        if (d.at(i, j, k) != d.at(k, d.dual[j], i)) return false;
      }
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          long long a = 0, b = 0;
          for (int m = 0; m < r; ++m) {
            a += d.at(i, j, m) * d.at(m, k, l);
            b += d.at(j, k, m) * d.at(i, m, l);
          }
          if (a != b) return false;
        }
  return true;
}

/// One structure constant moved by ±1, kept nonnegative.
inline Dense mutate(const Dense& base, std::mt19937_64& rng) {
  Dense d = base;
  std::uniform_int_distribution<int> idx(0, d.r - 1);
  std::bernoulli_distribution up(0.5);
  while (true) {
    const int i = idx(rng), j = idx(rng), k = idx(rng);
    const long long delta = up(rng) ? 1 : -1;
    if (d.at(i, j, k) + delta < 0) continue;
    d.at(i, j, k) += delta;
    return d;
  }
}

}  // namespace oracle
