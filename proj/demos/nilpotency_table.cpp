// Prints one line per catalog ring: rank, FPdim, nilpotency class, |U(R)|,
// and the sizes of the adjoint and pointed parts.

#include <cstdio>

#include "fusionkit/catalog.hpp"
#include "fusionkit/series.hpp"

int main() {
  using namespace fusionkit;
  std::printf("%-12s %4s %10s %5s %4s %4s %4s\n", "name", "rank", "FPdim", "class", "|U|", "adj", "pt");
  for (const auto& name : catalog_names()) {
    const auto ring = catalog_entry(name).ring;
    const auto fp = fp_dimensions(ring);
    const auto c = nilpotency_class(ring);
    char cls[8] = "-";
    if (c) std::snprintf(cls, sizeof cls, "%d", *c);
    std::printf("%-12s %4d %10.4f %5s %4d %4d %4d\n", name.c_str(), ring.rank(), fp.ring_dim, cls,
                universal_grading(ring).group.order(), adjoint_subring(ring).size(),
                pointed_subring(ring).size());
  }
}
