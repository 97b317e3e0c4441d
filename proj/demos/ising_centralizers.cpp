// Walks the fusion subcategories of a few modular categories and prints each
// one next to its centralizer, with dim(K) dim(K') against D.

#include <cstdio>
#include <string>

#include "fusionkit/catalog.hpp"
#include "fusionkit/modular.hpp"

namespace {

std::string show(const fusionkit::ModularData& md, const fusionkit::SubringBasis& k) {
  std::string out = "{";
  for (int i : k.indices()) {
    if (out.size() > 1) out += ",";
    out += md.labels()[i];
  }
  return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fusionkit;
  std::vector<std::string> names = {"ising", "toric_code", "su2_4"};
  if (argc > 1) names.assign(argv + 1, argv + argc);
  for (const auto& name : names) {
    const auto e = catalog_entry(name);
    if (!e.modular) {
      std::fprintf(stderr, "%s has no modular data\n", name.c_str());
      return 1;
    }
    const auto& md = *e.modular;
    std::printf("%s  (D = %.6f)\n", name.c_str(), md.global_dim());
    for (const auto& k : enumerate_subcats(e.ring)) {
      const auto rep = double_centralizer_check(md, e.ring, k);
      std::printf("  K = %-22s K' = %-22s dim K * dim K' = %9.6f%s%s\n", show(md, k).c_str(),
                  show(md, rep.k1).c_str(), rep.dim_k * rep.dim_k1, rep.symmetric ? "  symmetric" : "",
                  rep.modular ? "  modular" : "");
    }
  }
}
