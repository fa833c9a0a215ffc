#pragma once

#include <string>
#include <vector>

namespace genuslab {

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Property suite over the catalog, generated triples, forms and lattices.
// Deterministic; runs in a few seconds.
std::vector<SelftestResult> run_selftest();

}  // namespace genuslab
