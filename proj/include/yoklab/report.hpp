#pragma once

#include <string>
#include <vector>

namespace yoklab {

// Residual checks for one relation family, e.g. all instances of the braid
// relation. The first failing instance is kept as a witness.
struct RelationFamily {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

struct RelationReport {
  std::string presentation;
  std::vector<RelationFamily> families;

  void record(const std::string& family, const std::string& instance, bool residual_zero) {
    RelationFamily* fam = nullptr;
    for (auto& f : families)
      if (f.name == family) fam = &f;
    if (!fam) {
      families.push_back({family, 0, 0, {}});
      fam = &families.back();
    }
    ++fam->instances;
    if (!residual_zero && fam->failures++ == 0) fam->first_failure = instance;
  }

  bool all_zero() const {
    for (const auto& f : families)
      if (!f.ok()) return false;
    return true;
  }
};

}  // namespace yoklab
