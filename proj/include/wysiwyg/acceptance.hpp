#pragma once

// The acceptance suite: one check per criterion, shared by `wysiwyg verify`
// and the acceptance test binary.

#include <functional>
#include <string>
#include <vector>

#include "wysiwyg/cabled.hpp"

namespace wysiwyg {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Tolerances, pinned.
inline constexpr double kDecayTolerance = 1e-8;
inline constexpr double kEigenTolerance = 1e-9;
inline constexpr double kAgreementTolerance = 1e-9;

/// Runs criteria 1..10 in order; `report` is called as each finishes.
std::vector<CriterionResult> run_acceptance(const Caps& caps,
                                            const std::function<void(const CriterionResult&)>& report = {});

/// "PASS  3  coefficient factorization  (1.2 s)  N=1,0,1"
std::string format_result(const CriterionResult& r);

}  // namespace wysiwyg
