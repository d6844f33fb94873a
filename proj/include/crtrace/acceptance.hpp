// Copyright 2026 The crtrace Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace crtrace {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double worst = 0.0;      // largest observed error measure
  double tolerance = 0.0;  // bound applied to `worst` (0 for exact checks)
  double seconds = 0.0;
  double time_limit = 0.0;
  std::vector<std::string> notes;
};

// Acceptance criteria 1..9; each runs its full parameter grid.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

// Checks reported for information only: the k = 2 energy identity and the
// Monte Carlo variant of the Poisson-integral comparison.
std::vector<CriterionResult> run_diagnostics();

std::string format_line(const CriterionResult& r);

}  // namespace crtrace
