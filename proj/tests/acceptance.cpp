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

#include <cstdio>

#include "crtrace/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : crtrace::run_acceptance()) {
    std::printf("%s\n", crtrace::format_line(r).c_str());
    for (const auto& note : r.notes) std::printf("    %s\n", note.c_str());
    if (!r.passed) ++failed;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
