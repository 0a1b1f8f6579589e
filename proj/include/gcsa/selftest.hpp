// Copyright 2026 The GCSA-NA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace gcsa {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Exhaustive scalar GF(5) runs of GCSA-NA with every parameter 1 and S = 3:
// the master's three answers have the same distribution for all inputs with
// the same product.
CheckResult check_master_privacy();
// Scalar GF(5), X = 1: each server's share pair is uniform for every input.
CheckResult check_share_uniformity();
// Every X-subset of servers sees an invertible noise-coefficient matrix,
// over all small shapes with S <= 12 and X <= 3.
CheckResult check_collusion_rank();
// Offline noise does not depend on the inputs and is sent before any share.
CheckResult check_strong_security();
// 100 random scalar-block instances over GF(101), plus the noise design.
CheckResult check_strassen();
// p = 2, X = 1 polynomial sharing decodes from 2 answers, and its
// inter-server transcript alone reveals AB.
CheckResult check_ps_toy();

std::vector<CheckResult> run_selftest();

}  // namespace gcsa
