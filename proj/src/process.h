// Copyright 2026 The contractscan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Subprocess execution for the version-control client.

#ifndef CONTRACTSCAN_PROCESS_H_
#define CONTRACTSCAN_PROCESS_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace contractscan::internal {

struct ProcessResult {
  int exit_code = 0;
  std::string output;  // stdout and stderr, interleaved.
};

// Runs argv[0] from PATH with stdin closed. Fails only when the process
// cannot be started or waited for; a non-zero exit is a result.
absl::StatusOr<ProcessResult> RunProcess(const std::vector<std::string>& argv);

}  // namespace contractscan::internal

#endif  // CONTRACTSCAN_PROCESS_H_
