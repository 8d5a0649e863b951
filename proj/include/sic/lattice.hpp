// Copyright 2026 The sicfid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <vector>

namespace sic {

using IntRow = std::vector<mpz_class>;

/// Exact integral LLL reduction (delta = 3/4) of linearly independent rows,
/// carried out on Gram determinants so no rational arithmetic is needed.
/// Throws std::invalid_argument if the rows are dependent.
std::vector<IntRow> lll_reduce(std::vector<IntRow> rows);

}  // namespace sic
