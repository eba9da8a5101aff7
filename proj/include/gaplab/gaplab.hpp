// Copyright 2026 The gaplab Authors
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

#pragma once

#include "gaplab/compensated.hpp"
#include "gaplab/error.hpp"
#include "gaplab/gap_stats.hpp"
#include "gaplab/sieve.hpp"
#include "gaplab/singular_series.hpp"
#include "gaplab/survivors.hpp"
#include "gaplab/thresholds.hpp"

namespace gaplab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gaplab
