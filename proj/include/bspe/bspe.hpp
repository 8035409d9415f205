// Copyright 2026 The BSPE Authors.
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

#ifndef BSPE_BSPE_HPP
#define BSPE_BSPE_HPP

#include "bspe/analysis.hpp"
#include "bspe/auction.hpp"
#include "bspe/benchmark.hpp"
#include "bspe/core.hpp"
#include "bspe/extractor.hpp"
#include "bspe/random.hpp"

#endif  // BSPE_BSPE_HPP
